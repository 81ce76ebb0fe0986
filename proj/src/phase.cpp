#include "gds/phase.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "gds/error.hpp"

namespace gds {

namespace {

constexpr std::size_t kDenseLimit = 16;

std::uint64_t reduce(std::int64_t v, std::uint64_t modulus) {
  const auto n = static_cast<std::int64_t>(modulus);
  v %= n;
  return static_cast<std::uint64_t>(v < 0 ? v + n : v);
}

std::uint32_t mask_in(const Simplex& monomial, std::span<const Vertex> vars) {
  std::uint32_t mask = 0;
  for (Vertex v : monomial) {
    auto it = std::lower_bound(vars.begin(), vars.end(), v);
    if (it == vars.end() || *it != v) throw ContractViolation("variable " + std::to_string(v) + " not in the table");
    mask |= std::uint32_t{1} << (it - vars.begin());
  }
  return mask;
}

Simplex monomial_of(std::uint32_t mask, std::span<const Vertex> vars) {
  Simplex out;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    if (mask & (std::uint32_t{1} << j)) out.push_back(vars[j]);
  }
  return out;
}

}  // namespace

PhasePolynomial::PhasePolynomial(int precision) : precision_(precision) {
  if (precision < 1 || precision > 62) throw PrecisionError("precision must be in 1..62");
}

void PhasePolynomial::add(const Simplex& monomial, std::int64_t coeff) {
  const std::uint64_t c = reduce(coeff, modulus());
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(monomial, c);
  if (inserted) {
    for (std::size_t i = 1; i < monomial.size(); ++i) {
      if (monomial[i - 1] >= monomial[i]) {
        terms_.erase(it);
        throw MalformedInput("monomial vertices must be strictly increasing");
      }
    }
    return;
  }
  it->second = (it->second + c) & (modulus() - 1);
  if (it->second == 0) terms_.erase(it);
}

std::uint64_t PhasePolynomial::coefficient(const Simplex& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? 0 : it->second;
}

std::vector<Vertex> PhasePolynomial::variables() const {
  std::vector<Vertex> out;
  for (const auto& [m, c] : terms_) out.insert(out.end(), m.begin(), m.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int PhasePolynomial::max_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

bool PhasePolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::uint64_t PhasePolynomial::evaluate(std::span<const Vertex> down) const {
  std::uint64_t acc = 0;
  for (const auto& [m, c] : terms_) {
    if (std::includes(down.begin(), down.end(), m.begin(), m.end())) acc += c;
  }
  return acc & (modulus() - 1);
}

std::vector<std::uint64_t> PhasePolynomial::phase_table(std::span<const Vertex> vars) const {
  if (vars.size() > 24) throw ContractViolation("phase tables are limited to 24 variables");
  std::vector<std::uint64_t> table(std::size_t{1} << vars.size(), 0);
  for (const auto& [m, c] : terms_) table[mask_in(m, vars)] += c;
  const std::uint64_t mask = modulus() - 1;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    const std::size_t bit = std::size_t{1} << j;
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (i & bit) table[i] = (table[i] + table[i ^ bit]) & mask;
    }
  }
  for (auto& t : table) t &= mask;
  return table;
}

PhasePolynomial PhasePolynomial::with_precision(int precision) const {
  if (precision < precision_) throw PrecisionError("cannot lower the precision of a polynomial");
  PhasePolynomial out(precision);
  const auto scale = static_cast<std::int64_t>(std::uint64_t{1} << (precision - precision_));
  for (const auto& [m, c] : terms_) out.add(m, static_cast<std::int64_t>(c) * scale);
  return out;
}

void PhasePolynomial::require_same_precision(const PhasePolynomial& o) const {
  if (o.precision_ != precision_) throw PrecisionError("polynomials have different precision");
}

PhasePolynomial& PhasePolynomial::operator+=(const PhasePolynomial& o) {
  require_same_precision(o);
  for (const auto& [m, c] : o.terms_) add(m, static_cast<std::int64_t>(c));
  return *this;
}

PhasePolynomial& PhasePolynomial::operator-=(const PhasePolynomial& o) {
  require_same_precision(o);
  for (const auto& [m, c] : o.terms_) add(m, -static_cast<std::int64_t>(c));
  return *this;
}

PhasePolynomial PhasePolynomial::operator-() const {
  PhasePolynomial out(precision_);
  for (const auto& [m, c] : terms_) out.add(m, -static_cast<std::int64_t>(c));
  return out;
}

PhasePolynomial ckz(std::span<const Vertex> vertices, int precision) {
  Simplex m(vertices.begin(), vertices.end());
  if (sort_with_sign(m) == 0) throw MalformedInput("ckz needs distinct vertices");
  PhasePolynomial p(precision);
  p.add(m, static_cast<std::int64_t>(std::uint64_t{1} << (precision - 1)));
  return p;
}

PhasePolynomial cochain_value_poly(const GroupCochain& w, std::span<const Vertex> ordered, std::int64_t coeff,
                                   int precision) {
  const std::size_t k1 = ordered.size();
  if (static_cast<int>(k1) != w.arity()) {
    throw ContractViolation("cochain of arity " + std::to_string(w.arity()) + " cannot act on " +
                            std::to_string(k1) + " vertices");
  }
  const std::uint64_t n = static_cast<std::uint64_t>(w.modulus());
  const std::uint64_t full = std::uint64_t{1} << precision;
  if (!std::has_single_bit(n) || n > full) {
    throw PrecisionError("cochain modulus " + std::to_string(n) + " does not divide 2^" + std::to_string(precision));
  }
  std::vector<Vertex> sorted(ordered.begin(), ordered.end());
  if (sort_with_sign(sorted) == 0) throw MalformedInput("cochain gate needs distinct vertices");
  const auto scale = static_cast<std::int64_t>(full / n);
  // Moebius inversion of x -> w(x)
  std::vector<std::int64_t> f(std::size_t{1} << k1);
  for (std::uint32_t x = 0; x < f.size(); ++x) f[x] = w.value(x);
  for (std::size_t j = 0; j < k1; ++j) {
    const std::size_t bit = std::size_t{1} << j;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i & bit) f[i] -= f[i ^ bit];
    }
  }
  PhasePolynomial p(precision);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    if (f[x] == 0) continue;
    Simplex m;
    for (std::size_t j = 0; j < k1; ++j) {
      if (x & (std::uint32_t{1} << j)) m.push_back(ordered[j]);
    }
    std::sort(m.begin(), m.end());
    // products wrap mod 2^64, a multiple of 2^m
    const std::uint64_t v = reduce(f[x], full) * static_cast<std::uint64_t>(scale) * reduce(coeff, full);
    p.add(m, static_cast<std::int64_t>(v & (full - 1)));
  }
  return p;
}

PhasePolynomial cochain_gate_poly(const GroupCochain& w, std::span<const Vertex> ordered, std::int64_t coeff,
                                  int precision) {
  if (static_cast<int>(ordered.size()) + 1 != w.arity()) {
    throw ContractViolation("cochain of arity " + std::to_string(w.arity()) + " cannot act on " +
                            std::to_string(ordered.size()) + " vertices");
  }
  return cochain_value_poly(w.slice_first(false), ordered, coeff, precision);
}

PhasePolynomial omega_gate_poly(std::span<const Vertex> ordered, std::int64_t coeff, int precision) {
  Simplex evens;
  std::vector<Vertex> odds;
  for (std::size_t i = 0; i < ordered.size(); ++i) (i % 2 == 0 ? evens : odds).push_back(ordered[i]);
  const std::uint64_t full = std::uint64_t{1} << precision;
  const auto c = static_cast<std::int64_t>((reduce(coeff, full) * (full / 2)) & (full - 1));
  PhasePolynomial p(precision);
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << odds.size()); ++s) {
    Simplex m = evens;
    for (std::size_t j = 0; j < odds.size(); ++j) {
      if (s & (std::uint32_t{1} << j)) m.push_back(odds[j]);
    }
    std::sort(m.begin(), m.end());
    if (std::adjacent_find(m.begin(), m.end()) != m.end()) throw MalformedInput("omega gate needs distinct vertices");
    p.add(m, std::popcount(s) % 2 == 0 ? c : -c);
  }
  return p;
}

PhasePolynomial cochain_circuit_poly(const GroupCochain& w, const Chain& c, int precision) {
  PhasePolynomial p(precision);
  for (const auto& [s, coeff] : c.terms()) p += cochain_gate_poly(w, s, coeff, precision);
  return p;
}

PhasePolynomial omega_circuit_poly(const Chain& c, int precision) {
  PhasePolynomial p(precision);
  for (const auto& [s, coeff] : c.terms()) p += omega_gate_poly(s, coeff, precision);
  return p;
}

PhasePolynomial gds_disentangler(const SimplicialComplex& s, int precision) {
  PhasePolynomial p(precision);
  const auto half = static_cast<std::int64_t>(std::uint64_t{1} << (precision - 1));
  for (int k = 0; k <= s.dim(); ++k) {
    for (const auto& sigma : s.simplices(k)) p.add(sigma, half);
  }
  return p;
}

PhasePolynomial flip_commutator(const PhasePolynomial& p) {
  const auto vars = p.variables();
  PhasePolynomial out(p.precision());
  const std::uint64_t mask = p.modulus() - 1;
  if (vars.size() <= kDenseLimit) {
    // superset sums give the coefficients of p(1 - x) up to sign
    std::vector<std::uint64_t> g(std::size_t{1} << vars.size(), 0);
    for (const auto& [m, c] : p.terms()) g[mask_in(m, vars)] = c;
    for (std::size_t j = 0; j < vars.size(); ++j) {
      const std::size_t bit = std::size_t{1} << j;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (!(i & bit)) g[i] = (g[i] + g[i | bit]) & mask;
      }
    }
    for (std::uint32_t s = 0; s < g.size(); ++s) {
      if (g[s] == 0) continue;
      const auto v = static_cast<std::int64_t>(g[s]);
      out.add(monomial_of(s, vars), std::popcount(s) % 2 == 0 ? v : -v);
    }
  } else {
    for (const auto& [m, c] : p.terms()) {
      if (m.size() > 24) throw ContractViolation("monomial degree too large for flip_commutator");
      const auto v = static_cast<std::int64_t>(c);
      for (std::uint32_t s = 0; s < (std::uint32_t{1} << m.size()); ++s) {
        Simplex sub;
        for (std::size_t j = 0; j < m.size(); ++j) {
          if (s & (std::uint32_t{1} << j)) sub.push_back(m[j]);
        }
        out.add(sub, std::popcount(s) % 2 == 0 ? v : -v);
      }
    }
  }
  out -= p;
  return out;
}

bool CochainCircuitDescriptor::symmetric() const {
  return std::all_of(boundaries.begin(), boundaries.end(), [](const Chain& b) { return b.empty(); });
}

bool CochainCircuitDescriptor::symmetric_up_to_phase() const {
  for (std::size_t k = 1; k < boundaries.size(); ++k) {
    if (!boundaries[k].empty()) return false;
  }
  return true;
}

std::size_t CochainCircuitDescriptor::gate_count() const {
  std::size_t n = 0;
  for (const auto& c : chains) n += c.size();
  return n;
}

CochainCircuitDescriptor decompose(const PhasePolynomial& p) {
  if (p.precision() != 1) throw PrecisionError("decompose works on +-1 phase polynomials (precision 1)");
  CochainCircuitDescriptor out;
  PhasePolynomial work = p;
  const int top = std::max(work.max_degree(), 0);
  for (int k = 0; k < top; ++k) out.chains.emplace_back(k, 2);
  for (int deg = top; deg >= 1; --deg) {
    std::vector<Simplex> level;
    for (const auto& [m, c] : work.terms()) {
      if (static_cast<int>(m.size()) == deg) level.push_back(m);
    }
    for (const auto& m : level) {
      out.chains[static_cast<std::size_t>(deg - 1)].add(m, 1);
      work -= omega_gate_poly(m, 1, 1);
    }
  }
  out.global_phase = work.constant_term();
  if (!work.is_constant()) throw InternalError("decompose left non-constant terms");
  for (const auto& c : out.chains) out.boundaries.push_back(boundary(c));
  return out;
}

PhasePolynomial recompose(const CochainCircuitDescriptor& d, int precision) {
  PhasePolynomial p(precision);
  for (const auto& c : d.chains) p += omega_circuit_poly(c, precision);
  p.add({}, static_cast<std::int64_t>(d.global_phase) << (precision - 1));
  return p;
}

std::string phase_string(std::uint64_t numerator, int precision) {
  // phase = 2 pi numerator / 2^m = pi * (2 numerator) / 2^m
  std::uint64_t num = 2 * (numerator & ((std::uint64_t{1} << precision) - 1));
  std::uint64_t den = std::uint64_t{1} << precision;
  if (num == 0) return "0";
  const std::uint64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
  std::string out = num == 1 ? "pi" : std::to_string(num) + "pi";
  if (den != 1) out += "/" + std::to_string(den);
  return out;
}

}  // namespace gds
