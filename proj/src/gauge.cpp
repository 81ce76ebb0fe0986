#include "gds/gauge.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gds/error.hpp"
#include "gds/f2.hpp"

namespace gds {

namespace {

constexpr std::size_t kBruteForceLimit = 20;

std::size_t position(const SimplicialComplex& s, Vertex v) {
  const auto& vs = s.vertices();
  auto it = std::lower_bound(vs.begin(), vs.end(), v);
  if (it == vs.end() || *it != v) throw ContractViolation("vertex " + std::to_string(v) + " not in complex");
  return static_cast<std::size_t>(it - vs.begin());
}

void require_spin(const SimplicialComplex& s, const SpinConfig& spin) {
  if (spin.size() != s.vertices().size()) throw MalformedInput("spin configuration has the wrong length");
}

void require_edges(const SimplicialComplex& s, const EdgeConfig& z) {
  if (z.size() != s.count(1)) throw MalformedInput("edge configuration has the wrong length");
}

void require_small(const SimplicialComplex& s) {
  if (s.vertices().size() > kBruteForceLimit) {
    throw ContractViolation("brute force limited to " + std::to_string(kBruteForceLimit) + " vertices");
  }
}

SpinConfig spin_of(std::uint32_t mask, std::size_t n) {
  SpinConfig out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (mask >> i) & 1u;
  return out;
}

// Vertex masks of every simplex with its dimension, for fast Euler sums.
struct MaskedSimplices {
  std::vector<std::uint32_t> masks;
  std::vector<int> dims;

  MaskedSimplices(const SimplicialComplex& s, const SimplicialComplex& sub) {
    for (int k = 0; k <= sub.dim(); ++k) {
      for (const auto& sigma : sub.simplices(k)) {
        std::uint32_t m = 0;
        for (Vertex v : sigma) m |= std::uint32_t{1} << position(s, v);
        masks.push_back(m);
        dims.push_back(k);
      }
    }
  }

  long long euler_within(std::uint32_t down) const {
    long long chi = 0;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if ((masks[i] & down) == masks[i]) chi += dims[i] % 2 == 0 ? 1 : -1;
    }
    return chi;
  }
};

}  // namespace

std::vector<bool> parse_bits(std::string_view bits, std::size_t expected) {
  if (bits.size() != expected) {
    throw MalformedInput("bitstring of length " + std::to_string(bits.size()) + ", expected " +
                         std::to_string(expected));
  }
  std::vector<bool> out;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw MalformedInput("bitstring may only contain 0 and 1");
    out.push_back(ch == '1');
  }
  return out;
}

std::string format_bits(const std::vector<bool>& bits) {
  std::string out;
  for (bool b : bits) out += b ? '1' : '0';
  return out;
}

std::vector<Vertex> down_vertices(const SimplicialComplex& s, const SpinConfig& spin) {
  require_spin(s, spin);
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < spin.size(); ++i) {
    if (spin[i]) out.push_back(s.vertices()[i]);
  }
  return out;
}

EdgeConfig gauge_map(const SimplicialComplex& s, const SpinConfig& spin) {
  require_spin(s, spin);
  EdgeConfig z;
  for (const auto& e : s.simplices(1)) z.push_back(spin[position(s, e[0])] != spin[position(s, e[1])]);
  return z;
}

bool is_flat(const SimplicialComplex& s, const EdgeConfig& z) {
  require_edges(s, z);
  for (const auto& t : s.simplices(2)) {
    bool parity = false;
    for (std::size_t skip = 0; skip < 3; ++skip) {
      Simplex e;
      for (std::size_t i = 0; i < 3; ++i) {
        if (i != skip) e.push_back(t[i]);
      }
      parity ^= z[*s.index_of(e)];
    }
    if (parity) return false;
  }
  return true;
}

std::vector<SpinConfig> gauge_preimages(const SimplicialComplex& s, const EdgeConfig& z) {
  require_edges(s, z);
  const std::size_t n = s.vertices().size();
  const auto& edges = s.simplices(1);
  f2::ColumnEchelon incidence(edges.size());
  for (std::size_t i = 0; i < n; ++i) {
    f2::BitVector col(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (edges[e][0] == s.vertices()[i] || edges[e][1] == s.vertices()[i]) col.set(e);
    }
    incidence.add_column(col);
  }
  f2::BitVector rhs(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) rhs.set(e, z[e]);
  const auto x = incidence.solve(rhs);
  if (!x) return {};

  // kernel: constant spins on each connected component
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& e : edges) parent[find(position(s, e[0]))] = find(position(s, e[1]));
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) {
    if (find(i) == i) roots.push_back(i);
  }
  if (roots.size() > kBruteForceLimit) throw ContractViolation("too many connected components to enumerate");

  std::vector<SpinConfig> out;
  for (std::uint32_t flips = 0; flips < (std::uint32_t{1} << roots.size()); ++flips) {
    SpinConfig spin(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto r = std::find(roots.begin(), roots.end(), find(i)) - roots.begin();
      spin[i] = x->get(i) != static_cast<bool>((flips >> r) & 1u);
    }
    out.push_back(std::move(spin));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int dual_amplitude(const SimplicialComplex& s, const SpinConfig& spin) {
  const auto down = down_vertices(s, spin);
  return euler_characteristic(induced_subcomplex(s, down)) % 2 == 0 ? 1 : -1;
}

long long gauged_state_amplitude(const SimplicialComplex& s, const EdgeConfig& z) {
  long long total = 0;
  for (const auto& spin : gauge_preimages(s, z)) total += dual_amplitude(s, spin);
  return total;
}

long long dual_cycle_euler(const SimplicialComplex& s, const SpinConfig& spin) {
  require_spin(s, spin);
  const int d = s.dim();
  long long chi = 0;
  for (int k = 1; k <= d; ++k) {
    for (const auto& sigma : s.simplices(k)) {
      bool up = false;
      bool down = false;
      for (Vertex v : sigma) (spin[position(s, v)] ? down : up) = true;
      if (up && down) chi += (d - k) % 2 == 0 ? 1 : -1;
    }
  }
  return chi;
}

std::vector<SectorAmplitude> trivial_sector_amplitudes(const SimplicialComplex& s) {
  require_small(s);
  const std::size_t n = s.vertices().size();
  std::map<EdgeConfig, SectorAmplitude> sectors;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const SpinConfig spin = spin_of(mask, n);
    const EdgeConfig z = gauge_map(s, spin);
    auto [it, inserted] = sectors.try_emplace(z);
    SectorAmplitude& entry = it->second;
    if (inserted) {
      entry.z = z;
      entry.representative = spin;
      entry.wall_euler = dual_cycle_euler(s, spin);
    } else if (spin < entry.representative) {
      entry.representative = spin;
    }
    entry.amplitude += dual_amplitude(s, spin);
  }
  std::vector<SectorAmplitude> out;
  for (auto& [z, entry] : sectors) out.push_back(std::move(entry));
  std::sort(out.begin(), out.end(),
            [](const SectorAmplitude& a, const SectorAmplitude& b) { return a.representative < b.representative; });
  return out;
}

std::pair<int, int> i_power(long long chi) {
  switch (((chi % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

OcdualReport ocdual_check(const SimplicialComplex& s, Vertex c) {
  require_small(s);
  const std::size_t n = s.vertices().size();
  const std::size_t ci = position(s, c);
  const std::uint32_t cbit = std::uint32_t{1} << ci;
  const SimplicialComplex lk = link(s, {c});
  const MaskedSimplices whole(s, s);
  const MaskedSimplices around(s, lk);
  const int d = s.dim();

  OcdualReport r;
  r.c = c;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    ++r.configurations;
    const std::uint32_t with = mask | cbit;
    const std::uint32_t without = mask & ~cbit;
    const long long lhs = whole.euler_within(with) - whole.euler_within(without);
    const long long rhs = 1 - around.euler_within(without);
    bool failed = false;
    if (lhs != rhs) {
      ++r.euler_failures;
      failed = true;
    }

    // gauge side: link vertices n with z_cn = 1, and the dual cells they cover
    const SpinConfig spin = spin_of(mask, n);
    const EdgeConfig z = gauge_map(s, spin);
    std::uint32_t present = 0;
    for (Vertex v : lk.vertices()) {
      Simplex e{std::min(c, v), std::max(c, v)};
      if (z[*s.index_of(e)]) present |= std::uint32_t{1} << position(s, v);
    }
    long long down_c = 0;
    for (std::size_t i = 0; i < around.masks.size(); ++i) {
      if (around.masks[i] & present) down_c += (d - 1 - around.dims[i]) % 2 == 0 ? 1 : -1;
    }
    const int before = whole.euler_within(mask) % 2 == 0 ? 1 : -1;
    const int after = whole.euler_within(mask ^ cbit) % 2 == 0 ? 1 : -1;
    const int expected = down_c % 2 == 0 ? -1 : 1;
    if (before * after != expected) {
      ++r.sign_failures;
      failed = true;
    }
    if (failed && !r.first_failure) r.first_failure = spin;
  }
  return r;
}

int flip_parity(const SimplicialComplex& s) {
  require_small(s);
  const std::size_t n = s.vertices().size();
  const MaskedSimplices whole(s, s);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  int parity = 0;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    const long long chi = whole.euler_within(mask) + whole.euler_within(full ^ mask);
    const int p = chi % 2 == 0 ? 1 : -1;
    if (parity == 0) parity = p;
    else if (parity != p) return 0;
  }
  return parity;
}

}  // namespace gds
