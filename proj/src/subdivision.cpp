#include "gds/subdivision.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "gds/error.hpp"

namespace gds {

namespace {

// Sign of the determinant of a small integer matrix (fraction-free Bareiss).
int determinant_sign(std::vector<std::vector<long long>> m) {
  const std::size_t n = m.size();
  int sign = 1;
  long long prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  const long long d = m[n - 1][n - 1];
  return d == 0 ? 0 : (d > 0 ? sign : -sign);
}

void require_base_chain(const Chain& c, const SimplicialComplex& base) {
  if (c.dim() < 0) throw ContractViolation("canonical_image needs a chain of dimension >= 0");
  validate_chain(c, base);
}

}  // namespace

std::string barycenter_name(const Simplex& base_simplex) {
  std::string out = "(";
  for (std::size_t i = 0; i < base_simplex.size(); ++i) {
    if (i) out += '.';
    out += 'v' + std::to_string(base_simplex[i]);
  }
  return out + ")";
}

Vertex BarycentricComplex::id_of(const Simplex& base_simplex) const {
  auto it = ids.find(base_simplex);
  if (it == ids.end()) throw NotFound("no barycenter for {" + to_string(base_simplex) + "}");
  return it->second;
}

bool BarycentricComplex::precedes(Vertex a, Vertex b) const {
  const auto& la = label(a);
  const auto& lb = label(b);
  return la.size() < lb.size() && is_face_of(la, lb);
}

std::string BarycentricComplex::vertex_name(Vertex v) const { return barycenter_name(label(v)); }

BarycentricComplex barycentric(const SimplicialComplex& s) {
  BarycentricComplex b;
  b.base = s;
  for (int k = 0; k <= s.dim(); ++k) {
    for (const auto& sigma : s.simplices(k)) {
      b.ids.emplace(sigma, static_cast<Vertex>(b.labels.size()));
      b.labels.push_back(sigma);
    }
  }
  std::vector<Simplex> flags;
  for (const auto& facet : s.facets()) {
    std::vector<Vertex> order = facet;
    do {
      Simplex flag;
      Simplex prefix;
      for (Vertex v : order) {
        prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
        flag.push_back(b.ids.at(prefix));
      }
      flags.push_back(std::move(flag));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  b.derived = SimplicialComplex::closure_of(std::move(flags));
  return b;
}

Refinement::Refinement(SimplicialComplex base)
    : base_(std::move(base)), facets_(base_.facets()), current_(base_) {
  std::sort(facets_.begin(), facets_.end());
  for (Vertex v : base_.vertices()) {
    labels_.emplace(v, Simplex{v});
    barycenters_.emplace(Simplex{v}, v);
  }
  next_id_ = base_.vertices().empty() ? 0 : base_.vertices().back() + 1;
}

const SimplicialComplex& Refinement::current() const {
  if (!current_) current_ = SimplicialComplex::closure_of(facets_);
  return *current_;
}

const Simplex& Refinement::label(Vertex v) const {
  auto it = labels_.find(v);
  if (it == labels_.end()) throw NotFound("vertex " + std::to_string(v) + " not in refinement");
  return it->second;
}

std::optional<Vertex> Refinement::barycenter_of(const Simplex& base_simplex) const {
  auto it = barycenters_.find(base_simplex);
  if (it == barycenters_.end()) return std::nullopt;
  return it->second;
}

Simplex Refinement::carrier(const Simplex& s) const {
  Simplex out;
  for (Vertex v : s) out = set_union(out, label(v));
  return out;
}

namespace {

std::set<Simplex> closure_set(const std::vector<Simplex>& facets) {
  const auto c = SimplicialComplex::closure_of(facets);
  std::set<Simplex> out;
  for (int k = 0; k <= c.dim(); ++k) out.insert(c.simplices(k).begin(), c.simplices(k).end());
  return out;
}

void erase_or_push(std::vector<Simplex>& cancel, std::vector<Simplex>& push, Simplex s) {
  auto it = std::find(cancel.begin(), cancel.end(), s);
  if (it != cancel.end()) {
    cancel.erase(it);
  } else {
    push.push_back(std::move(s));
  }
}

}  // namespace

bool Refinement::star(const Simplex& cell, MoveRecord& record) {
  if (cell.size() <= 1 || barycenters_.count(cell)) return false;
  const Vertex b = next_id_++;
  std::vector<Simplex> kept;
  std::vector<Simplex> removed;
  std::vector<Simplex> cone;
  for (auto& rho : facets_) {
    Simplex tau;
    Simplex rest;
    for (Vertex v : rho) {
      (is_face_of(label(v), cell) ? tau : rest).push_back(v);
    }
    if (tau.empty() || carrier(tau) != cell) {
      kept.push_back(std::move(rho));
      continue;
    }
    // cone from b over the pieces of tau lying on the boundary of the cell
    const std::uint32_t n = static_cast<std::uint32_t>(tau.size());
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      Simplex alpha;
      for (std::uint32_t i = 0; i < n; ++i) {
        if (mask & (std::uint32_t{1} << i)) alpha.push_back(tau[i]);
      }
      if (carrier(alpha) == cell) continue;
      Simplex piece = set_union(alpha, rest);
      piece.push_back(b);
      cone.push_back(std::move(piece));
    }
    removed.push_back(std::move(rho));
  }
  const auto added = SimplicialComplex::closure_of(std::move(cone)).facets();
  kept.insert(kept.end(), added.begin(), added.end());
  std::sort(kept.begin(), kept.end());
  facets_ = std::move(kept);
  current_.reset();
  labels_.emplace(b, cell);
  barycenters_.emplace(cell, b);
  record.starred.push_back(cell);

  // Only the closed star of the cell changes and its boundary survives on
  // both sides, so the change is the difference of the two local closures.
  const auto before = closure_set(removed);
  const auto after = closure_set(added);
  std::vector<Simplex> gone;
  std::vector<Simplex> fresh;
  std::set_difference(before.begin(), before.end(), after.begin(), after.end(), std::back_inserter(gone));
  std::set_difference(after.begin(), after.end(), before.begin(), before.end(), std::back_inserter(fresh));
  for (auto& s : gone) erase_or_push(record.added, record.removed, std::move(s));
  for (auto& s : fresh) erase_or_push(record.removed, record.added, std::move(s));
  return true;
}

MoveRecord Refinement::apply_t1(const Simplex& delta) {
  Simplex key = delta;
  std::sort(key.begin(), key.end());
  const int d = base_.dim();
  if (simplex_dim(key) != d || !base_.contains(key)) {
    throw ContractViolation("T1 needs a top-dimensional simplex of the base, got {" + to_string(key) + "}");
  }
  if (barycenters_.count(key) || !std::binary_search(facets_.begin(), facets_.end(), key)) {
    throw ContractViolation("T1 target {" + to_string(key) + "} is no longer a simplex of the refinement");
  }
  MoveRecord record;
  record.kind = MoveKind::T1;
  record.target = key;
  star(key, record);
  std::sort(record.removed.begin(), record.removed.end());
  std::sort(record.added.begin(), record.added.end());
  return record;
}

MoveRecord Refinement::apply_t2(const Simplex& delta) {
  Simplex key = delta;
  std::sort(key.begin(), key.end());
  const int d = base_.dim();
  if (simplex_dim(key) != d - 1 || !base_.contains(key)) {
    throw ContractViolation("T2 needs a (d-1)-simplex of the base, got {" + to_string(key) + "}");
  }
  if (barycenters_.count(key) && key.size() > 1) {
    throw ContractViolation("T2 target {" + to_string(key) + "} was already subdivided");
  }
  // every (d-1)-piece of the cell must have a link of isolated vertices
  std::map<Simplex, int> cofaces;
  for (const auto& f : facets_) {
    for (std::size_t skip = 0; skip < f.size(); ++skip) {
      Simplex face;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (i != skip) face.push_back(f[i]);
      }
      if (simplex_dim(face) == d - 1 && carrier(face) == key) ++cofaces[face];
    }
  }
  for (const auto& f : facets_) {
    if (simplex_dim(f) == d - 1 && carrier(f) == key) cofaces[f] = -1;
  }
  if (cofaces.empty()) {
    throw ContractViolation("T2 target {" + to_string(key) + "} has no (d-1)-pieces bounding top simplices");
  }
  for (const auto& [piece, count] : cofaces) {
    if (count <= 0) {
      throw ContractViolation("T2 target {" + to_string(key) + "}: link of {" + to_string(piece) +
                              "} is not a set of isolated vertices");
    }
  }
  MoveRecord record;
  record.kind = MoveKind::T2;
  record.target = key;
  star(key, record);
  // remaining faces, highest dimension first
  const SimplicialComplex faces = SimplicialComplex::closure_of({key});
  for (int k = simplex_dim(key) - 1; k >= 1; --k) {
    for (const auto& face : faces.simplices(k)) star(face, record);
  }
  std::sort(record.removed.begin(), record.removed.end());
  std::sort(record.added.begin(), record.added.end());
  return record;
}

std::vector<MoveRecord> Refinement::apply_all() {
  std::vector<MoveRecord> out;
  const int d = base_.dim();
  for (const auto& delta : base_.simplices(d)) out.push_back(apply_t1(delta));
  if (d >= 1) {
    for (const auto& delta : base_.simplices(d - 1)) out.push_back(apply_t2(delta));
  }
  return out;
}

SimplicialComplex Refinement::relabelled(const BarycentricComplex& b) const {
  std::vector<Simplex> mapped;
  for (const auto& f : facets_) {
    Simplex m;
    for (Vertex v : f) m.push_back(b.id_of(label(v)));
    mapped.push_back(std::move(m));
  }
  return SimplicialComplex::closure_of(std::move(mapped));
}

SimplicialComplex move_T1(const SimplicialComplex& s, const Simplex& delta) {
  Refinement r(s);
  r.apply_t1(delta);
  return r.current();
}

SimplicialComplex move_T2(const SimplicialComplex& s, const Simplex& delta) {
  Refinement r(s);
  r.apply_t2(delta);
  return r.current();
}

Chain canonical_image(const Chain& c, const BarycentricComplex& b) {
  require_base_chain(c, b.base);
  Chain out(c.dim(), c.modulus());
  for (const auto& [delta, coeff] : c.terms()) {
    std::vector<Vertex> order = delta;
    do {
      Simplex flag;
      Simplex prefix;
      for (Vertex v : order) {
        prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
        flag.push_back(b.id_of(prefix));
      }
      out.add(flag, permutation_sign(order) * coeff);
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return out;
}

Chain canonical_image(const Chain& c, const Refinement& r) {
  require_base_chain(c, r.base());
  Chain out(c.dim(), c.modulus());
  const auto& pieces = r.current().simplices(c.dim());
  for (const auto& [delta, coeff] : c.terms()) {
    for (const auto& rho : pieces) {
      Simplex support;
      bool inside = true;
      for (Vertex v : rho) {
        const Simplex& l = r.label(v);
        if (!is_face_of(l, delta)) {
          inside = false;
          break;
        }
        support = set_union(support, l);
      }
      if (!inside || support != delta) continue;
      std::vector<std::vector<long long>> m;
      for (Vertex v : rho) {
        std::vector<long long> row;
        const Simplex& l = r.label(v);
        for (Vertex w : delta) row.push_back(std::binary_search(l.begin(), l.end(), w) ? 1 : 0);
        m.push_back(std::move(row));
      }
      const int sign = determinant_sign(std::move(m));
      if (sign == 0) throw InternalError("degenerate piece {" + to_string(rho) + "}");
      out.add(rho, sign * coeff);
    }
  }
  return out;
}

Chain copy_chain(const Chain& c, Vertex offset) {
  Chain out(c.dim(), c.modulus());
  for (const auto& [s, coeff] : c.terms()) {
    Simplex t = s;
    for (auto& v : t) v += offset;
    out.add(t, coeff);
  }
  return out;
}

Chain prism_chain(const Chain& c, Vertex offset) {
  if (c.dim() < 0) return Chain(0, c.modulus());
  if (!c.empty()) {
    Vertex lo = c.terms().begin()->first.front();
    Vertex hi = lo;
    for (const auto& [s, coeff] : c.terms()) {
      lo = std::min(lo, s.front());
      hi = std::max(hi, s.back());
    }
    if (lo + offset <= hi) throw ContractViolation("prism copy offset must exceed every vertex id");
  }
  Chain out(c.dim() + 1, c.modulus());
  for (const auto& [s, coeff] : c.terms()) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      std::vector<Vertex> seq;
      for (std::size_t i = 0; i <= j; ++i) seq.push_back(s[i] + offset);
      for (std::size_t i = j; i < s.size(); ++i) seq.push_back(s[i]);
      out.add(seq, j % 2 == 0 ? coeff : -coeff);
    }
  }
  return out;
}

Chain halperin_toledo_chain(const BarycentricComplex& b, int k) {
  const int d = b.base.dim();
  if (k < 0 || k > d) throw ContractViolation("halperin_toledo_chain: k out of range 0..d");
  Chain out(k, 0);
  for (const auto& s : b.derived.simplices(k)) {
    int total = 0;
    for (Vertex v : s) total += simplex_dim(b.label(v));
    out.add(s, total % 2 == 0 ? 1 : -1);
  }
  return out;
}

HomologyWitness sw_class(const BarycentricComplex& b, int k) {
  const Chain ck = halperin_toledo_chain(b, k).mod(2);
  if (k >= 1 && !boundary(ck).empty()) {
    throw InternalError("C_" + std::to_string(k) + " is not closed mod 2; base is not a combinatorial manifold");
  }
  return homology_solve(b.derived, ck);
}

}  // namespace gds
