#include "gds/complex.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "gds/error.hpp"
#include "gds/homology.hpp"

namespace gds {

namespace {

const std::vector<Simplex> kNoSimplices;

void check_distinct(const Simplex& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i - 1] == s[i]) throw MalformedInput("repeated vertex " + std::to_string(s[i]) + " in simplex");
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::closure_of(std::vector<Simplex> simplices) {
  std::vector<std::vector<Simplex>> by_dim;
  for (auto& s : simplices) {
    if (s.empty()) continue;
    std::sort(s.begin(), s.end());
    check_distinct(s);
    const std::size_t n = s.size();
    if (by_dim.size() < n) by_dim.resize(n);
    // every nonempty subset
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::uint32_t{1} << i)) face.push_back(s[i]);
      }
      by_dim[face.size() - 1].push_back(std::move(face));
    }
  }
  SimplicialComplex out;
  for (auto& level : by_dim) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  out.by_dim_ = std::move(by_dim);
  if (!out.by_dim_.empty()) {
    for (const auto& v : out.by_dim_[0]) out.vertices_.push_back(v[0]);
  }
  // maximal simplices: those that are not a facet of anything one dimension up
  for (int k = 0; k <= out.dim(); ++k) {
    const auto& level = out.by_dim_[static_cast<std::size_t>(k)];
    std::vector<char> covered(level.size(), 0);
    if (k < out.dim()) {
      for (const auto& up : out.by_dim_[static_cast<std::size_t>(k) + 1]) {
        Simplex face(up.size() - 1);
        for (std::size_t j = 0; j < up.size(); ++j) {
          std::size_t w = 0;
          for (std::size_t i = 0; i < up.size(); ++i) {
            if (i != j) face[w++] = up[i];
          }
          auto it = std::lower_bound(level.begin(), level.end(), face);
          covered[static_cast<std::size_t>(it - level.begin())] = 1;
        }
      }
    }
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (!covered[i]) out.facets_.push_back(level[i]);
    }
  }
  return out;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
  if (k < 0 || k > dim()) return kNoSimplices;
  return by_dim_[static_cast<std::size_t>(k)];
}

std::size_t SimplicialComplex::size() const {
  std::size_t n = 0;
  for (const auto& level : by_dim_) n += level.size();
  return n;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& level : by_dim_) f.push_back(level.size());
  return f;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  const auto& level = simplices(simplex_dim(s));
  auto it = std::lower_bound(level.begin(), level.end(), s);
  if (it == level.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Simplex& f) { return simplex_dim(f) == dim(); });
}

SimplicialComplex build_complex(std::span<const Simplex> facets) {
  if (facets.empty()) throw MalformedInput("facet list is empty");
  std::vector<Simplex> copy;
  copy.reserve(facets.size());
  for (const auto& f : facets) {
    if (f.empty()) throw MalformedInput("empty facet");
    Simplex s = f;
    std::sort(s.begin(), s.end());
    check_distinct(s);
    copy.push_back(std::move(s));
  }
  return SimplicialComplex::closure_of(std::move(copy));
}

long long euler_characteristic(const SimplicialComplex& s) {
  long long chi = 0;
  for (int k = 0; k <= s.dim(); ++k) {
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(s.count(k));
  }
  return chi;
}

SimplicialComplex link(const SimplicialComplex& s, const Simplex& sigma) {
  Simplex key = sigma;
  std::sort(key.begin(), key.end());
  if (key.empty() || !s.contains(key)) throw NotFound("simplex {" + to_string(key) + "} not in complex");
  std::vector<Simplex> pieces;
  for (const auto& f : s.facets()) {
    if (f.size() > key.size() && is_face_of(key, f)) pieces.push_back(set_difference(f, key));
  }
  return SimplicialComplex::closure_of(std::move(pieces));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& s, std::span<const Vertex> verts) {
  std::vector<Vertex> keep(verts.begin(), verts.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (Vertex v : keep) {
    if (!std::binary_search(s.vertices().begin(), s.vertices().end(), v)) {
      throw MalformedInput("vertex " + std::to_string(v) + " is not in the complex");
    }
  }
  std::vector<Simplex> inside;
  for (int k = 0; k <= s.dim(); ++k) {
    for (const auto& sigma : s.simplices(k)) {
      if (std::includes(keep.begin(), keep.end(), sigma.begin(), sigma.end())) inside.push_back(sigma);
    }
  }
  return SimplicialComplex::closure_of(std::move(inside));
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Simplex> all = a.facets();
  all.insert(all.end(), b.facets().begin(), b.facets().end());
  return SimplicialComplex::closure_of(std::move(all));
}

ManifoldReport manifold_check(const SimplicialComplex& s) {
  ManifoldReport report;
  report.dim = s.dim();
  report.pure = s.is_pure();
  report.links_are_homology_spheres = true;
  report.links_have_even_euler = true;
  report.ridges_have_two_cofaces = true;
  const int d = s.dim();
  for (int k = 0; k < d; ++k) {
    for (const auto& sigma : s.simplices(k)) {
      const SimplicialComplex lk = link(s, sigma);
      LinkVerdict v;
      v.sigma = sigma;
      v.expected_sphere_dim = d - k - 1;
      v.link_euler = euler_characteristic(lk);
      v.link_betti = betti_numbers(lk);
      std::vector<int> sphere(static_cast<std::size_t>(v.expected_sphere_dim) + 1, 0);
      sphere.front() += 1;
      sphere.back() += 1;
      v.homology_sphere = lk.dim() == v.expected_sphere_dim && v.link_betti == sphere;
      v.even_euler = v.link_euler % 2 == 0;
      report.links_are_homology_spheres &= v.homology_sphere;
      report.links_have_even_euler &= v.even_euler;
      bool ok = v.homology_sphere && v.even_euler;
      if (k == d - 1) {
        const bool two = lk.dim() == 0 && lk.count(0) == 2;
        report.ridges_have_two_cofaces &= two;
        ok &= two;
      }
      if (!ok) report.failing.push_back(sigma);
      report.links.push_back(std::move(v));
    }
  }
  return report;
}

}  // namespace gds
