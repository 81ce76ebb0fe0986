#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gds/simplex.hpp"

namespace gds {

/// Finite abstract simplicial complex over integer vertex ids.
///
/// Simplices are kept per dimension in lexicographic order, so every
/// iteration over a complex is deterministic. The complex is immutable once
/// built; all operations return new complexes.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Face closure of an arbitrary list of simplices (each must have distinct
  /// vertices; order within a simplex is irrelevant). An empty list gives the
  /// empty complex.
  static SimplicialComplex closure_of(std::vector<Simplex> simplices);

  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  bool empty() const { return by_dim_.empty(); }

  const std::vector<Vertex>& vertices() const { return vertices_; }

  /// Simplices of dimension k in lexicographic order; empty for k out of range.
  const std::vector<Simplex>& simplices(int k) const;

  std::size_t count(int k) const { return simplices(k).size(); }
  std::size_t size() const;
  std::vector<std::size_t> f_vector() const;

  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  /// Position of `s` within simplices(dim(s)).
  std::optional<std::size_t> index_of(const Simplex& s) const;

  /// Maximal simplices, ordered by dimension then lexicographically.
  const std::vector<Simplex>& facets() const { return facets_; }

  bool is_pure() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.by_dim_ == b.by_dim_;
  }

 private:
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<Vertex> vertices_;
  std::vector<Simplex> facets_;
};

/// Face closure of `facets`.
/// Throws MalformedInput on an empty facet list, an empty facet, or a facet
/// with a repeated vertex.
SimplicialComplex build_complex(std::span<const Simplex> facets);

long long euler_characteristic(const SimplicialComplex& s);

/// All tau with tau disjoint from sigma and tau u sigma in s.
/// Throws NotFound when sigma is not a simplex of s.
SimplicialComplex link(const SimplicialComplex& s, const Simplex& sigma);

/// All simplices of s spanned by `verts`. Throws MalformedInput on an
/// unknown vertex id.
SimplicialComplex induced_subcomplex(const SimplicialComplex& s, std::span<const Vertex> verts);

/// Union of two complexes (closure of both simplex sets).
SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);

struct LinkVerdict {
  Simplex sigma;
  int expected_sphere_dim = 0;  // d - dim(sigma) - 1
  long long link_euler = 0;
  std::vector<int> link_betti;  // Z2, unreduced
  bool homology_sphere = false;
  bool even_euler = false;
};

/// Per-simplex link report used as the combinatorial-manifold test.
///
/// Sphere recognition is replaced by a Z2-homology-sphere test on every link,
/// which is a heuristic: it accepts homology spheres that are not PL spheres.
struct ManifoldReport {
  int dim = -1;
  std::vector<LinkVerdict> links;  // every simplex of codimension >= 1
  bool pure = false;
  bool links_are_homology_spheres = false;
  bool links_have_even_euler = false;
  /// Every (d-1)-simplex has a link made of exactly two isolated vertices.
  bool ridges_have_two_cofaces = false;
  std::vector<Simplex> failing;  // simplices whose link failed any check

  bool is_manifold() const {
    return pure && links_are_homology_spheres && ridges_have_two_cofaces;
  }
};

ManifoldReport manifold_check(const SimplicialComplex& s);

}  // namespace gds
