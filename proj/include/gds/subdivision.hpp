#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gds/chain.hpp"
#include "gds/complex.hpp"
#include "gds/homology.hpp"

namespace gds {

/// First barycentric subdivision of a base complex.
///
/// Derived vertex i is the barycenter of `labels[i]`, a simplex of the base.
/// Ids follow (dimension, lexicographic) order of the labels, so the integer
/// order of ids extends the face relation: every derived simplex, stored
/// sorted, is already written in increasing face order.
struct BarycentricComplex {
  SimplicialComplex base;
  SimplicialComplex derived;
  std::vector<Simplex> labels;
  std::map<Simplex, Vertex> ids;

  Vertex id_of(const Simplex& base_simplex) const;
  const Simplex& label(Vertex v) const { return labels.at(static_cast<std::size_t>(v)); }
  /// Face relation on derived vertices (strict).
  bool precedes(Vertex a, Vertex b) const;
  /// "(v1.v4.v7)"
  std::string vertex_name(Vertex v) const;
};

BarycentricComplex barycentric(const SimplicialComplex& s);

/// Formats a base simplex as a derived-vertex name, "(v1.v4)".
std::string barycenter_name(const Simplex& base_simplex);

enum class MoveKind { T1, T2 };

/// What one local move changed. `removed` and `added` are the simplices that
/// left and entered the complex; `starred` lists the base cells whose
/// barycenters were inserted, in order.
struct MoveRecord {
  MoveKind kind = MoveKind::T1;
  Simplex target;  // base simplex the move was requested on
  std::vector<Simplex> starred;
  std::vector<Simplex> removed;
  std::vector<Simplex> added;
};

/// A subdivision of a base complex reached by T1/T2 moves.
///
/// Every vertex carries a label: the base simplex whose barycenter it is
/// (original vertices are labelled by themselves). The underlying move is a
/// stellar subdivision at the open cell of a base simplex, which is well
/// defined even after parts of that cell's boundary have been subdivided.
class Refinement {
 public:
  explicit Refinement(SimplicialComplex base);

  const SimplicialComplex& base() const { return base_; }
  const SimplicialComplex& current() const;
  const std::vector<Simplex>& facets() const { return facets_; }
  const Simplex& label(Vertex v) const;
  const std::map<Vertex, Simplex>& labels() const { return labels_; }
  std::optional<Vertex> barycenter_of(const Simplex& base_simplex) const;

  /// Replaces the top-dimensional base simplex `delta` (which must still be a
  /// facet of the current complex) by the cone from its barycenter over its
  /// boundary. ContractViolation otherwise.
  MoveRecord apply_t1(const Simplex& delta);

  /// Replaces the closed star of the base (d-1)-simplex `delta` by cones over
  /// its barycentric subdivision. Requires every (d-1)-piece of delta's cell
  /// to have a link made of isolated vertices and delta not yet subdivided.
  /// Faces of delta that are still unsubdivided are starred everywhere they
  /// occur, so the complex stays a valid triangulation.
  MoveRecord apply_t2(const Simplex& delta);

  /// T1 on every top simplex, then T2 on every (d-1)-simplex of the base.
  std::vector<MoveRecord> apply_all();

  /// The current complex rewritten in the derived ids of `b` (labels mapped
  /// through b.id_of). Equal to b.derived exactly when the refinement has
  /// reached the barycentric subdivision.
  SimplicialComplex relabelled(const BarycentricComplex& b) const;

 private:
  /// Stellar subdivision at the open cell of `cell`. No-op when already
  /// starred.
  bool star(const Simplex& cell, MoveRecord& record);
  Simplex carrier(const Simplex& s) const;

  SimplicialComplex base_;
  std::vector<Simplex> facets_;
  mutable std::optional<SimplicialComplex> current_;
  std::map<Vertex, Simplex> labels_;
  std::map<Simplex, Vertex> barycenters_;
  Vertex next_id_ = 0;
};

/// T1 on a plain complex (all vertices treated as original). The new vertex
/// gets id max+1.
SimplicialComplex move_T1(const SimplicialComplex& s, const Simplex& delta);

/// T2 on a plain complex (all vertices treated as original).
SimplicialComplex move_T2(const SimplicialComplex& s, const Simplex& delta);

/// Each base k-simplex maps to the signed sum of the derived k-simplices it
/// contains, oriented in increasing face order.
Chain canonical_image(const Chain& c, const BarycentricComplex& b);

/// Same map into an intermediate refinement. Orientation signs come from the
/// determinant of the barycentric coordinates of each piece.
Chain canonical_image(const Chain& c, const Refinement& r);

/// Tagged copy of a chain: every vertex v becomes v + offset.
Chain copy_chain(const Chain& c, Vertex offset);

/// Prism operator P with dP(C) + P(dC) = C - C', where C' = copy_chain(C, offset).
/// `offset` must exceed every vertex id of c so that copies sort after
/// originals. The (-1)-chain maps to zero.
Chain prism_chain(const Chain& c, Vertex offset);

/// Integral chain C_k = sum over derived k-simplices (s_0 < ... < s_k) of
/// (-1)^(dim s_0 + ... + dim s_k) (s_0 < ... < s_k).
Chain halperin_toledo_chain(const BarycentricComplex& b, int k);

/// Mod-2 homology class of C_k. InternalError if C_k is not closed mod 2.
HomologyWitness sw_class(const BarycentricComplex& b, int k);

}  // namespace gds
