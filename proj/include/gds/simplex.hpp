#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gds {

using Vertex = int;

/// A simplex is stored as its strictly increasing vertex list.
using Simplex = std::vector<Vertex>;

inline int simplex_dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

inline bool is_face_of(const Simplex& face, const Simplex& s) {
  return std::includes(s.begin(), s.end(), face.begin(), face.end());
}

/// Sorts `seq` in place and returns the parity of the sorting permutation
/// (+1 even, -1 odd). Returns 0 when `seq` has a repeated vertex.
int sort_with_sign(std::vector<Vertex>& seq);

/// Parity of a permutation given as a sequence of distinct integers.
int permutation_sign(std::span<const int> perm);

Simplex set_union(const Simplex& a, const Simplex& b);
Simplex set_difference(const Simplex& a, const Simplex& b);
bool disjoint(const Simplex& a, const Simplex& b);

/// "v0 v1 v2"
std::string to_string(const Simplex& s);

}  // namespace gds
