#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gds/complex.hpp"

namespace gds {

/// A shipped triangulation together with the invariants it is known to have.
struct CorpusEntry {
  std::string name;
  std::string description;
  std::vector<Simplex> facets;
  bool manifold = true;
  int dim = 0;
  long long euler = 0;
  std::vector<int> betti;  // Z2, unreduced
  /// For manifolds: whether the class of C_k mod 2 is nontrivial, k = 0..d.
  std::vector<bool> sw_nontrivial;

  SimplicialComplex complex() const { return build_complex(facets); }
};

const std::vector<CorpusEntry>& corpus();

/// NotFound for an unknown name.
const CorpusEntry& corpus_entry(std::string_view name);

/// Entries with manifold == true.
std::vector<const CorpusEntry*> corpus_manifolds();

}  // namespace gds
