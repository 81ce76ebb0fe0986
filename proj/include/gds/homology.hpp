#pragma once

#include <optional>
#include <vector>

#include "gds/chain.hpp"
#include "gds/complex.hpp"

namespace gds {

/// Outcome of asking whether a mod-2 cycle bounds.
///
/// Exactly one of `witness` and `cocycle` is set. A witness W satisfies
/// boundary(W) = target mod 2; a cocycle z is a mod-2 k-cochain (stored as a
/// chain of k-simplices) with zero coboundary and <z, target> = 1.
struct HomologyWitness {
  Chain target;
  std::optional<Chain> witness;
  std::optional<Chain> cocycle;

  bool trivial() const { return witness.has_value(); }
};

/// Decides whether the mod-2 k-cycle `c` is a boundary in `s`.
///
/// For k >= 1 the input must be closed mod 2 (ContractViolation otherwise).
/// 0-chains are solved in ordinary H_0, where every 0-chain is a cycle.
HomologyWitness homology_solve(const SimplicialComplex& s, const Chain& c);

/// Z2 Betti numbers b_0..b_d (unreduced). Empty complex gives {}.
std::vector<int> betti_numbers(const SimplicialComplex& s);

/// Mod-2 coboundary of a k-cochain (given as a chain of k-simplices).
Chain coboundary_mod2(const SimplicialComplex& s, const Chain& cochain);

/// Mod-2 pairing <cochain, chain>.
int pairing_mod2(const Chain& cochain, const Chain& chain);

/// Re-verifies a HomologyWitness against its complex.
bool check_witness(const SimplicialComplex& s, const HomologyWitness& w);

}  // namespace gds
