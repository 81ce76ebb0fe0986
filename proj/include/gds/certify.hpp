#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gds/certificate.hpp"
#include "gds/subdivision.hpp"

namespace gds {

/// d(1/2 omega_{2k}) = omega_{2k+1}, over Z_4, on every argument tuple.
Certificate verify_half_delta(int k);

/// Cocycle, homogeneity, half-coboundary and non-coboundary facts about the
/// omega_k family.
Certificate certify_omega(int max_cocycle = 6, int max_half = 2, int max_search = 3);

/// flip_commutator(w circuit on C) = w(X, .) circuit on dC.
Certificate commutator_chain_check(const GroupCochain& w, const Chain& c, int precision = 1);

/// C^kZ over every derived simplex equals the omega_k circuits on C_k mod 2.
Certificate certify_cochain_equals_gds(const BarycentricComplex& b, const std::string& subject = "");

/// Closed-chain decomposition of the GDS disentangler of the derived complex,
/// null-homology witnesses against C_k and the Stiefel-Whitney classes.
Certificate certify_wtr(const BarycentricComplex& b, const std::string& subject = "");

/// Odd-k gates rewritten as symmetric gates through 1/2 d omega_{k-1}, at
/// precision 2, together with what survives.
Certificate certify_wotr(const BarycentricComplex& b, const std::string& subject = "");

struct MoveSpec {
  MoveKind kind = MoveKind::T1;
  Simplex target;
};

/// Runs `moves` on a refinement of `base` (every T1 then every T2 when empty)
/// and certifies each difference circuit. With `chains` the state is the
/// omega circuits on their canonical images; otherwise it is the GDS state.
/// A full pass also checks the final complex against the barycentric one.
Certificate certify_rg(const SimplicialComplex& base, const std::vector<MoveSpec>& moves,
                       const std::vector<Chain>& chains = {}, const std::string& subject = "");

/// Exhaustive single-spin flip identities at `vertex`, or at every vertex.
Certificate verify_ocdual(const SimplicialComplex& s, std::optional<Vertex> vertex = std::nullopt,
                          const std::string& subject = "");

/// FNV-1a digest of the canonical facet listing.
std::string complex_digest(const SimplicialComplex& s);

}  // namespace gds
