#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gds/complex.hpp"

namespace gds {

/// Spin per vertex, aligned with s.vertices(); true = down.
using SpinConfig = std::vector<bool>;
/// Gauge bit per edge, aligned with s.simplices(1).
using EdgeConfig = std::vector<bool>;

/// "0101" with character i for position i. Throws MalformedInput on other
/// characters or a length mismatch with `expected`.
std::vector<bool> parse_bits(std::string_view bits, std::size_t expected);
std::string format_bits(const std::vector<bool>& bits);

std::vector<Vertex> down_vertices(const SimplicialComplex& s, const SpinConfig& spin);

/// z_(u,v) = g_u + g_v mod 2.
EdgeConfig gauge_map(const SimplicialComplex& s, const SpinConfig& spin);

/// Every triangle has an even number of set edges.
bool is_flat(const SimplicialComplex& s, const EdgeConfig& z);

/// All spin configurations mapping to z (2 per connected component), empty
/// when z is outside the trivial sector.
std::vector<SpinConfig> gauge_preimages(const SimplicialComplex& s, const EdgeConfig& z);

/// (-1)^chi(induced subcomplex on the down vertices).
int dual_amplitude(const SimplicialComplex& s, const SpinConfig& spin);

/// Sum of dual_amplitude over the preimages of z; 0 outside the trivial sector.
long long gauged_state_amplitude(const SimplicialComplex& s, const EdgeConfig& z);

/// Euler characteristic of the domain wall between down and up Voronoi cells:
/// the dual cells of simplices meeting both spin values, cell of sigma having
/// dimension d - dim(sigma).
long long dual_cycle_euler(const SimplicialComplex& s, const SpinConfig& spin);

/// One gauge-side sector entry: an edge configuration and its amplitude.
struct SectorAmplitude {
  EdgeConfig z;
  SpinConfig representative;  // lexicographically smallest preimage
  long long amplitude = 0;
  long long wall_euler = 0;   // chi(E)
};

/// Every trivial-sector edge configuration (found by enumerating spins,
/// limited to 20 vertices), ordered by representative.
std::vector<SectorAmplitude> trivial_sector_amplitudes(const SimplicialComplex& s);

/// i^chi as (re, im).
std::pair<int, int> i_power(long long chi);

/// Exhaustive check of the single-spin flip identities at vertex c.
struct OcdualReport {
  Vertex c = 0;
  std::size_t configurations = 0;
  /// chi(ind(D + c)) - chi(ind(D - c)) = 1 - chi(lk(c) n ind(D - c)) failed.
  std::size_t euler_failures = 0;
  /// amp(flip_c D) amp(D) = -(-1)^chi(down_c) failed, with down_c the part of
  /// the dual cell boundary of c whose gauge bits are set.
  std::size_t sign_failures = 0;
  std::optional<SpinConfig> first_failure;

  bool holds() const { return euler_failures == 0 && sign_failures == 0; }
};

/// Throws ContractViolation beyond 20 vertices or when c is not a vertex.
OcdualReport ocdual_check(const SimplicialComplex& s, Vertex c);

/// +1 / -1 when dual_amplitude(flip x) dual_amplitude(x) is that constant for
/// every x, 0 otherwise (at most 20 vertices).
int flip_parity(const SimplicialComplex& s);

}  // namespace gds
