#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gds/chain.hpp"
#include "gds/cochain.hpp"
#include "gds/complex.hpp"

namespace gds {

/// Multilinear polynomial in binary vertex variables with coefficients in
/// Z_{2^m}; it stands for the diagonal circuit |x> -> exp(2 pi i p(x) / 2^m).
///
/// A monomial is a sorted vertex set (the empty set is the constant term).
/// x_v = 1 means vertex v is down.
class PhasePolynomial {
 public:
  explicit PhasePolynomial(int precision = 1);

  int precision() const { return precision_; }
  std::uint64_t modulus() const { return std::uint64_t{1} << precision_; }

  /// Adds coeff (any integer, reduced mod 2^m) to the monomial.
  void add(const Simplex& monomial, std::int64_t coeff);
  std::uint64_t coefficient(const Simplex& monomial) const;
  const std::map<Simplex, std::uint64_t>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Sorted union of all monomials.
  std::vector<Vertex> variables() const;
  int max_degree() const;
  bool is_constant() const;
  std::uint64_t constant_term() const { return coefficient({}); }

  /// Phase numerator (mod 2^m) at the configuration whose down vertices are
  /// `down` (sorted).
  std::uint64_t evaluate(std::span<const Vertex> down) const;

  /// All 2^n phase numerators over `vars` (sorted; must contain every
  /// variable). Entry i has vertex vars[j] down iff bit j of i is set.
  std::vector<std::uint64_t> phase_table(std::span<const Vertex> vars) const;

  /// Same phases at a finer precision.
  PhasePolynomial with_precision(int precision) const;

  PhasePolynomial& operator+=(const PhasePolynomial& o);
  PhasePolynomial& operator-=(const PhasePolynomial& o);
  PhasePolynomial operator-() const;
  friend PhasePolynomial operator+(PhasePolynomial a, const PhasePolynomial& b) { return a += b; }
  friend PhasePolynomial operator-(PhasePolynomial a, const PhasePolynomial& b) { return a -= b; }
  friend bool operator==(const PhasePolynomial& a, const PhasePolynomial& b) {
    return a.precision_ == b.precision_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_precision(const PhasePolynomial& o) const;

  int precision_;
  std::map<Simplex, std::uint64_t> terms_;
};

/// C^kZ on the given vertices: one monomial with phase pi.
PhasePolynomial ckz(std::span<const Vertex> vertices, int precision = 1);

/// coeff * w(e, x_0, ..., x_k) as a polynomial, where x_i is the variable of
/// ordered[i]. PrecisionError unless w's modulus divides 2^m.
PhasePolynomial cochain_gate_poly(const GroupCochain& w, std::span<const Vertex> ordered, std::int64_t coeff,
                                  int precision = 1);

/// coeff * w(x_0, ..., x_k) with no leading identity argument.
PhasePolynomial cochain_value_poly(const GroupCochain& w, std::span<const Vertex> ordered, std::int64_t coeff,
                                   int precision = 1);

/// coeff * omega_k gate on `ordered`: pi x_0 (1-x_1) x_2 (1-x_3) ...
PhasePolynomial omega_gate_poly(std::span<const Vertex> ordered, std::int64_t coeff, int precision = 1);

/// Product of cochain gates by w over the terms of c (each simplex in sorted
/// order, coefficient as multiplicity).
PhasePolynomial cochain_circuit_poly(const GroupCochain& w, const Chain& c, int precision = 1);

/// The omega_k circuit on a k-chain (k = c.dim()).
PhasePolynomial omega_circuit_poly(const Chain& c, int precision = 1);

/// Product of C^kZ over every simplex of s.
PhasePolynomial gds_disentangler(const SimplicialComplex& s, int precision = 1);

/// p(1 - x) - p(x): the phase of X U X U^dagger for the global flip X.
PhasePolynomial flip_commutator(const PhasePolynomial& p);

/// omega_k gate supports peeled off a +-1 phase polynomial.
struct CochainCircuitDescriptor {
  /// chains[k] holds the supports of omega_k gates (mod 2), k = 0..size-1.
  std::vector<Chain> chains;
  /// Constant left over after peeling (0 or 1, in units of pi).
  std::uint64_t global_phase = 0;
  /// boundaries[k] = dC_k mod 2; boundaries[0] is the reduced (-1)-chain.
  std::vector<Chain> boundaries;

  /// Every boundary vanishes: the circuit commutes with the global flip.
  bool symmetric() const;
  /// Every boundary with k >= 1 vanishes: it commutes up to a global sign.
  bool symmetric_up_to_phase() const;
  std::size_t gate_count() const;
};

/// Greedy top-degree peeling into omega_k gates (precision 1 only).
CochainCircuitDescriptor decompose(const PhasePolynomial& p);

/// Sum of the omega_k circuits of the descriptor plus its global phase.
PhasePolynomial recompose(const CochainCircuitDescriptor& d, int precision = 1);

/// "pi/2^(m-1) * c" style rendering of one phase numerator, e.g. "pi", "pi/2", "3pi/2", "0".
std::string phase_string(std::uint64_t numerator, int precision);

}  // namespace gds
