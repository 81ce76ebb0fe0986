#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "gds/complex.hpp"
#include "gds/simplex.hpp"

namespace gds {

using Coeff = std::int64_t;

/// Formal combination of oriented k-simplices with integer or mod-n
/// coefficients.
///
/// Keys are stored sorted; the orientation of an ordered vertex sequence is
/// folded into the coefficient sign when a term is added. The sorted order is
/// the orientation every cochain gate sees. Dimension -1 has the single
/// "empty simplex" key {} and holds the reduced boundary of 0-chains.
class Chain {
 public:
  explicit Chain(int dim = 0, Coeff modulus = 0);

  int dim() const { return dim_; }
  /// 0 means integral.
  Coeff modulus() const { return modulus_; }

  /// Adds coeff * (ordered simplex). Throws MalformedInput on wrong length or
  /// repeated vertices.
  void add(std::span<const Vertex> ordered, Coeff coeff);
  void add(std::initializer_list<Vertex> ordered, Coeff coeff) {
    add(std::span<const Vertex>(ordered.begin(), ordered.size()), coeff);
  }

  Coeff coefficient(const Simplex& s) const;
  const std::map<Simplex, Coeff>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Same chain with coefficients reduced mod n (n > 0).
  Chain mod(Coeff n) const;
  /// Sum of coefficients (the reduced boundary of a 0-chain).
  Coeff coefficient_sum() const;

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain& operator*=(Coeff scalar);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(Coeff s, Chain a) { return a *= s; }

  friend bool operator==(const Chain& a, const Chain& b) {
    return a.dim_ == b.dim_ && a.modulus_ == b.modulus_ && a.terms_ == b.terms_;
  }

 private:
  void accumulate(const Simplex& key, Coeff coeff);
  void require_compatible(const Chain& other) const;

  int dim_;
  Coeff modulus_;
  std::map<Simplex, Coeff> terms_;
};

/// Alternating-sign simplicial boundary. A 0-chain maps to the (-1)-chain
/// holding its coefficient sum (reduced convention).
Chain boundary(const Chain& c);

/// Throws MalformedInput unless every term of `c` is a simplex of `s`.
void validate_chain(const Chain& c, const SimplicialComplex& s);

/// Sum of all k-simplices of s with coefficient 1 (mod `modulus`).
Chain all_simplices_chain(const SimplicialComplex& s, int k, Coeff modulus = 2);

}  // namespace gds
