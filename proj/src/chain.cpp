#include "gds/chain.hpp"

#include <string>

#include "gds/error.hpp"

namespace gds {

namespace {

Coeff checked_add(Coeff a, Coeff b) {
  Coeff out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw InternalError("chain coefficient overflow");
  return out;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw InternalError("chain coefficient overflow");
  return out;
}

Coeff reduce(Coeff c, Coeff n) {
  if (n <= 0) return c;
  c %= n;
  return c < 0 ? c + n : c;
}

}  // namespace

Chain::Chain(int dim, Coeff modulus) : dim_(dim), modulus_(modulus) {
  if (dim < -1) throw MalformedInput("chain dimension must be >= -1");
  if (modulus < 0) throw MalformedInput("chain modulus must be >= 0");
}

void Chain::add(std::span<const Vertex> ordered, Coeff coeff) {
  if (static_cast<int>(ordered.size()) != dim_ + 1) {
    throw MalformedInput("chain term of length " + std::to_string(ordered.size()) +
                         " in a " + std::to_string(dim_) + "-chain");
  }
  std::vector<Vertex> key(ordered.begin(), ordered.end());
  const int sign = sort_with_sign(key);
  if (sign == 0) throw MalformedInput("repeated vertex in chain term");
  accumulate(key, sign > 0 ? coeff : checked_mul(coeff, -1));
}

void Chain::accumulate(const Simplex& key, Coeff coeff) {
  coeff = reduce(coeff, modulus_);
  if (coeff == 0) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second = reduce(checked_add(it->second, coeff), modulus_);
  if (it->second == 0) terms_.erase(it);
}

Coeff Chain::coefficient(const Simplex& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? 0 : it->second;
}

Chain Chain::mod(Coeff n) const {
  if (n <= 0) throw MalformedInput("modulus must be positive");
  Chain out(dim_, n);
  for (const auto& [key, c] : terms_) out.accumulate(key, c);
  return out;
}

Coeff Chain::coefficient_sum() const {
  Coeff sum = 0;
  for (const auto& [key, c] : terms_) sum = checked_add(sum, c);
  return reduce(sum, modulus_);
}

void Chain::require_compatible(const Chain& other) const {
  if (dim_ != other.dim_ || modulus_ != other.modulus_) {
    throw ContractViolation("chains of different dimension or modulus");
  }
}

Chain& Chain::operator+=(const Chain& other) {
  require_compatible(other);
  for (const auto& [key, c] : other.terms_) accumulate(key, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  require_compatible(other);
  for (const auto& [key, c] : other.terms_) accumulate(key, checked_mul(c, -1));
  return *this;
}

Chain& Chain::operator*=(Coeff scalar) {
  std::map<Simplex, Coeff> old;
  old.swap(terms_);
  for (const auto& [key, c] : old) accumulate(key, checked_mul(c, scalar));
  return *this;
}

Chain boundary(const Chain& c) {
  Chain out(c.dim() - 1 < -1 ? -1 : c.dim() - 1, c.modulus());
  if (c.dim() == -1) return out;  // nothing below the empty simplex
  for (const auto& [key, coeff] : c.terms()) {
    for (std::size_t j = 0; j < key.size(); ++j) {
      Simplex face;
      face.reserve(key.size() - 1);
      for (std::size_t i = 0; i < key.size(); ++i) {
        if (i != j) face.push_back(key[i]);
      }
      out.add(face, (j % 2 == 0) ? coeff : -coeff);
    }
  }
  return out;
}

void validate_chain(const Chain& c, const SimplicialComplex& s) {
  if (c.dim() < 0) return;
  for (const auto& [key, coeff] : c.terms()) {
    if (!s.contains(key)) throw MalformedInput("chain term {" + to_string(key) + "} not in complex");
  }
}

Chain all_simplices_chain(const SimplicialComplex& s, int k, Coeff modulus) {
  Chain out(k, modulus);
  for (const auto& sigma : s.simplices(k)) out.add(sigma, 1);
  return out;
}

}  // namespace gds
