#include "gds/homology.hpp"

#include "gds/error.hpp"
#include "gds/f2.hpp"

namespace gds {

namespace {

f2::BitVector boundary_column(const SimplicialComplex& s, const Simplex& sigma) {
  const int k = simplex_dim(sigma);
  f2::BitVector col(s.count(k - 1));
  Simplex face(sigma.size() - 1);
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      if (i != j) face[w++] = sigma[i];
    }
    col.flip(*s.index_of(face));
  }
  return col;
}

/// Echelon form of the boundary map from (k+1)-simplices to k-simplices.
f2::ColumnEchelon boundary_echelon(const SimplicialComplex& s, int k_plus_one, bool track) {
  f2::ColumnEchelon ech(s.count(k_plus_one - 1), track);
  for (const auto& sigma : s.simplices(k_plus_one)) ech.add_column(boundary_column(s, sigma));
  return ech;
}

}  // namespace

std::vector<int> betti_numbers(const SimplicialComplex& s) {
  const int d = s.dim();
  if (d < 0) return {};
  std::vector<std::size_t> rank(static_cast<std::size_t>(d) + 2, 0);
  for (int k = 1; k <= d; ++k) rank[static_cast<std::size_t>(k)] = boundary_echelon(s, k, false).rank();
  std::vector<int> betti;
  for (int k = 0; k <= d; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    betti.push_back(static_cast<int>(s.count(k) - rank[uk] - rank[uk + 1]));
  }
  return betti;
}

HomologyWitness homology_solve(const SimplicialComplex& s, const Chain& c) {
  const int k = c.dim();
  if (k < 0) throw ContractViolation("homology_solve needs a chain of dimension >= 0");
  validate_chain(c, s);
  const Chain target = c.mod(2);
  if (k >= 1 && !boundary(target).empty()) {
    throw ContractViolation("homology_solve: input " + std::to_string(k) + "-chain is not closed mod 2");
  }

  f2::BitVector rhs(s.count(k));
  for (const auto& [key, coeff] : target.terms()) rhs.set(*s.index_of(key));

  const auto ech = boundary_echelon(s, k + 1, true);
  HomologyWitness out{target, std::nullopt, std::nullopt};
  if (auto x = ech.solve(rhs)) {
    Chain w(k + 1, 2);
    const auto& cofaces = s.simplices(k + 1);
    for (std::size_t i : x->ones()) w.add(cofaces[i], 1);
    out.witness = std::move(w);
    return out;
  }
  auto z = ech.separating_functional(rhs);
  if (!z) throw InternalError("homology_solve: no witness and no separating cocycle");
  Chain cocycle(k, 2);
  const auto& faces = s.simplices(k);
  for (std::size_t i : z->ones()) cocycle.add(faces[i], 1);
  out.cocycle = std::move(cocycle);
  return out;
}

Chain coboundary_mod2(const SimplicialComplex& s, const Chain& cochain) {
  const int k = cochain.dim();
  Chain out(k + 1, 2);
  for (const auto& tau : s.simplices(k + 1)) {
    Coeff sum = 0;
    Simplex face(tau.size() - 1);
    for (std::size_t j = 0; j < tau.size(); ++j) {
      std::size_t w = 0;
      for (std::size_t i = 0; i < tau.size(); ++i) {
        if (i != j) face[w++] = tau[i];
      }
      sum += cochain.coefficient(face);
    }
    if (sum % 2) out.add(tau, 1);
  }
  return out;
}

int pairing_mod2(const Chain& cochain, const Chain& chain) {
  Coeff sum = 0;
  for (const auto& [key, coeff] : chain.terms()) sum += (coeff % 2) * (cochain.coefficient(key) % 2);
  return static_cast<int>(((sum % 2) + 2) % 2);
}

bool check_witness(const SimplicialComplex& s, const HomologyWitness& w) {
  if (w.witness.has_value() == w.cocycle.has_value()) return false;
  if (w.witness) return boundary(*w.witness).mod(2) == w.target.mod(2);
  return coboundary_mod2(s, *w.cocycle).empty() && pairing_mod2(*w.cocycle, w.target) == 1;
}

}  // namespace gds
