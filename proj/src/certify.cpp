#include "gds/certify.hpp"

#include <algorithm>

#include "gds/error.hpp"
#include "gds/homology.hpp"
#include "gds/io.hpp"

namespace gds {

namespace {

std::shared_ptr<const SimplicialComplex> share(SimplicialComplex s) {
  return std::make_shared<const SimplicialComplex>(std::move(s));
}

std::string k_str(int k) { return std::to_string(k); }

Certificate start(std::string claim, const SimplicialComplex& s, const std::string& subject) {
  Certificate c;
  c.claim = std::move(claim);
  c.subject = subject.empty() ? "complex with " + std::to_string(s.vertices().size()) + " vertices" : subject;
  c.input_digest = complex_digest(s);
  return c;
}

std::optional<std::string> odd_link(const SimplicialComplex& s) {
  for (int k = 0; k < s.dim(); ++k) {
    for (const auto& sigma : s.simplices(k)) {
      const long long chi = euler_characteristic(link(s, sigma));
      if (chi % 2 != 0) {
        return "link of " + to_string(sigma) + " has Euler characteristic " + std::to_string(chi);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> not_manifold(const SimplicialComplex& s) {
  const auto report = manifold_check(s);
  if (report.is_manifold()) return std::nullopt;
  return "input is not a closed combinatorial manifold";
}

long long sphere_euler(int d) { return d < 0 ? 0 : (d % 2 == 0 ? 2 : 0); }

PhasePolynomial ckz_sum(const std::vector<Simplex>& simplices, int precision) {
  PhasePolynomial p(precision);
  const auto half = static_cast<std::int64_t>(std::uint64_t{1} << (precision - 1));
  for (const auto& s : simplices) p.add(s, half);
  return p;
}

long long signed_count(const std::vector<Simplex>& simplices) {
  long long chi = 0;
  for (const auto& s : simplices) chi += (s.size() % 2 == 1) ? 1 : -1;
  return chi;
}

Chain relabel(const Chain& c, const Refinement& r, const BarycentricComplex& b) {
  Chain out(c.dim(), c.modulus());
  for (const auto& [s, coeff] : c.terms()) {
    std::vector<Vertex> seq;
    for (Vertex v : s) seq.push_back(b.id_of(r.label(v)));
    out.add(seq, coeff);
  }
  return out;
}

}  // namespace

std::string complex_digest(const SimplicialComplex& s) { return fnv1a_hex(format_complex(s)); }

Certificate verify_half_delta(int k) {
  Certificate c;
  c.claim = "omega_" + k_str(2 * k + 1) + " = 1/2 d omega_" + k_str(2 * k);
  c.subject = "group cochains of Z2";
  const auto half = omega(2 * k).half_lift();
  c.add("d(1/2 omega_" + k_str(2 * k) + ") = omega_" + k_str(2 * k + 1) + " over Z_4",
        CochainEquality{coboundary(half), omega(2 * k + 1).lifted(4)});
  c.add("1/2 omega_" + k_str(2 * k) + " is homogeneous", CochainCheck{half, CochainProperty::Homogeneous});
  c.notes.push_back("1/2 omega_" + k_str(2 * k) + " takes values outside Z2: " +
                    (half.uses_values_outside(2) ? "yes" : "no"));
  return c;
}

Certificate certify_omega(int max_cocycle, int max_half, int max_search) {
  Certificate c;
  c.claim = "omega_k cocycle identities";
  c.subject = "group cochains of Z2";
  for (int k = 0; k <= max_cocycle; ++k) {
    c.add("omega_" + k_str(k) + " is a cocycle", CochainCheck{omega(k), CochainProperty::Cocycle});
    c.add("omega_" + k_str(k) + " is homogeneous", CochainCheck{omega(k), CochainProperty::Homogeneous});
  }
  for (int k = 0; k <= max_half; ++k) {
    const auto half = omega(2 * k).half_lift();
    c.add("d(1/2 omega_" + k_str(2 * k) + ") = omega_" + k_str(2 * k + 1),
          CochainEquality{coboundary(half), omega(2 * k + 1).lifted(4)});
  }
  for (int k = 0; k <= max_search; ++k) {
    c.add("omega_" + k_str(k) + " has no homogeneous Z2-valued primitive",
          CochainCheck{omega(k), CochainProperty::NotCoboundary, 2});
  }
  return c;
}

Certificate commutator_chain_check(const GroupCochain& w, const Chain& chain, int precision) {
  Certificate c;
  c.claim = "flip commutator of a cochain circuit";
  c.subject = k_str(chain.dim()) + "-chain with " + std::to_string(chain.size()) + " terms";
  c.input_digest = fnv1a_hex(format_cochain(w) + format_chain(chain));
  c.add("commutator equals the w(X, .) circuit on the boundary", CommutatorIdentity{w, chain, precision});
  return c;
}

Certificate certify_cochain_equals_gds(const BarycentricComplex& b, const std::string& subject) {
  auto c = start("C^kZ product equals omega_k circuits on C_k", b.base, subject);
  if (auto why = odd_link(b.base)) {
    c.precondition_failure = *why;
    return c;
  }
  const int d = b.derived.dim();
  PhasePolynomial total(1);
  for (int k = 0; k <= d; ++k) {
    const auto ck = halperin_toledo_chain(b, k).mod(2);
    const auto circuit = omega_circuit_poly(ck);
    total += circuit;
    c.add("omega_" + k_str(k) + " circuit on C_" + k_str(k) + " = C^" + k_str(k) + "Z on every " + k_str(k) +
              "-simplex",
          PolynomialEquality{circuit, ckz_sum(b.derived.simplices(k), 1)});
  }
  c.add("product over k equals the GDS disentangler", PolynomialEquality{total, gds_disentangler(b.derived)});
  return c;
}

Certificate certify_wtr(const BarycentricComplex& b, const std::string& subject) {
  auto c = start("GDS dual is stably equivalent to V_0 ... V_d (with time reversal)", b.base, subject);
  if (auto why = not_manifold(b.base)) {
    c.precondition_failure = *why;
    return c;
  }
  const auto derived = share(b.derived);
  const int d = b.derived.dim();
  const auto gds = gds_disentangler(b.derived);
  const auto desc = decompose(gds);
  c.add("decomposition recomposes to the GDS disentangler", PolynomialEquality{recompose(desc), gds});

  const long long chi = euler_characteristic(b.base);
  for (int k = 0; k <= d; ++k) {
    const Chain dk = k < static_cast<int>(desc.chains.size()) ? desc.chains[k] : Chain(k, 2);
    Chain expected(k - 1, 2);
    if (k == 0 && chi % 2 != 0) expected.add(std::span<const Vertex>{}, 1);
    c.add(k == 0 ? "reduced boundary of D_0 is chi mod 2" : "D_" + k_str(k) + " is closed mod 2",
          ChainBoundary{dk, expected});
  }

  const Vertex offset = b.derived.vertices().back() + 1;
  std::vector<std::string> sw;
  for (int k = 0; k <= d; ++k) {
    const Chain dk = k < static_cast<int>(desc.chains.size()) ? desc.chains[k] : Chain(k, 2);
    const auto ck = halperin_toledo_chain(b, k).mod(2);
    c.add("D_" + k_str(k) + " - C_" + k_str(k) + " bounds",
          HomologyClass{derived, homology_solve(b.derived, (dk - ck).mod(2)), true});

    if (k > 0 || chi % 2 == 0) {
      // V_k V_k^dagger on C and a disjoint copy comes from symmetric gates on prism boundaries
      GateList gates{{}, "omega_" + k_str(k) + " on the boundary of each prism cell"};
      PhasePolynomial sum(1);
      for (const auto& [s, coeff] : ck.terms()) {
        Chain cell(k, 2);
        cell.add(s, coeff);
        gates.gates.push_back(omega_circuit_poly(boundary(prism_chain(cell, offset)).mod(2)));
        sum += gates.gates.back();
      }
      c.add("prism identity for C_" + k_str(k), PrismIdentity{ck, offset});
      c.add("prism boundary gates are flip-symmetric", std::move(gates));
      c.add("prism gates compose to V_" + k_str(k) + " times its inverse on the copy",
            PolynomialEquality{sum, omega_circuit_poly(ck) - omega_circuit_poly(copy_chain(ck, offset))});
    }

    if (k == d) {
      sw.push_back("C_" + k_str(k) + " fundamental");
      continue;
    }
    auto cls = homology_solve(b.derived, ck);
    const bool trivial = cls.trivial();
    sw.push_back("C_" + k_str(k) + (trivial ? " trivial" : " nontrivial"));
    if (trivial) {
      GateList gates{{}, "omega_" + k_str(k) + " on the boundary of each witness simplex"};
      PhasePolynomial sum(1);
      for (const auto& [s, coeff] : cls.witness->terms()) {
        Chain cell(k + 1, 2);
        cell.add(s, coeff);
        gates.gates.push_back(omega_circuit_poly(boundary(cell).mod(2)));
        sum += gates.gates.back();
      }
      c.add("C_" + k_str(k) + " bounds", HomologyClass{derived, std::move(cls), std::nullopt});
      c.add("V_" + k_str(k) + " splits into flip-symmetric gates", std::move(gates));
      c.add("those gates compose to V_" + k_str(k), PolynomialEquality{sum, omega_circuit_poly(ck)});
    } else {
      c.add("C_" + k_str(k) + " carries a Stiefel-Whitney class", HomologyClass{derived, std::move(cls), false});
    }
  }
  std::string line = "classes:";
  for (const auto& s : sw) line += " " + s + ";";
  line.pop_back();
  c.notes.push_back(line);
  return c;
}

Certificate certify_wotr(const BarycentricComplex& b, const std::string& subject) {
  auto c = start("GDS dual is stably equivalent to V_0 V_2 ... (without time reversal)", b.base, subject);
  if (auto why = not_manifold(b.base)) {
    c.precondition_failure = *why;
    return c;
  }
  constexpr int m = 2;
  const int d = b.derived.dim();
  const auto derived = share(b.derived);
  std::vector<Chain> chains;
  for (int k = 0; k <= d; ++k) chains.push_back(halperin_toledo_chain(b, k));

  PhasePolynomial symmetric_total(m);
  PhasePolynomial residual(m);
  for (int k = 0; k <= d; ++k) {
    if (k % 2 == 0) {
      residual += omega_circuit_poly(chains[k], m);
      continue;
    }
    const auto lambda = omega(k - 1).half_lift();
    c.add("d(1/2 omega_" + k_str(k - 1) + ") = omega_" + k_str(k),
          CochainEquality{coboundary(lambda), omega(k).lifted(4)});
    c.add("1/2 omega_" + k_str(k - 1) + " is homogeneous", CochainCheck{lambda, CochainProperty::Homogeneous});
    const Chain expected = sphere_euler(d - k) * chains[k - 1];
    c.add(d % 2 == 0 ? "C_" + k_str(k) + " is integrally closed"
                     : "dC_" + k_str(k) + " = 2 C_" + k_str(k - 1),
          ChainBoundary{chains[k], expected});

    GateList gates{{}, ""};
    if (lambda.uses_values_outside(2)) gates.tag = "breaks Z2 x Z2^T bookkeeping: phases in Z4 outside Z2";
    PhasePolynomial sum(m);
    for (const auto& [s, coeff] : chains[k].terms()) {
      gates.gates.push_back(cochain_value_poly(lambda, s, coeff, m));
      sum += gates.gates.back();
    }
    const auto rest = -cochain_circuit_poly(lambda, boundary(chains[k]), m);
    c.add("V_" + k_str(k) + " per-simplex gates are flip-symmetric", std::move(gates));
    c.add("V_" + k_str(k) + " = symmetric gates times 1/2 omega_" + k_str(k - 1) + " on dC_" + k_str(k),
          PolynomialEquality{omega_circuit_poly(chains[k], m), sum + rest});
    symmetric_total += sum;
    residual += rest;
  }
  c.add("GDS disentangler = symmetric gates times residual",
        PolynomialEquality{gds_disentangler(b.derived, m), symmetric_total + residual});

  if (d % 2 == 1) {
    c.add("residual is the identity", PolynomialEquality{residual, PhasePolynomial(m)});
    c.notes.push_back("residual: identity");
  } else {
    PhasePolynomial even(m);
    std::string names;
    for (int k = 0; k <= d; k += 2) {
      even += omega_circuit_poly(chains[k], m);
      names += (names.empty() ? "V_" : " V_") + k_str(k);
    }
    c.add("residual is " + names, PolynomialEquality{residual, even});
    std::string classes;
    for (int k = 0; k < d; k += 2) {
      auto cls = homology_solve(b.derived, chains[k].mod(2));
      classes += " C_" + k_str(k) + (cls.trivial() ? " trivial;" : " nontrivial;");
      c.add("class of C_" + k_str(k), HomologyClass{derived, std::move(cls), std::nullopt});
    }
    classes += " C_" + k_str(d) + " fundamental";
    c.notes.push_back("residual: " + names);
    c.notes.push_back("even classes:" + classes);
  }
  return c;
}

Certificate certify_rg(const SimplicialComplex& base, const std::vector<MoveSpec>& moves,
                       const std::vector<Chain>& chains, const std::string& subject) {
  auto c = start(chains.empty() ? "T1/T2 moves map the GDS state to the GDS state"
                                : "T1/T2 moves map the cochain state to its canonical image",
                 base, subject);
  const int d = base.dim();
  Refinement r(base);
  for (const auto& ch : chains) validate_chain(ch, base);

  std::vector<MoveSpec> plan = moves;
  const bool full = moves.empty();
  if (full) {
    for (const auto& f : base.simplices(d)) plan.push_back({MoveKind::T1, f});
    if (d >= 1) {
      for (const auto& f : base.simplices(d - 1)) plan.push_back({MoveKind::T2, f});
    }
  }

  std::vector<Chain> images;
  for (const auto& ch : chains) images.push_back(canonical_image(ch, r));
  PhasePolynomial composed(1);
  std::size_t index = 0;
  for (const auto& mv : plan) {
    ++index;
    const std::string name = std::string(mv.kind == MoveKind::T1 ? "T1" : "T2") + " on " + to_string(mv.target);
    MoveRecord rec;
    try {
      rec = mv.kind == MoveKind::T1 ? r.apply_t1(mv.target) : r.apply_t2(mv.target);
    } catch (const ContractViolation& e) {
      c.precondition_failure = "move " + std::to_string(index) + " (" + name + "): " + e.what();
      return c;
    }
    if (chains.empty()) {
      const auto diff = ckz_sum(rec.added, 1) - ckz_sum(rec.removed, 1);
      composed += diff;
      c.add("move " + std::to_string(index) + ": " + name + " difference circuit is flip-symmetric",
            FlipSymmetry{diff, 0});
      std::vector<Simplex> region = rec.removed;
      region.insert(region.end(), rec.added.begin(), rec.added.end());
      const long long glued = euler_characteristic(build_complex(region));
      const long long rim = glued - signed_count(region);
      if (glued != sphere_euler(d) || rim != sphere_euler(d - 1)) {
        c.notes.push_back("move " + std::to_string(index) + ": region glued to its image has chi " +
                          std::to_string(glued) + ", its rim chi " + std::to_string(rim) + " (not a sphere)");
      }
    } else {
      for (std::size_t i = 0; i < chains.size(); ++i) {
        auto after = canonical_image(chains[i], r);
        const auto diff = after - images[i];
        const Chain zero = boundary(Chain(diff.dim(), diff.modulus()));
        c.add("move " + std::to_string(index) + ": " + name + " difference of chain " + std::to_string(i + 1) +
                  " is closed",
              ChainBoundary{diff, zero});
        const auto circuit_diff = omega_circuit_poly(after.mod(2)) - omega_circuit_poly(images[i].mod(2));
        composed += circuit_diff;
        c.add("move " + std::to_string(index) + ": difference circuit is flip-symmetric",
              FlipSymmetry{circuit_diff, 0});
        images[i] = std::move(after);
      }
    }
  }

  c.add("composed difference circuit is flip-symmetric", FlipSymmetry{composed, 0});
  if (chains.empty()) {
    c.add("composed difference = GDS after - GDS before",
          PolynomialEquality{composed, gds_disentangler(r.current()) - gds_disentangler(base)});
  }
  c.notes.push_back("moves applied: " + std::to_string(plan.size()));
  if (full) {
    const auto b = barycentric(base);
    c.add("final complex is the barycentric subdivision", ComplexEquality{share(r.relabelled(b)), share(b.derived)});
    for (std::size_t i = 0; i < chains.size(); ++i) {
      c.add("final image of chain " + std::to_string(i + 1) + " is the barycentric canonical image",
            ChainEquality{relabel(images[i], r, b), canonical_image(chains[i], b)});
    }
  }
  return c;
}

Certificate verify_ocdual(const SimplicialComplex& s, std::optional<Vertex> vertex, const std::string& subject) {
  auto c = start("single-spin flip identities of the dual", s, subject);
  const auto share_s = share(s);
  std::vector<Vertex> targets;
  if (vertex) {
    targets.push_back(*vertex);
  } else {
    targets = s.vertices();
  }
  for (Vertex v : targets) {
    c.add("flip identities at vertex " + std::to_string(v), FlipIdentity{share_s, v});
  }
  return c;
}

}  // namespace gds
