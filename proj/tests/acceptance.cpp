// Acceptance suite: one PASS/FAIL line per criterion; exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gds/certify.hpp"
#include "gds/corpus.hpp"
#include "gds/gauge.hpp"
#include "gds/homology.hpp"
#include "gds/phase.hpp"
#include "gds/subdivision.hpp"

using namespace gds;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

long long sphere_euler(int d) { return d % 2 == 0 ? 2 : 0; }

bool has_note(const Certificate& c, const std::string& text) {
  for (const auto& n : c.notes) {
    if (n.find(text) != std::string::npos) return true;
  }
  return false;
}

Outcome halperin_toledo() {
  Outcome r;
  int checked = 0;
  for (const char* name : {"s2", "rp2", "t2", "s3", "cp2"}) {
    const auto b = barycentric(corpus_entry(name).complex());
    const int d = b.base.dim();
    for (int k = 1; k <= d; ++k) {
      const Chain lhs = boundary(halperin_toledo_chain(b, k));
      const Chain rhs = sphere_euler(d - k) * halperin_toledo_chain(b, k - 1);
      r.require(lhs == rhs, std::string(name) + " k=" + std::to_string(k));
      ++checked;
    }
  }
  if (r.ok) r.detail = std::to_string(checked) + " exact chain equalities";
  return r;
}

Outcome flip_commutator_parity() {
  Outcome r;
  for (const auto* e : corpus_manifolds()) {
    const auto comm = flip_commutator(gds_disentangler(e->complex()));
    const std::uint64_t expected = static_cast<std::uint64_t>(((e->euler % 2) + 2) % 2);
    const bool ok = expected == 0 ? comm.empty() : comm.is_constant() && comm.constant_term() == expected;
    r.require(ok, e->name);
  }
  const auto& rp2 = corpus_entry("rp2");
  const auto& cp2 = corpus_entry("cp2");
  r.require(flip_commutator(gds_disentangler(rp2.complex())).constant_term() == 1, "rp2 parity");
  r.require(flip_commutator(gds_disentangler(cp2.complex())).constant_term() == 1, "cp2 parity");
  r.require(flip_commutator(gds_disentangler(corpus_entry("t2").complex())).empty(), "t2 parity");
  r.require(flip_commutator(gds_disentangler(corpus_entry("s3").complex())).empty(), "s3 parity");
  if (r.ok) r.detail = std::to_string(corpus_manifolds().size()) + " manifolds, constant pi*chi(L)";
  return r;
}

Outcome cochain_equals_gds() {
  Outcome r;
  for (const auto& e : corpus()) {
    const auto c = certify_cochain_equals_gds(barycentric(e.complex()), e.name);
    if (e.manifold) {
      r.require(c.passed() && c.recheck(), e.name);
    } else {
      r.require(!c.passed() && c.precondition_failure.has_value(), e.name + " should fail its precondition");
    }
  }
  if (r.ok) r.detail = "all manifolds exact; broken complexes rejected by the link-parity precondition";
  return r;
}

PhasePolynomial random_polynomial(std::mt19937_64& rng, int n) {
  PhasePolynomial p(1);
  std::bernoulli_distribution coin(0.35);
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (!coin(rng)) continue;
    Simplex mono;
    for (int i = 0; i < n; ++i) {
      if (m & (1u << i)) mono.push_back(i);
    }
    p.add(mono, 1);
  }
  return p;
}

// p(1 - x): the conjugate of p by the global flip
PhasePolynomial flipped(const PhasePolynomial& p) { return p + flip_commutator(p); }

Outcome decomposition_soundness() {
  Outcome r;
  std::mt19937_64 rng(0x6d5a3c1eULL);
  std::uniform_int_distribution<int> size(1, 12);
  for (int trial = 0; trial < 1000 && r.ok; ++trial) {
    const int n = size(rng);
    const auto p = random_polynomial(rng, n);
    const auto q = p + flipped(p);
    r.require(flip_commutator(q).empty(), "symmetrized polynomial not symmetric");
    const auto d = decompose(q);
    r.require(d.symmetric(), "symmetric trial " + std::to_string(trial) + ": a chain is not closed");
    r.require(recompose(d) == q, "symmetric trial " + std::to_string(trial) + ": round trip");
  }
  std::mt19937_64 rng2(0x2b7e1516ULL);
  int drawn = 0;
  for (int trial = 0; trial < 1000 && r.ok;) {
    const int n = size(rng2);
    const auto p = random_polynomial(rng2, n);
    ++drawn;
    if (flip_commutator(p).empty()) continue;
    ++trial;
    const auto d = decompose(p);
    r.require(!d.symmetric(), "non-symmetric trial " + std::to_string(trial) + ": all boundaries vanish");
    r.require(recompose(d) == p, "non-symmetric trial " + std::to_string(trial) + ": round trip");
  }
  if (r.ok) r.detail = "1000 symmetric + 1000 non-symmetric (" + std::to_string(drawn) + " drawn)";
  return r;
}

Outcome exhaustive_oracle() {
  Outcome r;
  std::vector<std::pair<std::string, SimplicialComplex>> set;
  for (const auto& e : corpus()) set.emplace_back(e.name, e.complex());
  set.emplace_back("s2-tetra'", barycentric(corpus_entry("s2-tetra").complex()).derived);
  const auto oct = corpus_entry("s2").complex();
  auto t1 = move_T1(oct, oct.simplices(2).front());
  set.emplace_back("s2+T1", t1);
  set.emplace_back("s2+T1+T2", move_T2(t1, Simplex{0, 2}));
  std::size_t configs = 0;
  int complexes = 0;
  for (const auto& [name, s] : set) {
    const auto vars = s.vertices();
    if (vars.size() > 16) continue;
    ++complexes;
    const auto table = gds_disentangler(s).phase_table(vars);
    for (std::size_t x = 0; x < table.size(); ++x) {
      SpinConfig spin(vars.size());
      for (std::size_t j = 0; j < vars.size(); ++j) spin[j] = (x >> j) & 1u;
      r.require((table[x] == 0 ? 1 : -1) == dual_amplitude(s, spin), name + " configuration " + std::to_string(x));
      ++configs;
    }
  }
  if (r.ok) r.detail = std::to_string(complexes) + " complexes, " + std::to_string(configs) + " configurations";
  return r;
}

Outcome gauge_amplitudes() {
  Outcome r;
  const auto s = corpus_entry("s3").complex();
  const auto rows = trivial_sector_amplitudes(s);
  r.require(rows.size() == 16, "expected 16 trivial-sector configurations, got " + std::to_string(rows.size()));
  r.require(!rows.empty() && std::count(rows.front().z.begin(), rows.front().z.end(), true) == 0,
            "first configuration is not the empty one");
  if (!r.ok) return r;
  const long long ref = rows.front().amplitude;
  for (const auto& row : rows) {
    r.require(row.amplitude == 2 || row.amplitude == -2, "magnitude " + std::to_string(row.amplitude));
    const auto [re, im] = i_power(row.wall_euler);
    r.require(im == 0 && re * ref == row.amplitude, "sign of " + format_bits(row.z));
  }
  if (r.ok) r.detail = "16 configurations, |amp| = 2, sign = i^chi(E)";
  return r;
}

Outcome ocdual() {
  Outcome r;
  std::size_t total = 0;
  for (const auto& [name, expected] : std::vector<std::pair<std::string, std::size_t>>{{"s2", 64}, {"s2-tetra", 16}}) {
    const auto s = corpus_entry(name).complex();
    for (Vertex v : s.vertices()) {
      const auto rep = ocdual_check(s, v);
      r.require(rep.configurations == expected, name + ": configuration count");
      r.require(rep.holds(), name + " vertex " + std::to_string(v));
      total += rep.configurations;
    }
  }
  if (r.ok) r.detail = std::to_string(total) + " (configuration, vertex) pairs";
  return r;
}

Outcome main_corollaries() {
  Outcome r;
  for (const auto* e : corpus_manifolds()) {
    const auto b = barycentric(e->complex());
    const auto c = certify_wtr(b, e->name);
    r.require(c.passed() && c.recheck(), "wtr " + e->name);
    bool witnesses = false;
    for (const auto& ev : c.evidence) {
      if (const auto* h = std::get_if<HomologyClass>(&ev.data)) witnesses = witnesses || h->result.witness.has_value();
    }
    r.require(witnesses, "wtr " + e->name + " lists no witness");
  }
  const auto s3 = certify_wotr(barycentric(corpus_entry("s3").complex()), "s3");
  r.require(s3.passed() && has_note(s3, "residual: identity"), "wotr s3");
  const auto cp2 = certify_wotr(barycentric(corpus_entry("cp2").complex()), "cp2");
  r.require(cp2.passed() && has_note(cp2, "residual: V_0 V_2 V_4") &&
                has_note(cp2, "C_0 nontrivial; C_2 nontrivial"),
            "wotr cp2");
  if (r.ok) r.detail = "wTR on 6 manifolds; woTR: S3 -> identity, CP2 -> V_0 V_2 V_4";
  return r;
}

Outcome stiefel_whitney() {
  Outcome r;
  // nontrivial C_k <-> w_{d-k} != 0, from the known total classes
  const std::vector<std::pair<std::string, std::vector<bool>>> known = {
      {"s2", {false, false}},       {"s2-tetra", {false, false}},
      {"t2", {false, false}},       {"s3", {false, false, false}},
      {"rp2", {true, true}},        {"cp2", {true, false, true, false}},
  };
  for (const auto& [name, pattern] : known) {
    const auto& e = corpus_entry(name);
    const auto b = barycentric(e.complex());
    for (std::size_t k = 0; k < pattern.size(); ++k) {
      const auto w = sw_class(b, static_cast<int>(k));
      r.require(check_witness(b.derived, w), name + " witness k=" + std::to_string(k));
      r.require(!w.trivial() == pattern[k], name + " C_" + std::to_string(k));
      r.require(e.sw_nontrivial[k] == pattern[k], name + " metadata k=" + std::to_string(k));
    }
  }
  if (r.ok) r.detail = "matches w(RP2), w(CP2) and the corpus metadata";
  return r;
}

Outcome cochain_identities() {
  Outcome r;
  for (int k = 0; k <= 6; ++k) {
    r.require(coboundary(omega(k)).is_zero(), "d omega_" + std::to_string(k));
    r.require(omega(k).is_homogeneous(), "homogeneity of omega_" + std::to_string(k));
  }
  for (int k = 0; k <= 2; ++k) {
    r.require(coboundary(omega(2 * k).half_lift()) == omega(2 * k + 1).lifted(4), "half delta k=" + std::to_string(k));
  }
  if (r.ok) r.detail = "k <= 6 cocycles, k <= 2 half-coboundaries";
  return r;
}

Outcome rg_moves() {
  Outcome r;
  for (const char* name : {"rp2", "s3"}) {
    const auto c = certify_rg(corpus_entry(name).complex(), {}, {}, name);
    r.require(c.passed() && c.recheck(), name);
    std::size_t moves = 0;
    bool final_ok = false;
    for (const auto& ev : c.evidence) {
      if (std::holds_alternative<FlipSymmetry>(ev.data)) ++moves;
      if (std::holds_alternative<ComplexEquality>(ev.data)) final_ok = ev.passed;
    }
    r.require(moves > 1 && final_ok, std::string(name) + " lacks move or final evidence");
  }
  if (r.ok) r.detail = "RP2 and S3 reach the barycentric complex; every move difference symmetric";
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Halperin-Toledo identity", halperin_toledo},
      {"flip commutator is pi*chi(L)", flip_commutator_parity},
      {"cochain circuits equal the GDS disentangler", cochain_equals_gds},
      {"decomposition soundness", decomposition_soundness},
      {"exhaustive dual-amplitude oracle", exhaustive_oracle},
      {"gauge-side amplitudes on the 3-sphere", gauge_amplitudes},
      {"single-spin flip Euler identity", ocdual},
      {"main corollaries (wTR, woTR)", main_corollaries},
      {"Stiefel-Whitney pattern", stiefel_whitney},
      {"group-cochain identities", cochain_identities},
      {"RG moves to the barycentric subdivision", rg_moves},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += o.ok ? 0 : 1;
    std::printf("[%s] AC%zu %s: %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
  }
  return failed == 0 ? 0 : 1;
}
