#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gds/chain.hpp"
#include "gds/cochain.hpp"
#include "gds/complex.hpp"
#include "gds/homology.hpp"
#include "gds/phase.hpp"

namespace gds {

using ComplexRef = std::shared_ptr<const SimplicialComplex>;

struct PolynomialEquality {
  PhasePolynomial lhs;
  PhasePolynomial rhs;
};

/// flip_commutator(circuit) must be the constant `expected` (0: it commutes).
struct FlipSymmetry {
  PhasePolynomial circuit;
  std::uint64_t expected = 0;
};

/// Every gate must commute with the global flip on its own.
struct GateList {
  std::vector<PhasePolynomial> gates;
  std::string tag;
};

/// flip_commutator(w circuit on C) equals the w(X, .) circuit on dC.
struct CommutatorIdentity {
  GroupCochain w;
  Chain chain;
  int precision = 1;
};

/// boundary(chain) == expected.
struct ChainBoundary {
  Chain chain;
  Chain expected;
};

struct ChainEquality {
  Chain lhs;
  Chain rhs;
};

/// d P(C) + P(dC) == C - C'.
struct PrismIdentity {
  Chain chain;
  Vertex offset = 0;
};

/// A re-verifiable homology verdict; `expect_trivial` constrains it when set.
struct HomologyClass {
  ComplexRef complex;
  HomologyWitness result;
  std::optional<bool> expect_trivial;
};

struct CochainEquality {
  GroupCochain lhs;
  GroupCochain rhs;
};

enum class CochainProperty { Homogeneous, Cocycle, NotCoboundary };

struct CochainCheck {
  GroupCochain w;
  CochainProperty property = CochainProperty::Cocycle;
  /// Value group searched for NotCoboundary.
  std::int64_t value_modulus = 2;
};

struct ComplexEquality {
  ComplexRef lhs;
  ComplexRef rhs;
};

struct ScalarCheck {
  long long value = 0;
  long long expected = 0;
};

/// Exhaustive single-spin flip identities at one vertex.
struct FlipIdentity {
  ComplexRef complex;
  Vertex vertex = 0;
};

using EvidenceData = std::variant<PolynomialEquality, FlipSymmetry, GateList, CommutatorIdentity, ChainBoundary,
                                  ChainEquality, PrismIdentity, HomologyClass, CochainEquality, CochainCheck,
                                  ComplexEquality, ScalarCheck, FlipIdentity>;

/// Recomputes the verdict of one evidence item from its inputs.
bool evaluate(const EvidenceData& data);
std::string evidence_kind(const EvidenceData& data);

struct Evidence {
  std::string label;
  EvidenceData data;
  bool passed = false;
};

/// A checkable record of one claim: every item carries its own inputs, so
/// `recheck` can re-derive each verdict from scratch.
struct Certificate {
  std::string claim;
  std::string subject;
  std::string input_digest;
  std::vector<Evidence> evidence;
  std::vector<std::string> notes;
  /// Set when the claim's hypotheses fail; the certificate then fails.
  std::optional<std::string> precondition_failure;

  const Evidence& add(std::string label, EvidenceData data);
  bool passed() const;
  std::optional<std::size_t> first_failure() const;
  /// Re-evaluates every item; true when all stored verdicts are reproduced.
  bool recheck() const;
};

struct RenderOptions {
  /// Payloads with more lines than this are summarised by size and digest.
  std::size_t max_inline_lines = 40;
};

std::string render_text(const Certificate& c, const RenderOptions& opts = {});
std::string render_json(const Certificate& c, const RenderOptions& opts = {});

/// Full payload files of every item, as (file name, content) pairs.
std::vector<std::pair<std::string, std::string>> evidence_files(const Certificate& c);

}  // namespace gds
