#include "gds/certificate.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "gds/error.hpp"
#include "gds/gauge.hpp"
#include "gds/io.hpp"
#include "gds/subdivision.hpp"

namespace gds {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const char* property_name(CochainProperty p) {
  switch (p) {
    case CochainProperty::Homogeneous: return "homogeneous";
    case CochainProperty::Cocycle: return "cocycle";
    case CochainProperty::NotCoboundary: return "not a coboundary";
  }
  return "?";
}

bool check_property(const CochainCheck& c) {
  switch (c.property) {
    case CochainProperty::Homogeneous: return c.w.is_homogeneous();
    case CochainProperty::Cocycle: return coboundary(c.w).is_zero();
    case CochainProperty::NotCoboundary: return !find_coboundary_preimage(c.w, c.value_modulus).has_value();
  }
  return false;
}

PhasePolynomial commutator_lhs(const CommutatorIdentity& c) {
  return flip_commutator(cochain_circuit_poly(c.w, c.chain, c.precision));
}

PhasePolynomial commutator_rhs(const CommutatorIdentity& c) {
  return cochain_circuit_poly(c.w.slice_first(true), boundary(c.chain), c.precision);
}

Chain prism_lhs(const PrismIdentity& p) {
  Chain lhs = boundary(prism_chain(p.chain, p.offset));
  if (p.chain.dim() >= 1) lhs += prism_chain(boundary(p.chain), p.offset);
  return lhs;
}

Chain prism_rhs(const PrismIdentity& p) { return p.chain - copy_chain(p.chain, p.offset); }

std::string commutator_summary(const PhasePolynomial& comm) {
  if (comm.empty()) return "commutator = 0";
  if (comm.is_constant()) return "commutator = constant " + phase_string(comm.constant_term(), comm.precision());
  return "commutator has " + std::to_string(comm.size()) + " terms";
}

std::string summary(const EvidenceData& data) {
  return std::visit(
      overloaded{
          [](const PolynomialEquality& e) {
            return "lhs " + std::to_string(e.lhs.size()) + " terms, rhs " + std::to_string(e.rhs.size()) +
                   " terms, difference " + std::to_string((e.lhs - e.rhs).size()) + " terms";
          },
          [](const FlipSymmetry& e) {
            return commutator_summary(flip_commutator(e.circuit)) + " (expected " +
                   (e.expected == 0 ? std::string("0") : phase_string(e.expected, e.circuit.precision())) + ")";
          },
          [](const GateList& e) {
            std::size_t bad = 0;
            for (const auto& g : e.gates) bad += flip_commutator(g).empty() ? 0 : 1;
            std::string s = std::to_string(e.gates.size()) + " gates, " + std::to_string(bad) + " not flip-symmetric";
            if (!e.tag.empty()) s += "; " + e.tag;
            return s;
          },
          [](const CommutatorIdentity& e) {
            return "difference " + std::to_string((commutator_lhs(e) - commutator_rhs(e)).size()) + " terms";
          },
          [](const ChainBoundary& e) {
            const auto b = boundary(e.chain);
            return "boundary " + std::to_string(b.size()) + " terms, expected " + std::to_string(e.expected.size()) +
                   " terms";
          },
          [](const ChainEquality& e) {
            return "lhs " + std::to_string(e.lhs.size()) + " terms, rhs " + std::to_string(e.rhs.size()) + " terms";
          },
          [](const PrismIdentity& e) {
            return "chain " + std::to_string(e.chain.size()) + " terms, residual " +
                   std::to_string((prism_lhs(e) - prism_rhs(e)).size()) + " terms";
          },
          [](const HomologyClass& e) {
            std::string s = e.result.trivial()
                                ? "bounds (witness " + std::to_string(e.result.witness->size()) + " terms)"
                                : "nontrivial (detecting cocycle " + std::to_string(e.result.cocycle->size()) +
                                      " terms)";
            if (e.expect_trivial) s += *e.expect_trivial ? "; expected to bound" : "; expected nontrivial";
            return s;
          },
          [](const CochainEquality& e) {
            std::size_t diff = 0;
            if (e.lhs.arity() == e.rhs.arity() && e.lhs.modulus() == e.rhs.modulus()) {
              for (std::size_t i = 0; i < e.lhs.table_size(); ++i) diff += e.lhs.table()[i] != e.rhs.table()[i];
              return std::to_string(diff) + " of " + std::to_string(e.lhs.table_size()) + " entries differ";
            }
            return std::string("shape mismatch");
          },
          [](const CochainCheck& e) {
            std::string s = std::string("property: ") + property_name(e.property);
            if (e.property == CochainProperty::NotCoboundary) {
              s += " (values in Z_" + std::to_string(e.value_modulus) + ")";
            }
            return s;
          },
          [](const ComplexEquality& e) {
            auto fv = [](const SimplicialComplex& s) {
              std::string out = "(";
              for (auto n : s.f_vector()) out += (out.size() > 1 ? "," : "") + std::to_string(n);
              return out + ")";
            };
            return "f-vectors " + fv(*e.lhs) + " and " + fv(*e.rhs);
          },
          [](const ScalarCheck& e) {
            return "value " + std::to_string(e.value) + ", expected " + std::to_string(e.expected);
          },
          [](const FlipIdentity& e) {
            const auto r = ocdual_check(*e.complex, e.vertex);
            return std::to_string(r.configurations) + " configurations, " + std::to_string(r.euler_failures) +
                   " Euler failures, " + std::to_string(r.sign_failures) + " sign failures";
          },
      },
      data);
}

std::vector<std::pair<std::string, std::string>> payload(const EvidenceData& data) {
  using Files = std::vector<std::pair<std::string, std::string>>;
  return std::visit(
      overloaded{
          [](const PolynomialEquality& e) {
            return Files{{"lhs", format_polynomial(e.lhs)}, {"rhs", format_polynomial(e.rhs)}};
          },
          [](const FlipSymmetry& e) {
            return Files{{"circuit", format_polynomial(e.circuit)},
                         {"commutator", format_polynomial(flip_commutator(e.circuit))}};
          },
          [](const GateList& e) {
            std::string all;
            for (const auto& g : e.gates) all += format_polynomial(g);
            return Files{{"gates", all}};
          },
          [](const CommutatorIdentity& e) {
            return Files{{"cochain", format_cochain(e.w)},
                         {"chain", format_chain(e.chain)},
                         {"commutator", format_polynomial(commutator_lhs(e))},
                         {"boundary-circuit", format_polynomial(commutator_rhs(e))}};
          },
          [](const ChainBoundary& e) {
            return Files{{"chain", format_chain(e.chain)}, {"expected", format_chain(e.expected)}};
          },
          [](const ChainEquality& e) { return Files{{"lhs", format_chain(e.lhs)}, {"rhs", format_chain(e.rhs)}}; },
          [](const PrismIdentity& e) {
            return Files{{"chain", format_chain(e.chain)}, {"prism", format_chain(prism_chain(e.chain, e.offset))}};
          },
          [](const HomologyClass& e) {
            Files f{{"target", format_chain(e.result.target)}};
            if (e.result.witness) f.emplace_back("witness", format_chain(*e.result.witness));
            if (e.result.cocycle) f.emplace_back("cocycle", format_chain(*e.result.cocycle));
            return f;
          },
          [](const CochainEquality& e) {
            return Files{{"lhs", format_cochain(e.lhs)}, {"rhs", format_cochain(e.rhs)}};
          },
          [](const CochainCheck& e) { return Files{{"cochain", format_cochain(e.w)}}; },
          [](const ComplexEquality& e) {
            return Files{{"lhs", format_complex(*e.lhs)}, {"rhs", format_complex(*e.rhs)}};
          },
          [](const ScalarCheck&) { return Files{}; },
          [](const FlipIdentity& e) { return Files{{"complex", format_complex(*e.complex)}}; },
      },
      data);
}

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

bool evaluate(const EvidenceData& data) {
  return std::visit(
      overloaded{
          [](const PolynomialEquality& e) { return e.lhs == e.rhs; },
          [](const FlipSymmetry& e) {
            const auto comm = flip_commutator(e.circuit);
            if (e.expected % e.circuit.modulus() == 0) return comm.empty();
            return comm.is_constant() && comm.constant_term() == e.expected % e.circuit.modulus();
          },
          [](const GateList& e) {
            return std::all_of(e.gates.begin(), e.gates.end(),
                               [](const PhasePolynomial& g) { return flip_commutator(g).empty(); });
          },
          [](const CommutatorIdentity& e) { return commutator_lhs(e) == commutator_rhs(e); },
          [](const ChainBoundary& e) { return boundary(e.chain) == e.expected; },
          [](const ChainEquality& e) { return e.lhs == e.rhs; },
          [](const PrismIdentity& e) { return prism_lhs(e) == prism_rhs(e); },
          [](const HomologyClass& e) {
            if (!check_witness(*e.complex, e.result)) return false;
            return !e.expect_trivial || *e.expect_trivial == e.result.trivial();
          },
          [](const CochainEquality& e) { return e.lhs == e.rhs; },
          [](const CochainCheck& e) { return check_property(e); },
          [](const ComplexEquality& e) { return *e.lhs == *e.rhs; },
          [](const ScalarCheck& e) { return e.value == e.expected; },
          [](const FlipIdentity& e) { return ocdual_check(*e.complex, e.vertex).holds(); },
      },
      data);
}

std::string evidence_kind(const EvidenceData& data) {
  static const char* names[] = {"polynomial-equality", "flip-symmetry",   "gate-list",     "commutator-identity",
                                "chain-boundary",      "chain-equality",  "prism-identity", "homology-class",
                                "cochain-equality",    "cochain-property", "complex-equality", "scalar",
                                "flip-identity"};
  return names[data.index()];
}

const Evidence& Certificate::add(std::string label, EvidenceData data) {
  const bool ok = evaluate(data);
  evidence.push_back(Evidence{std::move(label), std::move(data), ok});
  return evidence.back();
}

bool Certificate::passed() const {
  if (precondition_failure) return false;
  if (evidence.empty()) return false;
  return std::all_of(evidence.begin(), evidence.end(), [](const Evidence& e) { return e.passed; });
}

std::optional<std::size_t> Certificate::first_failure() const {
  for (std::size_t i = 0; i < evidence.size(); ++i) {
    if (!evidence[i].passed) return i;
  }
  return std::nullopt;
}

bool Certificate::recheck() const {
  return std::all_of(evidence.begin(), evidence.end(),
                     [](const Evidence& e) { return evaluate(e.data) == e.passed; });
}

std::string render_text(const Certificate& c, const RenderOptions& opts) {
  std::string out = "== " + c.claim + " ==\n";
  out += "subject: " + c.subject + "\n";
  if (!c.input_digest.empty()) out += "input digest: fnv1a64:" + c.input_digest + "\n";
  out += std::string("verdict: ") + (c.passed() ? "PASS" : "FAIL") + "\n";
  if (c.precondition_failure) out += "precondition failed: " + *c.precondition_failure + "\n";
  for (const auto& n : c.notes) out += n + "\n";
  for (std::size_t i = 0; i < c.evidence.size(); ++i) {
    const auto& e = c.evidence[i];
    out += "\n[" + std::to_string(i + 1) + "] " + (e.passed ? "ok  " : "FAIL") + " " + e.label + "\n";
    out += "    " + evidence_kind(e.data) + ": " + summary(e.data) + "\n";
    for (const auto& [name, body] : payload(e.data)) {
      const auto lines = line_count(body);
      if (lines <= opts.max_inline_lines) {
        out += "    --- " + name + "\n";
        std::size_t start = 0;
        while (start < body.size()) {
          const auto end = body.find('\n', start);
          out += "    " + body.substr(start, end - start) + "\n";
          start = end + 1;
        }
      } else {
        out += "    --- " + name + ": " + std::to_string(lines) + " lines, fnv1a64:" + fnv1a_hex(body) + "\n";
      }
    }
  }
  if (const auto f = c.first_failure()) out += "\nfirst failure: [" + std::to_string(*f + 1) + "] " + c.evidence[*f].label + "\n";
  return out;
}

std::string render_json(const Certificate& c, const RenderOptions& opts) {
  nlohmann::ordered_json j;
  j["claim"] = c.claim;
  j["subject"] = c.subject;
  j["input_digest"] = c.input_digest;
  j["verdict"] = c.passed() ? "PASS" : "FAIL";
  j["precondition_failure"] = c.precondition_failure ? nlohmann::ordered_json(*c.precondition_failure) : nullptr;
  j["notes"] = c.notes;
  auto items = nlohmann::ordered_json::array();
  for (const auto& e : c.evidence) {
    nlohmann::ordered_json item;
    item["label"] = e.label;
    item["kind"] = evidence_kind(e.data);
    item["passed"] = e.passed;
    item["summary"] = summary(e.data);
    nlohmann::ordered_json files = nlohmann::ordered_json::object();
    for (const auto& [name, body] : payload(e.data)) {
      if (line_count(body) <= opts.max_inline_lines) {
        files[name] = body;
      } else {
        files[name] = {{"lines", line_count(body)}, {"fnv1a64", fnv1a_hex(body)}};
      }
    }
    item["payload"] = files;
    items.push_back(item);
  }
  j["evidence"] = items;
  if (const auto f = c.first_failure()) {
    j["first_failure"] = *f;
  } else {
    j["first_failure"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::vector<std::pair<std::string, std::string>> evidence_files(const Certificate& c) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < c.evidence.size(); ++i) {
    char prefix[16];
    std::snprintf(prefix, sizeof prefix, "%03zu-", i + 1);
    for (auto& [name, body] : payload(c.evidence[i].data)) {
      out.emplace_back(prefix + name + ".txt", std::move(body));
    }
  }
  return out;
}

}  // namespace gds
