#include "gds/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "gds/certify.hpp"
#include "gds/corpus.hpp"
#include "gds/error.hpp"
#include "gds/gauge.hpp"
#include "gds/homology.hpp"
#include "gds/io.hpp"
#include "gds/subdivision.hpp"

namespace gds::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  long long modulus = 2;
  int precision = 1;
  std::string out_dir;
};

struct Input {
  std::string name;
  SimplicialComplex complex;
};

Input load_complex(const std::string& spec) {
  if (spec.rfind("corpus:", 0) == 0) {
    const auto& e = corpus_entry(spec.substr(7));
    return {e.name, e.complex()};
  }
  return {std::filesystem::path(spec).filename().string(), parse_complex(read_file(spec))};
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

template <typename T>
std::string join_numbers(const std::vector<T>& v, const std::string& sep = ",") {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(std::to_string(x));
  return join(parts, sep);
}

std::string pi_phase(std::uint64_t numerator, int precision) {
  auto s = phase_string(numerator, precision);
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.compare(i, 2, "pi") == 0) {
      out += "π";
      ++i;
    } else {
      out += s[i];
    }
  }
  return out;
}

class Emitter {
 public:
  Emitter(const Options& opts, std::ostream& out) : opts_(opts), out_(out) {}

  bool json() const { return opts_.format == "json"; }

  void emit(const std::string& text, const Json& j) {
    if (json()) {
      out_ << j.dump(2) << "\n";
    } else {
      out_ << text;
    }
  }

  void save(const std::string& name, const std::string& content) {
    if (opts_.out_dir.empty()) return;
    std::filesystem::create_directories(opts_.out_dir);
    write_file((std::filesystem::path(opts_.out_dir) / name).string(), content);
  }

  const Options& options() const { return opts_; }

 private:
  const Options& opts_;
  std::ostream& out_;
};

int corpus_list(Emitter& em) {
  std::string text;
  Json arr = Json::array();
  char line[256];
  std::snprintf(line, sizeof line, "%-12s %3s %5s %-10s %-8s %s\n", "name", "dim", "euler", "betti", "manifold",
                "description");
  text += line;
  for (const auto& e : corpus()) {
    std::snprintf(line, sizeof line, "%-12s %3d %5lld %-10s %-8s %s\n", e.name.c_str(), e.dim, e.euler,
                  join_numbers(e.betti).c_str(), e.manifold ? "yes" : "no", e.description.c_str());
    text += line;
    Json j;
    j["name"] = e.name;
    j["description"] = e.description;
    j["dim"] = e.dim;
    j["euler"] = e.euler;
    j["betti"] = e.betti;
    j["manifold"] = e.manifold;
    if (e.manifold) {
      std::vector<bool> sw(e.sw_nontrivial.begin(), e.sw_nontrivial.end());
      j["sw_nontrivial"] = sw;
    }
    arr.push_back(j);
  }
  em.emit(text, arr);
  return 0;
}

int complex_info(Emitter& em, const Input& in) {
  const auto& s = in.complex;
  const auto fv = s.f_vector();
  const auto betti = betti_numbers(s);
  const auto report = manifold_check(s);
  std::string text = "complex: " + in.name + "\n";
  text += "digest: fnv1a64:" + complex_digest(s) + "\n";
  text += "vertices: " + std::to_string(s.vertices().size()) + "\n";
  text += "dimension: " + std::to_string(s.dim()) + "\n";
  text += "f-vector: (" + join_numbers(fv) + ")\n";
  text += "euler characteristic: " + std::to_string(euler_characteristic(s)) + "\n";
  text += "Z2 betti numbers: (" + join_numbers(betti) + ")\n";
  text += std::string("pure: ") + (s.is_pure() ? "yes" : "no") + "\n";
  text += std::string("closed combinatorial manifold: ") + (report.is_manifold() ? "yes" : "no") + "\n";
  std::vector<std::string> bad;
  for (const auto& f : report.failing) bad.push_back(to_string(f));
  if (!bad.empty()) text += "simplices with a bad link: " + join(bad, " | ") + "\n";
  Json j;
  j["complex"] = in.name;
  j["digest"] = complex_digest(s);
  j["vertices"] = s.vertices().size();
  j["dimension"] = s.dim();
  j["f_vector"] = fv;
  j["euler"] = euler_characteristic(s);
  j["betti"] = betti;
  j["pure"] = s.is_pure();
  j["manifold"] = report.is_manifold();
  j["link_failures"] = bad;
  em.emit(text, j);
  return 0;
}

int homology_cmd(Emitter& em, const Input& in, const std::string& chain_file) {
  const auto& s = in.complex;
  if (chain_file.empty()) {
    const auto betti = betti_numbers(s);
    std::string text = "Z2 betti numbers of " + in.name + ": (" + join_numbers(betti) + ")\n";
    em.emit(text, Json{{"complex", in.name}, {"betti", betti}});
    return 0;
  }
  const auto chain = parse_chain(read_file(chain_file)).mod(2);
  validate_chain(chain, s);
  const auto r = homology_solve(s, chain);
  std::string text = "target: " + std::to_string(chain.dim()) + "-chain with " + std::to_string(chain.size()) +
                     " terms\n";
  Json j{{"complex", in.name}, {"trivial", r.trivial()}};
  if (r.trivial()) {
    text += "bounds; witness:\n" + format_chain(*r.witness);
    j["witness"] = format_chain(*r.witness);
    em.save("witness.txt", format_chain(*r.witness));
  } else {
    text += "nontrivial; detecting cocycle:\n" + format_chain(*r.cocycle);
    j["cocycle"] = format_chain(*r.cocycle);
    em.save("cocycle.txt", format_chain(*r.cocycle));
  }
  em.emit(text, j);
  return 0;
}

int subdivide_cmd(Emitter& em, const Input& in) {
  const auto b = barycentric(in.complex);
  const auto namer = [&](Vertex v) { return b.vertex_name(v); };
  std::string text = "# barycentric subdivision of " + in.name + ": " + std::to_string(b.derived.vertices().size()) +
                     " vertices, f-vector (" + join_numbers(b.derived.f_vector()) + ")\n";
  Json facets = Json::array();
  for (const auto& f : b.derived.facets()) {
    std::vector<std::string> names;
    for (Vertex v : f) names.push_back(namer(v));
    text += join(names, " ") + "\n";
    facets.push_back(names);
  }
  std::string labels;
  for (Vertex v : b.derived.vertices()) labels += std::to_string(v) + " " + namer(v) + "\n";
  em.save("derived.txt", format_complex(b.derived));
  em.save("labels.txt", labels);
  em.emit(text, Json{{"complex", in.name}, {"f_vector", b.derived.f_vector()}, {"facets", facets}});
  return 0;
}

int sw_chains_cmd(Emitter& em, const Input& in) {
  const auto b = barycentric(in.complex);
  const auto namer = [&](Vertex v) { return b.vertex_name(v); };
  const int d = b.derived.dim();
  const bool closed = manifold_check(in.complex).is_manifold();
  std::string text = "Halperin-Toledo chains of " + in.name + "\n";
  char line[160];
  std::snprintf(line, sizeof line, "%-4s %8s %-24s %s\n", "k", "terms", "boundary", "mod-2 class");
  text += line;
  Json rows = Json::array();
  for (int k = 0; k <= d; ++k) {
    const auto ck = halperin_toledo_chain(b, k);
    const auto bd = boundary(ck);
    std::string bdesc;
    if (bd.empty()) {
      bdesc = "0";
    } else if (k == 0) {
      bdesc = std::to_string(bd.coefficient({})) + " (reduced)";
    } else {
      const auto prev = halperin_toledo_chain(b, k - 1);
      const auto& [key, coeff] = *bd.terms().begin();
      const Coeff factor = coeff / prev.coefficient(key);
      bdesc = bd == factor * prev ? std::to_string(factor) + " C_" + std::to_string(k - 1)
                                  : std::to_string(bd.size()) + " terms";
    }
    std::string cls;
    if (k == d && closed) {
      cls = "fundamental";
    } else if (boundary(ck.mod(2)).empty() || k == 0) {
      cls = homology_solve(b.derived, ck.mod(2)).trivial() ? "trivial" : "nontrivial";
    } else {
      cls = "not closed mod 2";
    }
    std::snprintf(line, sizeof line, "C_%-2d %8zu %-24s %s\n", k, ck.size(), bdesc.c_str(), cls.c_str());
    text += line;
    rows.push_back(Json{{"k", k}, {"terms", ck.size()}, {"boundary", bdesc}, {"class", cls}});
    em.save("C_" + std::to_string(k) + ".txt", format_chain(ck, namer));
  }
  em.emit(text, Json{{"complex", in.name}, {"chains", rows}});
  return 0;
}

int disentangler_cmd(Emitter& em, const Input& in, bool derived) {
  const auto b = derived ? std::optional<BarycentricComplex>(barycentric(in.complex)) : std::nullopt;
  const auto& s = derived ? b->derived : in.complex;
  VertexNamer namer;
  if (derived) namer = [&](Vertex v) { return b->vertex_name(v); };
  const auto p = gds_disentangler(s, em.options().precision);
  const auto text = format_polynomial(p, namer);
  em.save("disentangler.txt", text);
  em.emit(text, Json{{"complex", in.name}, {"precision", p.precision()}, {"terms", p.size()}, {"polynomial", text}});
  return 0;
}

int decompose_cmd(Emitter& em, const std::string& input, const std::string& poly_file, bool derived) {
  PhasePolynomial p;
  std::string name;
  VertexNamer namer;
  std::optional<BarycentricComplex> b;
  if (!poly_file.empty()) {
    p = parse_polynomial(read_file(poly_file));
    name = poly_file;
  } else {
    const auto in = load_complex(input);
    name = in.name;
    if (derived) {
      b = barycentric(in.complex);
      namer = [&](Vertex v) { return b->vertex_name(v); };
      p = gds_disentangler(b->derived);
    } else {
      p = gds_disentangler(in.complex);
    }
  }
  const auto d = decompose(p);
  const auto text = format_descriptor(d, namer);
  em.save("descriptor.txt", text);
  Json chains = Json::array();
  for (const auto& c : d.chains) chains.push_back(format_chain(c, namer));
  em.emit(text, Json{{"input", name},
                     {"gates", d.gate_count()},
                     {"global_phase", d.global_phase},
                     {"symmetric", d.symmetric()},
                     {"symmetric_up_to_phase", d.symmetric_up_to_phase()},
                     {"chains", chains}});
  return 0;
}

int commutator_cmd(Emitter& em, const std::string& gds_input, const std::string& poly_file) {
  PhasePolynomial p;
  Json j;
  std::optional<long long> chi;
  if (!gds_input.empty()) {
    const auto in = load_complex(gds_input);
    p = gds_disentangler(in.complex, em.options().precision);
    chi = euler_characteristic(in.complex);
    j["input"] = in.name;
  } else {
    p = parse_polynomial(read_file(poly_file));
    j["input"] = poly_file;
  }
  const auto comm = flip_commutator(p);
  std::string text;
  if (comm.is_constant()) {
    text = "constant phase " + pi_phase(comm.constant_term(), comm.precision());
    j["constant"] = true;
    j["phase"] = phase_string(comm.constant_term(), comm.precision());
  } else {
    text = "not constant: " + std::to_string(comm.size()) + " terms";
    j["constant"] = false;
    j["terms"] = comm.size();
  }
  if (chi) {
    text += "; χ(L) = " + std::to_string(*chi);
    j["euler"] = *chi;
  }
  text += "\n";
  if (!comm.is_constant()) text += format_polynomial(comm);
  j["commutator"] = format_polynomial(comm);
  em.save("commutator.txt", format_polynomial(comm));
  em.emit(text, j);
  return 0;
}

int gauge_cmd(Emitter& em, const Input& in) {
  const auto& s = in.complex;
  const auto rows = trivial_sector_amplitudes(s);
  const long long ref = rows.empty() ? 1 : rows.front().amplitude;
  std::string text = "trivial-sector amplitudes of " + in.name + " (" + std::to_string(rows.size()) +
                     " edge configurations; edges in sorted order)\n";
  Json arr = Json::array();
  std::size_t mismatches = 0;
  for (const auto& r : rows) {
    const auto [re, im] = i_power(r.wall_euler);
    // amplitudes are real, so i^chi(E) must be real and match the sign ratio
    const bool match = im == 0 && (r.amplitude * ref > 0) == (re == 1);
    mismatches += match ? 0 : 1;
    text += format_bits(r.z) + "  amp " + std::to_string(r.amplitude) + "  chi(E) " + std::to_string(r.wall_euler) +
            (match ? "" : "  (sign differs from i^chi(E))") + "\n";
    arr.push_back(Json{{"z", format_bits(r.z)},
                       {"representative", format_bits(r.representative)},
                       {"amplitude", r.amplitude},
                       {"wall_euler", r.wall_euler},
                       {"matches_i_power", match}});
  }
  text += "sign pattern " + std::string(mismatches == 0 ? "matches" : "does not match") +
          " i^chi(E) relative to the empty configuration\n";
  em.emit(text, Json{{"complex", in.name}, {"configurations", arr}, {"mismatches", mismatches}});
  return 0;
}

std::vector<MoveSpec> parse_moves(const std::vector<std::string>& specs) {
  std::vector<MoveSpec> out;
  for (const auto& s : specs) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw MalformedInput("move '" + s + "' should look like T1:0,1,2");
    const auto kind = s.substr(0, colon);
    MoveSpec m;
    if (kind == "T1") {
      m.kind = MoveKind::T1;
    } else if (kind == "T2") {
      m.kind = MoveKind::T2;
    } else {
      throw MalformedInput("unknown move kind '" + kind + "'");
    }
    std::stringstream ss(s.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        m.target.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw MalformedInput("bad vertex '" + tok + "' in move '" + s + "'");
      }
    }
    std::sort(m.target.begin(), m.target.end());
    out.push_back(std::move(m));
  }
  return out;
}

int emit_certificate(Emitter& em, const Certificate& c) {
  em.emit(render_text(c), Json::parse(render_json(c)));
  if (!em.options().out_dir.empty()) {
    em.save("certificate.txt", render_text(c));
    em.save("certificate.json", render_json(c));
    for (const auto& [name, body] : evidence_files(c)) em.save(name, body);
  }
  return c.passed() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Verifier for GDS duals, cochain circuits and their Stiefel-Whitney content", "gdsctl"};
  app.require_subcommand(1);
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--modulus", opts.modulus, "Coefficient modulus for chain inputs")->check(CLI::PositiveNumber);
  app.add_option("--precision", opts.precision, "Phase precision m (phases in Z_2^m)")->check(CLI::Range(1, 62));
  app.add_option("--out", opts.out_dir, "Directory for full payload files");

  std::string input, chain_file, poly_file, gds_input, certify_kind;
  bool derived = false;
  std::vector<std::string> move_specs;
  std::optional<int> vertex;

  auto* c_list = app.add_subcommand("corpus-list", "List the shipped triangulations");
  auto* c_info = app.add_subcommand("complex-info", "f-vector, Euler characteristic, Betti numbers, manifold check");
  c_info->add_option("input", input, "corpus:<name> or a facet file")->required();
  auto* c_hom = app.add_subcommand("homology", "Z2 Betti numbers, or solve a chain against the boundary map");
  c_hom->add_option("input", input)->required();
  c_hom->add_option("--chain", chain_file, "Chain file to test for bounding");
  auto* c_sub = app.add_subcommand("subdivide", "Barycentric subdivision with named vertices");
  c_sub->add_option("input", input)->required();
  auto* c_sw = app.add_subcommand("sw-chains", "Halperin-Toledo chains and their mod-2 classes");
  c_sw->add_option("input", input)->required();
  auto* c_dis = app.add_subcommand("disentangler", "Phase polynomial of the GDS disentangler");
  c_dis->add_option("input", input)->required();
  c_dis->add_flag("--derived", derived, "Use the barycentric subdivision");
  auto* c_dec = app.add_subcommand("decompose", "Peel a +-1 phase polynomial into omega_k gates");
  c_dec->add_option("input", input, "Complex whose disentangler is decomposed");
  c_dec->add_option("--poly", poly_file, "Polynomial file instead of a complex");
  c_dec->add_flag("--derived", derived, "Use the barycentric subdivision");
  auto* c_com = app.add_subcommand("commutator", "Commutator with the global flip");
  auto* g_opt = c_com->add_option("--gds", gds_input, "Complex whose disentangler is tested");
  auto* p_opt = c_com->add_option("--poly", poly_file, "Polynomial file");
  g_opt->excludes(p_opt);
  auto* c_gauge = app.add_subcommand("gauge-amplitudes", "Trivial-sector amplitudes of the gauged dual");
  c_gauge->add_option("input", input)->required();
  auto* c_cert = app.add_subcommand("certify", "Produce a certificate");
  c_cert->add_option("claim", certify_kind, "cochain-eq | wtr | wotr | rg | ocdual | omega")
      ->required()
      ->check(CLI::IsMember({"cochain-eq", "wtr", "wotr", "rg", "ocdual", "omega"}));
  c_cert->add_option("input", input, "corpus:<name> or a facet file");
  c_cert->add_option("--move", move_specs, "rg: move such as T1:0,1,2 (repeatable; default full pass)");
  c_cert->add_option("--chain", chain_file, "rg: follow the cochain state on this chain instead of the GDS state");
  c_cert->add_option("--vertex", vertex, "ocdual: a single vertex (default all)");

  if (!args.empty() && args.front().rfind("-", 0) != 0) {
    bool known = false;
    for (const auto* sub : app.get_subcommands({})) known = known || sub->get_name() == args.front();
    if (!known) {
      err << "error: unknown subcommand '" << args.front() << "'\n";
      return 2;
    }
  }
  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Emitter em(opts, out);
  try {
    if (c_list->parsed()) return corpus_list(em);
    if (c_info->parsed()) return complex_info(em, load_complex(input));
    if (c_hom->parsed()) return homology_cmd(em, load_complex(input), chain_file);
    if (c_sub->parsed()) return subdivide_cmd(em, load_complex(input));
    if (c_sw->parsed()) return sw_chains_cmd(em, load_complex(input));
    if (c_dis->parsed()) return disentangler_cmd(em, load_complex(input), derived);
    if (c_dec->parsed()) {
      if (input.empty() == poly_file.empty()) throw MalformedInput("decompose needs exactly one of <input> and --poly");
      return decompose_cmd(em, input, poly_file, derived);
    }
    if (c_com->parsed()) {
      if (gds_input.empty() && poly_file.empty()) throw MalformedInput("commutator needs --gds or --poly");
      return commutator_cmd(em, gds_input, poly_file);
    }
    if (c_gauge->parsed()) return gauge_cmd(em, load_complex(input));
    if (c_cert->parsed()) {
      if (certify_kind == "omega") return emit_certificate(em, certify_omega());
      if (input.empty()) throw MalformedInput("certify " + certify_kind + " needs an input complex");
      const auto in = load_complex(input);
      if (certify_kind == "cochain-eq") return emit_certificate(em, certify_cochain_equals_gds(barycentric(in.complex), in.name));
      if (certify_kind == "wtr") return emit_certificate(em, certify_wtr(barycentric(in.complex), in.name));
      if (certify_kind == "wotr") return emit_certificate(em, certify_wotr(barycentric(in.complex), in.name));
      if (certify_kind == "ocdual") return emit_certificate(em, verify_ocdual(in.complex, vertex, in.name));
      std::vector<Chain> chains;
      if (!chain_file.empty()) chains.push_back(parse_chain(read_file(chain_file)).mod(opts.modulus));
      return emit_certificate(em, certify_rg(in.complex, parse_moves(move_specs), chains, in.name));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace gds::cli
