#include "gds/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "gds/error.hpp"
#include "gds/subdivision.hpp"

namespace gds {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    start = end + 1;
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view tok, std::size_t line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw MalformedInput("line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

bool is_comment_or_blank(std::string_view line) {
  const auto t = tokens(line);
  return t.empty() || t.front().front() == '#';
}

// Reads "key=value" from a header such as "# chain dim=2 modulus=0".
long long header_field(std::string_view header, std::string_view key) {
  for (auto tok : tokens(header)) {
    if (tok.size() > key.size() && tok.substr(0, key.size()) == key && tok[key.size()] == '=') {
      return parse_number<long long>(tok.substr(key.size() + 1), 1);
    }
  }
  throw MalformedInput("header is missing '" + std::string(key) + "='");
}

std::string_view find_header(const std::vector<std::string_view>& lines, std::string_view kind, std::size_t& index) {
  for (index = 0; index < lines.size(); ++index) {
    const auto t = tokens(lines[index]);
    if (t.size() >= 2 && t[0] == "#" && t[1] == kind) return lines[index];
  }
  throw MalformedInput("missing '# " + std::string(kind) + "' header");
}

Vertex resolve_vertex(std::string_view tok, const VertexResolver& resolve, std::size_t line_no) {
  if (resolve) return resolve(tok);
  return parse_number<Vertex>(tok, line_no);
}

std::string name_of(Vertex v, const VertexNamer& name) { return name ? name(v) : std::to_string(v); }

}  // namespace

SimplicialComplex parse_complex(std::string_view text) {
  std::vector<Simplex> facets;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (is_comment_or_blank(lines[i])) continue;
    Simplex f;
    for (auto tok : tokens(lines[i])) f.push_back(parse_number<Vertex>(tok, i + 1));
    facets.push_back(std::move(f));
  }
  return build_complex(facets);
}

std::string format_complex(const SimplicialComplex& s) {
  std::string out;
  for (const auto& f : s.facets()) out += to_string(f) + "\n";
  return out;
}

Chain parse_chain(std::string_view text, const VertexResolver& resolve) {
  const auto lines = split_lines(text);
  std::size_t h = 0;
  const auto header = find_header(lines, "chain", h);
  Chain c(static_cast<int>(header_field(header, "dim")), header_field(header, "modulus"));
  for (std::size_t i = h + 1; i < lines.size(); ++i) {
    if (is_comment_or_blank(lines[i])) continue;
    const auto t = tokens(lines[i]);
    const auto coeff = parse_number<Coeff>(t[0], i + 1);
    std::vector<Vertex> seq;
    for (std::size_t j = 1; j < t.size(); ++j) seq.push_back(resolve_vertex(t[j], resolve, i + 1));
    c.add(seq, coeff);
  }
  return c;
}

std::string format_chain(const Chain& c, const VertexNamer& name) {
  std::string out = "# chain dim=" + std::to_string(c.dim()) + " modulus=" + std::to_string(c.modulus()) + "\n";
  for (const auto& [s, coeff] : c.terms()) {
    out += std::to_string(coeff);
    for (Vertex v : s) out += " " + name_of(v, name);
    out += "\n";
  }
  return out;
}

PhasePolynomial parse_polynomial(std::string_view text, const VertexResolver& resolve) {
  const auto lines = split_lines(text);
  std::size_t h = 0;
  const auto header = find_header(lines, "polynomial", h);
  PhasePolynomial p(static_cast<int>(header_field(header, "precision")));
  for (std::size_t i = h + 1; i < lines.size(); ++i) {
    if (is_comment_or_blank(lines[i])) continue;
    const auto t = tokens(lines[i]);
    if (t.size() < 2 || t[1] != ":") throw MalformedInput("line " + std::to_string(i + 1) + ": expected '<coeff> : vertices'");
    const auto coeff = parse_number<std::int64_t>(t[0], i + 1);
    Simplex m;
    for (std::size_t j = 2; j < t.size(); ++j) m.push_back(resolve_vertex(t[j], resolve, i + 1));
    if (sort_with_sign(m) == 0) throw MalformedInput("line " + std::to_string(i + 1) + ": repeated variable");
    p.add(m, coeff);
  }
  return p;
}

std::string format_polynomial(const PhasePolynomial& p, const VertexNamer& name) {
  std::string out = "# polynomial precision=" + std::to_string(p.precision()) + "\n";
  for (const auto& [m, c] : p.terms()) {
    out += std::to_string(c) + " :";
    for (Vertex v : m) out += " " + name_of(v, name);
    out += "\n";
  }
  return out;
}

GroupCochain parse_cochain(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t h = 0;
  const auto header = find_header(lines, "cochain", h);
  const int arity = static_cast<int>(header_field(header, "arity"));
  GroupCochain w(arity, header_field(header, "modulus"));
  for (std::size_t i = h + 1; i < lines.size(); ++i) {
    if (is_comment_or_blank(lines[i])) continue;
    const auto t = tokens(lines[i]);
    if (t.size() != 2 || t[0].size() < 2 || t[0].front() != '(' || t[0].back() != ')') {
      throw MalformedInput("line " + std::to_string(i + 1) + ": expected '(e,X,...) value'");
    }
    std::uint32_t mask = 0;
    int pos = 0;
    for (char ch : t[0].substr(1, t[0].size() - 2)) {
      if (ch == ',') continue;
      if (ch != 'e' && ch != 'X') throw MalformedInput("line " + std::to_string(i + 1) + ": arguments are e or X");
      if (ch == 'X') mask |= std::uint32_t{1} << pos;
      ++pos;
    }
    if (pos != arity) throw MalformedInput("line " + std::to_string(i + 1) + ": wrong number of arguments");
    w.set(mask, parse_number<std::int64_t>(t[1], i + 1));
  }
  return w;
}

std::string format_cochain(const GroupCochain& w) {
  std::string out =
      "# cochain arity=" + std::to_string(w.arity()) + " modulus=" + std::to_string(w.modulus()) + "\n";
  for (std::uint32_t m = 0; m < w.table_size(); ++m) {
    out += format_arguments(m, w.arity()) + " " + std::to_string(w.value(m)) + "\n";
  }
  return out;
}

std::string format_descriptor(const CochainCircuitDescriptor& d, const VertexNamer& name) {
  std::string out;
  for (std::size_t k = 0; k < d.chains.size(); ++k) {
    out += "[C_" + std::to_string(k) + "]\n" + format_chain(d.chains[k], name);
  }
  out += "[phase]\n" + phase_string(d.global_phase, 1) + "\n";
  out += "[closedness]\n";
  for (std::size_t k = 0; k < d.boundaries.size(); ++k) {
    out += "dC_" + std::to_string(k) + " = ";
    if (d.boundaries[k].empty()) {
      out += "0\n";
    } else if (k == 0) {
      out += std::to_string(d.boundaries[k].coefficient({})) + " (reduced)\n";
    } else {
      out += std::to_string(d.boundaries[k].size()) + " nonzero terms\n";
    }
  }
  out += std::string("symmetric: ") + (d.symmetric() ? "yes" : d.symmetric_up_to_phase() ? "up to global sign" : "no") + "\n";
  return out;
}

Simplex parse_barycenter_name(std::string_view token) {
  if (token.size() < 4 || token.front() != '(' || token.back() != ')') {
    throw MalformedInput("expected a barycenter name like (v1.v4), got '" + std::string(token) + "'");
  }
  Simplex out;
  std::string_view body = token.substr(1, token.size() - 2);
  while (!body.empty()) {
    const auto dot = body.find('.');
    std::string_view part = body.substr(0, dot);
    if (part.size() < 2 || part.front() != 'v') {
      throw MalformedInput("bad barycenter component '" + std::string(part) + "'");
    }
    out.push_back(parse_number<Vertex>(part.substr(1), 1));
    if (dot == std::string_view::npos) break;
    body.remove_prefix(dot + 1);
  }
  if (sort_with_sign(out) == 0) throw MalformedInput("repeated vertex in barycenter name");
  return out;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFound("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw NotFound("cannot write '" + path + "'");
  out << content;
}

}  // namespace gds
