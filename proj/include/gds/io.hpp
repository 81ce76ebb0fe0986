#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "gds/chain.hpp"
#include "gds/cochain.hpp"
#include "gds/complex.hpp"
#include "gds/phase.hpp"

namespace gds {

using VertexNamer = std::function<std::string(Vertex)>;
using VertexResolver = std::function<Vertex(std::string_view)>;

/// One facet per line, whitespace-separated ids; '#' starts a comment line.
SimplicialComplex parse_complex(std::string_view text);
/// Facets in canonical order, one per line.
std::string format_complex(const SimplicialComplex& s);

/// "# chain dim=k modulus=n" header, then "<coeff> v0 ... vk" per term.
/// Vertex tokens go through `resolve` when given, otherwise must be integers.
Chain parse_chain(std::string_view text, const VertexResolver& resolve = {});
std::string format_chain(const Chain& c, const VertexNamer& name = {});

/// "# polynomial precision=m" header, then "<coeff> : v_i v_j ..." per monomial.
PhasePolynomial parse_polynomial(std::string_view text, const VertexResolver& resolve = {});
std::string format_polynomial(const PhasePolynomial& p, const VertexNamer& name = {});

/// "# cochain arity=a modulus=n" header, then "(e,X,...) value" per entry.
GroupCochain parse_cochain(std::string_view text);
std::string format_cochain(const GroupCochain& w);

/// "[C_k]" blocks with chain bodies, a "[phase]" line and a "[closedness]" block.
std::string format_descriptor(const CochainCircuitDescriptor& d, const VertexNamer& name = {});

/// "(v1.v4)" -> {1, 4}. MalformedInput on anything else.
Simplex parse_barycenter_name(std::string_view token);

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace gds
