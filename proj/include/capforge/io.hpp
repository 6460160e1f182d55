#ifndef CAPFORGE_IO_HPP
#define CAPFORGE_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "capforge/arcs.hpp"
#include "capforge/caps.hpp"
#include "capforge/codes.hpp"
#include "capforge/errors.hpp"

namespace capforge::io {

/// Plane-arc file: one header line `arc q=<q> n=<n> modulus=<hex>`, then one
/// point per line as comma-separated coordinate encodings in rank order.
void write_arc(std::ostream& os, const pg::geometry& g, const arcs::plane_arc& K);

struct arc_data {
    unsigned q = 0;
    unsigned modulus = 0;
    std::vector<pg::point> pts;
};
/// Parses an arc file; throws parse_error on any malformed content.  The
/// caller rebuilds the field (checking the modulus) and revalidates the arc.
arc_data read_arc(std::istream& is);

/// Cap file: header `cap N=<N> q=<q> n=<n> provenance=<tag> modulus=<hex>`,
/// then one point per line in rank order.
void write_cap(std::ostream& os, const pg::geometry& g, const caps::cap& C);

struct cap_data {
    unsigned N = 0;
    unsigned q = 0;
    unsigned modulus = 0;
    std::string provenance;
    std::vector<pg::point> pts;
};
cap_data read_cap(std::istream& is);

/// Code file: header `code q=<q> n=<n> r=<r>`, then one parity-check column
/// per line.
void write_code(std::ostream& os, const codes::linear_code_spec& code);
codes::linear_code_spec read_code(std::istream& is);

/// Lowercase 0x-prefixed hex.
std::string hex_string(unsigned v);

}  // namespace capforge::io

#endif  // CAPFORGE_IO_HPP
