#ifndef CAPFORGE_CODES_HPP
#define CAPFORGE_CODES_HPP

#include <cstdint>
#include <vector>

#include "capforge/caps.hpp"
#include "capforge/errors.hpp"
#include "capforge/gf2e.hpp"
#include "capforge/projgeom.hpp"

namespace capforge::codes {

/// A q-ary linear [n, n-r] code given by its parity-check matrix, stored as
/// n columns of height r.  Columns are normalized projective representatives
/// (first nonzero coordinate 1).
struct linear_code_spec {
    unsigned q = 0;
    std::size_t n = 0;               // length = number of columns
    unsigned r = 0;                  // redundancy = rows of the parity-check matrix
    std::vector<pg::point> columns;  // each with len == r
};

/// The [n, n - (N+1)] code whose parity-check columns are the points of the
/// cap.  Throws too_small unless n > N + 1 (the columns must span).
linear_code_spec cap_to_code(const pg::geometry& g, const caps::cap& C);

/// True when no column is zero, no two columns are proportional and no three
/// are linearly dependent; for a parity-check matrix this is exactly minimum
/// distance >= 4.
bool min_distance_at_least_4(const gf::field_ctx& f, const linear_code_spec& code);

/// True when every syndrome is reachable by a word of weight <= 2 and not
/// every syndrome by weight <= 1, i.e. the covering radius is exactly 2.
/// Walks all q^r syndromes; throws too_large when q^r > 10^7.
bool covering_radius_is_2(const gf::field_ctx& f, const linear_code_spec& code);

}  // namespace capforge::codes

#endif  // CAPFORGE_CODES_HPP
