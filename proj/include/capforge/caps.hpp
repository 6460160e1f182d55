#ifndef CAPFORGE_CAPS_HPP
#define CAPFORGE_CAPS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "capforge/arcs.hpp"
#include "capforge/projgeom.hpp"

namespace capforge::caps {

/// Cap of PG(N, q): normalized points in rank order, no three collinear.
/// `provenance` records the construction and its parameters
/// (machine-readable `TAG;key=value;...`).
struct cap {
    unsigned N = 0;
    std::vector<pg::point> pts;
    std::string provenance;

    std::size_t size() const { return pts.size(); }
};

/// Normalizes, sorts by rank and rejects duplicates.  Does not re-verify the
/// cap property (see verify_cap); builders guarantee it by construction.
cap make_cap(const pg::geometry& g, std::vector<pg::point> pts, std::string provenance);

/// The q^j-point translation cap {(1, a_1, a_1^2, ..., a_j, a_j^2)} of
/// PG(2j, q) (all points affine).
cap parabola_cap(const pg::geometry& g, unsigned j);

/// The two-point complete cap {(1,0), (1,1)} of PG(1, q).
cap k0_cap(const pg::geometry& g);

/// Concatenation product: every point of C extended by the affine part of
/// every point of C2 (C2 must be fully affine).  Lives in PG(N_C + N_C2, q)
/// and has |C| * |C2| points.  Throws bad_parameters if C2 has a point at
/// infinity.
cap product_cap(const pg::geometry& g_out, const cap& C, const cap& C2);

/// Recursive two-slope cap K of PG(2s+1, q), built downward from the
/// two-point cap of PG(1, q) by adjoining two slope branches, a parabola
/// branch and the top unit point U = (1,0,...,0) at each level.  Size
/// 3(q^s + ... + q) - 2s + 2.  Parameters must satisfy m1, m2 outside
/// {0, 1}, m1 != m2 and (m1+m2)^3 != 1; requires q > 4.
/// Throws bad_parameters on violation.
cap two_slope_cap(const pg::geometry& g, unsigned s, gf::elem m1, gf::elem m2);

/// The same cap with the top unit point removed (size one less).  Its
/// uncovered points are exactly the q - 2 points (1, m, 0, ..., 0) with
/// m outside {m1 + 1, m2 + 1}: those two slopes stay covered, because
/// (1, mj, a, a^2, 0, ...) + (0, 1, a, a^2, 0, ...) = (1, mj + 1, 0, ..., 0)
/// in characteristic two for every nonzero a.
cap two_slope_star(const pg::geometry& g, unsigned s, gf::elem m1, gf::elem m2);

/// Cartesian product cap {h1, h2} x parabola in PG(2i+1, q): points
/// (1, h, a_1, a_1^2, ..., a_i, a_i^2) for h in {h1, h2}.
cap cartesian_parabola_cap(const pg::geometry& g, unsigned i, gf::elem h1, gf::elem h2);

/// Number of secants of the point set through an external point P
/// (P must not belong to the set).
unsigned secants_through_external(const pg::geometry& g, const std::vector<pg::point>& pts, const pg::point& P);

/// Result of a cap-building construction.
struct build_result {
    cap C;
    std::vector<pg::point> extension_points;  // points added to finish the cap (first even case only)
    gf::elem m1 = 0, m2 = 0;                  // slope pair used by the two-slope part, when any
};

/// Even-dimensional construction from an affinely complete arc: the
/// arc-parabola product plus an embedded two-slope star cap, extended by up
/// to two infinite points when some slopes are uncovered.  Input: plane arc
/// with (0,0,1) covered and 1 outside its vertical-difference set.  For
/// k < q - 5 an admissible slope pair is guaranteed; outside that regime the
/// construction is attempted and completeness is not promised.  Output lives
/// in PG(2s+2, q).
build_result build_even_case1(const gf::field_ctx& f, const arcs::plane_arc& K, unsigned s);

/// Even-dimensional construction from a complete arc with unique sum point
/// (0,0,1) and 1 outside the vertical-difference set: the arc-parabola
/// product, a reduced two-slope cap embedded three coordinates deep, and a
/// parabola branch through (0,0,1).  Requires q > 8, k < q - 5.
build_result build_even_case2(const gf::field_ctx& f, const arcs::plane_arc& K, unsigned s);

/// Even-dimensional construction from a complete arc in canonical position
/// (infinite points (0,0,1), (0,1,0), sum point (0,1,1)) that avoids every
/// parabola scaled by a unit-slope difference, with (k-2)p < q-1: the
/// arc-parabola product plus re-embedded images of the lower products.
/// Works for every even q > 4 (no q > 8 restriction).
build_result build_even_case3(const gf::field_ctx& f, const arcs::plane_arc& K, unsigned s);

/// Odd-dimensional construction from an affine complete arc avoiding the
/// squares diagonal (the star normal form): a doubled parabola block plus
/// the embedded first even construction.  Requires q > 8.  Output lives in
/// PG(2s+3, q).
build_result build_odd_case1(const gf::field_ctx& f, const arcs::plane_arc& K, unsigned s);

/// Odd-dimensional construction from the same position as the third even
/// case: a doubled parabola block plus the embedded third even construction.
build_result build_odd_case3(const gf::field_ctx& f, const arcs::plane_arc& K, unsigned s);

/// Verification depth.
enum class verify_level { automatic, exhaustive, sampled };

struct cap_report {
    bool ok = false;
    verify_level level_used = verify_level::exhaustive;
    std::uint64_t checked = 0;                       // pairs or sampled triples
    std::optional<std::array<pg::point, 3>> witness;  // a collinear triple when !ok
};

/// Checks that no three points are collinear: exhaustively through every
/// secant for |C| <= 2000 (or level = exhaustive), otherwise by at least 10^6
/// sampled triples with a fixed seed.
cap_report verify_cap(const pg::geometry& g, const cap& C, verify_level level = verify_level::automatic,
                      std::uint64_t sample_seed = 0x5EED);

struct completeness_report {
    bool complete = false;
    verify_level level_used = verify_level::exhaustive;
    std::uint64_t points_checked = 0;
    std::uint64_t uncovered_count = 0;
    std::vector<pg::point> uncovered;  // capped at 1024 entries
};

/// Marks every point of every secant and checks coverage of the whole space:
/// every rank when point_count <= 10^6 (or level = exhaustive), otherwise
/// 10^6 sampled ranks.  Uncovered points are exactly the candidate extension
/// points.
completeness_report verify_complete(const pg::geometry& g, const cap& C,
                                    verify_level level = verify_level::automatic,
                                    std::uint64_t sample_seed = 0x5EED);

/// Caller-suppliable inputs of the size-bound table: the smallest known
/// complete plane-arc sizes and the secant count through the sum point.
/// Defaults are pinned for 8 <= q <= 32768.
struct bounds_inputs {
    std::optional<unsigned> t2;        // smallest known complete arc
    std::optional<unsigned> t2a;       // smallest known affinely complete arc
    std::optional<unsigned> t2s;       // smallest known with a unique sum point
    std::optional<unsigned> t2splus;   // smallest known unique-sum-point arc usable by the third case
    std::optional<unsigned> p;         // secants through the sum point at size t2s
};

struct bound_row {
    std::string name;
    std::string value;  // exact decimal integer
    bool applicable = true;
    std::string condition;  // validity condition, empty when unconditional
};

struct bounds_table {
    unsigned N = 0, q = 0;
    unsigned t2 = 0, t2a = 0, t2s = 0, t2splus = 0, p = 1;
    std::vector<bound_row> rows;
};

/// Evaluates the complete-cap size bounds for PG(N, q) with exact integer
/// arithmetic.  Throws bad_parameters when q is outside the pinned default
/// table and no explicit inputs are supplied.
bounds_table bounds_report(unsigned N, unsigned q, const bounds_inputs& inputs = {});

}  // namespace capforge::caps

#endif  // CAPFORGE_CAPS_HPP
