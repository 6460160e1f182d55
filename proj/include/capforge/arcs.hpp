#ifndef CAPFORGE_ARCS_HPP
#define CAPFORGE_ARCS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "capforge/projgeom.hpp"
#include "capforge/rng.hpp"

namespace capforge::arcs {

/// Arc of PG(2, q): normalized points in rank order, pairwise distinct, no
/// three collinear.
struct plane_arc {
    std::vector<pg::point> pts;

    std::size_t size() const { return pts.size(); }
};

/// Validates and canonicalizes a point list into a plane arc (normalizes,
/// sorts by rank, rejects duplicates and collinear triples).
/// Throws not_an_arc on violation.
plane_arc make_plane_arc(const pg::geometry& g, std::vector<pg::point> pts);

/// True when the (normalized, distinct) points contain no collinear triple.
bool is_arc(const pg::geometry& g, const std::vector<pg::point>& pts);

/// Full combinatorial profile of a plane arc.
///
/// A point Q outside the arc and lying on at least one secant is a sum point
/// when, on every secant through Q, the two coefficients expressing Q in the
/// secant's (normalized) arc points are equal.  Points on no secant at all
/// are excluded from the sum-point test and surfaced in `uncovered`.
struct arc_profile {
    std::vector<pg::point> sum_points;      // in rank order
    unsigned beta = 0;                      // number of sum points
    std::optional<unsigned> p;              // secants through the sum point when beta == 1
    std::vector<gf::elem> cov_infty;        // slopes m with (0,1,m) on a secant, sorted
    bool z_infty_covered = false;           // (0,0,1) lies on a secant
    std::set<gf::elem> s_infty;             // last-coordinate differences over pairs equal in the first two
    std::map<gf::elem, std::set<gf::elem>> s_m;  // per-slope middle-coordinate differences (empty sets omitted)
    bool affinely_complete = false;         // secants of the affine part cover every affine point
    bool complete = false;                  // every point of the plane is on the arc or on a secant
    std::vector<pg::point> uncovered;       // points neither on the arc nor on any secant

    const std::set<gf::elem>& slopes(gf::elem m) const {
        static const std::set<gf::elem> empty;
        auto it = s_m.find(m);
        return it == s_m.end() ? empty : it->second;
    }
};

/// Computes the profile by walking every secant once.
arc_profile profile(const pg::geometry& g, const plane_arc& K);

/// Number of secants of K through each point of the plane, indexed by rank.
std::vector<std::uint16_t> secant_counts(const pg::geometry& g, const std::vector<pg::point>& pts);

/// Normalization targets.  Each moves the arc, by a plane projectivity, into
/// a canonical position:
///  - sumpoint_001:   the unique sum point becomes (0,0,1)
///  - sumpoint_011:   the infinite line meets the arc in (0,0,1), (0,1,0)
///                    and the sum point becomes (0,1,1)
///  - sinf_no_one:    sumpoint_001 position with 1 outside the
///                    vertical-difference set
///  - parabola_clear: sumpoint_011 position with the arc disjoint from every
///                    parabola y^2-scaled by a unit slope difference
///  - star:           an affine arc avoiding the squares diagonal, with 1
///                    outside the vertical-difference set
enum class norm_target { sumpoint_001, sumpoint_011, sinf_no_one, parabola_clear, star };

struct normalization {
    pg::projectivity psi;
    plane_arc arc;
    bool integral = true;  // false only for the star target's line move
};

/// Moves a complete arc into the requested canonical position.  The first
/// four targets require a unique sum point (beta == 1) and return an
/// integral projectivity (it maps each normalized arc point to an
/// already-normalized image).  Throws hypothesis_violated when the input does
/// not satisfy the target's naming hypothesis and search_exhausted when a
/// required scan finds no admissible parameter.
normalization normalize_arc(const pg::geometry& g, const plane_arc& K, norm_target target);

/// Chooses the lexicographically smallest admissible slope pair (m1 < m2 by
/// encoding) for the two-slope cap recursion: both outside {0, 1}, distinct,
/// (m1 + m2)^3 != 1, and 1 absent from both per-slope difference sets.
/// Requires an affinely complete arc (or the affine part of a complete arc)
/// with (0,0,1) covered and size below q - 5.  Throws not_found if no pair
/// qualifies.
std::pair<gf::elem, gf::elem> choose_m1_m2(const pg::geometry& g, const arc_profile& prof, std::size_t arc_size);

/// Quartic four-branch arc of size 4*sqrt(q) - 4 for square q >= 16.  The
/// quadratic parameter w solves w^2 + w = d for the first subfield d (in
/// encoding order) whose roots fall outside the index-two subfield.
/// Throws precondition_violated for non-square or too-small q and no_valid_w
/// if the d-scan fails.
plane_arc construct_kw(const pg::geometry& g);

/// Variant with the fourth branch twisted by w^2; defined for q = 4^(2m+1)
/// (q in {64, 1024} at the supported sizes), with w a primitive cube root of
/// unity.  Complete at both supported sizes, which is asserted.
plane_arc construct_kw_prime(const pg::geometry& g);

/// Cubic-coset arc of size (q+8)/3 for q = 2^h with h even, h >= 6: the
/// coset of cubes through a trace-one primitive g, two infinite points
/// (0,1,1/g), (0,1,1/g^2) and the unit point of the x-axis.  Asserts the
/// arc property; for h >= 6 also asserts completeness, a unique sum point
/// (0,0,1) and exactly one secant through it.  With unchecked = true, h = 4
/// is allowed and no conclusion beyond the arc property is asserted.
plane_arc construct_abatangelo(const pg::geometry& g, bool unchecked = false);

/// Greedy completion: repeatedly adds a uniformly random point lying on no
/// secant until none remains (such a point is exactly an addable one).  The
/// iteration budget mixes cold restarts from the seed arc, re-completions of
/// perturbed record arcs drawn from a small diversity pool, and fixed-size
/// swap descents that look for a complete arc one size below the record;
/// the smallest complete arc over all passes is returned (ties: earliest).
/// Fully deterministic given master_seed.
plane_arc greedy_complete(const pg::geometry& g, const plane_arc& seed_arc, std::uint64_t master_seed,
                          unsigned iterations);

/// Searches for a projectivity whose image of K has a unique sum point, by
/// sending a secant to the infinite line so that a chosen covered point with
/// few secants becomes the image's sum point on it.  On success the image is
/// in sumpoint_011 position and the image's secant count through the sum
/// point equals the chosen point's secant count (so max_p = 1 requests a
/// unique-secant sum point).  Returns nullopt when the budget is exhausted.
struct beta1_result {
    pg::projectivity psi;
    plane_arc arc;
    arc_profile prof;
};
std::optional<beta1_result> find_beta1(const pg::geometry& g, const plane_arc& K, std::uint64_t seed,
                                       unsigned budget, unsigned max_p = 1);

/// Empirical scan: builds `trials` random complete arcs and reports how many
/// admit a unique-sum-point position (directly or after the projectivity
/// search).  Requires q <= 16.
struct conjecture_report {
    unsigned trials = 0;
    unsigned beta1_direct = 0;    // arcs whose identity position already has beta == 1
    unsigned beta1_found = 0;     // arcs moved to beta == 1 by the search
    unsigned failures = 0;        // arcs where the budget ran out
};
conjecture_report conjecture_scan(const pg::geometry& g, unsigned trials, std::uint64_t rng_seed,
                                  unsigned search_budget = 2000);

}  // namespace capforge::arcs

#endif  // CAPFORGE_ARCS_HPP
