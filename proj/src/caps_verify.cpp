#include <algorithm>

#include "capforge/bitvec.hpp"
#include "capforge/caps.hpp"
#include "capforge/rng.hpp"

namespace capforge::caps {

namespace {

constexpr std::size_t kExhaustivePairLimit = 2000;
constexpr std::uint64_t kSampleBudget = 1000000;
constexpr std::uint64_t kExhaustiveSpaceLimit = 1000000;

}  // namespace

cap_report verify_cap(const pg::geometry& g, const cap& C, verify_level level, std::uint64_t sample_seed) {
    if (C.N != g.N()) throw bad_parameters("cap dimension does not match the geometry");
    cap_report rep;
    const std::size_t k = C.pts.size();
    if (k < 3) {
        // Fewer than three points can never contain a collinear triple, but
        // coincident points are still rejected.
        rep.level_used = verify_level::exhaustive;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (g.rank(C.pts[i]) == g.rank(C.pts[j])) {
                    rep.witness = {C.pts[i], C.pts[i], C.pts[j]};
                    return rep;
                }
        rep.ok = true;
        return rep;
    }

    bool exhaustive = (level == verify_level::exhaustive) ||
                      (level == verify_level::automatic && k <= kExhaustivePairLimit);
    rep.level_used = exhaustive ? verify_level::exhaustive : verify_level::sampled;

    if (exhaustive) {
        // Walking every secant and testing membership of its remaining points
        // covers every triple: a collinear triple lies on the line through
        // any two of its points.
        bitvec member(g.point_count());
        for (const auto& p : C.pts) {
            std::uint64_t r = g.rank(p);
            if (member.test(r)) {
                rep.witness = {p, p, p};
                return rep;
            }
            member.mark(r);
        }
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) {
                ++rep.checked;
                for (unsigned lambda = 1; lambda < g.q(); ++lambda) {
                    pg::point t = g.normalize(pg::geometry::add(
                        C.pts[i], g.scalar_mul(static_cast<gf::elem>(lambda), C.pts[j])));
                    if (member.test(g.rank(t))) {
                        rep.witness = {C.pts[i], C.pts[j], t};
                        return rep;
                    }
                }
            }
        }
        rep.ok = true;
        return rep;
    }

    rng r(sample_seed, 0);
    for (std::uint64_t trial = 0; trial < kSampleBudget; ++trial) {
        std::size_t a = r.below(k), b = r.below(k), c = r.below(k);
        if (a == b || a == c || b == c) continue;
        ++rep.checked;
        try {
            if (g.collinear(C.pts[a], C.pts[b], C.pts[c])) {
                rep.witness = {C.pts[a], C.pts[b], C.pts[c]};
                return rep;
            }
        } catch (const duplicate_point&) {
            rep.witness = {C.pts[a], C.pts[b], C.pts[c]};
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

completeness_report verify_complete(const pg::geometry& g, const cap& C, verify_level level,
                                    std::uint64_t sample_seed) {
    if (C.N != g.N()) throw bad_parameters("cap dimension does not match the geometry");
    completeness_report rep;
    const std::size_t k = C.pts.size();
    const std::uint64_t n = g.point_count();

    bitvec covered(n);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            covered.mark(g.rank(C.pts[i]));
            covered.mark(g.rank(C.pts[j]));
            for (unsigned lambda = 1; lambda < g.q(); ++lambda)
                covered.mark(g.rank(g.normalize(
                    pg::geometry::add(C.pts[i], g.scalar_mul(static_cast<gf::elem>(lambda), C.pts[j])))));
        }
    }

    bool exhaustive = (level == verify_level::exhaustive) ||
                      (level == verify_level::automatic && n <= kExhaustiveSpaceLimit);
    rep.level_used = exhaustive ? verify_level::exhaustive : verify_level::sampled;

    auto note_uncovered = [&](std::uint64_t rank) {
        ++rep.uncovered_count;
        if (rep.uncovered.size() < 1024) rep.uncovered.push_back(g.unrank(rank));
    };

    if (exhaustive) {
        rep.points_checked = n;
        for (std::uint64_t rank = 0; rank < n; ++rank)
            if (!covered.test(rank)) note_uncovered(rank);
    } else {
        rng r(sample_seed, 1);
        rep.points_checked = kSampleBudget;
        bitvec noted(n);
        for (std::uint64_t trial = 0; trial < kSampleBudget; ++trial) {
            std::uint64_t rank = r.below(n);
            if (!covered.test(rank) && !noted.test(rank)) {
                noted.mark(rank);
                note_uncovered(rank);
            }
        }
    }
    rep.complete = (rep.uncovered_count == 0) && k >= 2;
    return rep;
}

}  // namespace capforge::caps
