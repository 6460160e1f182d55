#include <algorithm>

#include "capforge/arcs.hpp"
#include "capforge/bitvec.hpp"

namespace capforge::arcs {

namespace {

void require_plane(const pg::geometry& g) {
    if (g.N() != 2) throw bad_parameters("plane-arc operations require PG(2, q)");
}

}  // namespace

plane_arc make_plane_arc(const pg::geometry& g, std::vector<pg::point> pts) {
    require_plane(g);
    for (auto& p : pts) p = g.normalize(p);
    std::sort(pts.begin(), pts.end(),
              [&](const pg::point& a, const pg::point& b) { return g.rank(a) < g.rank(b); });
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i] == pts[i - 1]) throw not_an_arc("duplicate point in arc input");
    if (!is_arc(g, pts)) throw not_an_arc("three points of the input are collinear");
    return plane_arc{std::move(pts)};
}

bool is_arc(const pg::geometry& g, const std::vector<pg::point>& pts) {
    require_plane(g);
    bitvec member(g.point_count());
    std::vector<pg::point> norm;
    norm.reserve(pts.size());
    for (const auto& p : pts) {
        pg::point n = g.normalize(p);
        std::uint64_t r = g.rank(n);
        if (member.test(r)) return false;  // repeated point
        member.mark(r);
        norm.push_back(n);
    }
    const unsigned q = g.q();
    for (std::size_t i = 0; i < norm.size(); ++i) {
        for (std::size_t j = i + 1; j < norm.size(); ++j) {
            for (unsigned lambda = 1; lambda < q; ++lambda) {
                pg::point t = g.normalize(
                    pg::geometry::add(norm[i], g.scalar_mul(static_cast<gf::elem>(lambda), norm[j])));
                if (member.test(g.rank(t))) return false;
            }
        }
    }
    return true;
}

arc_profile profile(const pg::geometry& g, const plane_arc& K) {
    require_plane(g);
    const unsigned q = g.q();
    const std::uint64_t n = g.point_count();
    const std::uint64_t affine_count = static_cast<std::uint64_t>(q) * q;

    bitvec member(n), covered(n), disq(n), affine_covered(n);
    std::vector<std::uint16_t> nsec(n, 0);
    for (const auto& p : K.pts) member.mark(g.rank(p));

    arc_profile prof;

    for (std::size_t i = 0; i < K.pts.size(); ++i) {
        for (std::size_t j = i + 1; j < K.pts.size(); ++j) {
            const pg::point& A = K.pts[i];
            const pg::point& B = K.pts[j];
            const bool affine_pair = (A.c[0] == 1 && B.c[0] == 1);

            // Difference statistics for pairs sharing the first coordinate.
            if (A.c[0] == B.c[0]) {
                if (A.c[1] == B.c[1]) {
                    prof.s_infty.insert(static_cast<gf::elem>(A.c[2] ^ B.c[2]));
                } else {
                    gf::elem dx = static_cast<gf::elem>(A.c[1] ^ B.c[1]);
                    gf::elem dy = static_cast<gf::elem>(A.c[2] ^ B.c[2]);
                    gf::elem m = g.field().mul(dy, g.field().inv(dx));
                    prof.s_m[m].insert(dx);
                }
            }

            // Walk the secant: the equal-coefficient point is normalize(A+B);
            // every other point of the line is disqualified as a sum point.
            pg::point S = g.normalize(pg::geometry::add(A, B));
            std::uint64_t rS = g.rank(S);
            auto visit = [&](const pg::point& T) {
                std::uint64_t r = g.rank(T);
                covered.mark(r);
                ++nsec[r];
                if (r != rS) disq.mark(r);
                if (affine_pair) affine_covered.mark(r);
            };
            visit(A);
            visit(B);
            visit(S);  // lambda = 1
            for (unsigned lambda = 2; lambda < q; ++lambda)
                visit(g.normalize(pg::geometry::add(A, g.scalar_mul(static_cast<gf::elem>(lambda), B))));
        }
    }

    // Sum points: covered, never disqualified, not on the arc (arc points are
    // always disqualified by their own secants).
    for (std::uint64_t r = 0; r < n; ++r) {
        if (covered.test(r) && !disq.test(r) && !member.test(r)) prof.sum_points.push_back(g.unrank(r));
    }
    prof.beta = static_cast<unsigned>(prof.sum_points.size());
    if (prof.beta == 1) prof.p = nsec[g.rank(prof.sum_points.front())];

    for (unsigned m = 0; m < q; ++m) {
        if (covered.test(affine_count + m)) prof.cov_infty.push_back(static_cast<gf::elem>(m));
    }
    prof.z_infty_covered = covered.test(affine_count + q);

    prof.affinely_complete = true;
    for (std::uint64_t r = 0; r < affine_count; ++r) {
        if (!member.test(r) && !affine_covered.test(r)) {
            prof.affinely_complete = false;
            break;
        }
    }

    prof.complete = true;
    for (std::uint64_t r = 0; r < n; ++r) {
        if (!member.test(r) && !covered.test(r)) {
            prof.complete = false;
            prof.uncovered.push_back(g.unrank(r));
        }
    }
    return prof;
}

std::vector<std::uint16_t> secant_counts(const pg::geometry& g, const std::vector<pg::point>& pts) {
    const unsigned q = g.q();
    std::vector<std::uint16_t> nsec(g.point_count(), 0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            ++nsec[g.rank(pts[i])];
            ++nsec[g.rank(pts[j])];
            for (unsigned lambda = 1; lambda < q; ++lambda) {
                pg::point t = g.normalize(
                    pg::geometry::add(pts[i], g.scalar_mul(static_cast<gf::elem>(lambda), pts[j])));
                ++nsec[g.rank(t)];
            }
        }
    }
    return nsec;
}

}  // namespace capforge::arcs
