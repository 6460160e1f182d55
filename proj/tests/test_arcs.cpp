// Plane arcs: validation, combinatorial profile (cross-checked against an
// independent coefficient solver), canonical positions, named families.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "capforge/arcs.hpp"

using namespace capforge;
using pg::make_point;
using pg::point;

namespace {

/// The conic {(1, t, t^2)} + (0,0,1); a (q+1)-arc whose only extension point
/// at even q is the common point (0,1,0) of its tangent lines.
arcs::plane_arc conic(const pg::geometry& g) {
    std::vector<point> pts;
    const auto& f = g.field();
    for (unsigned t = 0; t < g.q(); ++t)
        pts.push_back(make_point({1u, t, f.mul(static_cast<gf::elem>(t), static_cast<gf::elem>(t))}));
    pts.push_back(make_point({0, 0, 1}));
    return arcs::make_plane_arc(g, std::move(pts));
}

arcs::plane_arc hyperoval(const pg::geometry& g) {
    arcs::plane_arc K = conic(g);
    std::vector<point> pts = K.pts;
    pts.push_back(make_point({0, 1, 0}));
    return arcs::make_plane_arc(g, std::move(pts));
}

/// Independent sum-point oracle: expresses every covered off-arc point in the
/// two arc points of each secant through it by direct linear solving, and
/// keeps the points whose two coefficients agree on every such secant.
std::vector<point> oracle_sum_points(const pg::geometry& g, const arcs::plane_arc& K) {
    const auto& f = g.field();
    std::vector<point> out;
    for (std::uint64_t r = 0; r < g.point_count(); ++r) {
        point Q = g.unrank(r);
        if (std::find(K.pts.begin(), K.pts.end(), Q) != K.pts.end()) continue;
        unsigned on = 0;
        bool all_equal = true;
        for (std::size_t i = 0; i < K.pts.size() && all_equal; ++i) {
            for (std::size_t j = i + 1; j < K.pts.size() && all_equal; ++j) {
                const point& A = K.pts[i];
                const point& B = K.pts[j];
                if (!g.collinear(A, B, Q)) continue;
                ++on;
                // Solve Q = a A + b B from a coordinate pair with a
                // nonsingular 2x2 minor, then scale-invariantly compare.
                bool solved = false;
                for (unsigned c0 = 0; c0 < 3 && !solved; ++c0) {
                    for (unsigned c1 = c0 + 1; c1 < 3 && !solved; ++c1) {
                        gf::elem det = static_cast<gf::elem>(f.mul(A.c[c0], B.c[c1]) ^
                                                             f.mul(A.c[c1], B.c[c0]));
                        if (det == 0) continue;
                        gf::elem di = f.inv(det);
                        gf::elem a = f.mul(di, static_cast<gf::elem>(f.mul(Q.c[c0], B.c[c1]) ^
                                                                     f.mul(Q.c[c1], B.c[c0])));
                        gf::elem b = f.mul(di, static_cast<gf::elem>(f.mul(A.c[c0], Q.c[c1]) ^
                                                                     f.mul(A.c[c1], Q.c[c0])));
                        solved = true;
                        if (a != b) all_equal = false;
                    }
                }
                REQUIRE(solved);
            }
        }
        if (on >= 1 && all_equal) out.push_back(Q);
    }
    return out;
}

}  // namespace

TEST_CASE("arc construction canonicalizes and validates") {
    gf::field_ctx f(3);
    pg::geometry g(f, 2);

    auto K = arcs::make_plane_arc(g, {make_point({0, 0, 2}), make_point({1, 0, 0}),
                                      make_point({2, 2, 2}), make_point({2, 4, 1})});
    REQUIRE(K.size() == 4);
    // Normalized and sorted by rank.
    CHECK(K.pts[0] == make_point({1, 0, 0}));
    CHECK(K.pts[1] == make_point({1, 1, 1}));
    CHECK(K.pts[2] == make_point({1, 2, 5}));
    CHECK(K.pts[3] == make_point({0, 0, 1}));
    for (std::size_t i = 1; i < K.pts.size(); ++i) CHECK(g.rank(K.pts[i - 1]) < g.rank(K.pts[i]));

    CHECK_THROWS_AS(arcs::make_plane_arc(g, {make_point({1, 0, 0}), make_point({2, 0, 0})}),
                    not_an_arc);  // same projective point twice
    CHECK_THROWS_AS(arcs::make_plane_arc(g, {make_point({1, 0, 0}), make_point({0, 1, 0}),
                                             make_point({1, 1, 0})}),
                    not_an_arc);  // collinear triple
    CHECK(arcs::is_arc(g, {make_point({1, 0, 0}), make_point({0, 1, 0}), make_point({0, 0, 1})}));
    CHECK(!arcs::is_arc(g, {make_point({1, 0, 0}), make_point({0, 1, 0}), make_point({1, 5, 0})}));

    pg::geometry g4(f, 4);
    CHECK_THROWS_AS(arcs::make_plane_arc(g4, {}), bad_parameters);
}

TEST_CASE("conic profile: vertical differences, slopes, coverage, extension point") {
    for (unsigned h : {3u, 4u}) {
        CAPTURE(h);
        gf::field_ctx f(h);
        pg::geometry g(f, 2);
        const unsigned q = f.q();
        arcs::plane_arc K = conic(g);
        arcs::arc_profile prof = arcs::profile(g, K);

        CHECK(prof.s_infty.empty());
        // Chords of {(1,t,t^2)} have slope a + b, so each slope class holds
        // exactly the one x-difference a + b = m.
        for (unsigned m = 1; m < q; ++m) {
            CAPTURE(m);
            REQUIRE(prof.s_m.count(static_cast<gf::elem>(m)));
            CHECK(prof.slopes(static_cast<gf::elem>(m)) ==
                  std::set<gf::elem>{static_cast<gf::elem>(m)});
        }
        CHECK(!prof.s_m.count(0));

        std::vector<gf::elem> expect_cov;
        for (unsigned m = 1; m < q; ++m) expect_cov.push_back(static_cast<gf::elem>(m));
        CHECK(prof.cov_infty == expect_cov);  // everything but the tangent point (0,1,0)
        CHECK(prof.z_infty_covered);
        CHECK(prof.affinely_complete);
        CHECK(!prof.complete);
        REQUIRE(prof.uncovered.size() == 1);
        CHECK(prof.uncovered[0] == make_point({0, 1, 0}));

        // Every infinite point (0,1,m), m != 0, is an equal-coefficient point
        // of all its secants, so the sum points are exactly those.
        CHECK(prof.beta == q - 1);
        CHECK(!prof.p.has_value());
        for (const auto& sp : prof.sum_points) {
            CHECK(sp.c[0] == 0);
            CHECK(sp.c[1] == 1);
            CHECK(sp.c[2] != 0);
        }
    }
}

TEST_CASE("hyperoval profile: complete with a unique sum point at (0,1,1)") {
    for (unsigned h : {3u, 4u}) {
        CAPTURE(h);
        gf::field_ctx f(h);
        pg::geometry g(f, 2);
        const unsigned q = f.q();
        arcs::plane_arc K = hyperoval(g);
        REQUIRE(K.size() == q + 2);
        arcs::arc_profile prof = arcs::profile(g, K);

        CHECK(prof.complete);
        CHECK(prof.affinely_complete);
        CHECK(prof.uncovered.empty());
        CHECK(prof.beta == 1);
        REQUIRE(prof.sum_points.size() == 1);
        CHECK(prof.sum_points[0] == make_point({0, 1, 1}));
        REQUIRE(prof.p.has_value());
        CHECK(*prof.p == q / 2 + 1);  // q/2 slope-one chords plus the infinite secant
    }
}

TEST_CASE("profile sum points match the independent solver") {
    gf::field_ctx f(3);
    pg::geometry g(f, 2);

    auto cross_check = [&](const arcs::plane_arc& K) {
        arcs::arc_profile prof = arcs::profile(g, K);
        std::vector<point> expect = oracle_sum_points(g, K);
        REQUIRE(prof.sum_points.size() == expect.size());
        CHECK(prof.sum_points == expect);  // both are in rank order
        CHECK(prof.beta == expect.size());
    };

    cross_check(conic(g));
    cross_check(hyperoval(g));
    cross_check(arcs::greedy_complete(g, arcs::plane_arc{}, 1, 3));
    cross_check(arcs::make_plane_arc(g, {make_point({1, 0, 0}), make_point({0, 1, 0}),
                                         make_point({0, 0, 1}), make_point({1, 1, 1})}));

    gf::field_ctx f16(4);
    pg::geometry g16(f16, 2);
    arcs::plane_arc K16 = arcs::greedy_complete(g16, arcs::plane_arc{}, 7, 3);
    arcs::arc_profile prof16 = arcs::profile(g16, K16);
    std::vector<point> expect16 = oracle_sum_points(g16, K16);
    CHECK(prof16.sum_points == expect16);
}

TEST_CASE("profile invariants hold across arcs and fields") {
    for (unsigned h : {3u, 4u}) {
        gf::field_ctx f(h);
        pg::geometry g(f, 2);
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            arcs::plane_arc K = arcs::greedy_complete(g, arcs::plane_arc{}, seed, 3);
            arcs::arc_profile prof = arcs::profile(g, K);
            const std::size_t k = K.size();
            CHECK(!prof.s_infty.count(0));
            CHECK(prof.s_infty.size() <= k / 2);
            for (const auto& [m, diffs] : prof.s_m) {
                CHECK(!diffs.empty());
                CHECK(diffs.size() <= k / 2);
                CHECK(!diffs.count(0));
                (void)m;
            }
            CHECK(prof.beta == prof.sum_points.size());
            CHECK(prof.p.has_value() == (prof.beta == 1));
            CHECK(prof.complete == prof.uncovered.empty());
            CHECK(prof.complete);  // greedy output is complete by construction
        }
    }
}

TEST_CASE("canonical positions of a unique-sum-point arc") {
    gf::field_ctx f(6);
    pg::geometry g(f, 2);
    const unsigned q = f.q();
    arcs::plane_arc K = arcs::construct_abatangelo(g);
    arcs::arc_profile base = arcs::profile(g, K);
    REQUIRE(base.beta == 1);
    REQUIRE(base.p == 1u);

    auto image_of = [&](const pg::projectivity& psi) {
        std::vector<point> img;
        for (const auto& p : K.pts) img.push_back(pg::apply_projectivity(g, psi, p));
        return arcs::make_plane_arc(g, std::move(img));
    };

    SECTION("sum point to (0,0,1)") {
        arcs::normalization n = arcs::normalize_arc(g, K, arcs::norm_target::sumpoint_001);
        CHECK(n.integral);
        CHECK(n.arc.size() == K.size());
        CHECK(image_of(n.psi).pts == n.arc.pts);
        arcs::arc_profile prof = arcs::profile(g, n.arc);
        CHECK(prof.beta == 1);
        CHECK(prof.sum_points[0] == make_point({0, 0, 1}));
        CHECK(prof.p == base.p);
        CHECK(prof.complete);
    }

    SECTION("sum point to (0,1,1) with pinned infinite points") {
        arcs::normalization n = arcs::normalize_arc(g, K, arcs::norm_target::sumpoint_011);
        CHECK(n.integral);
        CHECK(image_of(n.psi).pts == n.arc.pts);
        arcs::arc_profile prof = arcs::profile(g, n.arc);
        CHECK(prof.beta == 1);
        CHECK(prof.sum_points[0] == make_point({0, 1, 1}));
        CHECK(prof.p == base.p);
        std::vector<point> inf;
        for (const auto& p : n.arc.pts)
            if (p.c[0] == 0) inf.push_back(p);
        REQUIRE(inf.size() == 2);
        CHECK(inf[0] == make_point({0, 1, 0}));
        CHECK(inf[1] == make_point({0, 0, 1}));
    }

    SECTION("vertical differences avoid 1") {
        arcs::normalization n = arcs::normalize_arc(g, K, arcs::norm_target::sinf_no_one);
        CHECK(n.integral);
        CHECK(image_of(n.psi).pts == n.arc.pts);
        arcs::arc_profile prof = arcs::profile(g, n.arc);
        CHECK(!prof.s_infty.count(1));
        CHECK(prof.beta == 1);
        CHECK(prof.sum_points[0] == make_point({0, 0, 1}));
        CHECK(prof.p == base.p);
    }

    SECTION("affine points off the scaled parabolas") {
        REQUIRE((K.size() - 2) * *base.p < static_cast<std::size_t>(q - 1));
        arcs::normalization n = arcs::normalize_arc(g, K, arcs::norm_target::parabola_clear);
        CHECK(n.integral);
        CHECK(image_of(n.psi).pts == n.arc.pts);
        arcs::arc_profile prof = arcs::profile(g, n.arc);
        CHECK(prof.beta == 1);
        CHECK(prof.sum_points[0] == make_point({0, 1, 1}));
        CHECK(prof.p == base.p);
        for (const auto& pt : n.arc.pts) {
            if (pt.c[0] != 1) continue;
            if (pt.c[1] == 0) {
                CHECK(pt.c[2] != 0);
                continue;
            }
            gf::elem ratio = f.mul(pt.c[2], f.inv(f.mul(pt.c[1], pt.c[1])));
            CHECK(!prof.slopes(1).count(ratio));
        }
    }

    SECTION("affine normal form") {
        arcs::normalization n = arcs::normalize_arc(g, K, arcs::norm_target::star);
        arcs::arc_profile prof = arcs::profile(g, n.arc);
        CHECK(prof.complete);
        // All points affine + complete in the projective plane means the
        // affine secants alone do all the covering.
        CHECK(prof.affinely_complete);
        CHECK(prof.z_infty_covered);
        CHECK(!prof.s_infty.count(1));
        for (const auto& pt : n.arc.pts) {
            CHECK(pt.c[0] == 1);                                  // affine
            CHECK(pt.c[2] != f.mul(pt.c[1], pt.c[1]));            // off the squares diagonal
        }
        // psi maps the original arc onto the result (projectively).
        std::vector<point> img;
        for (const auto& p : K.pts) img.push_back(pg::apply_projectivity(g, n.psi, p));
        CHECK(arcs::make_plane_arc(g, std::move(img)).pts == n.arc.pts);
        if (n.integral) CHECK(pg::is_integral_for(g, n.psi, K.pts));
    }
}

TEST_CASE("canonical positions reject arcs outside their hypotheses") {
    gf::field_ctx f(3);
    pg::geometry g(f, 2);
    arcs::plane_arc C = conic(g);       // beta = q - 1, incomplete
    arcs::plane_arc H = hyperoval(g);   // beta = 1, but k = q + 2 and p = q/2 + 1

    CHECK_THROWS_AS(arcs::normalize_arc(g, C, arcs::norm_target::sumpoint_001), hypothesis_violated);
    CHECK_THROWS_AS(arcs::normalize_arc(g, C, arcs::norm_target::sumpoint_011), hypothesis_violated);
    CHECK_THROWS_AS(arcs::normalize_arc(g, H, arcs::norm_target::parabola_clear), hypothesis_violated);
    CHECK_THROWS_AS(arcs::normalize_arc(g, H, arcs::norm_target::star), hypothesis_violated);
}

TEST_CASE("slope-pair choice: admissible, lexicographically first") {
    gf::field_ctx f(6);
    pg::geometry g(f, 2);
    const unsigned q = f.q();
    // The affine normal form of the cubic-coset arc is affinely complete
    // with (0,0,1) covered, as the chooser requires.
    arcs::plane_arc K =
        arcs::normalize_arc(g, arcs::construct_abatangelo(g), arcs::norm_target::star).arc;
    arcs::arc_profile prof = arcs::profile(g, K);
    REQUIRE(prof.affinely_complete);
    REQUIRE(prof.z_infty_covered);

    auto [m1, m2] = arcs::choose_m1_m2(g, prof, K.size());
    CHECK(m1 >= 2);
    CHECK(m2 > m1);
    CHECK(!prof.slopes(m1).count(1));
    CHECK(!prof.slopes(m2).count(1));
    CHECK(f.pow(static_cast<gf::elem>(m1 ^ m2), 3) != 1);

    // No admissible pair precedes it lexicographically.
    bool earlier = false;
    for (unsigned a = 2; a < q && !earlier; ++a) {
        if (prof.slopes(static_cast<gf::elem>(a)).count(1)) continue;
        for (unsigned b = a + 1; b < q && !earlier; ++b) {
            if (prof.slopes(static_cast<gf::elem>(b)).count(1)) continue;
            if (f.pow(static_cast<gf::elem>(a ^ b), 3) == 1) continue;
            CHECK(a == m1);
            CHECK(b == m2);
            earlier = true;
        }
    }
    REQUIRE(earlier);

    // The count of slope classes containing 1 is at most k when k < q - 5.
    unsigned with_one = 0;
    for (const auto& [m, diffs] : prof.s_m) {
        if (diffs.count(1)) ++with_one;
        (void)m;
    }
    CHECK(with_one <= K.size());

    gf::field_ctx f8(3);
    pg::geometry g8(f8, 2);
    arcs::plane_arc H = hyperoval(g8);
    arcs::arc_profile ph = arcs::profile(g8, H);
    CHECK_THROWS_AS(arcs::choose_m1_m2(g8, ph, H.size()), hypothesis_violated);  // k >= q - 5
}

TEST_CASE("quartic arc family: valid arcs of the right size (a search seed, not complete)") {
    gf::field_ctx f16(4);
    pg::geometry g16(f16, 2);
    arcs::plane_arc K16 = arcs::construct_kw(g16);
    CHECK(K16.size() == 12);  // 4(sqrt(q) - 1) at q = 16
    CHECK(arcs::is_arc(g16, K16.pts));

    gf::field_ctx f64(6);
    pg::geometry g64(f64, 2);
    CHECK(arcs::construct_kw(g64).size() == 28);

    gf::field_ctx f256(8);
    pg::geometry g256(f256, 2);
    CHECK(arcs::construct_kw(g256).size() == 60);  // arc property asserted inside

    gf::field_ctx f8(3);
    pg::geometry g8(f8, 2);
    CHECK_THROWS_AS(arcs::construct_kw(g8), precondition_violated);   // q not square
    gf::field_ctx f4(2);
    pg::geometry g4(f4, 2);
    CHECK_THROWS_AS(arcs::construct_kw(g4), precondition_violated);   // q too small
}

TEST_CASE("twisted quartic family at q = 64") {
    gf::field_ctx f(6);
    pg::geometry g(f, 2);
    arcs::plane_arc K = arcs::construct_kw_prime(g);
    CHECK(K.size() == 28);
    CHECK(arcs::profile(g, K).complete);  // re-checked here; also asserted inside

    gf::field_ctx f16(4);
    pg::geometry g16(f16, 2);
    CHECK_THROWS_AS(arcs::construct_kw_prime(g16), precondition_violated);  // q = 16 is 4^2
    gf::field_ctx f8(3);
    pg::geometry g8(f8, 2);
    CHECK_THROWS_AS(arcs::construct_kw_prime(g8), precondition_violated);
}

TEST_CASE("cubic-coset arc at q = 64: size, sum point, secant count") {
    gf::field_ctx f(6);
    pg::geometry g(f, 2);
    arcs::plane_arc K = arcs::construct_abatangelo(g);
    CHECK(K.size() == 24);  // (q + 8) / 3
    arcs::arc_profile prof = arcs::profile(g, K);
    CHECK(prof.complete);
    CHECK(prof.beta == 1);
    CHECK(prof.sum_points[0] == make_point({0, 0, 1}));
    CHECK(prof.p == 1u);
    // The generator with trace one at q = 64 is pinned by the field tests;
    // both infinite arc points are built from it.
    CHECK(std::count_if(K.pts.begin(), K.pts.end(),
                        [](const point& p) { return p.c[0] == 0; }) == 2);

    gf::field_ctx f16(4);
    pg::geometry g16(f16, 2);
    CHECK_THROWS_AS(arcs::construct_abatangelo(g16), precondition_violated);
    arcs::plane_arc K16 = arcs::construct_abatangelo(g16, /*unchecked=*/true);
    CHECK(K16.size() == 8);  // (16 + 8) / 3; arc property still enforced

    gf::field_ctx f32(5);
    pg::geometry g32(f32, 2);
    CHECK_THROWS_AS(arcs::construct_abatangelo(g32), precondition_violated);  // odd-degree field
}
