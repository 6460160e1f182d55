// Projective-space plumbing: dense point numbering, lines, embeddings,
// plane projectivities.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "capforge/projgeom.hpp"

using namespace capforge;
using pg::make_point;
using pg::point;

TEST_CASE("point counts for the spaces the library works in") {
    struct row {
        unsigned N, h;
        std::uint64_t count;
    };
    const row kRows[] = {
        {1, 3, 9},         {2, 3, 73},       {2, 4, 273},      {4, 3, 4681},
        {5, 3, 37449},     {6, 3, 299593},   {4, 4, 69905},    {5, 4, 1118481},
    };
    for (const auto& r : kRows) {
        gf::field_ctx f(r.h);
        pg::geometry g(f, r.N);
        CHECK(g.point_count() == r.count);
        CHECK(g.N() == r.N);
        CHECK(g.q() == f.q());
    }
}

TEST_CASE("rank and unrank are inverse bijections") {
    gf::field_ctx f8(3);
    for (unsigned N : {1u, 2u, 4u}) {
        pg::geometry g(f8, N);
        std::set<std::uint64_t> seen;
        for (std::uint64_t r = 0; r < g.point_count(); ++r) {
            point p = g.unrank(r);
            CHECK(p == g.normalize(p));  // unrank output is normalized
            CHECK(g.rank(p) == r);
            seen.insert(r);
        }
        CHECK(seen.size() == g.point_count());
    }
    gf::field_ctx f16(4);
    pg::geometry g2(f16, 2);
    for (std::uint64_t r = 0; r < g2.point_count(); ++r) CHECK(g2.rank(g2.unrank(r)) == r);
}

TEST_CASE("rank orders by leading-one position, then base-q digits") {
    gf::field_ctx f(3);
    pg::geometry g(f, 2);
    CHECK(g.rank(make_point({1, 0, 0})) == 0);
    CHECK(g.rank(make_point({1, 0, 1})) == 1);
    CHECK(g.rank(make_point({1, 0, 7})) == 7);
    CHECK(g.rank(make_point({1, 1, 0})) == 8);
    CHECK(g.rank(make_point({1, 7, 7})) == 63);
    CHECK(g.rank(make_point({0, 1, 0})) == 64);
    CHECK(g.rank(make_point({0, 1, 7})) == 71);
    CHECK(g.rank(make_point({0, 0, 1})) == 72);
}

TEST_CASE("normalization fixes the leading coordinate to one") {
    gf::field_ctx f(3);
    pg::geometry g(f, 2);
    point p = make_point({0, 3, 5});
    point n = g.normalize(p);
    CHECK(n.c[0] == 0);
    CHECK(n.c[1] == 1);
    CHECK(n.c[2] == f.mul(f.inv(3), 5));
    CHECK(g.normalize(n) == n);
    // Scalar multiples normalize identically.
    for (unsigned lambda = 1; lambda < f.q(); ++lambda)
        CHECK(g.normalize(g.scalar_mul(static_cast<gf::elem>(lambda), p)) == n);
    CHECK_THROWS_AS(g.normalize(make_point({0, 0, 0})), zero_vector);
}

TEST_CASE("collinearity matches line membership everywhere in PG(2, 8)") {
    gf::field_ctx f(3);
    pg::geometry g(f, 2);
    point a = make_point({1, 0, 0});
    point b = make_point({0, 1, 0});
    CHECK(g.collinear(a, b, make_point({1, 1, 0})));
    CHECK(g.collinear(a, b, make_point({1, 5, 0})));
    CHECK(!g.collinear(a, b, make_point({1, 0, 1})));
    CHECK(!g.collinear(a, b, make_point({0, 0, 1})));
    CHECK_THROWS_AS(g.collinear(a, a, b), duplicate_point);
    CHECK_THROWS_AS(g.collinear(a, g.scalar_mul(5, a), b), duplicate_point);

    // Against line_through on a sample of point pairs.
    for (std::uint64_t r1 = 0; r1 < g.point_count(); r1 += 9) {
        for (std::uint64_t r2 = r1 + 1; r2 < g.point_count(); r2 += 13) {
            point p1 = g.unrank(r1), p2 = g.unrank(r2);
            auto line = g.line_through(p1, p2);
            std::set<std::uint64_t> on_line;
            for (const auto& p : line) on_line.insert(g.rank(p));
            for (std::uint64_t r3 = 0; r3 < g.point_count(); ++r3) {
                if (r3 == r1 || r3 == r2) continue;
                CHECK(g.collinear(p1, p2, g.unrank(r3)) == (on_line.count(r3) > 0));
            }
        }
    }
}

TEST_CASE("lines have q + 1 points and are set-stable under input changes") {
    gf::field_ctx f(4);
    pg::geometry g(f, 2);
    point p1 = make_point({1, 3, 7});
    point p2 = make_point({0, 1, 9});
    auto line = g.line_through(p1, p2);
    CHECK(line.size() == f.q() + 1);

    std::set<std::uint64_t> ranks;
    for (const auto& p : line) ranks.insert(g.rank(p));
    CHECK(ranks.size() == f.q() + 1);  // all distinct

    auto swapped = g.line_through(p2, p1);
    auto scaled = g.line_through(g.scalar_mul(5, p1), g.scalar_mul(11, p2));
    std::set<std::uint64_t> ranks_swapped, ranks_scaled;
    for (const auto& p : swapped) ranks_swapped.insert(g.rank(p));
    for (const auto& p : scaled) ranks_scaled.insert(g.rank(p));
    CHECK(ranks == ranks_swapped);
    CHECK(ranks == ranks_scaled);
    CHECK_THROWS_AS(g.line_through(p1, g.scalar_mul(5, p1)), duplicate_point);

    // Two distinct lines meet in exactly one point (projective plane axiom).
    auto other = g.line_through(make_point({1, 0, 0}), make_point({0, 1, 0}));
    std::set<std::uint64_t> ranks_other;
    for (const auto& p : other) ranks_other.insert(g.rank(p));
    std::vector<std::uint64_t> meet;
    std::set_intersection(ranks.begin(), ranks.end(), ranks_other.begin(), ranks_other.end(),
                          std::back_inserter(meet));
    CHECK(meet.size() == 1);
}

TEST_CASE("leading-zero embedding and the doubling embedding") {
    point p = make_point({1, 3, 7});
    point e = pg::embed_leading_zeros(p, 2);
    CHECK(e.len == 5);
    CHECK(e == make_point({0, 0, 1, 3, 7}));

    // Doubling embed at s = 2, j = 0: (Y0, Y1, Y2) -> (0,0,0, Y0, Y0, Y1, Y2).
    point d0 = pg::doubling_embed(make_point({1, 5, 6}), 2, 0);
    CHECK(d0 == make_point({0, 0, 0, 1, 1, 5, 6}));
    // s = 2, j = 1: (Y0..Y4) -> (0, Y0, Y0, Y1, Y2, Y3, Y4).
    point d1 = pg::doubling_embed(make_point({1, 2, 3, 4, 5}), 2, 1);
    CHECK(d1 == make_point({0, 1, 1, 2, 3, 4, 5}));
    CHECK_THROWS_AS(pg::doubling_embed(make_point({1, 5, 6}), 2, 2), bad_parameters);
    CHECK_THROWS_AS(pg::doubling_embed(make_point({1, 5, 6, 7, 8}), 2, 0), bad_parameters);

    // Subspace membership agrees with the embeddings.
    auto lz = pg::subspace::leading_zeros(2);
    CHECK(lz.contains(e));
    CHECK(!lz.contains(make_point({0, 1, 0, 0, 0})));
    auto dbl0 = pg::subspace::doubled(2, 0);
    CHECK(dbl0.contains(d0));
    CHECK(!dbl0.contains(make_point({0, 0, 0, 1, 2, 5, 6})));
    auto dbl1 = pg::subspace::doubled(2, 1);
    CHECK(dbl1.contains(d1));
}

TEST_CASE("plane projectivities: determinant, composition, inverse, action") {
    gf::field_ctx f(3);
    pg::geometry g(f, 2);
    pg::projectivity A = pg::make_projectivity(f, {1, 2, 3, 0, 1, 4, 0, 0, 1});
    pg::projectivity B = pg::make_projectivity(f, {2, 0, 0, 0, 5, 0, 0, 0, 1});
    CHECK(pg::det(f, A) == 1);
    CHECK(pg::det(f, B) == f.mul(2, 5));
    CHECK_THROWS_AS(pg::make_projectivity(f, {1, 2, 3, 2, 4, 6, 0, 0, 1}), bad_parameters);

    // det is multiplicative; the inverse really inverts.
    pg::projectivity AB = pg::compose(f, A, B);
    CHECK(pg::det(f, AB) == f.mul(pg::det(f, A), pg::det(f, B)));
    pg::projectivity Ainv = pg::inverse(f, A);
    pg::projectivity I = pg::compose(f, A, Ainv);
    CHECK(I.m == std::array<gf::elem, 9>{1, 0, 0, 0, 1, 0, 0, 0, 1});

    // Action is consistent with composition and respects the quotient.
    for (std::uint64_t r = 0; r < g.point_count(); r += 5) {
        point p = g.unrank(r);
        point img = pg::apply_projectivity(g, AB, p);
        point step = pg::apply_projectivity(g, A, pg::apply_projectivity(g, B, p));
        CHECK(img == step);
        CHECK(pg::apply_projectivity(g, Ainv, pg::apply_projectivity(g, A, p)) == p);
    }

    // A projectivity permutes the plane.
    std::set<std::uint64_t> images;
    for (std::uint64_t r = 0; r < g.point_count(); ++r)
        images.insert(g.rank(pg::apply_projectivity(g, A, g.unrank(r))));
    CHECK(images.size() == g.point_count());

    // Lines map to lines.
    point p1 = make_point({1, 3, 0}), p2 = make_point({0, 1, 6});
    auto line = g.line_through(p1, p2);
    auto img_line = g.line_through(pg::apply_projectivity(g, A, p1), pg::apply_projectivity(g, A, p2));
    std::set<std::uint64_t> img_set, mapped_set;
    for (const auto& p : img_line) img_set.insert(g.rank(p));
    for (const auto& p : line) mapped_set.insert(g.rank(pg::apply_projectivity(g, A, p)));
    CHECK(img_set == mapped_set);
}

TEST_CASE("integral mode rejects images that the quotient would silently rescale") {
    gf::field_ctx f(3);
    pg::geometry g(f, 2);
    // diag(2, 2, 2) fixes every point projectively but doubles every vector.
    pg::projectivity D = pg::make_projectivity(f, {2, 0, 0, 0, 2, 0, 0, 0, 2});
    point p = make_point({1, 3, 5});
    CHECK(pg::apply_projectivity(g, D, p) == p);
    CHECK_THROWS_AS(pg::apply_projectivity(g, D, p, true), integrality_violated);

    // A transvection fixing the leading one acts integrally.
    pg::projectivity T = pg::make_projectivity(f, {1, 0, 0, 5, 1, 0, 0, 0, 1});
    CHECK_NOTHROW(pg::apply_projectivity(g, T, p, true));
    CHECK(pg::is_integral_for(g, T, {p, make_point({1, 0, 0})}));
    CHECK(!pg::is_integral_for(g, D, {p}));
}

TEST_CASE("geometry construction rejects out-of-range dimensions") {
    gf::field_ctx f8(3);
    CHECK_THROWS_AS(pg::geometry(f8, 0), bad_parameters);
    CHECK_THROWS_AS(pg::geometry(f8, 12), bad_parameters);
    // A rank table that would overflow 64 bits is rejected up front.
    gf::field_ctx f1024(10);
    CHECK_THROWS_AS(pg::geometry(f1024, 11), bad_parameters);
    CHECK_NOTHROW(pg::geometry(f1024, 5));
}
