#include <algorithm>

#include "capforge/caps.hpp"

namespace capforge::caps {

namespace {

using arcs::arc_profile;
using arcs::plane_arc;

std::uint64_t ipow(std::uint64_t q, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= q;
    return r;
}

/// q^hi + q^(hi-1) + ... + q^lo (zero when hi < lo).
std::uint64_t geom_sum(std::uint64_t q, unsigned lo, unsigned hi) {
    std::uint64_t r = 0;
    for (unsigned e = lo; e <= hi && hi + 1 != 0; ++e) r += ipow(q, e);
    return r;
}

/// (K : parabola^s) in PG(2s+2, q); for s = 0 this is the arc itself.
std::vector<pg::point> arc_parabola_product(const gf::field_ctx& f, const plane_arc& K, unsigned s) {
    if (s == 0) return K.pts;
    pg::geometry gp(f, 2 * s), go(f, 2 * s + 2);
    cap P = parabola_cap(gp, s);
    cap X = product_cap(go, cap{2, K.pts, "IMPORTED"}, P);
    return X.pts;
}

void append_embedded(std::vector<pg::point>& out, const std::vector<pg::point>& pts, unsigned zeros) {
    for (const auto& p : pts) out.push_back(pg::embed_leading_zeros(p, zeros));
}

arc_profile checked_profile(const gf::field_ctx& f, const plane_arc& K) {
    pg::geometry g2(f, 2);
    return arcs::profile(g2, K);
}

void require(bool ok, const std::string& hypothesis) {
    if (!ok) throw hypothesis_violated(hypothesis);
}

}  // namespace

build_result build_even_case1(const gf::field_ctx& f, const plane_arc& K, unsigned s) {
    const unsigned q = f.q();
    const std::size_t k = K.size();
    require(s >= 1, "the first even construction requires s >= 1");
    arc_profile prof = checked_profile(f, K);
    require(prof.affinely_complete, "the arc must be affinely complete");
    require(prof.z_infty_covered, "the point (0,0,1) must be covered");
    require(!prof.s_infty.count(1), "1 must lie outside the vertical-difference set");

    // k < q-5 is the regime in which an admissible slope pair is guaranteed
    // to exist (q > 8 follows, as complete arcs have k >= 6).  Outside it the
    // same scan is attempted and its failure is a genuine hypothesis failure.
    gf::elem m1 = 0, m2 = 0;
    pg::geometry g2(f, 2);
    if (k + 5 < q) {
        std::tie(m1, m2) = arcs::choose_m1_m2(g2, prof, k);
    } else {
        bool found = false;
        for (unsigned a = 2; a < q && !found; ++a) {
            if (prof.slopes(static_cast<gf::elem>(a)).count(1)) continue;
            for (unsigned b = a + 1; b < q && !found; ++b) {
                if (prof.slopes(static_cast<gf::elem>(b)).count(1)) continue;
                if (f.pow(static_cast<gf::elem>(a ^ b), 3) == 1) continue;
                m1 = static_cast<gf::elem>(a);
                m2 = static_cast<gf::elem>(b);
                found = true;
            }
        }
        require(found, "no admissible slope pair for the two-slope block");
    }

    pg::geometry go(f, 2 * s + 2);
    std::vector<pg::point> pts = arc_parabola_product(f, K, s);
    pg::geometry gs(f, 2 * s + 1);
    cap star = two_slope_star(gs, s, m1, m2);
    append_embedded(pts, star.pts, 1);

    // Slopes m with (0,1,m) uncovered require an infinite extension point
    // (0,1,m,0,...,0); with two or more, the two smallest-encoded are used.
    std::vector<gf::elem> missing;
    {
        std::vector<bool> cov(q, false);
        for (gf::elem m : prof.cov_infty) cov[m] = true;
        for (unsigned m = 0; m < q; ++m)
            if (!cov[m]) missing.push_back(static_cast<gf::elem>(m));
    }
    std::vector<pg::point> ext;
    for (std::size_t i = 0; i < missing.size() && i < 2; ++i) {
        pg::point e;
        e.len = static_cast<std::uint8_t>(2 * s + 3);
        e.c[1] = 1;
        e.c[2] = missing[i];
        ext.push_back(e);
        pts.push_back(e);
    }

    std::uint64_t expect = (k + 3) * ipow(q, s) + 3 * geom_sum(q, 1, s - 1) - (2 * s + 2) + 3 + ext.size();
    std::string tag = ext.empty() ? "EVEN_CASE1" : "EVEN_CASE1_EXT";
    cap C = make_cap(go, std::move(pts),
                     tag + ";s=" + std::to_string(s) + ";k=" + std::to_string(k) + ";m1=" + std::to_string(m1) +
                         ";m2=" + std::to_string(m2) + ";ext=" + std::to_string(ext.size()));
    if (C.pts.size() != expect) throw error("internal: first even construction size mismatch");
    return {std::move(C), std::move(ext), m1, m2};
}

build_result build_even_case2(const gf::field_ctx& f, const plane_arc& K, unsigned s) {
    const unsigned q = f.q();
    const std::size_t k = K.size();
    require(q > 8, "the second even construction requires q > 8");
    require(s >= 1, "the second even construction requires s >= 1");
    require(k < q - 5, "the second even construction requires k < q - 5");
    arc_profile prof = checked_profile(f, K);
    require(prof.complete, "the arc must be complete");
    require(prof.beta == 1, "the arc must have a unique sum point");
    require(prof.sum_points.front() == pg::make_point({0, 0, 1}),
            "the sum point must sit at (0,0,1) - normalize the arc first");
    require(!prof.s_infty.count(1), "1 must lie outside the vertical-difference set");

    pg::geometry go(f, 2 * s + 2);
    std::vector<pg::point> pts = arc_parabola_product(f, K, s);

    gf::elem m1 = 0, m2 = 0;
    if (s == 1) {
        // Degenerate reduced cap: the single point (0,0,0,0,1).
        pg::point e;
        e.len = 5;
        e.c[4] = 1;
        pts.push_back(e);
    } else {
        // Reduced two-slope cap of the next level down, three coordinates deep.
        // Its slope pair only needs the cap-validity constraints; the smallest
        // admissible pair also avoiding unit slope differences is preferred.
        try {
            pg::geometry g2(f, 2);
            std::tie(m1, m2) = arcs::choose_m1_m2(g2, prof, k);
        } catch (const error&) {
            m1 = 2;
            m2 = 3;
            while (m2 < q && (m2 == m1 || f.pow(static_cast<gf::elem>(m1 ^ m2), 3) == 1)) ++m2;
            require(m2 < q, "no admissible slope pair for the reduced two-slope cap");
        }
        pg::geometry gs(f, 2 * s - 1);
        cap star = two_slope_star(gs, s - 1, m1, m2);
        append_embedded(pts, star.pts, 3);
    }

    // Parabola branch through the sum point: (0,0,1,a_1,a_1^2,...).
    {
        pg::geometry gp(f, 2 * s);
        cap P = parabola_cap(gp, s);
        for (const auto& r : P.pts) {
            pg::point t;
            t.len = static_cast<std::uint8_t>(2 * s + 3);
            t.c[2] = 1;
            for (unsigned i = 1; i <= 2 * s; ++i) t.c[2 + i] = r.c[i];
            pts.push_back(t);
        }
    }

    std::uint64_t expect = (k + 1) * ipow(q, s) + 3 * geom_sum(q, 1, s - 1) - (2 * s + 2) + 5;
    cap C = make_cap(go, std::move(pts),
                     "EVEN_CASE2;s=" + std::to_string(s) + ";k=" + std::to_string(k));
    if (C.pts.size() != expect) throw error("internal: second even construction size mismatch");
    return {std::move(C), {}, m1, m2};
}

build_result build_even_case3(const gf::field_ctx& f, const plane_arc& K, unsigned s) {
    const unsigned q = f.q();
    const std::size_t k = K.size();
    require(s >= 1, "the third even construction requires s >= 1");
    arc_profile prof = checked_profile(f, K);
    require(prof.complete, "the arc must be complete");
    require(prof.beta == 1, "the arc must have a unique sum point");
    {
        std::vector<pg::point> inf;
        for (const auto& p : K.pts)
            if (p.c[0] == 0) inf.push_back(p);
        require(inf.size() == 2 && inf[0] == pg::make_point({0, 1, 0}) && inf[1] == pg::make_point({0, 0, 1}),
                "the infinite arc points must be (0,0,1) and (0,1,0)");
    }
    require(prof.sum_points.front() == pg::make_point({0, 1, 1}), "the sum point must sit at (0,1,1)");
    require(prof.p && (k - 2) * *prof.p < static_cast<std::size_t>(q - 1),
            "(k-2)p < q-1 is required");
    {
        const auto& s1 = prof.slopes(1);
        for (const auto& pt : K.pts) {
            if (pt.c[0] != 1) continue;
            bool on_parabola;
            if (pt.c[1] == 0) {
                on_parabola = (pt.c[2] == 0);
            } else {
                gf::elem ratio = f.mul(pt.c[2], f.inv(f.mul(pt.c[1], pt.c[1])));
                on_parabola = s1.count(ratio) > 0;
            }
            require(!on_parabola, "the arc must avoid every parabola scaled by a unit-slope difference");
        }
    }

    pg::geometry go(f, 2 * s + 2);
    std::vector<pg::point> pts = arc_parabola_product(f, K, s);
    for (unsigned j = 0; j < s; ++j) {
        std::vector<pg::point> lower = arc_parabola_product(f, K, j);
        for (const auto& p : lower) pts.push_back(pg::doubling_embed(p, s, j));
    }

    std::uint64_t expect = k * geom_sum(q, 0, s);
    cap C = make_cap(go, std::move(pts), "EVEN_CASE3;s=" + std::to_string(s) + ";k=" + std::to_string(k));
    if (C.pts.size() != expect) throw error("internal: third even construction size mismatch");
    return {std::move(C), {}, 0, 0};
}

namespace {

/// Doubled parabola block plus an embedded even construction: shared shape of
/// the odd-dimensional builders.
build_result finish_odd(const gf::field_ctx& f, build_result inner, unsigned s, const char* tag,
                        std::size_t k) {
    pg::geometry go(f, 2 * s + 3);
    pg::geometry g1(f, 1), gp(f, 2 * s + 2);
    cap base = k0_cap(g1);
    cap P = parabola_cap(gp, s + 1);
    cap block = product_cap(go, base, P);
    std::vector<pg::point> pts = block.pts;
    append_embedded(pts, inner.C.pts, 1);
    cap C = make_cap(go, std::move(pts),
                     std::string(tag) + ";s=" + std::to_string(s) + ";k=" + std::to_string(k));
    return {std::move(C), std::move(inner.extension_points), inner.m1, inner.m2};
}

}  // namespace

build_result build_odd_case1(const gf::field_ctx& f, const plane_arc& K, unsigned s) {
    const unsigned q = f.q();
    const std::size_t k = K.size();
    require(q > 8, "the first odd construction requires q > 8");
    require(k < q - 5, "the first odd construction requires k < q - 5");
    arc_profile prof = checked_profile(f, K);
    require(prof.complete, "the arc must be complete");
    for (const auto& pt : K.pts) require(pt.c[0] == 1, "the arc must be affine");
    require(!prof.s_infty.count(1), "1 must lie outside the vertical-difference set");
    for (const auto& pt : K.pts)
        require(pt.c[2] != f.mul(pt.c[1], pt.c[1]), "no arc point may lie on the squares diagonal");

    build_result inner = build_even_case1(f, K, s);
    if (!inner.extension_points.empty())
        throw error("internal: an affine complete arc leaves no uncovered slope");
    build_result r = finish_odd(f, std::move(inner), s, "ODD_CASE1", k);
    std::uint64_t expect = 2 * ipow(q, s + 1) + (k + 3) * ipow(q, s) + 3 * geom_sum(q, 1, s - 1) -
                           (2 * s + 3) + 4;
    if (r.C.pts.size() != expect) throw error("internal: first odd construction size mismatch");
    return r;
}

build_result build_odd_case3(const gf::field_ctx& f, const plane_arc& K, unsigned s) {
    const unsigned q = f.q();
    const std::size_t k = K.size();
    build_result inner = build_even_case3(f, K, s);
    build_result r = finish_odd(f, std::move(inner), s, "ODD_CASE3", k);
    std::uint64_t expect = 2 * ipow(q, s + 1) + k * geom_sum(q, 0, s);
    if (r.C.pts.size() != expect) throw error("internal: third odd construction size mismatch");
    return r;
}

}  // namespace capforge::caps
