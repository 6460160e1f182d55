#include <algorithm>
#include <string>

#include "capforge/arcs.hpp"
#include "capforge/bitvec.hpp"

namespace capforge::arcs {

namespace {

using pg::point;
using pg::projectivity;

plane_arc apply_to_arc(const pg::geometry& g, const projectivity& A, const plane_arc& K, bool integral_mode) {
    std::vector<point> img;
    img.reserve(K.pts.size());
    for (const auto& p : K.pts) img.push_back(pg::apply_projectivity(g, A, p, integral_mode));
    return make_plane_arc(g, std::move(img));
}

std::vector<point> infinite_points(const plane_arc& K) {
    std::vector<point> r;
    for (const auto& p : K.pts)
        if (p.c[0] == 0) r.push_back(p);
    return r;
}

projectivity identity() {
    projectivity I;
    I.m = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    return I;
}

/// Moves the unique sum point to (0,0,1):
///  - both infinite arc points of the form (0,1,*): already there (identity);
///  - infinite arc points {(0,0,1),(0,1,g)}: rows (1,0,0),(0,g+1,1),(0,g,1).
projectivity to_sumpoint_001(const pg::geometry& g, const plane_arc& K, const arc_profile& prof) {
    if (prof.beta != 1) throw hypothesis_violated("canonical sum-point position requires a unique sum point");
    if (!prof.complete) throw hypothesis_violated("canonical sum-point position requires a complete arc");
    auto inf = infinite_points(K);
    if (inf.size() != 2) throw hypothesis_violated("expected the infinite line to meet the arc in exactly two points");
    if (inf[0].c[1] == 1 && inf[1].c[1] == 1) return identity();
    // One of the two is (0,0,1).
    gf::elem gg = (inf[0] == pg::make_point({0, 0, 1})) ? inf[1].c[2] : inf[0].c[2];
    return pg::make_projectivity(g.field(),
                                 {1, 0, 0, 0, static_cast<gf::elem>(gg ^ 1), 1, 0, gg, 1});
}

/// Moves the arc so the infinite line meets it in (0,0,1) and (0,1,0), with
/// the sum point landing on (0,1,1).
projectivity to_sumpoint_011(const pg::geometry& g, const plane_arc& K, const arc_profile& prof) {
    if (prof.beta != 1) throw hypothesis_violated("canonical sum-point position requires a unique sum point");
    if (!prof.complete) throw hypothesis_violated("canonical sum-point position requires a complete arc");
    auto inf = infinite_points(K);
    if (inf.size() != 2) throw hypothesis_violated("expected the infinite line to meet the arc in exactly two points");
    const auto& f = g.field();
    if (inf[0].c[1] == 1 && inf[1].c[1] == 1) {
        // {(0,1,fv),(0,1,gv)} with fv < gv by encoding: send the first to
        // (0,0,1) and the second to (0,1,0).
        gf::elem fv = std::min(inf[0].c[2], inf[1].c[2]);
        gf::elem gv = std::max(inf[0].c[2], inf[1].c[2]);
        gf::elem s = f.inv(static_cast<gf::elem>(fv ^ gv));
        return pg::make_projectivity(f, {1, 0, 0,
                                         0, f.mul(fv, s), s,
                                         0, f.mul(gv, s), s});
    }
    gf::elem gg = (inf[0] == pg::make_point({0, 0, 1})) ? inf[1].c[2] : inf[0].c[2];
    // (x, y, z) -> (x, y, g y + z) fixes (0,0,1) and sends (0,1,g) to (0,1,0).
    return pg::make_projectivity(f, {1, 0, 0, 0, 1, 0, 0, gg, 1});
}

void check_postcondition(bool ok, const char* what) {
    if (!ok) throw error(std::string("internal postcondition failed: ") + what);
}

}  // namespace

normalization normalize_arc(const pg::geometry& g, const plane_arc& K, norm_target target) {
    const auto& f = g.field();
    const unsigned q = g.q();
    arc_profile prof = profile(g, K);

    switch (target) {
        case norm_target::sumpoint_001: {
            projectivity A = to_sumpoint_001(g, K, prof);
            plane_arc img = apply_to_arc(g, A, K, /*integral_mode=*/true);
            arc_profile p2 = profile(g, img);
            check_postcondition(p2.beta == 1 && p2.sum_points.front() == pg::make_point({0, 0, 1}),
                                "sum point at (0,0,1)");
            check_postcondition(p2.p == prof.p, "secant count through the sum point is preserved");
            return {A, std::move(img), true};
        }

        case norm_target::sumpoint_011: {
            projectivity A = to_sumpoint_011(g, K, prof);
            plane_arc img = apply_to_arc(g, A, K, /*integral_mode=*/true);
            arc_profile p2 = profile(g, img);
            auto inf = infinite_points(img);
            check_postcondition(inf.size() == 2 && inf[0] == pg::make_point({0, 1, 0}) &&
                                    inf[1] == pg::make_point({0, 0, 1}),
                                "infinite arc points are (0,0,1) and (0,1,0)");
            check_postcondition(p2.beta == 1 && p2.sum_points.front() == pg::make_point({0, 1, 1}),
                                "sum point at (0,1,1)");
            check_postcondition(p2.p == prof.p, "secant count through the sum point is preserved");
            return {A, std::move(img), true};
        }

        case norm_target::sinf_no_one: {
            projectivity A1 = to_sumpoint_001(g, K, prof);
            plane_arc k1 = apply_to_arc(g, A1, K, true);
            arc_profile p1 = profile(g, k1);
            gf::elem w = 0;
            for (unsigned c = 1; c < q; ++c) {
                if (!p1.s_infty.count(static_cast<gf::elem>(c))) {
                    w = static_cast<gf::elem>(c);
                    break;
                }
            }
            if (w == 0) throw search_exhausted("every unit is a vertical difference of the arc");
            projectivity D = pg::make_projectivity(f, {1, 0, 0, 0, 1, 0, 0, 0, f.inv(w)});
            projectivity A = pg::compose(f, D, A1);
            plane_arc img = apply_to_arc(g, D, k1, true);
            arc_profile p2 = profile(g, img);
            check_postcondition(!p2.s_infty.count(1), "1 outside the vertical-difference set");
            check_postcondition(p2.beta == 1 && p2.sum_points.front() == pg::make_point({0, 0, 1}),
                                "sum point stays at (0,0,1)");
            check_postcondition(p2.p == prof.p, "secant count through the sum point is preserved");
            return {A, std::move(img), true};
        }

        case norm_target::parabola_clear: {
            if (!prof.p) throw hypothesis_violated("canonical sum-point position requires a unique sum point");
            if ((K.size() - 2) * *prof.p >= static_cast<std::size_t>(q - 1))
                throw hypothesis_violated("(k-2)p < q-1 is required for the parabola-clearing scan");
            projectivity A1 = to_sumpoint_011(g, K, prof);
            plane_arc k1 = apply_to_arc(g, A1, K, true);
            arc_profile p1 = profile(g, k1);
            const auto& s1 = p1.slopes(1);
            auto clears = [&](const plane_arc& arc) {
                for (const auto& pt : arc.pts) {
                    if (pt.c[0] != 1) continue;
                    if (pt.c[1] == 0) {
                        if (pt.c[2] == 0) return false;  // (1,0,0) lies on every scaled parabola
                        continue;
                    }
                    gf::elem ratio = f.mul(pt.c[2], f.inv(f.mul(pt.c[1], pt.c[1])));
                    if (s1.count(ratio)) return false;
                }
                return true;
            };
            for (unsigned w = 1; w < q; ++w) {
                projectivity S = pg::make_projectivity(f, {1, 0, 0, static_cast<gf::elem>(w), 1, 0, 0, 0, 1});
                plane_arc img = apply_to_arc(g, S, k1, true);
                if (!clears(img)) continue;
                projectivity A = pg::compose(f, S, A1);
                arc_profile p2 = profile(g, img);
                check_postcondition(p2.beta == 1 && p2.sum_points.front() == pg::make_point({0, 1, 1}),
                                    "sum point stays at (0,1,1)");
                check_postcondition(p2.p == prof.p, "secant count through the sum point is preserved");
                check_postcondition(p2.slopes(1) == s1, "unit-slope difference set is invariant under the shear");
                return {A, std::move(img), true};
            }
            throw search_exhausted("no shear clears the arc off the scaled parabolas");
        }

        case norm_target::star: {
            if (!prof.complete) throw hypothesis_violated("the affine normal form requires a complete arc");
            if (K.size() >= static_cast<std::size_t>(q) - 5)
                throw hypothesis_violated("the affine normal form requires k < q - 5");

            projectivity A = identity();
            plane_arc cur = K;
            // (a) Move an external line to the infinite line if the arc meets it.
            if (!infinite_points(cur).empty()) {
                point ext;
                bool found = false;
                for (std::uint64_t r = 0; r < g.point_count() && !found; ++r) {
                    point dual = g.unrank(r);  // line {X : dual . X = 0}
                    bool hits = false;
                    for (const auto& pt : cur.pts) {
                        gf::elem s = 0;
                        for (unsigned i = 0; i < 3; ++i) s = static_cast<gf::elem>(s ^ f.mul(dual.c[i], pt.c[i]));
                        if (s == 0) {
                            hits = true;
                            break;
                        }
                    }
                    if (!hits) {
                        ext = dual;
                        found = true;
                    }
                }
                if (!found) throw search_exhausted("no external line exists");  // impossible for k < q - 5
                static const std::array<std::array<unsigned, 2>, 3> basis_pairs = {{{0, 1}, {0, 2}, {1, 2}}};
                projectivity M;
                bool built = false;
                for (const auto& bp : basis_pairs) {
                    projectivity cand;
                    cand.m = {ext.c[0], ext.c[1], ext.c[2], 0, 0, 0, 0, 0, 0};
                    cand.m[3 + bp[0]] = 1;
                    cand.m[6 + bp[1]] = 1;
                    if (pg::det(f, cand) != 0) {
                        M = cand;
                        built = true;
                        break;
                    }
                }
                check_postcondition(built, "external line extends to an invertible matrix");
                cur = apply_to_arc(g, M, cur, /*integral_mode=*/false);
                A = pg::compose(f, M, A);
            }

            // (b) Rescale so 1 is not a vertical difference.
            arc_profile pc = profile(g, cur);
            if (pc.s_infty.count(1)) {
                gf::elem w = 0;
                for (unsigned c = 1; c < q; ++c) {
                    if (!pc.s_infty.count(static_cast<gf::elem>(c))) {
                        w = static_cast<gf::elem>(c);
                        break;
                    }
                }
                if (w == 0) throw search_exhausted("every unit is a vertical difference of the arc");
                projectivity D = pg::make_projectivity(f, {1, 0, 0, 0, 1, 0, 0, 0, f.inv(w)});
                cur = apply_to_arc(g, D, cur, false);
                A = pg::compose(f, D, A);
            }

            // (c) Shear the x-axis unit point away if present (so the final
            // scaling step cannot be blocked by (1,0,0)).
            if (std::any_of(cur.pts.begin(), cur.pts.end(),
                            [](const point& pt) { return pt == pg::make_point({1, 0, 0}); })) {
                bitvec on_axis(q);
                for (const auto& pt : cur.pts)
                    if (pt.c[0] == 1 && pt.c[2] == 0) on_axis.mark(pt.c[1]);
                gf::elem t = 0;
                for (unsigned c = 1; c < q; ++c) {
                    if (!on_axis.test(c)) {
                        t = static_cast<gf::elem>(c);
                        break;
                    }
                }
                if (t == 0) throw search_exhausted("the whole x-axis lies on the arc");  // impossible
                projectivity S = pg::make_projectivity(f, {1, 0, 0, t, 1, 0, 0, 0, 1});
                cur = apply_to_arc(g, S, cur, false);
                A = pg::compose(f, S, A);
            }

            // (d) Scale x so no point lands on the squares diagonal.
            {
                gf::elem w = 0;
                for (unsigned c = 1; c < q && w == 0; ++c) {
                    bool good = true;
                    for (const auto& pt : cur.pts) {
                        gf::elem ya = f.mul(static_cast<gf::elem>(c), pt.c[1]);
                        if (pt.c[2] == f.mul(ya, ya)) {
                            good = false;
                            break;
                        }
                    }
                    if (good) w = static_cast<gf::elem>(c);
                }
                if (w == 0) throw search_exhausted("every scaling hits the squares diagonal");  // impossible
                projectivity D = pg::make_projectivity(f, {1, 0, 0, 0, w, 0, 0, 0, 1});
                cur = apply_to_arc(g, D, cur, false);
                A = pg::compose(f, D, A);
            }

            arc_profile p2 = profile(g, cur);
            check_postcondition(infinite_points(cur).empty(), "the arc is affine");
            check_postcondition(!p2.s_infty.count(1), "1 outside the vertical-difference set");
            for (const auto& pt : cur.pts)
                check_postcondition(pt.c[2] != f.mul(pt.c[1], pt.c[1]), "no point on the squares diagonal");
            check_postcondition(p2.complete, "completeness is preserved");
            bool integral = pg::is_integral_for(g, A, K.pts);
            return {A, std::move(cur), integral};
        }
    }
    throw bad_parameters("unknown normalization target");
}

std::pair<gf::elem, gf::elem> choose_m1_m2(const pg::geometry& g, const arc_profile& prof, std::size_t arc_size) {
    const auto& f = g.field();
    const unsigned q = g.q();
    if (!prof.affinely_complete)
        throw hypothesis_violated("slope-pair choice requires an affinely complete arc");
    if (!prof.z_infty_covered)
        throw hypothesis_violated("slope-pair choice requires (0,0,1) to be covered");
    if (arc_size >= static_cast<std::size_t>(q) - 5)
        throw hypothesis_violated("slope-pair choice requires k < q - 5");
    for (unsigned m1 = 2; m1 < q; ++m1) {
        if (prof.slopes(static_cast<gf::elem>(m1)).count(1)) continue;
        for (unsigned m2 = m1 + 1; m2 < q; ++m2) {
            if (prof.slopes(static_cast<gf::elem>(m2)).count(1)) continue;
            if (f.pow(static_cast<gf::elem>(m1 ^ m2), 3) == 1) continue;
            return {static_cast<gf::elem>(m1), static_cast<gf::elem>(m2)};
        }
    }
    throw not_found("no admissible slope pair exists for this arc");
}

}  // namespace capforge::arcs
