#include <string>

#include "capforge/arcs.hpp"

namespace capforge::arcs {

namespace {

void require_plane(const pg::geometry& g) {
    if (g.N() != 2) throw bad_parameters("plane-arc operations require PG(2, q)");
}

}  // namespace

plane_arc construct_kw(const pg::geometry& g) {
    require_plane(g);
    const auto& f = g.field();
    if (f.h() % 2 != 0 || f.h() < 4)
        throw precondition_violated("the quartic arc family requires a square field of order >= 16");
    const unsigned q = f.q();
    const unsigned rq = 1u << (f.h() / 2);

    // Subfield elements in encoding order.
    std::vector<gf::elem> sub;
    for (unsigned a = 0; a < q; ++a)
        if (f.in_sqrt_subfield(static_cast<gf::elem>(a))) sub.push_back(static_cast<gf::elem>(a));

    // First subfield d whose Artin-Schreier roots fall outside the subfield.
    gf::elem w = 0;
    bool found = false;
    for (gf::elem d : sub) {
        auto root = f.solve_artin_schreier(d);  // subfield elements all have trace zero
        if (root && !f.in_sqrt_subfield(*root)) {
            w = *root;
            found = true;
            break;
        }
    }
    if (!found) throw no_valid_w("no subfield value has quadratic roots outside the subfield");

    const gf::elem w_rq1 = f.pow(w, rq - 1);
    const gf::elem w_rq = f.pow(w, rq);
    std::vector<pg::point> pts;
    pts.reserve(4 * (rq - 1));
    for (gf::elem alpha : sub) {
        if (alpha == 0) continue;
        gf::elem ia = f.inv(alpha);
        gf::elem iwa = f.inv(f.mul(w, alpha));
        pts.push_back(pg::make_point({1, ia, alpha}));
        pts.push_back(pg::make_point({1, iwa, f.mul(w, alpha)}));
        pts.push_back(pg::make_point({1, f.mul(w_rq1, ia), alpha}));
        pts.push_back(pg::make_point({1, iwa, f.mul(w_rq, alpha)}));
    }
    plane_arc K = make_plane_arc(g, std::move(pts));
    if (K.size() != 4 * (rq - 1)) throw error("internal: quartic arc family size mismatch");
    return K;
}

plane_arc construct_kw_prime(const pg::geometry& g) {
    require_plane(g);
    const auto& f = g.field();
    // q = 4^(2m+1) with m >= 1: h = 2(2m+1), so h in {6, 10} here.
    if (f.h() % 2 != 0 || (f.h() / 2) % 2 != 1 || f.h() < 6)
        throw precondition_violated("the twisted quartic family requires q = 4^(2m+1) with m >= 1");
    const unsigned q = f.q();
    const unsigned rq = 1u << (f.h() / 2);

    gf::elem w = f.antilog((q - 1) / 3);  // primitive cube root of unity
    if (static_cast<gf::elem>(f.mul(w, w) ^ w ^ 1) != 0)
        throw error("internal: cube root of unity fails its quadratic relation");
    const gf::elem w2 = f.mul(w, w);
    const gf::elem w_rq1 = f.pow(w, rq - 1);
    const gf::elem w_2rq = f.pow(w, 2 * rq);

    std::vector<pg::point> pts;
    pts.reserve(4 * (rq - 1));
    for (unsigned a = 1; a < q; ++a) {
        gf::elem alpha = static_cast<gf::elem>(a);
        if (!f.in_sqrt_subfield(alpha)) continue;
        gf::elem ia = f.inv(alpha);
        pts.push_back(pg::make_point({1, ia, alpha}));
        pts.push_back(pg::make_point({1, f.inv(f.mul(w, alpha)), f.mul(w, alpha)}));
        pts.push_back(pg::make_point({1, f.mul(w_rq1, ia), alpha}));
        pts.push_back(pg::make_point({1, f.inv(f.mul(w2, alpha)), f.mul(w_2rq, alpha)}));
    }
    plane_arc K = make_plane_arc(g, std::move(pts));
    if (K.size() != 4 * (rq - 1)) throw error("internal: twisted quartic family size mismatch");

    // Completeness is part of the contract at both supported sizes.
    arc_profile prof = profile(g, K);
    if (!prof.complete) throw error("internal: the twisted quartic arc is not complete");
    return K;
}

plane_arc construct_abatangelo(const pg::geometry& g, bool unchecked) {
    require_plane(g);
    const auto& f = g.field();
    const unsigned q = f.q();
    if (f.h() % 2 != 0) throw precondition_violated("the cubic-coset arc requires an even-degree field");
    if (f.h() < 6 && !unchecked)
        throw precondition_violated("the cubic-coset arc is only validated for q >= 64; pass unchecked for q = 16");
    if (f.h() < 4) throw precondition_violated("the cubic-coset arc requires q >= 16");

    const gf::elem ge = f.find_primitive_with_trace_one();
    std::vector<pg::point> pts;
    pts.reserve((q + 8) / 3);
    for (unsigned r = 0; 3 * r <= q - 4; ++r) {
        gf::elem x = f.antilog(3 * r);
        pts.push_back(pg::make_point({1, x, f.inv(x)}));
    }
    pts.push_back(pg::make_point({0, 1, f.inv(ge)}));
    pts.push_back(pg::make_point({0, 1, f.inv(f.mul(ge, ge))}));
    pts.push_back(pg::make_point({1, 0, 0}));

    plane_arc K = make_plane_arc(g, std::move(pts));
    if (K.size() != (q + 8) / 3) throw error("internal: cubic-coset arc size mismatch");

    if (!unchecked) {
        arc_profile prof = profile(g, K);
        if (!prof.complete) throw error("internal: the cubic-coset arc is not complete");
        if (prof.beta != 1 || prof.sum_points.front() != pg::make_point({0, 0, 1}))
            throw error("internal: the cubic-coset arc must have its unique sum point at (0,0,1)");
        if (!prof.p || *prof.p != 1)
            throw error("internal: the cubic-coset arc must have exactly one secant through the sum point");
    }
    return K;
}

}  // namespace capforge::arcs
