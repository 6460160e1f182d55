#include <algorithm>
#include <unordered_map>

#include "capforge/caps.hpp"

namespace capforge::caps {

cap make_cap(const pg::geometry& g, std::vector<pg::point> pts, std::string provenance) {
    for (auto& p : pts) p = g.normalize(p);
    std::sort(pts.begin(), pts.end(),
              [&](const pg::point& a, const pg::point& b) { return g.rank(a) < g.rank(b); });
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i] == pts[i - 1]) throw bad_parameters("duplicate point in cap input");
    return cap{g.N(), std::move(pts), std::move(provenance)};
}

cap parabola_cap(const pg::geometry& g, unsigned j) {
    if (g.N() != 2 * j) throw bad_parameters("the parabola cap of order j lives in PG(2j, q)");
    const unsigned q = g.q();
    std::vector<pg::point> pts;
    std::uint64_t total = 1;
    for (unsigned t = 0; t < j; ++t) total *= q;
    pts.reserve(total);
    std::vector<unsigned> a(j, 0);
    for (std::uint64_t it = 0; it < total; ++it) {
        pg::point p;
        p.len = static_cast<std::uint8_t>(2 * j + 1);
        p.c[0] = 1;
        for (unsigned t = 0; t < j; ++t) {
            p.c[1 + 2 * t] = static_cast<gf::elem>(a[t]);
            p.c[2 + 2 * t] = g.field().mul(static_cast<gf::elem>(a[t]), static_cast<gf::elem>(a[t]));
        }
        pts.push_back(p);
        for (unsigned t = j; t-- > 0;) {
            if (++a[t] < q) break;
            a[t] = 0;
        }
    }
    return make_cap(g, std::move(pts), "PRODUCT;family=parabola;j=" + std::to_string(j));
}

cap k0_cap(const pg::geometry& g) {
    if (g.N() != 1) throw bad_parameters("the two-point base cap lives in PG(1, q)");
    return make_cap(g, {pg::make_point({1, 0}), pg::make_point({1, 1})}, "PRODUCT;family=base2");
}

cap product_cap(const pg::geometry& g_out, const cap& C, const cap& C2) {
    for (const auto& r : C2.pts)
        if (r.c[0] != 1) throw bad_parameters("the second product factor must be fully affine");
    unsigned n_out = C.N + C2.N;
    if (g_out.N() != n_out) throw bad_parameters("output geometry dimension mismatch in product");
    std::vector<pg::point> pts;
    pts.reserve(C.pts.size() * C2.pts.size());
    for (const auto& p : C.pts) {
        for (const auto& r : C2.pts) {
            pg::point t;
            t.len = static_cast<std::uint8_t>(n_out + 1);
            for (unsigned i = 0; i <= C.N; ++i) t.c[i] = p.c[i];
            for (unsigned i = 1; i <= C2.N; ++i) t.c[C.N + i] = r.c[i];
            pts.push_back(t);
        }
    }
    return make_cap(g_out, std::move(pts),
                    "PRODUCT;left=" + std::to_string(C.pts.size()) + ";right=" + std::to_string(C2.pts.size()));
}

namespace {

void check_slope_pair(const gf::field_ctx& f, gf::elem m1, gf::elem m2) {
    if (m1 < 2 || m2 < 2) throw bad_parameters("slope parameters must avoid 0 and 1");
    if (m1 == m2) throw bad_parameters("slope parameters must be distinct");
    if (f.pow(static_cast<gf::elem>(m1 ^ m2), 3) == 1)
        throw bad_parameters("the slope difference must not be a cube root of one");
}

/// Recursive interior of the two-slope cap, as raw points of PG(2s+1, q).
std::vector<pg::point> two_slope_points(const gf::field_ctx& f, unsigned s, gf::elem m1, gf::elem m2) {
    // Base: the two-point cap {(1,0), (0,1)} of PG(1, q); (1,0) is the
    // bottom-level unit point U.
    std::vector<pg::point> pts = {pg::make_point({1, 0}), pg::make_point({0, 1})};
    const unsigned q = f.q();
    for (unsigned level = 1; level <= s; ++level) {
        std::vector<pg::point> next;
        unsigned len = 2 * level + 2;
        std::uint64_t tuples = 1;
        for (unsigned t = 0; t < level; ++t) tuples *= q;
        // Two slope branches and the parabola branch, nonzero tuples only.
        std::vector<unsigned> a(level, 0);
        for (std::uint64_t it = 0; it < tuples; ++it) {
            bool nonzero = false;
            for (unsigned v : a) nonzero = nonzero || (v != 0);
            if (nonzero) {
                for (int branch = 0; branch < 3; ++branch) {
                    pg::point p;
                    p.len = static_cast<std::uint8_t>(len);
                    if (branch < 2) {
                        p.c[0] = 1;
                        p.c[1] = branch == 0 ? m1 : m2;
                    } else {
                        p.c[0] = 0;
                        p.c[1] = 1;
                    }
                    for (unsigned t = 0; t < level; ++t) {
                        p.c[2 + 2 * t] = static_cast<gf::elem>(a[t]);
                        p.c[3 + 2 * t] = f.mul(static_cast<gf::elem>(a[t]), static_cast<gf::elem>(a[t]));
                    }
                    next.push_back(p);
                }
            }
            for (unsigned t = level; t-- > 0;) {
                if (++a[t] < q) break;
                a[t] = 0;
            }
        }
        // The previous level embedded two coordinates deeper, then the unit point.
        for (const auto& p : pts) next.push_back(pg::embed_leading_zeros(p, 2));
        pg::point u;
        u.len = static_cast<std::uint8_t>(len);
        u.c[0] = 1;
        next.push_back(u);
        pts = std::move(next);
    }
    return pts;
}

}  // namespace

cap two_slope_cap(const pg::geometry& g, unsigned s, gf::elem m1, gf::elem m2) {
    const auto& f = g.field();
    if (f.q() <= 4) throw bad_parameters("the two-slope cap requires q > 4");
    if (s < 1 || g.N() != 2 * s + 1) throw bad_parameters("the two-slope cap of order s lives in PG(2s+1, q)");
    check_slope_pair(f, m1, m2);
    auto pts = two_slope_points(f, s, m1, m2);
    cap C = make_cap(g, std::move(pts),
                     "TWO_SLOPE;s=" + std::to_string(s) + ";m1=" + std::to_string(m1) + ";m2=" + std::to_string(m2));
    std::uint64_t expect = 2;
    for (unsigned level = 1; level <= s; ++level) {
        std::uint64_t ql = 1;
        for (unsigned t = 0; t < level; ++t) ql *= f.q();
        expect += 3 * (ql - 1) + 1;
    }
    if (C.pts.size() != expect) throw error("internal: two-slope cap size mismatch");
    return C;
}

cap two_slope_star(const pg::geometry& g, unsigned s, gf::elem m1, gf::elem m2) {
    cap C = two_slope_cap(g, s, m1, m2);
    pg::point u;
    u.len = static_cast<std::uint8_t>(2 * s + 2);
    u.c[0] = 1;
    auto it = std::find(C.pts.begin(), C.pts.end(), u);
    if (it == C.pts.end()) throw error("internal: unit point missing from the two-slope cap");
    C.pts.erase(it);
    C.provenance = "TWO_SLOPE;star=1;s=" + std::to_string(s) + ";m1=" + std::to_string(m1) +
                   ";m2=" + std::to_string(m2);
    return C;
}

cap cartesian_parabola_cap(const pg::geometry& g, unsigned i, gf::elem h1, gf::elem h2) {
    if (h1 == h2) throw bad_parameters("the cartesian cap needs two distinct levels");
    if (g.N() != 2 * i + 1) throw bad_parameters("the cartesian cap of order i lives in PG(2i+1, q)");
    pg::geometry g1(g.field(), 1);
    cap levels = make_cap(g1, {pg::make_point({1, h1}), pg::make_point({1, h2})}, "PRODUCT;family=levels");
    pg::geometry gp(g.field(), 2 * i);
    cap par = parabola_cap(gp, i);
    cap C = product_cap(g, levels, par);
    C.provenance = "PRODUCT;family=cartesian;i=" + std::to_string(i) + ";h1=" + std::to_string(h1) +
                   ";h2=" + std::to_string(h2);
    return C;
}

unsigned secants_through_external(const pg::geometry& g, const std::vector<pg::point>& pts, const pg::point& P) {
    pg::point nP = g.normalize(P);
    const unsigned q = g.q();
    std::unordered_map<std::uint64_t, unsigned> buckets;
    buckets.reserve(pts.size() * 2);
    for (const auto& A : pts) {
        pg::point nA = g.normalize(A);
        if (nA == nP) throw bad_parameters("secant count requires a point outside the set");
        // Canonical key of the line through P and A: the smallest rank among
        // the q points of the line other than P.
        std::uint64_t key = g.rank(nA);
        for (unsigned mu = 1; mu < q; ++mu) {
            std::uint64_t r =
                g.rank(g.normalize(pg::geometry::add(nA, g.scalar_mul(static_cast<gf::elem>(mu), nP))));
            key = std::min(key, r);
        }
        ++buckets[key];
    }
    unsigned secants = 0;
    for (const auto& [key, cnt] : buckets) secants += cnt * (cnt - 1) / 2;
    return secants;
}

}  // namespace capforge::caps
