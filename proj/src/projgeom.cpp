#include "capforge/projgeom.hpp"

#include <algorithm>
#include <string>

namespace capforge::pg {

point make_point(std::initializer_list<unsigned> coords) {
    point p;
    p.len = static_cast<std::uint8_t>(coords.size());
    unsigned i = 0;
    for (unsigned v : coords) p.c[i++] = static_cast<gf::elem>(v);
    return p;
}

point make_point(const std::vector<unsigned>& coords) {
    point p;
    p.len = static_cast<std::uint8_t>(coords.size());
    for (unsigned i = 0; i < coords.size(); ++i) p.c[i] = static_cast<gf::elem>(coords[i]);
    return p;
}

geometry::geometry(const gf::field_ctx& f, unsigned N) : f_(&f), N_(N) {
    if (N < 1 || N + 1 > kMaxCoords) throw bad_parameters("ambient dimension N must be in [1, 11], got " + std::to_string(N));
    powq_[0] = 1;
    for (unsigned j = 1; j <= N + 1; ++j) {
        if (powq_[j - 1] > (std::uint64_t{1} << 62) / f.q())
            throw bad_parameters("point count of PG(" + std::to_string(N) + ", " +
                                 std::to_string(f.q()) + ") overflows the rank type");
        powq_[j] = powq_[j - 1] * f.q();
    }
    // offset_[lead] = number of points whose leading one sits before position lead
    //              = sum_{j < lead} q^(N - j).
    offset_[0] = 0;
    for (unsigned lead = 1; lead <= N + 1; ++lead) offset_[lead] = offset_[lead - 1] + powq_[N - (lead - 1)];
    n_points_ = offset_[N + 1];  // = (q^(N+1) - 1) / (q - 1)
}

point geometry::normalize(const point& p) const {
    unsigned lead = p.len;
    for (unsigned i = 0; i < p.len; ++i) {
        if (p.c[i] != 0) {
            lead = i;
            break;
        }
    }
    if (lead == p.len) throw zero_vector();
    point r = p;
    if (p.c[lead] != 1) {
        gf::elem s = f_->inv(p.c[lead]);
        r.c[lead] = 1;
        for (unsigned i = lead + 1; i < p.len; ++i) r.c[i] = f_->mul(s, p.c[i]);
    }
    return r;
}

point geometry::add(const point& a, const point& b) {
    point r = a;
    for (unsigned i = 0; i < a.len; ++i) r.c[i] = static_cast<gf::elem>(a.c[i] ^ b.c[i]);
    return r;
}

point geometry::scalar_mul(gf::elem lambda, const point& p) const {
    point r = p;
    for (unsigned i = 0; i < p.len; ++i) r.c[i] = f_->mul(lambda, p.c[i]);
    return r;
}

std::uint64_t geometry::rank(const point& p) const {
    unsigned lead = 0;
    while (lead < p.len && p.c[lead] == 0) ++lead;
    std::uint64_t r = offset_[lead];
    for (unsigned j = lead + 1; j < p.len; ++j) r += powq_[p.len - 1 - j] * p.c[j];
    return r;
}

point geometry::unrank(std::uint64_t r) const {
    unsigned lead = 0;
    while (lead + 1 <= N_ + 1 && offset_[lead + 1] <= r) ++lead;
    std::uint64_t rem = r - offset_[lead];
    point p;
    p.len = static_cast<std::uint8_t>(N_ + 1);
    p.c[lead] = 1;
    for (unsigned j = N_; j > lead; --j) {
        p.c[j] = static_cast<gf::elem>(rem % q());
        rem /= q();
    }
    return p;
}

bool geometry::collinear(const point& a, const point& b, const point& c) const {
    point na = normalize(a), nb = normalize(b), nc = normalize(c);
    if (na == nb || na == nc || nb == nc) throw duplicate_point("collinearity test requires three distinct points");
    // Gaussian elimination on the 3 x (N+1) coordinate matrix; collinear
    // exactly when the rank is at most 2.
    std::array<point, 3> row = {na, nb, nc};
    unsigned r = 0;
    for (unsigned col = 0; col < na.len && r < 3; ++col) {
        unsigned piv = r;
        while (piv < 3 && row[piv].c[col] == 0) ++piv;
        if (piv == 3) continue;
        std::swap(row[r], row[piv]);
        gf::elem s = f_->inv(row[r].c[col]);
        for (unsigned j = col; j < na.len; ++j) row[r].c[j] = f_->mul(s, row[r].c[j]);
        for (unsigned i = r + 1; i < 3; ++i) {
            gf::elem v = row[i].c[col];
            if (v == 0) continue;
            for (unsigned j = col; j < na.len; ++j)
                row[i].c[j] = static_cast<gf::elem>(row[i].c[j] ^ f_->mul(v, row[r].c[j]));
        }
        ++r;
    }
    return r <= 2;
}

std::vector<point> geometry::line_through(const point& p1, const point& p2) const {
    point a = normalize(p1), b = normalize(p2);
    if (a == b) throw duplicate_point("line requires two distinct points");
    std::vector<point> line;
    line.reserve(q() + 1);
    line.push_back(a);
    line.push_back(b);
    for (unsigned lambda = 1; lambda < q(); ++lambda)
        line.push_back(normalize(add(a, scalar_mul(static_cast<gf::elem>(lambda), b))));
    return line;
}

bool subspace::contains(const point& p) const {
    if (kind == kind_t::leading_zeros) {
        for (unsigned i = 0; i < a && i < p.len; ++i)
            if (p.c[i] != 0) return false;
        return true;
    }
    // doubled: in PG(2s+2, q), the first 2s-2j-1 coordinates vanish and the
    // next two are equal.
    unsigned s = a, j = b;
    unsigned zeros = 2 * s - 2 * j - 1;
    for (unsigned i = 0; i < zeros; ++i)
        if (p.c[i] != 0) return false;
    return p.c[zeros] == p.c[zeros + 1];
}

point embed_leading_zeros(const point& p, unsigned zeros) {
    if (p.len + zeros > kMaxCoords) throw bad_parameters("embedding exceeds the supported coordinate count");
    point r;
    r.len = static_cast<std::uint8_t>(p.len + zeros);
    for (unsigned i = 0; i < p.len; ++i) r.c[zeros + i] = p.c[i];
    return r;
}

point doubling_embed(const point& p, unsigned s, unsigned j) {
    if (j >= s || p.len != 2 * j + 3) throw bad_parameters("doubling embed requires j < s and an input from PG(2j+2, q)");
    unsigned zeros = 2 * s - 2 * j - 1;
    point r;
    r.len = static_cast<std::uint8_t>(2 * s + 3);
    r.c[zeros] = p.c[0];
    r.c[zeros + 1] = p.c[0];
    for (unsigned i = 1; i < p.len; ++i) r.c[zeros + 1 + i] = p.c[i];
    return r;
}

projectivity make_projectivity(const gf::field_ctx& f, const std::array<gf::elem, 9>& m) {
    projectivity A{m};
    if (det(f, A) == 0) throw bad_parameters("projectivity matrix must be invertible");
    return A;
}

gf::elem det(const gf::field_ctx& f, const projectivity& A) {
    const auto& m = A.m;
    // Characteristic two: the cofactor expansion has no signs.
    gf::elem d = 0;
    d = static_cast<gf::elem>(d ^ f.mul(m[0], static_cast<gf::elem>(f.mul(m[4], m[8]) ^ f.mul(m[5], m[7]))));
    d = static_cast<gf::elem>(d ^ f.mul(m[1], static_cast<gf::elem>(f.mul(m[3], m[8]) ^ f.mul(m[5], m[6]))));
    d = static_cast<gf::elem>(d ^ f.mul(m[2], static_cast<gf::elem>(f.mul(m[3], m[7]) ^ f.mul(m[4], m[6]))));
    return d;
}

projectivity compose(const gf::field_ctx& f, const projectivity& A, const projectivity& B) {
    projectivity C;
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) {
            gf::elem s = 0;
            for (unsigned k = 0; k < 3; ++k)
                s = static_cast<gf::elem>(s ^ f.mul(A.m[3 * i + k], B.m[3 * k + j]));
            C.m[3 * i + j] = s;
        }
    return C;
}

projectivity inverse(const gf::field_ctx& f, const projectivity& A) {
    const auto& m = A.m;
    gf::elem d = det(f, A);
    if (d == 0) throw bad_parameters("cannot invert a singular matrix");
    gf::elem di = f.inv(d);
    projectivity R;
    // Adjugate (cofactors equal minors in characteristic two), transposed.
    auto minor = [&](unsigned r0, unsigned r1, unsigned c0, unsigned c1) {
        return static_cast<gf::elem>(f.mul(m[3 * r0 + c0], m[3 * r1 + c1]) ^ f.mul(m[3 * r0 + c1], m[3 * r1 + c0]));
    };
    R.m[0] = f.mul(di, minor(1, 2, 1, 2));
    R.m[1] = f.mul(di, minor(0, 2, 1, 2));
    R.m[2] = f.mul(di, minor(0, 1, 1, 2));
    R.m[3] = f.mul(di, minor(1, 2, 0, 2));
    R.m[4] = f.mul(di, minor(0, 2, 0, 2));
    R.m[5] = f.mul(di, minor(0, 1, 0, 2));
    R.m[6] = f.mul(di, minor(1, 2, 0, 1));
    R.m[7] = f.mul(di, minor(0, 2, 0, 1));
    R.m[8] = f.mul(di, minor(0, 1, 0, 1));
    return R;
}

point apply_projectivity(const geometry& g, const projectivity& A, const point& p, bool integral_mode) {
    if (p.len != 3) throw bad_parameters("plane projectivities act on PG(2, q) points only");
    const auto& f = g.field();
    point img;
    img.len = 3;
    for (unsigned i = 0; i < 3; ++i) {
        gf::elem s = 0;
        for (unsigned k = 0; k < 3; ++k) s = static_cast<gf::elem>(s ^ f.mul(A.m[3 * i + k], p.c[k]));
        img.c[i] = s;
    }
    if (integral_mode) {
        unsigned lead = 0;
        while (lead < 3 && img.c[lead] == 0) ++lead;
        if (lead == 3) throw zero_vector();
        if (img.c[lead] != 1)
            throw integrality_violated("projectivity image of a normalized point is not normalized");
        return img;
    }
    return g.normalize(img);
}

bool is_integral_for(const geometry& g, const projectivity& A, const std::vector<point>& pts) {
    for (const point& p : pts) {
        try {
            apply_projectivity(g, A, g.normalize(p), /*integral_mode=*/true);
        } catch (const integrality_violated&) {
            return false;
        }
    }
    return true;
}

}  // namespace capforge::pg
