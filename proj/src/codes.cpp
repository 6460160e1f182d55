#include "capforge/codes.hpp"

#include "capforge/bitvec.hpp"

namespace capforge::codes {

linear_code_spec cap_to_code(const pg::geometry& g, const caps::cap& C) {
    if (C.N != g.N()) throw bad_parameters("cap dimension does not match the geometry");
    if (C.pts.size() <= static_cast<std::size_t>(g.N()) + 1)
        throw too_small("the code needs more columns than parity rows");
    linear_code_spec code;
    code.q = g.q();
    code.n = C.pts.size();
    code.r = g.N() + 1;
    code.columns.reserve(code.n);
    for (const auto& p : C.pts) code.columns.push_back(g.normalize(p));
    return code;
}

bool min_distance_at_least_4(const gf::field_ctx& f, const linear_code_spec& code) {
    if (code.r < 1 || code.r > 12) throw bad_parameters("unsupported redundancy");
    if (code.q != f.q()) throw bad_parameters("code field does not match the context");
    pg::geometry g(f, code.r - 1);
    bitvec member(g.point_count());
    for (const auto& c : code.columns) {
        if (c.len != code.r) throw bad_parameters("column height does not match the redundancy");
        std::uint64_t rank = g.rank(g.normalize(c));  // normalize() rejects zero columns
        if (member.test(rank)) return false;  // two proportional columns: a weight-2 word
        member.mark(rank);
    }
    // Three dependent columns lie on a projective line: walk every pair.
    for (std::size_t i = 0; i < code.n; ++i)
        for (std::size_t j = i + 1; j < code.n; ++j)
            for (unsigned lambda = 1; lambda < code.q; ++lambda) {
                pg::point t = g.normalize(pg::geometry::add(
                    code.columns[i], g.scalar_mul(static_cast<gf::elem>(lambda), code.columns[j])));
                if (member.test(g.rank(t))) return false;
            }
    return true;
}

bool covering_radius_is_2(const gf::field_ctx& f, const linear_code_spec& code) {
    if (code.q != f.q()) throw bad_parameters("code field does not match the context");
    const unsigned q = code.q;
    std::uint64_t syndromes = 1;
    for (unsigned i = 0; i < code.r; ++i) {
        syndromes *= q;
        if (syndromes > 10000000) throw too_large("syndrome space exceeds 10^7, refusing to enumerate");
    }

    // Index a column-height-r vector in base q, coordinate 0 least significant.
    auto index_of = [&](const pg::point& v) {
        std::uint64_t idx = 0;
        for (unsigned i = code.r; i-- > 0;) idx = idx * q + v.c[i];
        return idx;
    };

    bitvec weight1(syndromes), weight2(syndromes);
    weight1.mark(0);
    weight2.mark(0);
    std::vector<std::vector<pg::point>> scaled(code.n);
    for (std::size_t i = 0; i < code.n; ++i) {
        scaled[i].reserve(q - 1);
        for (unsigned lambda = 1; lambda < q; ++lambda) {
            pg::point v{};
            v.len = code.r;
            for (unsigned t = 0; t < code.r; ++t)
                v.c[t] = f.mul(static_cast<gf::elem>(lambda), code.columns[i].c[t]);
            weight1.mark(index_of(v));
            weight2.mark(index_of(v));
            scaled[i].push_back(v);
        }
    }
    for (std::size_t i = 0; i < code.n; ++i)
        for (std::size_t j = i + 1; j < code.n; ++j)
            for (const auto& a : scaled[i])
                for (const auto& b : scaled[j]) weight2.mark(index_of(pg::geometry::add(a, b)));

    if (weight2.count() != syndromes) return false;      // some syndrome needs weight >= 3
    return weight1.count() != syndromes;                 // radius exactly 2, not <= 1
}

}  // namespace capforge::codes
