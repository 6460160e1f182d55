#include <string>

#include "capforge/caps.hpp"

namespace capforge::caps {

namespace {

using u128 = unsigned __int128;

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    return std::string(s.rbegin(), s.rend());
}

u128 upow(u128 base, unsigned e) {
    u128 r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

/// q^lo + q^(lo+1) + ... + q^hi; zero when the range is empty.
u128 geom_range(u128 q, unsigned lo, unsigned hi) {
    if (hi + 1 == 0 || hi < lo) return 0;
    u128 r = 0;
    for (unsigned i = lo; i <= hi; ++i) r += upow(q, i);
    return r;
}

u128 exact_div(u128 v, unsigned d) {
    if (v % d != 0) throw error("internal: bound formula expected exact division");
    return v / d;
}

// Smallest known complete plane-arc sizes and sum-point secant counts,
// indexed by log2(q) = 3..15.
constexpr unsigned kDefaultH_lo = 3, kDefaultH_hi = 15;
constexpr unsigned kT2[] = {6, 9, 14, 22, 34, 55, 86, 124, 201, 307, 461, 665, 1026};
constexpr unsigned kT2A[] = {6, 9, 14, 22, 32, 55, 86, 124, 201, 307, 461, 665, 1024};
constexpr unsigned kT2S[] = {6, 9, 14, 22, 34, 55, 86, 124, 201, 307, 461, 665, 1026};
constexpr unsigned kPbar[] = {1, 1, 1, 1, 1, 2, 3, 1, 4, 5, 6, 11, 1};

}  // namespace

bounds_table bounds_report(unsigned N, unsigned q, const bounds_inputs& inputs) {
    if (N < 4) throw bad_parameters("the size-bound table requires dimension N >= 4");
    if (q < 4 || (q & (q - 1)) != 0) throw bad_parameters("q must be a power of two, q >= 4");
    unsigned h = 0;
    for (unsigned t = q; t > 1; t >>= 1) ++h;

    bounds_table tab;
    tab.N = N;
    tab.q = q;

    const bool have_defaults = (h >= kDefaultH_lo && h <= kDefaultH_hi);
    auto pick = [&](const std::optional<unsigned>& given, const unsigned* table,
                    const char* what) -> unsigned {
        if (given) return *given;
        if (!have_defaults)
            throw bad_parameters(std::string("no pinned default for ") + what +
                                 " at this q; supply it explicitly");
        return table[h - kDefaultH_lo];
    };
    tab.t2 = pick(inputs.t2, kT2, "the smallest complete arc size");
    tab.t2a = pick(inputs.t2a, kT2A, "the smallest affinely complete arc size");
    tab.t2s = pick(inputs.t2s, kT2S, "the smallest unique-sum-point arc size");
    tab.t2splus = pick(inputs.t2splus, kT2S, "the smallest unique-sum-point arc size with few secants");
    tab.p = pick(inputs.p, kPbar, "the sum-point secant count");

    const bool even_N = (N % 2 == 0);
    const u128 Q = q;
    const unsigned m = even_N ? (N - 2) / 2 : (N - 3) / 2;
    const u128 s_Nq = 3 * geom_range(Q, 1, m) + 2;
    const bool splus_ok = tab.t2splus >= 2 && static_cast<u128>(tab.t2splus - 2) * tab.p < Q - 1;
    const bool square = (h % 2 == 0);

    auto row = [&](std::string name, bool applicable, std::string condition, u128 value) {
        bound_row r;
        r.name = std::move(name);
        r.applicable = applicable;
        r.condition = std::move(condition);
        if (applicable) r.value = u128_to_string(value);
        tab.rows.push_back(std::move(r));
    };

    if (even_N) {
        u128 head = upow(Q, (N - 2) / 2);
        u128 tail = 3 * geom_range(Q, 1, (N - 4) / 2);
        row("from_complete_arc", q > 8, "N even, q > 8", (u128)(tab.t2 + 3) * head + tail - N + 3);
        row("from_affine_arc", q > 8, "N even, q > 8", (u128)(tab.t2a + 3) * head + tail - N + 5);
        row("from_sum_point_arc", q > 8, "N even, q > 8", (u128)(tab.t2s + 1) * head + tail - N + 5);
        row("recursive_product", splus_ok, "N even; (t2splus-2)*p < q-1", (u128)tab.t2splus * geom_range(Q, 0, (N - 2) / 2));
        row("arc_power_plus_tail", q > 8, "q > 8", (u128)tab.t2 * head + s_Nq - N + 1);
    } else {
        u128 lead = 2 * upow(Q, (N - 1) / 2);
        u128 head = upow(Q, (N - 3) / 2);
        u128 tail = 3 * geom_range(Q, 1, N >= 5 ? (N - 5) / 2 : 0);
        row("from_complete_arc", q > 8, "N odd, q > 8", lead + (u128)(tab.t2 + 3) * head + tail - N + 4);
        row("recursive_product", splus_ok, "N odd; (t2splus-2)*p < q-1", lead + (u128)tab.t2splus * geom_range(Q, 0, (N - 3) / 2));
        row("arc_power_plus_tail", q > 8, "q > 8", lead + (u128)tab.t2 * head + s_Nq - N + 2);
    }

    if (even_N) {
        row("power_plus_tail", true, "", upow(Q, N / 2) + s_Nq);
        row("half_power_plus_tail", q >= 32, "q >= 32", exact_div(upow(Q, N / 2), 2) + s_Nq);
        row("third_power_mixed", q >= 256 && square, "q >= 256 square, N even",
            q >= 256 && square ? exact_div(upow(Q, N / 2) + 5 * upow(Q, (N - 2) / 2), 3) + s_Nq - 2 : 0);
        row("half_power_short_tail", q >= 32, "q >= 32", exact_div(upow(Q, N / 2), 2) + exact_div(5 * s_Nq + 2, 6));
        row("third_power_plus_tail", q >= 64 && square, "q >= 64 square",
            q >= 64 && square ? exact_div(upow(Q, N / 2) + 2, 3) + s_Nq : 0);
    } else {
        u128 half_head = upow(Q, (N - 1) / 2);
        row("power_plus_tail", true, "", 3 * half_head + s_Nq);
        row("half_power_plus_tail", q >= 32, "q >= 32", 2 * half_head + exact_div(half_head, 2) + s_Nq);
        row("third_power_mixed", false, "N even only", 0);
        row("half_power_short_tail", q >= 32, "q >= 32", 2 * half_head + exact_div(half_head, 2) + exact_div(5 * s_Nq + 2, 6));
        row("third_power_plus_tail", q >= 64 && square, "q >= 64 square",
            q >= 64 && square ? exact_div(7 * half_head + 2, 3) + s_Nq : 0);
    }

    {
        bool in_range = (h >= kDefaultH_lo && h <= kDefaultH_hi);
        u128 v = 0;
        if (in_range) {
            u128 tq = kT2[h - kDefaultH_lo];
            v = even_N ? tq * geom_range(Q, 0, (N - 2) / 2)
                       : 2 * upow(Q, (N - 1) / 2) + tq * geom_range(Q, 0, (N - 3) / 2);
        }
        row("record_arc_estimate", in_range, "8 <= q <= 32768", v);
    }

    return tab;
}

}  // namespace capforge::caps
