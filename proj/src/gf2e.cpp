#include "capforge/gf2e.hpp"

#include <array>
#include <numeric>

namespace capforge::gf {

namespace {

// Bit-encoded reducing polynomials, index = h.  Each is primitive, so x
// generates the multiplicative group; this is re-verified on construction.
// Mirrored in data/primitive_polynomials.txt (version 1).
constexpr std::array<unsigned, 11> kModuli = {0,     0,     0x7,   0xB,  0x13, 0x25,
                                              0x5B,  0x83,  0x11D, 0x211, 0x46F};

}  // namespace

unsigned pinned_modulus(unsigned h) {
    if (h < 2 || h > 10) throw bad_parameters("field degree h must be in [2, 10], got " + std::to_string(h));
    return kModuli[h];
}

field_ctx::field_ctx(unsigned h)
    : h_(h), q_(1u << h), modulus_(pinned_modulus(h)) {
    antilog_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, 0);
    trace_.assign(q_, 0);

    // Powers of x with polynomial reduction.
    unsigned acc = 1;
    for (unsigned i = 0; i < q_ - 1; ++i) {
        antilog_[i] = static_cast<elem>(acc);
        antilog_[i + (q_ - 1)] = static_cast<elem>(acc);
        if (log_[acc] != 0 && acc != 1) {
            throw precondition_violated("pinned modulus for h=" + std::to_string(h) + " is not primitive");
        }
        log_[acc] = static_cast<std::uint16_t>(i);
        acc <<= 1;
        if (acc & q_) acc ^= modulus_;
    }
    if (acc != 1) throw precondition_violated("pinned modulus for h=" + std::to_string(h) + " is not primitive");

    // Absolute trace via repeated squaring; each orbit sums the Frobenius images.
    for (unsigned a = 0; a < q_; ++a) {
        unsigned t = 0, x = a;
        for (unsigned i = 0; i < h_; ++i) {
            t ^= x;
            x = (x == 0) ? 0 : antilog_[2 * log_[x] % (q_ - 1)];
        }
        trace_[a] = static_cast<std::uint8_t>(t);
    }
}

elem field_ctx::pow(elem a, long long e) const {
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;
        throw division_by_zero();
    }
    const long long order = q_ - 1;
    long long r = (static_cast<long long>(log_[a]) * (e % order)) % order;
    if (r < 0) r += order;
    return antilog_[static_cast<unsigned>(r)];
}

std::optional<elem> field_ctx::solve_artin_schreier(elem d) const {
    if (trace_[d] != 0) return std::nullopt;
    // q <= 1024: a direct scan in encoding order returns the smallest root
    // (whose bit 0 is clear, the other root being w + 1).
    for (unsigned w = 0; w < q_; w += 2) {
        elem ww = mul(static_cast<elem>(w), static_cast<elem>(w));
        if (static_cast<elem>(ww ^ w) == d) return static_cast<elem>(w);
    }
    for (unsigned w = 1; w < q_; w += 2) {
        elem ww = mul(static_cast<elem>(w), static_cast<elem>(w));
        if (static_cast<elem>(ww ^ w) == d) return static_cast<elem>(w);
    }
    return std::nullopt;  // unreachable for trace-zero d
}

elem field_ctx::find_primitive_with_trace_one() const {
    for (unsigned a = 2; a < q_; ++a) {
        if (trace_[a] == 1 && is_primitive(static_cast<elem>(a))) return static_cast<elem>(a);
    }
    throw not_found("no primitive element of trace one in F_" + std::to_string(q_));
}

bool field_ctx::is_primitive(elem a) const {
    if (a == 0 || a == 1) return false;
    return std::gcd<unsigned, unsigned>(log_[a], q_ - 1) == 1;
}

bool field_ctx::in_sqrt_subfield(elem a) const {
    if (h_ % 2 != 0) throw bad_parameters("index-two subfield requires even h, got h=" + std::to_string(h_));
    if (a == 0) return true;
    // a is in F_{sqrt(q)} exactly when a^sqrt(q) = a.
    unsigned rq = 1u << (h_ / 2);
    return pow(a, rq) == a;
}

}  // namespace capforge::gf
