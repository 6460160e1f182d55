#ifndef CAPFORGE_GF2E_HPP
#define CAPFORGE_GF2E_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "capforge/errors.hpp"

namespace capforge::gf {

/// Field element encoding: the integer whose bit i is the coefficient of x^i
/// in the polynomial representative.  Valid values are 0 .. q-1.
using elem = std::uint16_t;

/// Characteristic-two field F_{2^h}, 2 <= h <= 10, with table-driven
/// arithmetic.  The reducing polynomial for each h is pinned (see
/// data/primitive_polynomials.txt); x itself is a primitive element, which is
/// verified when the tables are built.
class field_ctx {
public:
    /// Builds log/antilog tables.  Throws bad_parameters for h outside
    /// [2, 10]; throws precondition_violated if the pinned modulus fails its
    /// primitivity check (data corruption - cannot happen with the shipped
    /// table).
    explicit field_ctx(unsigned h);

    unsigned h() const { return h_; }
    unsigned q() const { return q_; }
    unsigned modulus() const { return modulus_; }

    /// The canonical primitive element x (encoding 2).
    elem primitive() const { return 2; }

    /// Addition = bitwise XOR (characteristic two).
    static elem add(elem a, elem b) { return a ^ b; }

    elem mul(elem a, elem b) const {
        if (a == 0 || b == 0) return 0;
        return antilog_[log_[a] + log_[b]];
    }

    /// Throws division_by_zero when a == 0.
    elem inv(elem a) const {
        if (a == 0) throw division_by_zero();
        return antilog_[q_ - 1 - log_[a]];
    }

    /// a^e for any integer exponent; 0^0 = 1, negative powers of zero throw
    /// division_by_zero.
    elem pow(elem a, long long e) const;

    /// The unique square root (the squaring map is a bijection).
    elem sqrt(elem a) const {
        if (a == 0) return 0;
        unsigned l = log_[a];
        return antilog_[(l % 2 ? l + q_ - 1 : l) / 2];
    }

    /// Absolute trace down to F_2; the result is 0 or 1.
    elem trace(elem a) const { return trace_[a]; }

    /// Smallest root w (by encoding; its bit 0 is clear) of w^2 + w = d when
    /// trace(d) = 0, otherwise std::nullopt.  The second root is w + 1.
    /// Never throws: an empty result is a valid answer.
    std::optional<elem> solve_artin_schreier(elem d) const;

    /// Smallest-encoded primitive element with trace one.  Throws not_found
    /// if none exists (cannot happen for the supported fields).
    elem find_primitive_with_trace_one() const;

    /// True when a generates the multiplicative group.
    bool is_primitive(elem a) const;

    /// True when a lies in the index-two subfield F_{sqrt(q)} (h even only).
    bool in_sqrt_subfield(elem a) const;

    /// Discrete log base x; undefined for 0 (throws division_by_zero).
    unsigned log(elem a) const {
        if (a == 0) throw division_by_zero();
        return log_[a];
    }

    /// x^i for 0 <= i (reduced mod q-1).
    elem antilog(unsigned i) const { return antilog_[i % (q_ - 1)]; }

private:
    unsigned h_, q_, modulus_;
    std::vector<elem> antilog_;       // x^i for i in [0, 2(q-1)); doubled to skip a mod
    std::vector<std::uint16_t> log_;  // log_[a] for a in [1, q)
    std::vector<std::uint8_t> trace_;
};

/// The pinned reducing polynomial for each supported h (bit encoding).
unsigned pinned_modulus(unsigned h);

}  // namespace capforge::gf

#endif  // CAPFORGE_GF2E_HPP
