#ifndef CAPFORGE_BITVEC_HPP
#define CAPFORGE_BITVEC_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace capforge {

/// Dense bitset indexed by point rank.  Marking is idempotent, so coverage
/// accumulation can be split into independent chunks and merged with
/// bitwise OR without affecting the result.
class bitvec {
public:
    bitvec() = default;
    explicit bitvec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    void mark(std::size_t i) { w_[i >> 6] |= 1ULL << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }
    std::size_t size() const { return n_; }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    /// Merge another accumulation of the same length into this one.
    void merge(const bitvec& other) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= other.w_[i];
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace capforge

#endif  // CAPFORGE_BITVEC_HPP
