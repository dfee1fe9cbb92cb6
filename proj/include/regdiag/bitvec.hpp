#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace regdiag {

// Fixed-size dynamic bitset. std::vector<bool> hides the word layout and
// bitset<N> needs a compile-time size, so relations and fibers use this.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n, bool fill = false)
        : size_(n), words_((n + 63) / 64, fill ? ~0ull : 0ull) {
        trim();
    }

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool v = true) {
        if (v)
            words_[i >> 6] |= (1ull << (i & 63));
        else
            words_[i >> 6] &= ~(1ull << (i & 63));
    }

    std::size_t count() const;
    bool any() const;
    bool none() const { return !any(); }

    BitVec& operator&=(const BitVec& o);
    BitVec& operator|=(const BitVec& o);
    // Set difference: keep bits of *this not in o.
    BitVec& subtract(const BitVec& o);

    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

    bool operator==(const BitVec& o) const {
        return size_ == o.size_ && words_ == o.words_;
    }
    bool operator!=(const BitVec& o) const { return !(*this == o); }

    // True when every set bit of *this is set in o. Sizes must agree.
    bool subset_of(const BitVec& o) const;

    // Calls fn(i) for every set bit in ascending order.
    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
                fn(w * 64 + b);
                bits &= bits - 1;
            }
        }
    }

    std::size_t hash() const;
    // Comparison giving a total order (size, then words); used for
    // deterministic map keys.
    bool operator<(const BitVec& o) const;

    std::string to_string() const;

private:
    void trim() {
        if (size_ & 63) words_.back() &= (1ull << (size_ & 63)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitVecHash {
    std::size_t operator()(const BitVec& v) const { return v.hash(); }
};

} // namespace regdiag
