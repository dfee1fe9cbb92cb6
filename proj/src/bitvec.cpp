#include "regdiag/bitvec.hpp"

#include "regdiag/errors.hpp"

namespace regdiag {

std::size_t BitVec::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
}

bool BitVec::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

BitVec& BitVec::operator&=(const BitVec& o) {
    if (size_ != o.size_) throw WidthMismatchError("BitVec size mismatch in &=");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

BitVec& BitVec::operator|=(const BitVec& o) {
    if (size_ != o.size_) throw WidthMismatchError("BitVec size mismatch in |=");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

BitVec& BitVec::subtract(const BitVec& o) {
    if (size_ != o.size_) throw WidthMismatchError("BitVec size mismatch in subtract");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

bool BitVec::subset_of(const BitVec& o) const {
    if (size_ != o.size_) throw WidthMismatchError("BitVec size mismatch in subset_of");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

std::size_t BitVec::hash() const {
    std::size_t h = size_ * 0x9e3779b97f4a7c15ull;
    for (auto w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

bool BitVec::operator<(const BitVec& o) const {
    if (size_ != o.size_) return size_ < o.size_;
    return words_ < o.words_;
}

std::string BitVec::to_string() const {
    std::string s;
    s.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) s.push_back(get(i) ? '1' : '0');
    return s;
}

} // namespace regdiag
