#pragma once

#include <random>
#include <string>

#include "regdiag/base.hpp"
#include "regdiag/bitvec.hpp"

namespace regdiag {

// Subset fibers over a finite base category: the fiber at X is the powerset
// of X, reindexing along f is preimage, delta is the diagonal subset, and
// the existentials project tuples away. exists1 lands on the left factor of
// a product (quantifying the right one away), exists2 mirrors it.
class PowersetDoctrine {
public:
    using Elem = BitVec;
    using Obj = BaseCategory::Obj;
    using Mor = BaseCategory::Mor;

    explicit PowersetDoctrine(BaseCategory& b) : b_(&b) {}

    BaseCategory& base() { return *b_; }

    Elem top(Obj x) { return BitVec(b_->card(x), true); }
    Elem meet(Obj, const Elem& a, const Elem& b) { return a & b; }
    bool leq(Obj, const Elem& a, const Elem& b) { return a.subset_of(b); }
    bool eq(Obj, const Elem& a, const Elem& b) { return a == b; }

    Elem reindex(const Mor& f, const Elem& e) {
        BitVec out(b_->card(f.dom));
        for (std::size_t i = 0; i < out.size(); ++i)
            if (e.get(f.tab[i])) out.set(i);
        return out;
    }

    Elem exists1(Obj p, const Elem& e) {
        std::uint64_t cr = b_->card(b_->right(p));
        BitVec out(b_->card(b_->left(p)));
        e.for_each([&](std::size_t i) { out.set(i / cr); });
        return out;
    }

    Elem exists2(Obj p, const Elem& e) {
        std::uint64_t cr = b_->card(b_->right(p));
        BitVec out(cr);
        e.for_each([&](std::size_t i) { out.set(i % cr); });
        return out;
    }

    Elem delta(Obj a) {
        Obj p = b_->prod(a, a);
        std::uint64_t c = b_->card(a);
        BitVec out(b_->card(p));
        for (std::uint64_t i = 0; i < c; ++i) out.set(i * c + i);
        return out;
    }

    std::uint64_t fiber_size(Obj x) {
        std::uint64_t c = b_->card(x);
        if (c >= 62) return 1ull << 62;
        return 1ull << c;
    }

    Elem elem_at(Obj x, std::uint64_t idx) {
        BitVec out(b_->card(x));
        std::size_t hi = out.size() < 64 ? out.size() : 64;
        for (std::size_t j = 0; j < hi; ++j)
            if ((idx >> j) & 1) out.set(j);
        return out;
    }

    Elem random_elem(Obj x, std::mt19937_64& rng) {
        BitVec out(b_->card(x));
        for (std::size_t j = 0; j < out.size(); ++j)
            if (rng() & 1) out.set(j);
        return out;
    }

    std::string elem_repr(Obj x, const Elem& e) {
        std::string s = "{";
        bool first = true;
        e.for_each([&](std::size_t i) {
            if (!first) s += ",";
            first = false;
            s += b_->elem_name(x, i);
        });
        return s + "}";
    }

private:
    BaseCategory* b_;
};

} // namespace regdiag
