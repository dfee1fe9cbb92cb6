#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "regdiag/base.hpp"

namespace regdiag {

// The doctrine of a relational backend: the fiber over X is the hom from X
// to the unit object, ordered as the hom is. Reindexing along a base
// morphism precomposes with its graph, the equality element is the cap, and
// the existentials discharge one product component by bending it away with a
// codiscard leg.
template <class B>
class RDoctrine {
public:
    using Elem = typename B::Hom;
    using Obj = BaseCategory::Obj;

    explicit RDoctrine(B& bb) : bb_(&bb) {}

    BaseCategory& base() { return bb_->base(); }
    B& backend() { return *bb_; }

    Elem top(Obj x) { return bb_->top(x, unit()); }
    Elem meet(Obj x, const Elem& a, const Elem& b) {
        return bb_->meet(x, unit(), a, b);
    }
    bool leq(Obj x, const Elem& a, const Elem& b) {
        return bb_->leq(x, unit(), a, b);
    }
    bool eq(Obj x, const Elem& a, const Elem& b) {
        return bb_->eq(x, unit(), a, b);
    }

    Elem reindex(const BaseCategory::Mor& f, const Elem& e) {
        return bb_->compose(f.dom, f.cod, unit(), bb_->graph_of(f), e);
    }

    Elem delta(Obj a) { return bb_->cap(a); }

    Elem exists1(Obj p, const Elem& e) {
        BaseCategory& b = base();
        Obj l = b.left(p), r = b.right(p);
        Obj li = b.prod(l, unit());
        Elem widen = bb_->compose(
            l, li, p, bb_->graph_of(b.rho_inv(l)),
            bb_->tensor(l, l, unit(), r, bb_->identity(l), bb_->codiscard(r)));
        return bb_->compose(l, p, unit(), widen, e);
    }

    Elem exists2(Obj p, const Elem& e) {
        BaseCategory& b = base();
        Obj l = b.left(p), r = b.right(p);
        Obj ir = b.prod(unit(), r);
        Elem widen = bb_->compose(
            r, ir, p, bb_->graph_of(b.lambda_inv(r)),
            bb_->tensor(unit(), l, r, r, bb_->codiscard(l), bb_->identity(r)));
        return bb_->compose(r, p, unit(), widen, e);
    }

    std::uint64_t fiber_size(Obj x) { return bb_->hom_size(x, unit()); }
    Elem elem_at(Obj x, std::uint64_t idx) {
        return bb_->hom_at(x, unit(), idx);
    }
    Elem random_elem(Obj x, std::mt19937_64& rng) {
        return bb_->random_hom(x, unit(), rng);
    }
    std::string elem_repr(Obj x, const Elem& e) {
        return bb_->hom_repr(x, unit(), e);
    }

private:
    Obj unit() { return base().unit(); }

    B* bb_;
};

template <class B>
RDoctrine<B> doctrine_of_cbc(B& bb) {
    return RDoctrine<B>(bb);
}

} // namespace regdiag
