#pragma once

#include <random>
#include <string>
#include <unordered_map>
#include <utility>

#include "regdiag/base.hpp"
#include "regdiag/functor.hpp"

namespace regdiag {

// The doctrine obtained by precomposing an inner doctrine with a strict
// cartesian functor: fibers, order, equality elements and existentials are
// those of the inner doctrine over the image objects, and reindexing maps
// through the functor. Strictness makes the image of a chosen product the
// chosen product of the images, so the inner existentials restrict without
// any adjustment.
template <class D>
class ComposedDoctrine {
public:
    using Elem = typename D::Elem;
    using Obj = BaseCategory::Obj;

    ComposedDoctrine(D& inner, FunctorData F)
        : inner_(&inner), F_(std::move(F)) {}

    BaseCategory& base() { return *F_.src; }
    D& inner() { return *inner_; }
    const FunctorData& functor() const { return F_; }

    Elem top(Obj x) { return inner_->top(F_.on_obj(x)); }
    Elem meet(Obj x, const Elem& a, const Elem& b) {
        return inner_->meet(F_.on_obj(x), a, b);
    }
    bool leq(Obj x, const Elem& a, const Elem& b) {
        return inner_->leq(F_.on_obj(x), a, b);
    }
    bool eq(Obj x, const Elem& a, const Elem& b) {
        return inner_->eq(F_.on_obj(x), a, b);
    }
    Elem reindex(const BaseCategory::Mor& f, const Elem& e) {
        return inner_->reindex(image_of(f), e);
    }
    Elem delta(Obj a) { return inner_->delta(F_.on_obj(a)); }
    Elem exists1(Obj p, const Elem& e) {
        return inner_->exists1(F_.on_obj(p), e);
    }
    Elem exists2(Obj p, const Elem& e) {
        return inner_->exists2(F_.on_obj(p), e);
    }

    std::uint64_t fiber_size(Obj x) { return inner_->fiber_size(F_.on_obj(x)); }
    Elem elem_at(Obj x, std::uint64_t idx) {
        return inner_->elem_at(F_.on_obj(x), idx);
    }
    Elem random_elem(Obj x, std::mt19937_64& rng) {
        return inner_->random_elem(F_.on_obj(x), rng);
    }
    std::string elem_repr(Obj x, const Elem& e) {
        return inner_->elem_repr(F_.on_obj(x), e);
    }

private:
    // Reindexing hits the same few morphisms for every element of a fiber
    // sweep, so the functor translation is worth caching.
    const BaseCategory::Mor& image_of(const BaseCategory::Mor& f) {
        std::string key = std::to_string(f.dom) + '|' + std::to_string(f.cod);
        for (std::uint32_t v : f.tab) {
            key += ',';
            key += std::to_string(v);
        }
        auto it = mor_cache_.find(key);
        if (it == mor_cache_.end())
            it = mor_cache_.emplace(std::move(key), F_.on_mor(f)).first;
        return it->second;
    }

    D* inner_;
    FunctorData F_;
    std::unordered_map<std::string, BaseCategory::Mor> mor_cache_;
};

// Validates strictness first, as composing along a non-strict functor would
// silently misalign the existentials with the source projections.
template <class D>
ComposedDoctrine<D> compose_with_functor(D& inner, FunctorData F) {
    validate_strict_cartesian(F);
    return ComposedDoctrine<D>(inner, std::move(F));
}

} // namespace regdiag
