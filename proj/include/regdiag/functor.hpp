#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "regdiag/base.hpp"
#include "regdiag/errors.hpp"

namespace regdiag {

// A product-preserving functor between base categories, given by its actions
// on objects and morphisms. Strictness (chosen products, unit, and structure
// maps preserved on the nose) is what lets a doctrine be composed with the
// functor without any coherence bookkeeping.
struct FunctorData {
    BaseCategory* src = nullptr;
    BaseCategory* dst = nullptr;
    std::function<BaseCategory::Obj(BaseCategory::Obj)> on_obj;
    std::function<BaseCategory::Mor(const BaseCategory::Mor&)> on_mor;
};

// Builds a base category whose i-th atom carries card(src atom i)^k elements,
// the natural target for atom_power_functor.
BaseCategory power_target(const BaseCategory& src, int k,
                          std::uint64_t elem_cap = 4096);

// The diagonal k-th power functor: an atom maps to its k-th cartesian power
// and a function acts componentwise on k-tuples. Faithful and strict
// cartesian, but not surjective on hom-sets once k >= 2, which is the
// mechanism the unique-choice counterexamples rely on.
FunctorData atom_power_functor(BaseCategory& src, BaseCategory& dst, int k);

// Sends src atom i to dst atom atom_map[i] by the identity on elements
// (cardinalities must agree). Injective maps rename atoms, non-injective
// ones collapse them.
FunctorData atom_collapse_functor(BaseCategory& src, BaseCategory& dst,
                                  const std::vector<int>& atom_map);

// Checks preservation of the chosen cartesian structure on the nose over the
// listed universe of src: unit, binary products, identities, composites,
// projections, pairing, diagonals, and terminal maps. Throws
// NotStrictCartesianError on the first violation.
void validate_strict_cartesian(const FunctorData& F,
                               std::uint64_t budget = 20000,
                               std::uint64_t seed = 1);

} // namespace regdiag
