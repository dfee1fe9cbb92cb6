#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "regdiag/diagram.hpp"
#include "regdiag/signature.hpp"

namespace regdiag {

// A rewrite rule schema between diagrams of equal interface. Equalities may
// be applied in both directions; inequalities (lhs <= rhs) only forward.
// Parametric rules take width parameters and a metavariable instantiation.
struct RewriteRule {
    std::string name;
    std::string group; // comonoid | adjunction | frobenius | map-naturality | lax
    std::string description;
    bool equality = true;
    int width_params = 0;      // how many width parameters build() expects
    bool needs_metavar = false;

    // Builds (lhs, rhs) for the given instantiation. Throws
    // BadInstantiationError when widths or the metavariable do not fit.
    std::function<std::pair<DiagramPtr, DiagramPtr>(
        const std::vector<int>&, const DiagramPtr&)>
        build;
};

// The axiom catalog over a signature:
//   comonoid.assoc       copy;(copy (x) id) = copy;(id (x) copy)
//   comonoid.comm        copy;swap = copy
//   comonoid.unit        copy;(discard (x) id) = id
//   adj.copy.unit        id <= copy;cocopy
//   adj.copy.counit      cocopy;copy <= id (x) id
//   adj.discard.unit     id <= discard;codiscard
//   adj.discard.counit   codiscard;discard <= empty
//   frobenius            (copy (x) id);(id (x) cocopy) = cocopy;copy
//   natcopy@f            f;copy = copyN;(f (x) f)        for every function f
//   natdis@f             f;discard = discardN            for every function f
//   lax.copy   [n,m] R   R;copym <= copyn;(R (x) R)      R any diagram n -> m
//   lax.discard [n,m] R  R;discardm <= discardn
std::vector<RewriteRule> rule_catalog(const Signature& sig);

const RewriteRule* find_rule(const std::vector<RewriteRule>& catalog,
                             const std::string& name);

} // namespace regdiag
