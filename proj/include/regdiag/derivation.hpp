#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regdiag/diagram.hpp"
#include "regdiag/rules.hpp"
#include "regdiag/signature.hpp"

namespace regdiag {

// One rewrite step: the current diagram must factor as
//   c1 ; (id_left_pad (x) LHS (x) id_right_pad) ; c2
// up to wiring isomorphism, where LHS is the instantiated rule side being
// replaced (the rule's right side when direction is backward). Omitted
// contexts default to identities of the matching width.
struct DerivationStep {
    std::string rule;
    bool forward = true;
    std::vector<int> widths;
    DiagramPtr metavar; // null unless the rule needs one
    DiagramPtr c1, c2;  // null means identity
    int left_pad = 0;
    int right_pad = 0;
};

struct Derivation {
    DiagramPtr start, goal;
    bool claims_equality = false;
    std::vector<DerivationStep> steps;
};

struct StepTrace {
    int index = 0;
    std::string rule;
    bool forward = true;
    bool ok = false;
    std::string note;
};

struct DerivationVerdict {
    bool accepted = false;
    // Meaningful when accepted: true when every step used an equality, so
    // the derivation certifies = rather than just <=.
    bool equality = false;
    std::string reason;
    std::vector<StepTrace> trace;

    std::string relation() const { return equality ? "=" : "<="; }
};

// Applies one step, throwing UnknownRuleError, BackwardOnInequalityError,
// BadInstantiationError, WidthMismatchError or ContextMismatchError.
DiagramPtr apply_step(const DiagramPtr& current, const DerivationStep& step,
                      const std::vector<RewriteRule>& catalog);

// Replays a derivation against the catalog for `sig`. Never throws for
// rule-level failures; these are reported in the verdict and trace. A
// derivation claiming equality is rejected if any step is an inequality.
DerivationVerdict check_derivation(const Derivation& d, const Signature& sig);

// JSON round trip. Diagrams appear as text in the documented syntax.
Derivation derivation_from_json_text(const std::string& text, const Signature& sig);
Derivation derivation_from_file(const std::string& path, const Signature& sig);
std::string derivation_to_json_text(const Derivation& d, const Signature& sig);

} // namespace regdiag
