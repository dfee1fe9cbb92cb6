#pragma once

#include "regdiag/diagram.hpp"
#include "regdiag/logic.hpp"

namespace regdiag {

// Translates a term tuple <t1,...,tm> in context width n into a diagram
// n -> m. The construction is junk free: each context variable feeds a
// copy tree matching its total occurrence count (a discard when unused),
// a wire permutation routes duplicates to occurrence positions, and a
// forest of function boxes assembles the terms. In particular the tuple
// <x1..xn, x1..xn> lands exactly on the derived n-fold copy wiring.
DiagramPtr theta_term(const TermTuple& tuple, const Signature& sig);

// Translates a formula in context width n into a diagram n -> 0:
//   truth             -> discard everything
//   P(t1,...,tk)      -> tuple translation into the predicate box
//   t1 = t2           -> pair translation into cocopy;discard
//   phi & psi         -> copy the context into both translations
//   exists x_{n+1}.phi -> adjoin a fresh wire with codiscard, then translate
// Sort-checks the formula first.
DiagramPtr theta(const FormulaPtr& f, int context, const Signature& sig);

} // namespace regdiag
