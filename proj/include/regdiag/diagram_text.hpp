#pragma once

#include <string>

#include "regdiag/diagram.hpp"
#include "regdiag/signature.hpp"

namespace regdiag {

// Text syntax for diagrams. Grammar (documented in docs/formats.md):
//
//   diagram := term (';' term)*                 sequential composition
//   term    := factor ('(x)' factor)*           tensor, binds tighter than ';'
//   factor  := '(' diagram ')' | atom
//   atom    := builtin | symbol ['@fun' | '@pred']
//
// Builtins: empty, id, idN, swap, swapN_M, copy, copyN, discard, discardN,
// cocopy, cocopyN, codiscard, codiscardN, cupN, capN, topN_M (N, M decimal).
// Unsuffixed copy/discard/... mean the width-1 generator; id0 equals empty.
// Any other name refers to a signature symbol; '@fun'/'@pred' force the
// kind when a name is a builtin pattern or is declared as both.
DiagramPtr parse_diagram(const std::string& text, const Signature& sig);

// Inverse of parse_diagram for hole-free diagrams. When `sig` is supplied,
// box names that collide with builtin patterns or are declared as both
// function and predicate are printed with their '@' suffix so the output
// round-trips.
std::string print_diagram(const DiagramPtr& d, const Signature* sig = nullptr);

} // namespace regdiag
