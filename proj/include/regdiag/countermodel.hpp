#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "regdiag/finrel.hpp"
#include "regdiag/report.hpp"
#include "regdiag/rules.hpp"

namespace regdiag {

// Deterministic model enumeration order: carrier size ascending; function
// tables lexicographic (each table read output-by-output in tuple index
// order, symbols in declaration order, earlier symbols more significant);
// then predicate tables, each a bit mask over tuple indices counted up as
// an integer with tuple 0 least significant.
struct CountermodelOptions {
    int max_carrier = 3;
    std::uint64_t budget = 1'000'000; // models examined before giving up
    int jobs = 1;
};

struct CountermodelResult {
    enum class Status { Found, NoneUpTo, Exhausted } status = Status::NoneUpTo;
    FinModel model;                 // valid when Found
    std::size_t witness = 0;        // domain tuple index in hyp \ concl
    std::uint64_t examined = 0;
};

// Searches for a model where the hypothesis relation is not included in the
// conclusion relation. Both diagrams must share the interface n -> 0.
CountermodelResult countermodel_search(const Signature& sig, const DiagramPtr& hyp,
                                       const DiagramPtr& concl,
                                       const CountermodelOptions& opts = {});

// Uniform-ish random well-typed diagram over the signature, with box count
// and widths bounded by depth. Used for metavariable instantiation sweeps.
DiagramPtr random_diagram(const Signature& sig, int depth, std::mt19937_64& rng);

// All hole-free diagrams of syntactic depth <= 1: the wiring generators,
// the signature boxes, and nothing else. Used for exhaustive metavariable
// sweeps in the soundness harness.
std::vector<DiagramPtr> shallow_diagrams(const Signature& sig);

struct SoundnessOptions {
    // Width parameters swept for lax rules (exhaustive part).
    int max_lax_width = 2;
    // Random metavariable instantiations per lax rule (sampled part).
    int random_instances = 50;
    int random_depth = 3;
    std::uint64_t seed = 1;
};

// Evaluates every rule of the catalog in the given model: equalities must
// evaluate to equal relations, inequalities to included ones. Lax rules are
// instantiated with all shallow diagrams at widths within max_lax_width and
// additionally with random diagrams. One report clause per rule.
Report check_axiom_soundness(const FinModel& m,
                             const std::vector<RewriteRule>& catalog,
                             const SoundnessOptions& opts = {});

} // namespace regdiag
