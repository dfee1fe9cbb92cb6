#include "regdiag/countermodel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "regdiag/diagram_text.hpp"
#include "regdiag/errors.hpp"

namespace regdiag {

namespace {

// Total number of models of the signature over a carrier of size k, clamped
// to avoid overflow. Functions contribute k^(k^ar) each, predicates 2^(k^ar).
std::uint64_t model_space_size(const Signature& sig, int k, std::uint64_t clamp) {
    std::uint64_t total = 1;
    auto mul_pow = [&](std::uint64_t base, std::uint64_t exp) {
        for (std::uint64_t i = 0; i < exp; ++i) {
            if (total > clamp / base) {
                total = clamp;
                return;
            }
            total *= base;
        }
    };
    for (const auto& f : sig.fun_names()) mul_pow(k, ipow(k, sig.fun_arity(f)));
    for (const auto& p : sig.pred_names()) mul_pow(2, ipow(k, sig.pred_arity(p)));
    return total;
}

// Decodes model index `idx` (in the documented enumeration order) into a
// model over carrier size k. Functions are the more significant digits.
FinModel model_at(const Signature& sig, int k, std::uint64_t idx) {
    FinModel m;
    m.sig = sig;
    m.size = k;
    for (int e = 0; e < k; ++e) m.elem_names.push_back(std::to_string(e));

    // Peel from the least significant end: predicates in reverse declaration
    // order, then functions in reverse declaration order.
    const auto& preds = sig.pred_names();
    for (auto it = preds.rbegin(); it != preds.rend(); ++it) {
        std::uint64_t cells = ipow(k, sig.pred_arity(*it));
        BitVec bits(cells);
        for (std::uint64_t c = 0; c < cells; ++c) {
            if (idx & 1) bits.set(c);
            idx >>= 1;
        }
        m.pred[*it] = std::move(bits);
    }
    const auto& funs = sig.fun_names();
    for (auto it = funs.rbegin(); it != funs.rend(); ++it) {
        std::uint64_t cells = ipow(k, sig.fun_arity(*it));
        std::vector<int> tab(cells, 0);
        // Within one table the first cell is the most significant digit, so
        // peel cells in reverse.
        for (std::uint64_t c = cells; c-- > 0;) {
            tab[c] = static_cast<int>(idx % k);
            idx /= k;
        }
        m.fun[*it] = std::move(tab);
    }
    return m;
}

} // namespace

CountermodelResult countermodel_search(const Signature& sig, const DiagramPtr& hyp,
                                       const DiagramPtr& concl,
                                       const CountermodelOptions& opts) {
    if (hyp->dom() != concl->dom() || hyp->cod() != 0 || concl->cod() != 0)
        throw WidthMismatchError(
            "countermodel search expects two diagrams n -> 0 with equal n");
    CountermodelResult res;
    std::uint64_t remaining = opts.budget;

    for (int k = 1; k <= opts.max_carrier; ++k) {
        std::uint64_t space = model_space_size(sig, k, ~0ull >> 1);
        std::uint64_t to_scan = std::min(space, remaining);

        // Scan [0, to_scan) in parallel chunks; keep the lowest hit index so
        // the result is independent of the number of jobs.
        int jobs = std::max(1, opts.jobs);
        std::atomic<std::uint64_t> first_hit(~0ull);
        std::vector<std::thread> workers;
        std::uint64_t chunk = (to_scan + jobs - 1) / std::max<std::uint64_t>(1, jobs);
        for (int t = 0; t < jobs; ++t) {
            std::uint64_t lo = t * chunk;
            std::uint64_t hi = std::min(to_scan, lo + chunk);
            if (lo >= hi) break;
            workers.emplace_back([&, lo, hi]() {
                for (std::uint64_t i = lo; i < hi; ++i) {
                    if (first_hit.load(std::memory_order_relaxed) < lo) return;
                    FinModel m = model_at(sig, k, i);
                    FinRelation h = eval_diagram(m, hyp);
                    FinRelation c = eval_diagram(m, concl);
                    if (!rel_subset(h, c)) {
                        std::uint64_t cur = first_hit.load();
                        while (i < cur && !first_hit.compare_exchange_weak(cur, i)) {
                        }
                        return;
                    }
                }
            });
        }
        for (auto& w : workers) w.join();

        std::uint64_t hit = first_hit.load();
        if (hit != ~0ull) {
            res.status = CountermodelResult::Status::Found;
            res.examined += hit + 1;
            res.model = model_at(sig, k, hit);
            FinRelation h = eval_diagram(res.model, hyp);
            FinRelation c = eval_diagram(res.model, concl);
            auto inc = check_inclusion(h, c);
            res.witness = inc.witness_dom;
            return res;
        }
        res.examined += to_scan;
        remaining -= to_scan;
        if (to_scan < space) {
            res.status = CountermodelResult::Status::Exhausted;
            return res;
        }
    }
    res.status = CountermodelResult::Status::NoneUpTo;
    return res;
}

DiagramPtr random_diagram(const Signature& sig, int depth, std::mt19937_64& rng) {
    auto pick_leaf = [&]() -> DiagramPtr {
        std::vector<DiagramPtr> leaves = {
            Diagram::id1(),        Diagram::swap11(),    Diagram::copy1(),
            Diagram::discard1(),   Diagram::cocopy1(),   Diagram::codiscard1(),
        };
        for (const auto& f : sig.fun_names())
            leaves.push_back(Diagram::fun_box(f, sig.fun_arity(f)));
        for (const auto& p : sig.pred_names())
            leaves.push_back(Diagram::pred_box(p, sig.pred_arity(p)));
        std::uniform_int_distribution<std::size_t> d(0, leaves.size() - 1);
        return leaves[d(rng)];
    };
    if (depth <= 0) return pick_leaf();
    std::uniform_int_distribution<int> d(0, 2);
    switch (d(rng)) {
    case 0:
        return pick_leaf();
    case 1: {
        DiagramPtr a = random_diagram(sig, depth - 1, rng);
        DiagramPtr b = random_diagram(sig, depth - 1, rng);
        // Bridge the interface gap so the composition is well typed:
        // extra outputs are fed fresh wires, missing ones are discarded.
        if (a->cod() < b->dom())
            a = Diagram::tensor(a, codiscard_n(b->dom() - a->cod()));
        else if (a->cod() > b->dom())
            b = Diagram::seq(
                Diagram::tensor(identity(b->dom()), discard_n(a->cod() - b->dom())),
                b);
        return Diagram::seq(a, b);
    }
    default: {
        DiagramPtr a = random_diagram(sig, depth - 1, rng);
        DiagramPtr b = random_diagram(sig, depth - 1, rng);
        return Diagram::tensor(a, b);
    }
    }
}

std::vector<DiagramPtr> shallow_diagrams(const Signature& sig) {
    std::vector<DiagramPtr> out = {
        Diagram::empty(),      Diagram::id1(),     Diagram::swap11(),
        Diagram::copy1(),      Diagram::discard1(), Diagram::cocopy1(),
        Diagram::codiscard1(),
    };
    for (const auto& f : sig.fun_names())
        out.push_back(Diagram::fun_box(f, sig.fun_arity(f)));
    for (const auto& p : sig.pred_names())
        out.push_back(Diagram::pred_box(p, sig.pred_arity(p)));
    return out;
}

Report check_axiom_soundness(const FinModel& m,
                             const std::vector<RewriteRule>& catalog,
                             const SoundnessOptions& opts) {
    Report rep;
    rep.title = "axiom soundness over carrier of size " + std::to_string(m.size);

    auto check_instance = [&](ClauseResult& clause, const RewriteRule& rule,
                              const std::vector<int>& widths,
                              const DiagramPtr& mv) {
        auto [lhs, rhs] = rule.build(widths, mv);
        FinRelation l = eval_diagram(m, lhs);
        FinRelation r = eval_diagram(m, rhs);
        ++clause.checked;
        bool ok = rule.equality ? (l == r) : rel_subset(l, r);
        if (!ok) {
            std::string inst;
            if (mv) inst = " with R = " + print_diagram(mv);
            clause.failures.push_back(
                (rule.equality ? "sides differ" : "inclusion fails") + inst);
        }
    };

    std::mt19937_64 rng(opts.seed);
    for (const auto& rule : catalog) {
        ClauseResult clause;
        clause.name = rule.name;
        if (!rule.needs_metavar) {
            check_instance(clause, rule, {}, nullptr);
        } else {
            for (const auto& mv : shallow_diagrams(m.sig)) {
                if (mv->dom() > opts.max_lax_width || mv->cod() > opts.max_lax_width)
                    continue;
                check_instance(clause, rule, {mv->dom(), mv->cod()}, mv);
            }
            for (int i = 0; i < opts.random_instances; ++i) {
                DiagramPtr mv = random_diagram(m.sig, opts.random_depth, rng);
                check_instance(clause, rule, {mv->dom(), mv->cod()}, mv);
            }
            clause.sampled = opts.random_instances > 0;
        }
        rep.clauses.push_back(std::move(clause));
    }
    return rep;
}

} // namespace regdiag
