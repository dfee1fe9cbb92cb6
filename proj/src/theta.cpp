#include "regdiag/theta.hpp"

#include "regdiag/errors.hpp"

namespace regdiag {

namespace {

void occurrences(const Term& t, std::vector<int>& occs) {
    if (t.is_var()) {
        occs.push_back(t.var);
        return;
    }
    for (const auto& a : t.args) occurrences(a, occs);
}

// 1 -> k right-leaning copy tree; k = 0 discards the wire.
DiagramPtr copy_tree(int k) {
    if (k == 0) return Diagram::discard1();
    if (k == 1) return Diagram::id1();
    return Diagram::seq(Diagram::copy1(),
                        Diagram::tensor(Diagram::id1(), copy_tree(k - 1)));
}

// Builds the term as a diagram consuming one wire per variable occurrence
// in depth-first order.
DiagramPtr term_diagram(const Term& t, const Signature& sig) {
    if (t.is_var()) return Diagram::id1();
    std::vector<DiagramPtr> parts;
    parts.reserve(t.args.size());
    for (const auto& a : t.args) parts.push_back(term_diagram(a, sig));
    DiagramPtr args = tensor_all(parts);
    return Diagram::seq(args, Diagram::fun_box(t.fun, sig.fun_arity(t.fun)));
}

} // namespace

DiagramPtr theta_term(const TermTuple& tuple, const Signature& sig) {
    check_tuple(tuple, sig);
    int n = tuple.context;

    std::vector<int> occs;
    for (const auto& t : tuple.terms) occurrences(t, occs);
    int total = static_cast<int>(occs.size());

    std::vector<int> count(n + 1, 0);
    for (int v : occs) ++count[v];

    // Copy layer: variable j contributes count[j] outputs, grouped.
    std::vector<DiagramPtr> trees;
    std::vector<int> group_start(n + 1, 0);
    int running = 0;
    for (int j = 1; j <= n; ++j) {
        group_start[j] = running;
        running += count[j];
        trees.push_back(copy_tree(count[j]));
    }
    DiagramPtr copies = tensor_all(trees); // n -> total

    // Routing layer: occurrence t in depth-first order takes the next
    // unused duplicate of its variable.
    std::vector<int> used(n + 1, 0);
    std::vector<int> perm(total, 0);
    for (int t = 0; t < total; ++t) {
        int j = occs[t];
        perm[group_start[j] + used[j]++] = t;
    }
    DiagramPtr route = permutation_diagram(perm);

    // Assembly layer: one sub-diagram per tuple component.
    std::vector<DiagramPtr> forest;
    forest.reserve(tuple.terms.size());
    for (const auto& t : tuple.terms) forest.push_back(term_diagram(t, sig));
    DiagramPtr assemble = tensor_all(forest); // total -> width

    return Diagram::seq(Diagram::seq(copies, route), assemble);
}

DiagramPtr theta(const FormulaPtr& f, int context, const Signature& sig) {
    check_formula(f, context, sig);
    switch (f->tag) {
    case Formula::Tag::Top:
        return discard_n(context);
    case Formula::Tag::Pred: {
        TermTuple t;
        t.context = context;
        t.terms = f->args;
        return Diagram::seq(theta_term(t, sig),
                            Diagram::pred_box(f->pred, sig.pred_arity(f->pred)));
    }
    case Formula::Tag::Eq: {
        TermTuple t;
        t.context = context;
        t.terms = {f->lhs, f->rhs};
        return Diagram::seq(theta_term(t, sig), cap_n(1));
    }
    case Formula::Tag::And: {
        DiagramPtr a = theta(f->l, context, sig);
        DiagramPtr b = theta(f->r, context, sig);
        return Diagram::seq(copy_n(context), Diagram::tensor(a, b));
    }
    case Formula::Tag::Exists: {
        DiagramPtr body = theta(f->l, context + 1, sig);
        return Diagram::seq(Diagram::tensor(identity(context), Diagram::codiscard1()),
                            body);
    }
    }
    throw Error("unreachable");
}

} // namespace regdiag
