#pragma once

// Reference first-order satisfaction, written directly against the formula
// tree and the model tables. Deliberately shares nothing with the diagram
// pipeline: no translation, no relation algebra, just environments and
// recursion. Used to cross-check the diagrammatic semantics.

#include <cstddef>
#include <vector>

#include "regdiag/finrel.hpp"
#include "regdiag/logic.hpp"

namespace tarski {

inline int eval_term(const regdiag::Term& t, const std::vector<int>& env,
                     const regdiag::FinModel& m) {
    if (t.is_var()) return env[static_cast<std::size_t>(t.var - 1)];
    std::size_t idx = 0;
    for (const regdiag::Term& a : t.args)
        idx = idx * static_cast<std::size_t>(m.size) +
              static_cast<std::size_t>(eval_term(a, env, m));
    return m.fun.at(t.fun)[idx];
}

inline bool sat(const regdiag::FormulaPtr& f, std::vector<int>& env,
                const regdiag::FinModel& m) {
    using Tag = regdiag::Formula::Tag;
    switch (f->tag) {
    case Tag::Top:
        return true;
    case Tag::Pred: {
        std::size_t idx = 0;
        for (const regdiag::Term& a : f->args)
            idx = idx * static_cast<std::size_t>(m.size) +
                  static_cast<std::size_t>(eval_term(a, env, m));
        return m.pred.at(f->pred).get(idx);
    }
    case Tag::Eq:
        return eval_term(f->lhs, env, m) == eval_term(f->rhs, env, m);
    case Tag::And:
        return sat(f->l, env, m) && sat(f->r, env, m);
    case Tag::Exists: {
        for (int v = 0; v < m.size; ++v) {
            env.push_back(v);
            bool ok = sat(f->l, env, m);
            env.pop_back();
            if (ok) return true;
        }
        return false;
    }
    }
    return false;
}

// The satisfaction set of a formula over context width n, one bit per
// environment, environments indexed leftmost major like tuple indices.
inline std::vector<bool> satisfaction_set(const regdiag::FormulaPtr& f, int n,
                                          const regdiag::FinModel& m) {
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(m.size);
    std::vector<bool> out(total);
    std::vector<int> env(static_cast<std::size_t>(n), 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        for (int i = n - 1; i >= 0; --i) {
            env[static_cast<std::size_t>(i)] = static_cast<int>(rest % m.size);
            rest /= static_cast<std::size_t>(m.size);
        }
        out[idx] = sat(f, env, m);
    }
    return out;
}

} // namespace tarski
