#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "regdiag/signature.hpp"

namespace regdiag {

// First-order terms over numbered variables x1, x2, ... and the function
// symbols of a signature. A term is a variable (var >= 1) or an application
// (fun nonempty, args sized to the arity).
struct Term {
    int var = 0;
    std::string fun;
    std::vector<Term> args;

    bool is_var() const { return var >= 1; }

    static Term variable(int index);
    static Term apply(std::string fun, std::vector<Term> args);

    bool operator==(const Term& o) const;
    // Largest variable index occurring in the term, 0 when ground.
    int max_var() const;
};

// A tuple of terms in a variable context of known width: <t1,...,tm> with
// every variable among x1..xn is a morphism-like object of type (n, m).
struct TermTuple {
    int context = 0;
    std::vector<Term> terms;

    int width() const { return static_cast<int>(terms.size()); }
};

// Regular-fragment formulas: truth, predicate application, equations,
// binary conjunction, existential quantification of the next variable.
// In context width n, an exists node binds x_{n+1} in its body.
struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    enum class Tag { Top, Pred, Eq, And, Exists } tag = Tag::Top;
    std::string pred;        // Tag::Pred
    std::vector<Term> args;  // Tag::Pred
    Term lhs, rhs;           // Tag::Eq
    FormulaPtr l, r;         // Tag::And (l, r) / Tag::Exists (l)
    int bound = 0;           // Tag::Exists: the bound index as written

    static FormulaPtr top();
    static FormulaPtr pred_app(std::string p, std::vector<Term> args);
    static FormulaPtr eq(Term a, Term b);
    static FormulaPtr conj(FormulaPtr a, FormulaPtr b);
    static FormulaPtr exists(int bound_index, FormulaPtr body);
};

// Checks that a term only uses declared function symbols at their arities
// and variables within x1..xn. Throws SortError / SignatureError.
void check_term(const Term& t, int context, const Signature& sig);
void check_tuple(const TermTuple& t, const Signature& sig);

// Checks a formula in context width n. Exists nodes must bind exactly
// x_{n'+1} where n' is the width of their own context; predicate arities
// must match. Throws SortError on violations.
void check_formula(const FormulaPtr& f, int context, const Signature& sig);

// Substitution-based composition of tuples read left to right:
// for t : (n, m) and u : (m, k), the result (n, k) substitutes the
// components of t for the variables of u.
TermTuple compose_tuples(const TermTuple& t, const TermTuple& u);

// Identity tuple <x1,...,xn> : (n, n).
TermTuple identity_tuple(int n);

// For a pair tuple <t1, t2> : (n, 2), returns <t1> : (n, 1) when the two
// components are syntactically equal, nullopt otherwise.
std::optional<TermTuple> factor_through_diagonal(const TermTuple& pair);

// A signature translation: maps function symbols to function symbols and
// predicate symbols to predicate symbols, preserving arities. Applying it
// to terms/tuples/formulas is symbol-wise renaming, which strictly
// preserves composition and identities.
// Interprets one signature in another: each function symbol f of arity m is
// sent to a term over the target signature in variables x1..xm, and terms,
// tuples and formulas are mapped by substitution. Identity and composition
// of tuples are preserved, so this acts as a strict cartesian functor
// between the term categories.
class SignatureFunctor {
public:
    SignatureFunctor(const Signature& from, const Signature& to,
                     std::map<std::string, Term> fun_map,
                     std::map<std::string, std::string> pred_map);

    // Plain symbol-to-symbol renaming (arities must agree).
    static SignatureFunctor renaming(const Signature& from, const Signature& to,
                                     const std::map<std::string, std::string>& fun_map,
                                     std::map<std::string, std::string> pred_map);

    const Signature& from() const { return *from_; }
    const Signature& to() const { return *to_; }

    Term apply(const Term& t) const;
    TermTuple apply(const TermTuple& t) const;
    FormulaPtr apply(const FormulaPtr& f) const;

private:
    const Signature* from_;
    const Signature* to_;
    std::map<std::string, Term> fun_map_;
    std::map<std::string, std::string> pred_map_;
};

// Text forms. Terms: x3, f(x1, c), c. Formulas: T, P(t1,...), t1 = t2,
// a & b (left associative), exists xk. body (binds to the end). The unicode
// spellings of truth, conjunction and the quantifier are accepted too.
Term parse_term(const std::string& text, const Signature& sig);
TermTuple parse_tuple(const std::string& text, int context, const Signature& sig);
FormulaPtr parse_formula(const std::string& text, const Signature& sig);

std::string print_term(const Term& t);
std::string print_tuple(const TermTuple& t);
std::string print_formula(const FormulaPtr& f);

} // namespace regdiag
