#include "regdiag/logic.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "regdiag/errors.hpp"

namespace regdiag {

Term Term::variable(int index) {
    if (index < 1) throw SortError("variable index must be >= 1");
    Term t;
    t.var = index;
    return t;
}

Term Term::apply(std::string fun, std::vector<Term> args) {
    Term t;
    t.fun = std::move(fun);
    t.args = std::move(args);
    return t;
}

bool Term::operator==(const Term& o) const {
    if (var != o.var || fun != o.fun || args.size() != o.args.size()) return false;
    for (std::size_t i = 0; i < args.size(); ++i)
        if (!(args[i] == o.args[i])) return false;
    return true;
}

int Term::max_var() const {
    if (is_var()) return var;
    int m = 0;
    for (const auto& a : args) m = std::max(m, a.max_var());
    return m;
}

FormulaPtr Formula::top() {
    auto f = std::make_shared<Formula>();
    f->tag = Tag::Top;
    return f;
}
FormulaPtr Formula::pred_app(std::string p, std::vector<Term> args) {
    auto f = std::make_shared<Formula>();
    f->tag = Tag::Pred;
    f->pred = std::move(p);
    f->args = std::move(args);
    return f;
}
FormulaPtr Formula::eq(Term a, Term b) {
    auto f = std::make_shared<Formula>();
    f->tag = Tag::Eq;
    f->lhs = std::move(a);
    f->rhs = std::move(b);
    return f;
}
FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b) {
    auto f = std::make_shared<Formula>();
    f->tag = Tag::And;
    f->l = std::move(a);
    f->r = std::move(b);
    return f;
}
FormulaPtr Formula::exists(int bound_index, FormulaPtr body) {
    auto f = std::make_shared<Formula>();
    f->tag = Tag::Exists;
    f->bound = bound_index;
    f->l = std::move(body);
    return f;
}

void check_term(const Term& t, int context, const Signature& sig) {
    if (t.is_var()) {
        if (t.var > context)
            throw SortError("variable x" + std::to_string(t.var) +
                            " outside context of width " + std::to_string(context));
        return;
    }
    int ar = sig.fun_arity(t.fun);
    if (ar != static_cast<int>(t.args.size()))
        throw SortError("function " + t.fun + " has arity " + std::to_string(ar) +
                        ", applied to " + std::to_string(t.args.size()) +
                        " argument(s)");
    for (const auto& a : t.args) check_term(a, context, sig);
}

void check_tuple(const TermTuple& t, const Signature& sig) {
    if (t.context < 0) throw SortError("negative context width");
    for (const auto& term : t.terms) check_term(term, t.context, sig);
}

void check_formula(const FormulaPtr& f, int context, const Signature& sig) {
    if (!f) throw SortError("null formula");
    switch (f->tag) {
    case Formula::Tag::Top:
        return;
    case Formula::Tag::Pred: {
        int ar = sig.pred_arity(f->pred);
        if (ar != static_cast<int>(f->args.size()))
            throw SortError("predicate " + f->pred + " has arity " +
                            std::to_string(ar) + ", applied to " +
                            std::to_string(f->args.size()) + " argument(s)");
        for (const auto& a : f->args) check_term(a, context, sig);
        return;
    }
    case Formula::Tag::Eq:
        check_term(f->lhs, context, sig);
        check_term(f->rhs, context, sig);
        return;
    case Formula::Tag::And:
        check_formula(f->l, context, sig);
        check_formula(f->r, context, sig);
        return;
    case Formula::Tag::Exists:
        if (f->bound != context + 1)
            throw SortError("exists must bind x" + std::to_string(context + 1) +
                            " in context of width " + std::to_string(context) +
                            ", found x" + std::to_string(f->bound));
        check_formula(f->l, context + 1, sig);
        return;
    }
}

namespace {

Term substitute(const Term& t, const std::vector<Term>& image) {
    if (t.is_var()) {
        if (t.var > static_cast<int>(image.size()))
            throw SortError("substitution: variable x" + std::to_string(t.var) +
                            " has no image");
        return image[t.var - 1];
    }
    std::vector<Term> args;
    args.reserve(t.args.size());
    for (const auto& a : t.args) args.push_back(substitute(a, image));
    return Term::apply(t.fun, std::move(args));
}

} // namespace

TermTuple compose_tuples(const TermTuple& t, const TermTuple& u) {
    if (t.width() != u.context)
        throw WidthMismatchError("compose_tuples: middle widths differ (" +
                                 std::to_string(t.width()) + " vs " +
                                 std::to_string(u.context) + ")");
    TermTuple r;
    r.context = t.context;
    r.terms.reserve(u.terms.size());
    for (const auto& term : u.terms) r.terms.push_back(substitute(term, t.terms));
    return r;
}

TermTuple identity_tuple(int n) {
    TermTuple t;
    t.context = n;
    for (int i = 1; i <= n; ++i) t.terms.push_back(Term::variable(i));
    return t;
}

std::optional<TermTuple> factor_through_diagonal(const TermTuple& pair) {
    if (pair.width() != 2)
        throw WidthMismatchError("factor_through_diagonal expects a width-2 tuple");
    if (!(pair.terms[0] == pair.terms[1])) return std::nullopt;
    TermTuple r;
    r.context = pair.context;
    r.terms.push_back(pair.terms[0]);
    return r;
}

SignatureFunctor::SignatureFunctor(const Signature& from, const Signature& to,
                                   std::map<std::string, Term> fun_map,
                                   std::map<std::string, std::string> pred_map)
    : from_(&from), to_(&to), fun_map_(std::move(fun_map)),
      pred_map_(std::move(pred_map)) {
    for (const auto& f : from.fun_names()) {
        auto it = fun_map_.find(f);
        if (it == fun_map_.end())
            throw SignatureError("signature functor: no image for function " + f);
        check_term(it->second, from.fun_arity(f), to);
    }
    for (const auto& p : from.pred_names()) {
        auto it = pred_map_.find(p);
        if (it == pred_map_.end())
            throw SignatureError("signature functor: no image for predicate " + p);
        if (to.pred_arity(it->second) != from.pred_arity(p))
            throw SignatureError("signature functor: arity change on " + p);
    }
}

SignatureFunctor SignatureFunctor::renaming(
    const Signature& from, const Signature& to,
    const std::map<std::string, std::string>& fun_map,
    std::map<std::string, std::string> pred_map) {
    std::map<std::string, Term> images;
    for (const auto& [f, g] : fun_map) {
        std::vector<Term> vars;
        for (int i = 1; i <= from.fun_arity(f); ++i)
            vars.push_back(Term::variable(i));
        images.emplace(f, Term::apply(g, std::move(vars)));
    }
    return SignatureFunctor(from, to, std::move(images), std::move(pred_map));
}

Term SignatureFunctor::apply(const Term& t) const {
    if (t.is_var()) return t;
    std::vector<Term> args;
    args.reserve(t.args.size());
    for (const auto& a : t.args) args.push_back(apply(a));
    return substitute(fun_map_.at(t.fun), args);
}

TermTuple SignatureFunctor::apply(const TermTuple& t) const {
    TermTuple r;
    r.context = t.context;
    for (const auto& term : t.terms) r.terms.push_back(apply(term));
    return r;
}

FormulaPtr SignatureFunctor::apply(const FormulaPtr& f) const {
    switch (f->tag) {
    case Formula::Tag::Top:
        return Formula::top();
    case Formula::Tag::Pred: {
        std::vector<Term> args;
        for (const auto& a : f->args) args.push_back(apply(a));
        return Formula::pred_app(pred_map_.at(f->pred), std::move(args));
    }
    case Formula::Tag::Eq:
        return Formula::eq(apply(f->lhs), apply(f->rhs));
    case Formula::Tag::And:
        return Formula::conj(apply(f->l), apply(f->r));
    case Formula::Tag::Exists:
        return Formula::exists(f->bound, apply(f->l));
    }
    throw Error("unreachable");
}

namespace {

// Shared lexer for terms and formulas. Unicode forms of truth, conjunction
// and the existential quantifier are folded to their ascii spellings.
struct FLexer {
    std::string text;
    std::size_t pos = 0;

    enum class T {
        Name, Var, LParen, RParen, Comma, Dot, Eq, And, Exists, Top, End
    } tok = T::End;
    std::string name;
    int var = 0;

    explicit FLexer(const std::string& t) : text(t) { advance(); }

    bool starts_with(const char* s) const {
        return text.compare(pos, std::char_traits<char>::length(s), s) == 0;
    }

    void advance() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos >= text.size()) {
            tok = T::End;
            return;
        }
        char c = text[pos];
        if (c == '(') { ++pos; tok = T::LParen; return; }
        if (c == ')') { ++pos; tok = T::RParen; return; }
        if (c == ',') { ++pos; tok = T::Comma; return; }
        if (c == '.') { ++pos; tok = T::Dot; return; }
        if (c == '=') { ++pos; tok = T::Eq; return; }
        if (c == '&') { ++pos; tok = T::And; return; }
        if (starts_with("∧")) { pos += 3; tok = T::And; return; }   // wedge
        if (starts_with("⊤")) { pos += 3; tok = T::Top; return; }   // down tack
        if (starts_with("∃")) { pos += 3; tok = T::Exists; return; } // backwards E
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            name.clear();
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                    text[pos] == '_'))
                name.push_back(text[pos++]);
            if (name == "T") { tok = T::Top; return; }
            if (name == "exists") { tok = T::Exists; return; }
            if (name.size() >= 2 && name[0] == 'x' &&
                std::all_of(name.begin() + 1, name.end(), [](char ch) {
                    return std::isdigit(static_cast<unsigned char>(ch));
                })) {
                var = std::stoi(name.substr(1));
                tok = T::Var;
                return;
            }
            tok = T::Name;
            return;
        }
        throw ParseError(std::string("formula: unexpected character '") + c +
                         "' at offset " + std::to_string(pos));
    }
};

struct FParser {
    FLexer lex;
    const Signature& sig;

    FParser(const std::string& text, const Signature& s) : lex(text), sig(s) {}

    Term term() {
        if (lex.tok == FLexer::T::Var) {
            int v = lex.var;
            lex.advance();
            return Term::variable(v);
        }
        if (lex.tok != FLexer::T::Name)
            throw ParseError("term: expected a variable or function symbol");
        std::string f = lex.name;
        lex.advance();
        std::vector<Term> args;
        if (lex.tok == FLexer::T::LParen) {
            lex.advance();
            if (lex.tok != FLexer::T::RParen) {
                args.push_back(term());
                while (lex.tok == FLexer::T::Comma) {
                    lex.advance();
                    args.push_back(term());
                }
            }
            if (lex.tok != FLexer::T::RParen)
                throw ParseError("term: expected ')' after arguments of " + f);
            lex.advance();
        }
        if (!sig.has_fun(f)) throw ParseError("term: unknown function symbol " + f);
        return Term::apply(f, std::move(args));
    }

    FormulaPtr atom() {
        if (lex.tok == FLexer::T::Top) {
            lex.advance();
            return Formula::top();
        }
        if (lex.tok == FLexer::T::Exists) {
            lex.advance();
            if (lex.tok != FLexer::T::Var)
                throw ParseError("formula: exists must be followed by a variable");
            int v = lex.var;
            lex.advance();
            if (lex.tok != FLexer::T::Dot)
                throw ParseError("formula: expected '.' after exists variable");
            lex.advance();
            return Formula::exists(v, formula());
        }
        if (lex.tok == FLexer::T::LParen) {
            lex.advance();
            FormulaPtr f = formula();
            if (lex.tok != FLexer::T::RParen)
                throw ParseError("formula: expected ')'");
            lex.advance();
            return f;
        }
        // Either a predicate application or the left side of an equation.
        if (lex.tok == FLexer::T::Name && sig.has_pred(lex.name) &&
            !sig.has_fun(lex.name)) {
            std::string p = lex.name;
            lex.advance();
            std::vector<Term> args;
            if (lex.tok == FLexer::T::LParen) {
                lex.advance();
                if (lex.tok != FLexer::T::RParen) {
                    args.push_back(term());
                    while (lex.tok == FLexer::T::Comma) {
                        lex.advance();
                        args.push_back(term());
                    }
                }
                if (lex.tok != FLexer::T::RParen)
                    throw ParseError("formula: expected ')' after arguments of " + p);
                lex.advance();
            }
            return Formula::pred_app(p, std::move(args));
        }
        Term l = term();
        if (lex.tok != FLexer::T::Eq)
            throw ParseError("formula: expected '=' after a term");
        lex.advance();
        Term r = term();
        return Formula::eq(std::move(l), std::move(r));
    }

    FormulaPtr formula() {
        FormulaPtr f = atom();
        while (lex.tok == FLexer::T::And) {
            lex.advance();
            // Right operand: exists extends to the end, so a trailing
            // quantifier swallows the rest.
            FormulaPtr g = atom();
            f = Formula::conj(std::move(f), std::move(g));
        }
        return f;
    }
};

} // namespace

Term parse_term(const std::string& text, const Signature& sig) {
    FParser p(text, sig);
    Term t = p.term();
    if (p.lex.tok != FLexer::T::End) throw ParseError("term: trailing input");
    return t;
}

TermTuple parse_tuple(const std::string& text, int context, const Signature& sig) {
    // Syntax: comma-separated terms, optionally wrapped in < >.
    std::string body = text;
    auto l = body.find('<');
    auto r = body.rfind('>');
    if (l != std::string::npos && r != std::string::npos && l < r)
        body = body.substr(l + 1, r - l - 1);
    TermTuple t;
    t.context = context;
    // Empty tuple: only whitespace.
    bool blank = true;
    for (char c : body)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) {
        check_tuple(t, sig);
        return t;
    }
    FParser p(body, sig);
    t.terms.push_back(p.term());
    while (p.lex.tok == FLexer::T::Comma) {
        p.lex.advance();
        t.terms.push_back(p.term());
    }
    if (p.lex.tok != FLexer::T::End) throw ParseError("tuple: trailing input");
    check_tuple(t, sig);
    return t;
}

FormulaPtr parse_formula(const std::string& text, const Signature& sig) {
    FParser p(text, sig);
    FormulaPtr f = p.formula();
    if (p.lex.tok != FLexer::T::End) throw ParseError("formula: trailing input");
    return f;
}

std::string print_term(const Term& t) {
    if (t.is_var()) return "x" + std::to_string(t.var);
    std::string s = t.fun;
    if (!t.args.empty()) {
        s += "(";
        for (std::size_t i = 0; i < t.args.size(); ++i) {
            if (i) s += ", ";
            s += print_term(t.args[i]);
        }
        s += ")";
    }
    return s;
}

std::string print_tuple(const TermTuple& t) {
    std::string s = "<";
    for (int i = 0; i < t.width(); ++i) {
        if (i) s += ", ";
        s += print_term(t.terms[i]);
    }
    s += ">";
    return s;
}

std::string print_formula(const FormulaPtr& f) {
    switch (f->tag) {
    case Formula::Tag::Top:
        return "T";
    case Formula::Tag::Pred: {
        std::string s = f->pred + "(";
        for (std::size_t i = 0; i < f->args.size(); ++i) {
            if (i) s += ", ";
            s += print_term(f->args[i]);
        }
        return s + ")";
    }
    case Formula::Tag::Eq:
        return print_term(f->lhs) + " = " + print_term(f->rhs);
    case Formula::Tag::And: {
        auto wrap = [](const FormulaPtr& g) {
            std::string s = print_formula(g);
            if (g->tag == Formula::Tag::Exists) return "(" + s + ")";
            return s;
        };
        return wrap(f->l) + " & " + wrap(f->r);
    }
    case Formula::Tag::Exists:
        return "exists x" + std::to_string(f->bound) + ". " + print_formula(f->l);
    }
    throw Error("unreachable");
}

} // namespace regdiag
