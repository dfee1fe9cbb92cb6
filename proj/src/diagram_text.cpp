#include "regdiag/diagram_text.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

#include "regdiag/errors.hpp"

namespace regdiag {

namespace {

enum class Tok { Name, Seq, Tensor, LParen, RParen, AtFun, AtPred, End };

struct Lexer {
    std::string text;
    std::size_t pos = 0;
    Tok tok = Tok::End;
    std::string name;

    explicit Lexer(std::string t) : text(std::move(t)) { advance(); }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    void advance() {
        skip_ws();
        if (pos >= text.size()) {
            tok = Tok::End;
            return;
        }
        char c = text[pos];
        if (c == ';') {
            ++pos;
            tok = Tok::Seq;
            return;
        }
        if (c == '(') {
            // "(x)" is the tensor operator; any other parenthesis groups.
            std::size_t p = pos + 1;
            while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
            if (p < text.size() && text[p] == 'x') {
                std::size_t q = p + 1;
                while (q < text.size() && std::isspace(static_cast<unsigned char>(text[q])))
                    ++q;
                if (q < text.size() && text[q] == ')') {
                    pos = q + 1;
                    tok = Tok::Tensor;
                    return;
                }
            }
            ++pos;
            tok = Tok::LParen;
            return;
        }
        if (c == ')') {
            ++pos;
            tok = Tok::RParen;
            return;
        }
        if (c == '@') {
            std::size_t p = pos + 1;
            std::string kind;
            while (p < text.size() &&
                   std::isalpha(static_cast<unsigned char>(text[p])))
                kind.push_back(text[p++]);
            if (kind == "fun") {
                pos = p;
                tok = Tok::AtFun;
                return;
            }
            if (kind == "pred") {
                pos = p;
                tok = Tok::AtPred;
                return;
            }
            throw ParseError("diagram: expected @fun or @pred at offset " +
                             std::to_string(pos));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            name.clear();
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                    text[pos] == '_'))
                name.push_back(text[pos++]);
            tok = Tok::Name;
            return;
        }
        throw ParseError(std::string("diagram: unexpected character '") + c +
                         "' at offset " + std::to_string(pos));
    }
};

// Recognizes the builtin families. Returns nullopt when `name` is not a
// builtin pattern.
std::optional<DiagramPtr> try_builtin(const std::string& name) {
    auto parse_int = [](const std::string& s, std::size_t from,
                        std::size_t to) -> std::optional<int> {
        if (from == to) return std::nullopt;
        int v = 0;
        for (std::size_t i = from; i < to; ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
            v = v * 10 + (s[i] - '0');
            if (v > 1'000'000) return std::nullopt;
        }
        return v;
    };
    auto suffix_int = [&](const std::string& head) -> std::optional<int> {
        if (name.size() <= head.size() || name.compare(0, head.size(), head) != 0)
            return std::nullopt;
        return parse_int(name, head.size(), name.size());
    };
    auto suffix_pair = [&](const std::string& head)
        -> std::optional<std::pair<int, int>> {
        if (name.size() <= head.size() || name.compare(0, head.size(), head) != 0)
            return std::nullopt;
        auto us = name.find('_', head.size());
        if (us == std::string::npos) return std::nullopt;
        auto a = parse_int(name, head.size(), us);
        auto b = parse_int(name, us + 1, name.size());
        if (!a || !b) return std::nullopt;
        return std::make_pair(*a, *b);
    };

    if (name == "empty") return Diagram::empty();
    if (name == "id") return Diagram::id1();
    if (name == "swap") return Diagram::swap11();
    if (name == "copy") return Diagram::copy1();
    if (name == "discard") return Diagram::discard1();
    if (name == "cocopy") return Diagram::cocopy1();
    if (name == "codiscard") return Diagram::codiscard1();
    if (auto nm = suffix_pair("swap")) return swap_nm(nm->first, nm->second);
    if (auto nm = suffix_pair("top")) return top_nm(nm->first, nm->second);
    if (auto n = suffix_int("id")) return identity(*n);
    if (auto n = suffix_int("copy")) return copy_n(*n);
    if (auto n = suffix_int("discard")) return discard_n(*n);
    if (auto n = suffix_int("cocopy")) return cocopy_n(*n);
    if (auto n = suffix_int("codiscard")) return codiscard_n(*n);
    if (auto n = suffix_int("cup")) return cup_n(*n);
    if (auto n = suffix_int("cap")) return cap_n(*n);
    return std::nullopt;
}

bool is_builtin_pattern(const std::string& name) {
    try {
        return try_builtin(name).has_value();
    } catch (const Error&) {
        // e.g. huge width parameters; still a builtin-shaped name
        return true;
    }
}

struct Parser {
    Lexer lex;
    const Signature& sig;

    Parser(const std::string& text, const Signature& s) : lex(text), sig(s) {}

    DiagramPtr atom() {
        if (lex.tok == Tok::LParen) {
            lex.advance();
            DiagramPtr d = diagram();
            if (lex.tok != Tok::RParen) throw ParseError("diagram: expected ')'");
            lex.advance();
            return d;
        }
        if (lex.tok != Tok::Name)
            throw ParseError("diagram: expected a generator or '('");
        std::string name = lex.name;
        lex.advance();
        if (lex.tok == Tok::AtFun) {
            lex.advance();
            return Diagram::fun_box(name, sig.fun_arity(name));
        }
        if (lex.tok == Tok::AtPred) {
            lex.advance();
            return Diagram::pred_box(name, sig.pred_arity(name));
        }
        if (auto b = try_builtin(name)) return *b;
        bool f = sig.has_fun(name), p = sig.has_pred(name);
        if (f && p)
            throw ParseError("diagram: '" + name +
                             "' is both a function and a predicate; use @fun or @pred");
        if (f) return Diagram::fun_box(name, sig.fun_arity(name));
        if (p) return Diagram::pred_box(name, sig.pred_arity(name));
        throw ParseError("diagram: unknown name '" + name + "'");
    }

    DiagramPtr term() {
        DiagramPtr d = atom();
        while (lex.tok == Tok::Tensor) {
            lex.advance();
            d = Diagram::tensor(d, atom());
        }
        return d;
    }

    DiagramPtr diagram() {
        DiagramPtr d = term();
        while (lex.tok == Tok::Seq) {
            lex.advance();
            d = Diagram::seq(d, term());
        }
        return d;
    }
};

void print_rec(const DiagramPtr& d, const Signature* sig, bool parenthesize_seq,
               std::ostringstream& os) {
    switch (d->tag()) {
    case Diagram::Tag::Gen:
        switch (d->gen_kind()) {
        case GenKind::Empty:
            os << "empty";
            return;
        case GenKind::Id:
            os << "id";
            return;
        case GenKind::Swap:
            os << "swap";
            return;
        case GenKind::Copy:
            os << "copy";
            return;
        case GenKind::Discard:
            os << "discard";
            return;
        case GenKind::Cocopy:
            os << "cocopy";
            return;
        case GenKind::Codiscard:
            os << "codiscard";
            return;
        case GenKind::FunBox: {
            bool suffix = is_builtin_pattern(d->symbol()) ||
                          (sig && sig->has_pred(d->symbol()));
            os << d->symbol();
            if (suffix) os << "@fun";
            return;
        }
        case GenKind::PredBox: {
            bool suffix = is_builtin_pattern(d->symbol()) ||
                          (sig && sig->has_fun(d->symbol()));
            os << d->symbol();
            if (suffix) os << "@pred";
            return;
        }
        case GenKind::Hole:
            os << "?" << d->symbol() << "[" << d->dom() << "," << d->cod() << "]";
            return;
        }
        return;
    case Diagram::Tag::Seq:
        if (parenthesize_seq) os << "(";
        print_rec(d->left(), sig, false, os);
        os << " ; ";
        print_rec(d->right(), sig, false, os);
        if (parenthesize_seq) os << ")";
        return;
    case Diagram::Tag::Tensor:
        print_rec(d->left(), sig, true, os);
        os << " (x) ";
        print_rec(d->right(), sig, true, os);
        return;
    }
}

} // namespace

DiagramPtr parse_diagram(const std::string& text, const Signature& sig) {
    Parser p(text, sig);
    DiagramPtr d = p.diagram();
    if (p.lex.tok != Tok::End)
        throw ParseError("diagram: trailing input after a complete diagram");
    return d;
}

std::string print_diagram(const DiagramPtr& d, const Signature* sig) {
    std::ostringstream os;
    print_rec(d, sig, false, os);
    return os.str();
}

} // namespace regdiag
