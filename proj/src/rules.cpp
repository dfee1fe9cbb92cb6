#include "regdiag/rules.hpp"

#include "regdiag/errors.hpp"

namespace regdiag {

namespace {

using Pair = std::pair<DiagramPtr, DiagramPtr>;

void expect_plain(const std::vector<int>& widths, const DiagramPtr& mv,
                  const std::string& name) {
    if (!widths.empty())
        throw BadInstantiationError(name + " takes no width parameters");
    if (mv)
        throw BadInstantiationError(name + " takes no metavariable");
}

RewriteRule plain(std::string name, std::string group, std::string desc,
                  bool equality, DiagramPtr lhs, DiagramPtr rhs) {
    RewriteRule r;
    r.name = name;
    r.group = std::move(group);
    r.description = std::move(desc);
    r.equality = equality;
    r.build = [name, lhs, rhs](const std::vector<int>& widths,
                               const DiagramPtr& mv) -> Pair {
        expect_plain(widths, mv, name);
        return {lhs, rhs};
    };
    return r;
}

void expect_metavar(const std::vector<int>& widths, const DiagramPtr& mv,
                    const std::string& name) {
    if (widths.size() != 2)
        throw BadInstantiationError(name + " takes width parameters [n, m]");
    if (widths[0] < 0 || widths[1] < 0)
        throw BadInstantiationError(name + ": negative width parameter");
    if (!mv) throw BadInstantiationError(name + " needs a metavariable diagram");
    if (mv->dom() != widths[0] || mv->cod() != widths[1])
        throw BadInstantiationError(
            name + ": metavariable has interface " + std::to_string(mv->dom()) +
            " -> " + std::to_string(mv->cod()) + ", parameters say " +
            std::to_string(widths[0]) + " -> " + std::to_string(widths[1]));
}

} // namespace

std::vector<RewriteRule> rule_catalog(const Signature& sig) {
    std::vector<RewriteRule> rules;
    auto id = Diagram::id1();
    auto sw = Diagram::swap11();
    auto cp = Diagram::copy1();
    auto dc = Diagram::discard1();
    auto cc = Diagram::cocopy1();
    auto cd = Diagram::codiscard1();

    rules.push_back(plain(
        "comonoid.assoc", "comonoid", "copying twice associates", true,
        Diagram::seq(cp, Diagram::tensor(cp, id)),
        Diagram::seq(cp, Diagram::tensor(id, cp))));
    rules.push_back(plain("comonoid.comm", "comonoid",
                          "the two copies are interchangeable", true,
                          Diagram::seq(cp, sw), cp));
    rules.push_back(plain("comonoid.unit", "comonoid",
                          "copying then discarding one copy is a wire", true,
                          Diagram::seq(cp, Diagram::tensor(dc, id)), id));

    rules.push_back(plain("adj.copy.unit", "adjunction",
                          "a wire is below copy;cocopy", false, id,
                          Diagram::seq(cp, cc)));
    rules.push_back(plain("adj.copy.counit", "adjunction",
                          "cocopy;copy is below parallel wires", false,
                          Diagram::seq(cc, cp), identity(2)));
    rules.push_back(plain("adj.discard.unit", "adjunction",
                          "a wire is below discard;codiscard", false, id,
                          Diagram::seq(dc, cd)));
    rules.push_back(plain("adj.discard.counit", "adjunction",
                          "codiscard;discard is below nothing", false,
                          Diagram::seq(cd, dc), Diagram::empty()));

    rules.push_back(plain(
        "frobenius", "frobenius", "copy and cocopy slide past each other", true,
        Diagram::seq(Diagram::tensor(cp, id), Diagram::tensor(id, cc)),
        Diagram::seq(cc, cp)));

    for (const auto& f : sig.fun_names()) {
        int ar = sig.fun_arity(f);
        auto box = Diagram::fun_box(f, ar);
        rules.push_back(plain(
            "natcopy@" + f, "map-naturality",
            "copying the output of " + f + " equals copying its inputs", true,
            Diagram::seq(box, cp),
            Diagram::seq(copy_n(ar), Diagram::tensor(box, box))));
        rules.push_back(plain(
            "natdis@" + f, "map-naturality",
            "discarding the output of " + f + " discards its inputs", true,
            Diagram::seq(box, dc), discard_n(ar)));
    }

    {
        RewriteRule r;
        r.name = "lax.copy";
        r.group = "lax";
        r.description = "running a diagram then copying is below copying then "
                        "running it twice";
        r.equality = false;
        r.width_params = 2;
        r.needs_metavar = true;
        r.build = [](const std::vector<int>& widths, const DiagramPtr& mv) -> Pair {
            expect_metavar(widths, mv, "lax.copy");
            int n = widths[0], m = widths[1];
            return {Diagram::seq(mv, copy_n(m)),
                    Diagram::seq(copy_n(n), Diagram::tensor(mv, mv))};
        };
        rules.push_back(std::move(r));
    }
    {
        RewriteRule r;
        r.name = "lax.discard";
        r.group = "lax";
        r.description = "running a diagram then discarding is below discarding";
        r.equality = false;
        r.width_params = 2;
        r.needs_metavar = true;
        r.build = [](const std::vector<int>& widths, const DiagramPtr& mv) -> Pair {
            expect_metavar(widths, mv, "lax.discard");
            int n = widths[0], m = widths[1];
            return {Diagram::seq(mv, discard_n(m)), discard_n(n)};
        };
        rules.push_back(std::move(r));
    }

    return rules;
}

const RewriteRule* find_rule(const std::vector<RewriteRule>& catalog,
                             const std::string& name) {
    for (const auto& r : catalog)
        if (r.name == name) return &r;
    return nullptr;
}

} // namespace regdiag
