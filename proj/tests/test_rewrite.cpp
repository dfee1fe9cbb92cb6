#include <doctest.h>

#include <string>
#include <vector>

#include "fixtures_path.hpp"
#include "regdiag/countermodel.hpp"
#include "regdiag/derivation.hpp"
#include "regdiag/diagram.hpp"
#include "regdiag/errors.hpp"
#include "regdiag/finrel.hpp"
#include "regdiag/portgraph.hpp"
#include "regdiag/rules.hpp"
#include "regdiag/signature.hpp"

using namespace regdiag;

namespace {

Signature sig_fP() {
    return Signature::from_json_text(
        R"({"functions": {"f": 1}, "predicates": {"P": 2}})");
}

Signature sig_empty() {
    return Signature::from_json_text(R"({"functions": {}, "predicates": {}})");
}

} // namespace

TEST_CASE("the catalog carries the axioms with their metadata") {
    auto catalog = rule_catalog(sig_fP());
    const RewriteRule* assoc = find_rule(catalog, "comonoid.assoc");
    REQUIRE(assoc);
    CHECK(assoc->equality);
    CHECK(assoc->group == "comonoid");

    const RewriteRule* unit = find_rule(catalog, "adj.copy.unit");
    REQUIRE(unit);
    CHECK_FALSE(unit->equality);
    CHECK(unit->group == "adjunction");

    const RewriteRule* natc = find_rule(catalog, "natcopy@f");
    REQUIRE(natc);
    CHECK(natc->equality);
    CHECK(natc->group == "map-naturality");

    const RewriteRule* lax = find_rule(catalog, "lax.copy");
    REQUIRE(lax);
    CHECK_FALSE(lax->equality);
    CHECK(lax->needs_metavar);
    CHECK(lax->width_params == 2);

    CHECK(find_rule(catalog, "no.such.rule") == nullptr);

    // both sides of every instantiated rule share one interface
    DiagramPtr box = Diagram::fun_box("f", 1);
    for (const auto& r : catalog) {
        std::vector<int> widths(r.width_params, 1);
        auto [lhs, rhs] = r.build(widths, r.needs_metavar ? box : nullptr);
        CAPTURE(r.name);
        CHECK(lhs->dom() == rhs->dom());
        CHECK(lhs->cod() == rhs->cod());
    }
}

TEST_CASE("single steps rewrite inside a context") {
    auto catalog = rule_catalog(sig_fP());

    DerivationStep unit;
    unit.rule = "adj.copy.unit";
    DiagramPtr stepped = apply_step(identity(1), unit, catalog);
    CHECK(iso_equal(stepped,
                    Diagram::seq(Diagram::copy1(), Diagram::cocopy1())));

    // inequalities only apply left to right
    unit.forward = false;
    CHECK_THROWS_AS(apply_step(stepped, unit, catalog),
                    BackwardOnInequalityError);

    // equalities run both ways
    DerivationStep comm;
    comm.rule = "comonoid.comm";
    comm.forward = false;
    DiagramPtr flipped = apply_step(Diagram::copy1(), comm, catalog);
    CHECK(iso_equal(flipped, Diagram::seq(Diagram::copy1(), Diagram::swap11())));
    comm.forward = true;
    CHECK(iso_equal(apply_step(flipped, comm, catalog), Diagram::copy1()));

    // padding positions the redex inside a wider bus
    DerivationStep padded;
    padded.rule = "comonoid.unit";
    padded.forward = false; // id -> copy;(discard (x) id)
    padded.left_pad = 1;
    DiagramPtr wide = apply_step(identity(2), padded, catalog);
    CHECK(wide->dom() == 2);
    CHECK(iso_equal(wide,
                    Diagram::tensor(identity(1),
                                    Diagram::seq(Diagram::copy1(),
                                                 Diagram::tensor(Diagram::discard1(),
                                                                 identity(1))))));

    DerivationStep unknown;
    unknown.rule = "no.such.rule";
    CHECK_THROWS_AS(apply_step(identity(1), unknown, catalog), UnknownRuleError);

    // the rest of the diagram must reproduce the claimed factorization
    DerivationStep misplaced;
    misplaced.rule = "comonoid.comm";
    misplaced.forward = false;
    CHECK_THROWS_AS(apply_step(Diagram::fun_box("f", 1), misplaced, catalog),
                    ContextMismatchError);
}

TEST_CASE("parametric rules instantiate against their metavariable") {
    auto catalog = rule_catalog(sig_fP());
    DiagramPtr f = Diagram::fun_box("f", 1);

    DerivationStep lax;
    lax.rule = "lax.copy";
    lax.widths = {1, 1};
    lax.metavar = f;
    DiagramPtr start = Diagram::seq(f, Diagram::copy1());
    DiagramPtr stepped = apply_step(start, lax, catalog);
    CHECK(iso_equal(stepped,
                    Diagram::seq(Diagram::copy1(), Diagram::tensor(f, f))));

    DerivationStep wrong;
    wrong.rule = "lax.copy";
    wrong.widths = {2, 1};
    wrong.metavar = f;
    CHECK_THROWS_AS(apply_step(start, wrong, catalog), BadInstantiationError);

    DerivationStep missing;
    missing.rule = "lax.discard";
    missing.widths = {1, 1};
    CHECK_THROWS_AS(apply_step(Diagram::seq(f, Diagram::discard1()), missing,
                               catalog),
                    BadInstantiationError);
}

TEST_CASE("derivations replay end to end") {
    Signature sig = sig_fP();

    Derivation d;
    d.start = identity(1);
    d.goal = Diagram::seq(Diagram::seq(Diagram::copy1(), Diagram::swap11()),
                          Diagram::cocopy1());
    DerivationStep s1;
    s1.rule = "adj.copy.unit";
    DerivationStep s2;
    s2.rule = "comonoid.comm";
    s2.forward = false;
    s2.c2 = Diagram::cocopy1();
    d.steps = {s1, s2};

    DerivationVerdict v = check_derivation(d, sig);
    CHECK(v.accepted);
    CHECK(v.relation() == "<=");
    REQUIRE(v.trace.size() == 2);
    CHECK(v.trace[1].ok);

    // an equality claim fails when an inequality step was used
    d.claims_equality = true;
    DerivationVerdict ve = check_derivation(d, sig);
    CHECK_FALSE(ve.accepted);

    // pure equality chains certify =
    Derivation e;
    e.start = Diagram::copy1();
    e.goal = Diagram::seq(Diagram::copy1(), Diagram::swap11());
    e.claims_equality = true;
    DerivationStep flip;
    flip.rule = "comonoid.comm";
    flip.forward = false;
    e.steps = {flip};
    DerivationVerdict vq = check_derivation(e, sig);
    CHECK(vq.accepted);
    CHECK(vq.relation() == "=");

    // a derivation that ends elsewhere is rejected with a reason
    Derivation miss = d;
    miss.claims_equality = false;
    miss.goal = Diagram::seq(Diagram::copy1(), Diagram::cocopy1());
    DerivationVerdict vm = check_derivation(miss, sig);
    CHECK_FALSE(vm.accepted);
    CHECK_FALSE(vm.reason.empty());
}

TEST_CASE("shipped derivation certificates replay") {
    Signature se = sig_empty();

    struct Expect {
        const char* file;
        std::size_t steps;
    };
    for (Expect e : {Expect{"snake2_le.deriv", 4}, Expect{"snake2_ge.deriv", 6},
                     Expect{"snake1_le.deriv", 8}, Expect{"snake1_ge.deriv", 10}}) {
        CAPTURE(e.file);
        Derivation d = derivation_from_file(fx(e.file), se);
        CHECK(d.steps.size() == e.steps);
        DerivationVerdict v = check_derivation(d, se);
        CHECK(v.accepted);
        CHECK(v.relation() == "<=");
    }

    // the two directions pair up: each goal is the other start
    Derivation le = derivation_from_file(fx("snake1_le.deriv"), se);
    Derivation ge = derivation_from_file(fx("snake1_ge.deriv"), se);
    CHECK(iso_equal(le.start, ge.goal));
    CHECK(iso_equal(le.goal, ge.start));
    CHECK(iso_equal(le.goal, identity(1)));

    Signature sf = sig_fP();
    Derivation ex = derivation_from_file(fx("example45.deriv"), sf);
    DerivationVerdict v = check_derivation(ex, sf);
    CHECK(v.accepted);
    CHECK(v.relation() == "<=");
    CHECK(ex.steps.size() == 5);

    // JSON round trip preserves the verdict
    Derivation again =
        derivation_from_json_text(derivation_to_json_text(ex, sf), sf);
    CHECK(check_derivation(again, sf).accepted);
}

TEST_CASE("every axiom is sound in a concrete model") {
    Signature sig = sig_fP();
    FinModel m = FinModel::from_file(fx("model_fP.json"), sig);
    Report rep = check_axiom_soundness(m, rule_catalog(sig));
    CHECK(rep.ok());
    // one clause per rule, none silently empty
    CHECK(rep.clauses.size() == rule_catalog(sig).size());
    for (const auto& c : rep.clauses) {
        CAPTURE(c.name);
        CHECK(c.checked > 0);
    }
}
