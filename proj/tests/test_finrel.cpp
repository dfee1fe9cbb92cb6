#include <doctest.h>

#include <random>
#include <string>

#include "fixtures_path.hpp"
#include "regdiag/diagram.hpp"
#include "regdiag/diagram_text.hpp"
#include "regdiag/errors.hpp"
#include "regdiag/finrel.hpp"
#include "regdiag/signature.hpp"

using namespace regdiag;

namespace {

Signature sig_fP() {
    return Signature::from_json_text(
        R"({"functions": {"f": 1}, "predicates": {"P": 2}})");
}

// carrier {0,1}, f(a) = 0, P = {(1,0)}
FinModel two_model() {
    return FinModel::from_json_text(
        R"({"carrier": ["0", "1"],
            "functions": {"f": {"0": "0", "1": "0"}},
            "predicates": {"P": [["1", "0"]]}})",
        sig_fP());
}

} // namespace

TEST_CASE("models load, validate and round trip") {
    FinModel m = FinModel::from_file(fx("model_fP.json"), sig_fP());
    CHECK_NOTHROW(m.validate());
    CHECK(m.size == 2);
    CHECK(m.elem_by_name("1") == 1);
    FinModel back = FinModel::from_json_text(m.to_json_text(), sig_fP());
    CHECK(back.fun == m.fun);
    CHECK(back.size == m.size);

    // partial function tables are rejected
    CHECK_THROWS_AS(FinModel::from_json_text(
                        R"({"carrier": ["0", "1"],
                            "functions": {"f": {"0": "0"}},
                            "predicates": {"P": []}})",
                        sig_fP()),
                    ModelError);
    // unknown elements are rejected
    CHECK_THROWS_AS(FinModel::from_json_text(
                        R"({"carrier": ["0"],
                            "functions": {"f": {"0": "2"}},
                            "predicates": {"P": []}})",
                        sig_fP()),
                    ModelError);
}

TEST_CASE("tuple indices are leftmost major") {
    std::vector<int> t = decode_tuple(5, 2, 3);
    REQUIRE(t.size() == 3);
    CHECK(t[0] == 1);
    CHECK(t[1] == 0);
    CHECK(t[2] == 1);
    CHECK(ipow(3, 4) == 81);
    FinModel m = two_model();
    CHECK(tuple_to_string(m, 2, 2) == "(1,0)");
}

TEST_CASE("generator semantics on a two element carrier") {
    FinModel m = two_model();

    FinRelation copy = eval_diagram(m, Diagram::copy1());
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                CHECK(copy.get(a, b * 2 + c) == (a == b && a == c));

    FinRelation cod = eval_diagram(m, Diagram::codiscard1());
    CHECK(cod.get(0, 0));
    CHECK(cod.get(0, 1));

    FinRelation cap = eval_diagram(m, cap_n(1));
    CHECK(cap.pair_count() == 2);
    CHECK(cap.get(0, 0));
    CHECK(cap.get(3, 0));
    CHECK_FALSE(cap.get(1, 0));

    FinRelation sw = eval_diagram(m, Diagram::swap11());
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            CHECK(sw.get(a * 2 + b, b * 2 + a));

    FinRelation f = eval_diagram(m, Diagram::fun_box("f", 1));
    CHECK(f.get(0, 0));
    CHECK(f.get(1, 0));
    CHECK_FALSE(f.get(1, 1));

    FinRelation p = eval_diagram(m, Diagram::pred_box("P", 2));
    CHECK(p.pair_count() == 1);
    CHECK(p.get(2, 0)); // tuple (1,0)

    // the whole-bus copy duplicates tuples, not single wires
    FinRelation c2 = eval_diagram(m, copy_n(2));
    for (std::size_t ab = 0; ab < 4; ++ab)
        CHECK(c2.get(ab, ab * 4 + ab));
    CHECK(c2.pair_count() == 4);
}

TEST_CASE("relation algebra identities") {
    std::mt19937_64 rng(7);
    auto random_rel = [&](int k, int dw, int cw) {
        FinRelation r(k, dw, cw);
        for (std::size_t a = 0; a < r.dom_size(); ++a)
            for (std::size_t b = 0; b < r.cod_size(); ++b)
                if (rng() & 1) r.set(a, b);
        return r;
    };

    for (int trial = 0; trial < 10; ++trial) {
        FinRelation r = random_rel(2, 1, 2), s = random_rel(2, 2, 1),
                    t = random_rel(2, 1, 1);
        CHECK(rel_compose(rel_compose(r, s), t) ==
              rel_compose(r, rel_compose(s, t)));
        CHECK(rel_compose(rel_identity(2, 1), r) == r);
        CHECK(rel_compose(r, rel_identity(2, 2)) == r);
        CHECK(rel_converse(rel_converse(r)) == r);
        CHECK(rel_converse(rel_compose(r, s)) ==
              rel_compose(rel_converse(s), rel_converse(r)));
        CHECK(rel_subset(rel_meet(r, r), r));
    }

    FinRelation a(2, 1, 1), b(2, 1, 1);
    a.set(0, 1);
    b.set(0, 1);
    b.set(1, 0);
    InclusionResult inc = check_inclusion(a, b);
    CHECK(inc.holds);
    InclusionResult rev = check_inclusion(b, a);
    CHECK_FALSE(rev.holds);
    CHECK(rev.witness_dom == 1);
    CHECK(rev.witness_cod == 0);
    CHECK(b.get(rev.witness_dom, rev.witness_cod));
    CHECK_FALSE(a.get(rev.witness_dom, rev.witness_cod));
}

TEST_CASE("evaluation is compositional and interface checked") {
    FinModel m = two_model();
    Signature sig = sig_fP();
    DiagramPtr d1 = parse_diagram("copy ; (f (x) id)", sig);
    DiagramPtr d2 = parse_diagram("P", sig);
    CHECK(eval_diagram(m, Diagram::seq(d1, d2)) ==
          rel_compose(eval_diagram(m, d1), eval_diagram(m, d2)));
    CHECK(eval_diagram(m, Diagram::tensor(d1, d2)) ==
          rel_tensor(eval_diagram(m, d1), eval_diagram(m, d2)));

    // the width cap guards against exponential intermediate relations
    CHECK_THROWS_AS(eval_diagram(m, top_nm(0, 40), 1u << 20), SizeBudgetError);
}

TEST_CASE("bent wires compose to the identity semantically") {
    Signature sig = sig_fP();
    DiagramPtr snake = Diagram::seq(
        Diagram::tensor(codiscard_n(1), identity(1)),
        Diagram::seq(Diagram::tensor(copy_n(1), identity(1)),
                     Diagram::tensor(identity(1), cap_n(1))));
    // structurally far from the identity, semantically equal to it
    CHECK(snake->dom() == 1);
    CHECK(snake->cod() == 1);
    for (int k = 1; k <= 3; ++k) {
        FinModel m;
        m.sig = Signature::from_json_text(
            R"({"functions": {}, "predicates": {}})");
        m.size = k;
        for (int e = 0; e < k; ++e) m.elem_names.push_back(std::to_string(e));
        FinRelation got = eval_diagram(m, snake);
        CHECK(got == rel_identity(k, 1));
    }
}
