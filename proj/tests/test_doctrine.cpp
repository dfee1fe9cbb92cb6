#include <doctest.h>

#include <string>

#include "fixtures_path.hpp"
#include "regdiag/base.hpp"
#include "regdiag/bicat_check.hpp"
#include "regdiag/composed_doctrine.hpp"
#include "regdiag/doctrine_check.hpp"
#include "regdiag/errors.hpp"
#include "regdiag/functor.hpp"
#include "regdiag/pow_doctrine.hpp"
#include "regdiag/table_doctrine.hpp"

using namespace regdiag;

namespace {

BaseCategory base01() { return BaseCategory({{"A", {"0", "1"}}}); }

} // namespace

TEST_CASE("the base category keeps strict product bookkeeping") {
    BaseCategory b = base01();
    BaseCategory::Obj A = b.atom(0);
    BaseCategory::Obj AA = b.prod(A, A);
    CHECK(b.card(AA) == 4);
    CHECK(b.obj_name(AA) == "(A x A)");
    CHECK(b.elem_name(AA, 2) == "(1,0)");

    // pairing and projections satisfy the product equations
    auto p1 = b.proj1(AA), p2 = b.proj2(AA);
    auto d = b.diag(A);
    CHECK(b.compose(d, p1) == b.id(A));
    CHECK(b.compose(d, p2) == b.id(A));
    CHECK(b.pair(p1, p2) == b.id(AA));

    CHECK(b.is_bijective(b.symm(AA)));
    CHECK(b.compose(b.symm(AA), b.symm(b.prod(A, A))) == b.id(AA));

    b.list_objects(1);
    CHECK(b.is_listed(A));
    CHECK(b.is_listed(b.unit()));

    // the element cap stops runaway auxiliary objects
    BaseCategory tiny({{"A", {"0", "1"}}}, 8);
    BaseCategory::Obj X = tiny.prod(tiny.atom(0), tiny.atom(0));
    CHECK_THROWS_AS(tiny.prod(X, X), SizeBudgetError);
}

TEST_CASE("powerset fibers implement the doctrine operations directly") {
    BaseCategory b = base01();
    PowersetDoctrine P(b);
    BaseCategory::Obj A = b.atom(0);
    BaseCategory::Obj AA = b.prod(A, A);

    BitVec dl = P.delta(A);
    CHECK(dl.get(0));
    CHECK(dl.get(3));
    CHECK_FALSE(dl.get(1));

    // reindexing along the diagonal pulls a square predicate to its trace
    BitVec sq(4);
    sq.set(1);
    sq.set(3);
    BitVec tr = P.reindex(b.diag(A), sq);
    CHECK_FALSE(tr.get(0));
    CHECK(tr.get(1));

    // projections of a singleton
    BitVec one(4);
    one.set(2); // (1,0)
    BitVec l = P.exists1(AA, one);
    BitVec r = P.exists2(AA, one);
    CHECK(l.get(1));
    CHECK_FALSE(l.get(0));
    CHECK(r.get(0));
    CHECK_FALSE(r.get(1));

    CHECK(P.fiber_size(AA) == 16);
    CHECK(P.leq(AA, P.meet(AA, dl, dl), P.top(AA)));
    CHECK(P.eq(AA, P.meet(AA, dl, P.top(AA)), dl));
}

TEST_CASE("the powerset doctrine satisfies the axioms") {
    BaseCategory b = base01();
    PowersetDoctrine P(b);
    Report rep = validate_doctrine(P);
    CHECK(rep.ok());
    REQUIRE(rep.find("exists.frobenius"));
    CHECK(rep.find("exists.frobenius")->checked > 0);
    CHECK(rep.find("exists.beck_chevalley"));
    CHECK(rep.find("equality.general"));
}

TEST_CASE("recorded tables replay the live doctrine") {
    TableDoctrine td = TableDoctrine::from_file(fx("pow2.doctrine.json"));
    Report rep = validate_doctrine(td);
    CHECK(rep.ok());

    // fiberwise the tables are the live powerset doctrine, order and all
    PowersetDoctrine P(td.base());
    Report iso = check_fiberwise_order_iso(td, P);
    CHECK(iso.ok());
    REQUIRE(iso.find("order.agree"));
    CHECK(iso.find("order.agree")->checked > 0);
}

TEST_CASE("table loading rejects malformed files with precise errors") {
    CHECK_THROWS_AS(TableDoctrine::from_file(fx("missing_delta.doctrine.json")),
                    MissingTableError);
    CHECK_THROWS_AS(TableDoctrine::from_file(fx("nonmonotone.doctrine.json")),
                    NonMonotoneReindexingError);

    // unknown object reference
    CHECK_THROWS_AS(TableDoctrine::from_json_text(R"json({
        "atoms": [{"name": "A", "elements": ["0"]}],
        "objects": ["A"],
        "fibers": {"B": {"elements": ["e"], "covers": [], "top": 0}}
    })json"),
                    SchemaError);

    // cover cycles cannot define an order
    CHECK_THROWS_AS(TableDoctrine::from_json_text(R"json({
        "atoms": [{"name": "A", "elements": ["0"]}],
        "objects": ["A"],
        "fibers": {"A": {"elements": ["a", "b"],
                          "covers": [[0, 1], [1, 0]], "top": 0}},
        "delta": {},
        "exists1": {},
        "exists2": {},
        "reindex": {}
    })json"),
                    SchemaError);
}

TEST_CASE("a corrupted quantifier table is caught with a witness") {
    TableDoctrine td = TableDoctrine::from_file(fx("bad_exists.doctrine.json"));
    Report rep = validate_doctrine(td);
    CHECK_FALSE(rep.ok());
    const ClauseResult* fr = rep.find("exists.frobenius");
    REQUIRE(fr);
    CHECK_FALSE(fr->passed());
    REQUIRE_FALSE(fr->failures.empty());
    CHECK(fr->failures[0].find("(A x A)") != std::string::npos);
}

TEST_CASE("composing with a power functor keeps the laws but not choice") {
    BaseCategory src = base01();
    BaseCategory dst = power_target(src, 2);
    FunctorData F = atom_power_functor(src, dst, 2);
    CHECK_NOTHROW(validate_strict_cartesian(F));

    PowersetDoctrine pow(dst);
    ComposedDoctrine<PowersetDoctrine> Q(pow, F);
    Report laws = validate_doctrine(Q);
    CHECK(laws.ok());

    // squaring the carrier leaves single swaps with no base witness
    Report ruc = check_ruc(Q);
    CHECK_FALSE(ruc.ok());
    const ClauseResult* wit = ruc.find("maps.have_witness");
    REQUIRE(wit);
    CHECK_FALSE(wit->failures.empty());
}

TEST_CASE("fiberwise comparison notices order disagreements") {
    BaseCategory b = base01();
    PowersetDoctrine P(b), Q(b);
    CHECK(check_fiberwise_order_iso(P, Q).ok());

    // a table whose fiber over A is a mere chain is not the powerset
    TableDoctrine chain = TableDoctrine::from_json_text(R"json({
        "atoms": [{"name": "A", "elements": ["0", "1"]}],
        "objects": ["A"],
        "fibers": {"A": {"elements": ["bot", "mid", "top"],
                          "covers": [[0, 1], [1, 2]], "top": 2}},
        "delta": {},
        "exists1": {},
        "exists2": {},
        "reindex": {}
    })json");
    PowersetDoctrine full(chain.base());
    Report bad = check_fiberwise_order_iso(chain, full);
    CHECK_FALSE(bad.ok());
    REQUIRE(bad.find("fiber.sizes"));
    CHECK_FALSE(bad.find("fiber.sizes")->passed());
    // fibers the table does not declare are skipped, not failed
    REQUIRE_FALSE(bad.find("fiber.sizes")->notes.empty());
}
