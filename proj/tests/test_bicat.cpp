#include <doctest.h>

#include <cstdint>
#include <random>
#include <set>
#include <string>

#include "regdiag/base.hpp"
#include "regdiag/bicat.hpp"
#include "regdiag/bicat_check.hpp"
#include "regdiag/bitvec.hpp"
#include "regdiag/pow_doctrine.hpp"
#include "regdiag/rdoctrine.hpp"

using namespace regdiag;

namespace {

// Deliberately wrong backend: composition forgets its arguments. Everything
// else is the honest relational semantics.
class BrokenRel {
public:
    using Obj = BaseCategory::Obj;
    using Hom = BitVec;

    explicit BrokenRel(BaseCategory& b) : inner_(b) {}
    BaseCategory& base() { return inner_.base(); }

    Hom top(Obj x, Obj y) { return inner_.top(x, y); }
    Hom meet(Obj x, Obj y, const Hom& f, const Hom& g) {
        return inner_.meet(x, y, f, g);
    }
    bool leq(Obj x, Obj y, const Hom& f, const Hom& g) {
        return inner_.leq(x, y, f, g);
    }
    bool eq(Obj x, Obj y, const Hom& f, const Hom& g) {
        return inner_.eq(x, y, f, g);
    }
    Hom identity(Obj x) { return inner_.identity(x); }
    Hom compose(Obj x, Obj /*y*/, Obj z, const Hom&, const Hom&) {
        return inner_.top(x, z);
    }
    Hom tensor(Obj a, Obj b, Obj c, Obj d, const Hom& f, const Hom& g) {
        return inner_.tensor(a, b, c, d, f, g);
    }
    Hom opposite(Obj x, Obj y, const Hom& f) { return inner_.opposite(x, y, f); }
    Hom graph_of(const BaseCategory::Mor& f) { return inner_.graph_of(f); }
    Hom copy(Obj x) { return inner_.copy(x); }
    Hom discard(Obj x) { return inner_.discard(x); }
    Hom cocopy(Obj x) { return inner_.cocopy(x); }
    Hom codiscard(Obj x) { return inner_.codiscard(x); }
    Hom cup(Obj x) { return inner_.cup(x); }
    Hom cap(Obj x) { return inner_.cap(x); }
    bool is_map(Obj x, Obj y, const Hom& R) { return inner_.is_map(x, y, R); }
    std::uint64_t hom_size(Obj x, Obj y) { return inner_.hom_size(x, y); }
    Hom hom_at(Obj x, Obj y, std::uint64_t i) { return inner_.hom_at(x, y, i); }
    Hom random_hom(Obj x, Obj y, std::mt19937_64& rng) {
        return inner_.random_hom(x, y, rng);
    }
    std::string hom_repr(Obj x, Obj y, const Hom& R) {
        return inner_.hom_repr(x, y, R);
    }

private:
    RelTruncation inner_;
};

} // namespace

TEST_CASE("relational operations on the two element atom") {
    BaseCategory b({{"A", {"0", "1"}}});
    RelTruncation rel(b);
    BaseCategory::Obj A = b.atom(0);

    BitVec id = rel.identity(A);
    CHECK(rel.hom_repr(A, A, id) == "{(0,0),(1,1)}");

    // a relation and its converse, composed by hand
    BitVec r = rel.hom_at(A, A, 0b0110); // {(0,1),(1,0)}, bit a*2+b
    CHECK(rel.eq(A, A, rel.compose(A, A, A, r, r), id));
    CHECK(rel.eq(A, A, rel.opposite(A, A, r), r));
    BitVec s = rel.hom_at(A, A, 0b0010); // {(0,1)}
    CHECK(rel.hom_repr(A, A, rel.opposite(A, A, s)) == "{(1,0)}");

    // composing with the full relation saturates reachable rows
    BitVec full = rel.top(A, A);
    CHECK(rel.eq(A, A, rel.compose(A, A, A, full, full), full));

    // the comonoid transposes bend as expected
    BaseCategory::Obj AA = b.prod(A, A);
    CHECK(rel.eq(A, AA, rel.copy(A),
                 rel.opposite(AA, A, rel.cocopy(A))));
    BitVec cup = rel.cup(A);
    CHECK(cup.get(0 * 4 + 0));
    CHECK(cup.get(0 * 4 + 3));
    CHECK_FALSE(cup.get(0 * 4 + 1));
}

TEST_CASE("maps of the relational bicategory are function graphs") {
    BaseCategory b({{"A", {"0", "1"}}});
    RelTruncation rel(b);
    BaseCategory::Obj A = b.atom(0);

    std::set<std::uint64_t> maps;
    for (std::uint64_t i = 0; i < rel.hom_size(A, A); ++i)
        if (rel.is_map(A, A, rel.hom_at(A, A, i))) maps.insert(i);
    CHECK(maps.size() == 4);

    std::set<std::uint64_t> graphs;
    b.each_hom(A, A, [&](const BaseCategory::Mor& f) {
        BitVec g = rel.graph_of(f);
        for (std::uint64_t i = 0; i < rel.hom_size(A, A); ++i)
            if (rel.eq(A, A, g, rel.hom_at(A, A, i))) graphs.insert(i);
        return true;
    });
    CHECK(graphs == maps);
}

TEST_CASE("the doctrine bicategory matches the direct semantics") {
    BaseCategory b({{"A", {"0", "1"}}});
    RelTruncation rel(b);
    PowersetDoctrine P(b);
    BicatOfDoctrine<PowersetDoctrine> bp(P);
    BaseCategory::Obj A = b.atom(0);
    BaseCategory::Obj I = b.unit();

    CHECK(bp.identity(A) == rel.identity(A));
    CHECK(bp.copy(A) == rel.copy(A));
    CHECK(bp.cap(A) == rel.cap(A));
    CHECK(bp.top(A, A) == rel.top(A, A));

    BitVec f = rel.hom_at(A, A, 0b0111);
    BitVec g = rel.hom_at(A, A, 0b1001);
    CHECK(bp.compose(A, A, A, f, g) == rel.compose(A, A, A, f, g));
    CHECK(bp.opposite(A, A, f) == rel.opposite(A, A, f));
    CHECK(bp.tensor(A, A, A, A, f, g) == rel.tensor(A, A, A, A, f, g));

    BitVec h = rel.hom_at(I, A, 0b10);
    CHECK(bp.compose(A, A, A, f, bp.identity(A)) == f);
    CHECK(bp.compose(I, A, A, h, g) == rel.compose(I, A, A, h, g));
    CHECK(bp.is_map(A, A, rel.identity(A)));
    CHECK_FALSE(bp.is_map(A, A, rel.top(A, A)));
}

TEST_CASE("both relational backends satisfy the bicategory axioms") {
    BaseCategory b({{"A", {"0", "1"}}});
    RelTruncation rel(b);
    Report rr = verify_cbc_axioms(rel);
    CHECK(rr.ok());
    REQUIRE(rr.find("frobenius"));
    CHECK(rr.find("frobenius")->checked > 0);
    REQUIRE(rr.find("lemma.top_meet"));
    CHECK(rr.find("lemma.top_meet")->checked > 0);

    PowersetDoctrine P(b);
    BicatOfDoctrine<PowersetDoctrine> bp(P);
    Report rp = verify_cbc_axioms(bp);
    CHECK(rp.ok());

    Report maps = verify_maps_are_graphs(bp);
    CHECK(maps.ok());
}

TEST_CASE("a broken composition is flagged by the axiom checker") {
    BaseCategory b({{"A", {"0", "1"}}});
    BrokenRel bad(b);
    Report rep = verify_cbc_axioms(bad);
    CHECK_FALSE(rep.ok());
    const ClauseResult* gf = rep.find("graph.functor");
    REQUIRE(gf);
    CHECK_FALSE(gf->passed());
    CHECK_FALSE(gf->failures.empty());
}

TEST_CASE("the doctrine carved out of relations is the powerset") {
    BaseCategory b({{"A", {"0", "1"}}});
    RelTruncation rel(b);
    RDoctrine<RelTruncation> Q = doctrine_of_cbc(rel);
    BaseCategory::Obj A = b.atom(0);

    CHECK(Q.fiber_size(A) == 4);
    // the equality element over A is the bent diagonal
    CHECK(Q.eq(b.prod(A, A), Q.delta(A), rel.cap(A)));
    CHECK(Q.leq(A, Q.meet(A, Q.top(A), Q.top(A)), Q.top(A)));

    Report ruc = check_ruc(Q);
    CHECK(ruc.ok());
    Report comp = check_comprehensive_diagonals(Q);
    CHECK(comp.ok());
}
