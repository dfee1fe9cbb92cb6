#include <doctest.h>

#include <cstdint>
#include <random>
#include <string>

#include "regdiag/adjunction.hpp"
#include "regdiag/base.hpp"
#include "regdiag/bicat.hpp"
#include "regdiag/bicat_check.hpp"
#include "regdiag/bitvec.hpp"
#include "regdiag/composed_doctrine.hpp"
#include "regdiag/functor.hpp"
#include "regdiag/pow_doctrine.hpp"
#include "regdiag/rdoctrine.hpp"

using namespace regdiag;

TEST_CASE("straightening a predicate and bending it back is the identity") {
    BaseCategory b({{"A", {"0", "1"}}});
    PowersetDoctrine P(b);
    BicatOfDoctrine<PowersetDoctrine> bp(P);
    BaseCategory::Obj A = b.atom(0);
    BaseCategory::Obj I = b.unit();
    BaseCategory::Obj AA = b.prod(A, A);

    for (std::uint64_t i = 0; i < bp.hom_size(A, A); ++i) {
        BitVec R = bp.hom_at(A, A, i);
        BitVec straight = epsilon(bp, A, A, R);
        CHECK(bp.eq(A, A, epsilon_inv(bp, A, A, straight), R));
    }
    // and in the other order, on a hom with unequal endpoints
    for (std::uint64_t i = 0; i < bp.hom_size(I, A); ++i) {
        BitVec S = bp.hom_at(I, A, i);
        CHECK(bp.eq(I, A, epsilon(bp, I, A, epsilon_inv(bp, I, A, S)), S));
    }

    // both directions preserve the inclusion order
    BitVec lo = bp.hom_at(A, A, 0b0010), hi = bp.hom_at(A, A, 0b0111);
    REQUIRE(bp.leq(A, A, lo, hi));
    CHECK(P.leq(AA, epsilon_inv(bp, A, A, lo), epsilon_inv(bp, A, A, hi)));
    CHECK(bp.leq(A, A, epsilon(bp, A, A, lo), epsilon(bp, A, A, hi)));

    // the straightened graph of a base morphism is its relational graph
    b.each_hom(A, A, [&](const BaseCategory::Mor& f) {
        CHECK(bp.eq(A, A, epsilon(bp, A, A, rgraph(bp, f)), bp.graph_of(f)));
        return true;
    });
}

TEST_CASE("both triangle identities hold for the relational models") {
    BaseCategory b({{"A", {"0", "1"}}});
    PowersetDoctrine P(b);
    CHECK(check_triangle_left(P).ok());

    BicatOfDoctrine<PowersetDoctrine> bp(P);
    Report right = check_triangle_right(bp);
    CHECK(right.ok());
    REQUIRE(right.find("epsilon.inverse"));
    CHECK(right.find("epsilon.inverse")->checked > 0);

    RelTruncation rel(b);
    CHECK(check_triangle_right(rel).ok());
    RDoctrine<RelTruncation> Q = doctrine_of_cbc(rel);
    CHECK(check_triangle_left(Q).ok());

    CHECK(check_eta(P).ok());
}

TEST_CASE("the unit is an equivalence exactly for the powerset doctrine") {
    BaseCategory b({{"A", {"0", "1"}}});
    PowersetDoctrine P(b);
    Report eta = check_eta_iso(P);
    CHECK(eta.ok());
    REQUIRE(eta.find("gamma.injective"));
    REQUIRE(eta.find("gamma.onto_maps"));

    // composing with the squaring functor breaks fullness but not
    // faithfulness, in step with the two structural criteria
    BaseCategory src({{"A", {"0", "1"}}});
    BaseCategory dst = power_target(src, 2);
    FunctorData F = atom_power_functor(src, dst, 2);
    PowersetDoctrine pow2(dst);
    ComposedDoctrine<PowersetDoctrine> Q(pow2, F);

    Report qeta = check_eta_iso(Q);
    CHECK_FALSE(qeta.ok());
    REQUIRE(qeta.find("gamma.injective"));
    REQUIRE(qeta.find("gamma.onto_maps"));
    CHECK(qeta.find("gamma.injective")->passed());
    CHECK_FALSE(qeta.find("gamma.onto_maps")->passed());

    CHECK(qeta.find("gamma.onto_maps")->passed() == check_ruc(Q).ok());
    CHECK(qeta.find("gamma.injective")->passed() ==
          check_comprehensive_diagonals(Q).ok());
}

TEST_CASE("a backend that breaks composition fails the unit triangle") {
    BaseCategory b({{"A", {"0", "1"}}});

    class Collapsing {
    public:
        using Obj = BaseCategory::Obj;
        using Hom = BitVec;
        explicit Collapsing(BaseCategory& b) : inner_(b) {}
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
        Hom tensor(Obj a, Obj b2, Obj c, Obj d, const Hom& f, const Hom& g) {
            return inner_.tensor(a, b2, c, d, f, g);
        }
        Hom opposite(Obj x, Obj y, const Hom& f) {
            return inner_.opposite(x, y, f);
        }
        Hom graph_of(const BaseCategory::Mor& f) { return inner_.graph_of(f); }
        Hom copy(Obj x) { return inner_.copy(x); }
        Hom discard(Obj x) { return inner_.discard(x); }
        Hom cocopy(Obj x) { return inner_.cocopy(x); }
        Hom codiscard(Obj x) { return inner_.codiscard(x); }
        Hom cup(Obj x) { return inner_.cup(x); }
        Hom cap(Obj x) { return inner_.cap(x); }
        bool is_map(Obj x, Obj y, const Hom& R) {
            return inner_.is_map(x, y, R);
        }
        std::uint64_t hom_size(Obj x, Obj y) { return inner_.hom_size(x, y); }
        Hom hom_at(Obj x, Obj y, std::uint64_t i) {
            return inner_.hom_at(x, y, i);
        }
        Hom random_hom(Obj x, Obj y, std::mt19937_64& rng) {
            return inner_.random_hom(x, y, rng);
        }
        std::string hom_repr(Obj x, Obj y, const Hom& R) {
            return inner_.hom_repr(x, y, R);
        }

    private:
        RelTruncation inner_;
    };

    Collapsing bad(b);
    Report rep = check_triangle_right(bad);
    CHECK_FALSE(rep.ok());
}
