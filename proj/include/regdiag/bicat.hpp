#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "regdiag/base.hpp"
#include "regdiag/bitvec.hpp"
#include "regdiag/errors.hpp"

namespace regdiag {

// Two backends share one bicategory-of-relations surface: objects are base
// objects, a 1-cell x -> y lives in an inclusion-ordered hom fiber, and the
// operations are relational identity, composition, tensor, converse, the
// graph embedding of base morphisms, and the copy/discard comonoid with its
// transposes. Templates over a backend B expect:
//   using Hom = ...;
//   BaseCategory& base();
//   identity, compose, tensor, opposite, graph_of, copy, discard, cocopy,
//   codiscard, cup, cap, top, meet, leq, eq, is_map,
//   hom_size, hom_at, random_hom, hom_repr.

// Relations as bit-matrices, with (a, b) stored at bit a * card(cod) + b.
// This is the semantic oracle: every operation is a direct set computation.
class RelTruncation {
public:
    using Obj = BaseCategory::Obj;
    using Hom = BitVec;

    explicit RelTruncation(BaseCategory& b) : b_(&b) {}
    BaseCategory& base() { return *b_; }

    Hom bottom(Obj x, Obj y) { return BitVec(cells(x, y)); }
    Hom top(Obj x, Obj y) { return BitVec(cells(x, y), true); }

    Hom identity(Obj x) {
        std::uint64_t c = b_->card(x);
        BitVec r(cells(x, x));
        for (std::uint64_t a = 0; a < c; ++a) r.set(a * c + a);
        return r;
    }

    Hom meet(Obj, Obj, const Hom& f, const Hom& g) {
        Hom h = f;
        h &= g;
        return h;
    }
    bool leq(Obj, Obj, const Hom& f, const Hom& g) { return f.subset_of(g); }
    bool eq(Obj, Obj, const Hom& f, const Hom& g) { return f == g; }

    Hom compose(Obj x, Obj y, Obj z, const Hom& f, const Hom& g) {
        std::uint64_t cy = b_->card(y), cz = b_->card(z);
        Hom out(cells(x, z));
        f.for_each([&](std::size_t bit) {
            std::uint64_t a = bit / cy, m = bit % cy;
            for (std::uint64_t c = 0; c < cz; ++c)
                if (g.get(m * cz + c)) out.set(a * cz + c);
        });
        return out;
    }

    // f : a -> b, g : c -> d gives f tensor g : a*c -> b*d.
    Hom tensor(Obj a, Obj b, Obj c, Obj d, const Hom& f, const Hom& g) {
        Obj ac = b_->prod(a, c), bd = b_->prod(b, d);
        std::uint64_t cb = b_->card(b), cc = b_->card(c), cd = b_->card(d);
        std::uint64_t cbd = b_->card(bd);
        Hom out(cells(ac, bd));
        f.for_each([&](std::size_t bf) {
            std::uint64_t ia = bf / cb, ib = bf % cb;
            g.for_each([&](std::size_t bg) {
                std::uint64_t ic = bg / cd, id = bg % cd;
                out.set((ia * cc + ic) * cbd + (ib * cd + id));
            });
        });
        return out;
    }

    Hom opposite(Obj x, Obj y, const Hom& f) {
        std::uint64_t cx = b_->card(x), cy = b_->card(y);
        Hom out(cells(y, x));
        f.for_each([&](std::size_t bit) {
            out.set((bit % cy) * cx + bit / cy);
        });
        return out;
    }

    Hom graph_of(const BaseCategory::Mor& f) {
        std::uint64_t cc = b_->card(f.cod);
        Hom out(cells(f.dom, f.cod));
        for (std::size_t a = 0; a < f.tab.size(); ++a)
            out.set(a * cc + f.tab[a]);
        return out;
    }

    Hom copy(Obj x) { return graph_of(b_->diag(x)); }
    Hom discard(Obj x) { return graph_of(b_->bang(x)); }
    Hom cocopy(Obj x) { return opposite(x, b_->prod(x, x), copy(x)); }
    Hom codiscard(Obj x) { return opposite(x, b_->unit(), discard(x)); }
    Hom cup(Obj x) {
        return compose(b_->unit(), x, b_->prod(x, x), codiscard(x), copy(x));
    }
    Hom cap(Obj x) {
        return compose(b_->prod(x, x), x, b_->unit(), cocopy(x), discard(x));
    }

    // Maps are exactly the function graphs: one bit per row.
    bool is_map(Obj x, Obj y, const Hom& R) {
        std::uint64_t cx = b_->card(x), cy = b_->card(y);
        for (std::uint64_t a = 0; a < cx; ++a) {
            int hits = 0;
            for (std::uint64_t c = 0; c < cy && hits < 2; ++c)
                if (R.get(a * cy + c)) ++hits;
            if (hits != 1) return false;
        }
        return true;
    }

    std::uint64_t hom_size(Obj x, Obj y) {
        std::uint64_t n = cells(x, y);
        if (n >= 62) return std::uint64_t(1) << 62;
        return std::uint64_t(1) << n;
    }
    Hom hom_at(Obj x, Obj y, std::uint64_t idx) {
        std::uint64_t n = cells(x, y);
        Hom r(n);
        for (std::uint64_t j = 0; j < n && j < 64; ++j)
            if ((idx >> j) & 1) r.set(j);
        return r;
    }
    Hom random_hom(Obj x, Obj y, std::mt19937_64& rng) {
        std::uint64_t n = cells(x, y);
        Hom r(n);
        for (std::uint64_t j = 0; j < n; ++j)
            if (rng() & 1) r.set(j);
        return r;
    }
    std::string hom_repr(Obj x, Obj y, const Hom& R) {
        std::uint64_t cy = b_->card(y);
        std::string s = "{";
        bool first = true;
        R.for_each([&](std::size_t bit) {
            if (!first) s += ",";
            first = false;
            s += "(" + b_->elem_name(x, bit / cy) + "," +
                 b_->elem_name(y, bit % cy) + ")";
        });
        return s + "}";
    }

private:
    std::uint64_t cells(Obj x, Obj y) const { return b_->card(x) * b_->card(y); }

    BaseCategory* b_;
};

// The bicategory of relations carved out of a doctrine: Hom(x, y) is the
// fiber over x*y, identities are the equality elements, and composition
// pulls both legs onto a common product, meets them, and quantifies the
// middle object away.
template <class D>
class BicatOfDoctrine {
public:
    using Obj = BaseCategory::Obj;
    using Hom = typename D::Elem;

    explicit BicatOfDoctrine(D& P) : P_(&P) {}
    BaseCategory& base() { return P_->base(); }
    D& doctrine() { return *P_; }

    Obj hom_obj(Obj x, Obj y) { return base().prod(x, y); }

    Hom identity(Obj x) { return P_->delta(x); }
    Hom top(Obj x, Obj y) { return P_->top(hom_obj(x, y)); }
    Hom meet(Obj x, Obj y, const Hom& f, const Hom& g) {
        return P_->meet(hom_obj(x, y), f, g);
    }
    bool leq(Obj x, Obj y, const Hom& f, const Hom& g) {
        return P_->leq(hom_obj(x, y), f, g);
    }
    bool eq(Obj x, Obj y, const Hom& f, const Hom& g) {
        return P_->eq(hom_obj(x, y), f, g);
    }

    Hom compose(Obj x, Obj y, Obj z, const Hom& f, const Hom& g) {
        BaseCategory& b = base();
        Obj xy = b.prod(x, y);
        Obj w = b.prod(xy, z);
        auto p1 = b.proj1(w);
        Hom f2 = P_->reindex(p1, f);
        auto yz_leg = b.pair(b.compose(p1, b.proj2(xy)), b.proj2(w));
        Hom g2 = P_->reindex(yz_leg, g);
        Hom h = P_->meet(w, f2, g2);
        Obj xz = b.prod(x, z);
        Obj v = b.prod(xz, y);
        auto u = b.pair(b.pair(b.compose(p1, b.proj1(xy)), b.proj2(w)),
                        b.compose(p1, b.proj2(xy)));
        Hom k = P_->reindex(b.inverse(u), h);
        return P_->exists1(v, k);
    }

    Hom tensor(Obj a, Obj b2, Obj c, Obj d, const Hom& f, const Hom& g) {
        BaseCategory& b = base();
        Obj ac = b.prod(a, c), bd = b.prod(b2, d);
        Obj w = b.prod(ac, bd);
        auto p1 = b.proj1(w), p2 = b.proj2(w);
        auto q1 = b.pair(b.compose(p1, b.proj1(ac)), b.compose(p2, b.proj1(bd)));
        auto q2 = b.pair(b.compose(p1, b.proj2(ac)), b.compose(p2, b.proj2(bd)));
        return P_->meet(w, P_->reindex(q1, f), P_->reindex(q2, g));
    }

    Hom opposite(Obj x, Obj y, const Hom& f) {
        BaseCategory& b = base();
        Obj yx = b.prod(y, x);
        auto sw = b.pair(b.proj2(yx), b.proj1(yx));
        return P_->reindex(sw, f);
    }

    Hom graph_of(const BaseCategory::Mor& f) {
        BaseCategory& b = base();
        auto m = b.prod_mor(f, b.id(f.cod));
        return P_->reindex(m, P_->delta(f.cod));
    }

    Hom copy(Obj x) { return graph_of(base().diag(x)); }
    Hom discard(Obj x) { return graph_of(base().bang(x)); }
    Hom cocopy(Obj x) { return opposite(x, base().prod(x, x), copy(x)); }
    Hom codiscard(Obj x) { return opposite(x, base().unit(), discard(x)); }
    Hom cup(Obj x) {
        return compose(base().unit(), x, base().prod(x, x), codiscard(x),
                       copy(x));
    }
    Hom cap(Obj x) {
        return compose(base().prod(x, x), x, base().unit(), cocopy(x),
                       discard(x));
    }

    // Total and single-valued, expressed with the doctrine's own equality
    // and existential structure.
    bool is_map(Obj x, Obj y, const Hom& R) {
        BaseCategory& b = base();
        Obj xy = b.prod(x, y);
        if (!P_->eq(x, P_->exists1(xy, R), P_->top(x))) return false;
        Obj yy = b.prod(y, y);
        Obj w = b.prod(x, yy);
        auto r1 = b.prod_mor(b.id(x), b.proj1(yy));
        auto r2 = b.prod_mor(b.id(x), b.proj2(yy));
        Hom both = P_->meet(w, P_->reindex(r1, R), P_->reindex(r2, R));
        return P_->leq(w, both, P_->reindex(b.proj2(w), P_->delta(y)));
    }

    std::uint64_t hom_size(Obj x, Obj y) {
        return P_->fiber_size(hom_obj(x, y));
    }
    Hom hom_at(Obj x, Obj y, std::uint64_t idx) {
        return P_->elem_at(hom_obj(x, y), idx);
    }
    Hom random_hom(Obj x, Obj y, std::mt19937_64& rng) {
        return P_->random_elem(hom_obj(x, y), rng);
    }
    std::string hom_repr(Obj x, Obj y, const Hom& R) {
        return P_->elem_repr(hom_obj(x, y), R);
    }

private:
    D* P_;
};

} // namespace regdiag
