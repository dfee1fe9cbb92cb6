#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "regdiag/base.hpp"
#include "regdiag/bicat.hpp"
#include "regdiag/doctrine_check.hpp"
#include "regdiag/errors.hpp"
#include "regdiag/report.hpp"

namespace regdiag {

struct BicatCheckOptions {
    int depth = 1;
    std::uint64_t budget = 20000;    // elementary checks per clause
    std::uint64_t sample_cap = 2000; // draws per hom fiber too big to list
    std::uint64_t seed = 1;
};

namespace detail {

// Tuples of 1-cells over the given hom signatures: exhaustive when the joint
// space fits the budget, seeded sampling otherwise.
template <class B, class Fn>
void sweep_rels(
    B& bb,
    const std::vector<std::pair<BaseCategory::Obj, BaseCategory::Obj>>& sig,
    std::uint64_t budget, std::mt19937_64& rng, bool& sampled, Fn&& fn) {
    std::vector<std::uint64_t> sizes;
    sizes.reserve(sig.size());
    for (auto [x, y] : sig) sizes.push_back(bb.hom_size(x, y));
    std::vector<typename B::Hom> tup(sig.size());
    if (fits_budget(sizes, budget)) {
        std::vector<std::uint64_t> idx(sig.size(), 0);
        for (;;) {
            for (std::size_t i = 0; i < sig.size(); ++i)
                tup[i] = bb.hom_at(sig[i].first, sig[i].second, idx[i]);
            fn(tup);
            std::size_t i = sig.size();
            while (i > 0) {
                --i;
                if (++idx[i] < sizes[i]) break;
                idx[i] = 0;
                if (i == 0) return;
            }
            if (sig.empty()) return;
        }
    }
    sampled = true;
    for (std::uint64_t k = 0; k < budget; ++k) {
        for (std::size_t i = 0; i < sig.size(); ++i)
            tup[i] = bb.random_hom(sig[i].first, sig[i].second, rng);
        fn(tup);
    }
}

} // namespace detail

// Checks the axioms of a cartesian bicategory of relations on a backend:
// ordered hom fibers with monotone composition and tensor, the cocommutative
// comonoid on every object with its two adjunctions, the Frobenius law, lax
// naturality of copy and discard, coherence of the comonoid with the tensor,
// functoriality of the graph embedding, and the derived descriptions of top
// and meet. Oversized configurations are skipped and counted.
template <class B>
Report verify_cbc_axioms(B& bb, const BicatCheckOptions& opt = {}) {
    using Obj = BaseCategory::Obj;
    using Hom = typename B::Hom;

    BaseCategory& b = bb.base();
    b.list_objects(opt.depth);
    const std::vector<Obj> objs = b.listed();

    Report rep;
    rep.title = "cartesian bicategory axioms";

    auto run_configs = [&](ClauseResult& c, auto& cfgs, auto&& body) {
        std::uint64_t skipped = 0;
        for (const auto& cfg : cfgs) {
            try {
                body(cfg);
            } catch (const MissingTableError&) {
                ++skipped;
            } catch (const SizeBudgetError&) {
                ++skipped;
            }
        }
        if (skipped)
            c.notes.push_back(std::to_string(skipped) +
                              " configuration(s) skipped (size cap or missing tables)");
    };

    { // hom fibers are meet-semilattices; compose and tensor are monotone
        ClauseResult c;
        c.name = "hom.poset";
        std::mt19937_64 rng(opt.seed + 11);
        auto pairs = detail::config_tuples<2>(objs, 48, rng, c.sampled);
        std::uint64_t per = detail::per_config(opt.budget, 2 * pairs.size());
        run_configs(c, pairs, [&](const std::array<Obj, 2>& t) {
            auto [x, y] = t;
            Hom top = bb.top(x, y);
            detail::sweep_rels(bb, {{x, y}, {x, y}}, per, rng, c.sampled,
                               [&](const std::vector<Hom>& e) {
                ++c.checked;
                Hom m = bb.meet(x, y, e[0], e[1]);
                if (!bb.leq(x, y, e[0], e[0]) || !bb.leq(x, y, e[0], top))
                    detail::fail(c, "hom order broken over Hom(" + b.obj_name(x) +
                                        ", " + b.obj_name(y) + ")");
                if (!bb.leq(x, y, m, e[0]) || !bb.leq(x, y, m, e[1]))
                    detail::fail(c, "hom meet not a lower bound over Hom(" +
                                        b.obj_name(x) + ", " + b.obj_name(y) + ")");
                if (bb.leq(x, y, e[0], e[1]) && bb.leq(x, y, e[1], e[0]) &&
                    !bb.eq(x, y, e[0], e[1]))
                    detail::fail(c, "hom order not antisymmetric over Hom(" +
                                        b.obj_name(x) + ", " + b.obj_name(y) + ")");
            });
        });
        auto triples = detail::config_tuples<3>(objs, 48, rng, c.sampled);
        per = detail::per_config(opt.budget, 2 * triples.size());
        run_configs(c, triples, [&](const std::array<Obj, 3>& t) {
            auto [x, y, z] = t;
            detail::sweep_rels(bb, {{x, y}, {x, y}, {y, z}}, per, rng, c.sampled,
                               [&](const std::vector<Hom>& e) {
                ++c.checked;
                Hom lo = bb.meet(x, y, e[0], e[1]);
                if (!bb.leq(x, z, bb.compose(x, y, z, lo, e[2]),
                            bb.compose(x, y, z, e[1], e[2])))
                    detail::fail(c, "composition not monotone over " +
                                        b.obj_name(x) + " -> " + b.obj_name(z));
                if (!bb.leq(b.prod(x, y), b.prod(y, z),
                            bb.tensor(x, y, y, z, lo, e[2]),
                            bb.tensor(x, y, y, z, e[1], e[2])))
                    detail::fail(c, "tensor not monotone at " + b.obj_name(x) +
                                        ", " + b.obj_name(y));
            });
        });
        rep.clauses.push_back(std::move(c));
    }

    { // copy is coassociative after reassociating the output
        ClauseResult c;
        c.name = "comonoid.coassoc";
        std::mt19937_64 rng(opt.seed + 22);
        auto cfgs = objs;
        detail::trim_configs(cfgs, 48, rng, c.sampled);
        run_configs(c, cfgs, [&](Obj x) {
            Obj xx = b.prod(x, x);
            Obj xxl = b.prod(xx, x);
            Obj xxr = b.prod(x, xx);
            Hom cp = bb.copy(x);
            Hom lhs = bb.compose(x, xx, xxl, cp,
                                 bb.tensor(x, xx, x, x, cp, bb.identity(x)));
            lhs = bb.compose(x, xxl, xxr, lhs, bb.graph_of(b.assoc_right(xxl)));
            Hom rhs = bb.compose(x, xx, xxr, cp,
                                 bb.tensor(x, x, x, xx, bb.identity(x), cp));
            ++c.checked;
            if (!bb.eq(x, xxr, lhs, rhs))
                detail::fail(c, "copy not coassociative at " + b.obj_name(x));
        });
        rep.clauses.push_back(std::move(c));
    }

    { // copy is cocommutative
        ClauseResult c;
        c.name = "comonoid.comm";
        std::mt19937_64 rng(opt.seed + 33);
        auto cfgs = objs;
        detail::trim_configs(cfgs, 48, rng, c.sampled);
        run_configs(c, cfgs, [&](Obj x) {
            Obj xx = b.prod(x, x);
            Hom cp = bb.copy(x);
            ++c.checked;
            if (!bb.eq(x, xx, bb.compose(x, xx, xx, cp, bb.graph_of(b.symm(xx))),
                       cp))
                detail::fail(c, "copy not cocommutative at " + b.obj_name(x));
        });
        rep.clauses.push_back(std::move(c));
    }

    { // discarding one branch of copy is the identity
        ClauseResult c;
        c.name = "comonoid.unit";
        std::mt19937_64 rng(opt.seed + 44);
        auto cfgs = objs;
        detail::trim_configs(cfgs, 48, rng, c.sampled);
        run_configs(c, cfgs, [&](Obj x) {
            Obj xx = b.prod(x, x);
            Obj ix = b.prod(b.unit(), x);
            Hom step = bb.compose(x, xx, ix, bb.copy(x),
                                  bb.tensor(x, b.unit(), x, x, bb.discard(x),
                                            bb.identity(x)));
            Hom lhs = bb.compose(x, ix, x, step, bb.graph_of(b.lambda(x)));
            ++c.checked;
            if (!bb.eq(x, x, lhs, bb.identity(x)))
                detail::fail(c, "counit law broken at " + b.obj_name(x));
        });
        rep.clauses.push_back(std::move(c));
    }

    { // copy is left adjoint to its transpose
        ClauseResult c;
        c.name = "adjunction.copy";
        std::mt19937_64 rng(opt.seed + 55);
        auto cfgs = objs;
        detail::trim_configs(cfgs, 48, rng, c.sampled);
        run_configs(c, cfgs, [&](Obj x) {
            Obj xx = b.prod(x, x);
            Hom cp = bb.copy(x), cc = bb.cocopy(x);
            ++c.checked;
            if (!bb.leq(x, x, bb.identity(x), bb.compose(x, xx, x, cp, cc)))
                detail::fail(c, "copy adjunction unit broken at " + b.obj_name(x));
            if (!bb.leq(xx, xx, bb.compose(xx, x, xx, cc, cp), bb.identity(xx)))
                detail::fail(c, "copy adjunction counit broken at " + b.obj_name(x));
        });
        rep.clauses.push_back(std::move(c));
    }

    { // discard is left adjoint to its transpose
        ClauseResult c;
        c.name = "adjunction.discard";
        std::mt19937_64 rng(opt.seed + 66);
        auto cfgs = objs;
        detail::trim_configs(cfgs, 48, rng, c.sampled);
        run_configs(c, cfgs, [&](Obj x) {
            Obj i = b.unit();
            Hom ds = bb.discard(x), cd = bb.codiscard(x);
            ++c.checked;
            if (!bb.leq(x, x, bb.identity(x), bb.compose(x, i, x, ds, cd)))
                detail::fail(c, "discard adjunction unit broken at " + b.obj_name(x));
            if (!bb.leq(i, i, bb.compose(i, x, i, cd, ds), bb.identity(i)))
                detail::fail(c, "discard adjunction counit broken at " +
                                    b.obj_name(x));
        });
        rep.clauses.push_back(std::move(c));
    }

    { // the Frobenius law relating copy and its transpose
        ClauseResult c;
        c.name = "frobenius";
        std::mt19937_64 rng(opt.seed + 77);
        auto cfgs = objs;
        detail::trim_configs(cfgs, 48, rng, c.sampled);
        run_configs(c, cfgs, [&](Obj x) {
            Obj xx = b.prod(x, x);
            Obj l = b.prod(xx, x);
            Obj r = b.prod(x, xx);
            Hom cp = bb.copy(x), cc = bb.cocopy(x);
            Hom lhs = bb.tensor(x, xx, x, x, cp, bb.identity(x));
            lhs = bb.compose(xx, l, r, lhs, bb.graph_of(b.assoc_right(l)));
            lhs = bb.compose(xx, r, xx, lhs,
                             bb.tensor(x, x, xx, x, bb.identity(x), cc));
            Hom rhs = bb.compose(xx, x, xx, cc, cp);
            ++c.checked;
            if (!bb.eq(xx, xx, lhs, rhs))
                detail::fail(c, "frobenius law broken at " + b.obj_name(x));
        });
        rep.clauses.push_back(std::move(c));
    }

    { // copy and discard are lax natural in arbitrary 1-cells
        ClauseResult c;
        c.name = "lax.hom";
        std::mt19937_64 rng(opt.seed + 88);
        auto pairs = detail::config_tuples<2>(objs, 48, rng, c.sampled);
        std::uint64_t per = detail::per_config(opt.budget, pairs.size());
        run_configs(c, pairs, [&](const std::array<Obj, 2>& t) {
            auto [x, y] = t;
            Obj xx = b.prod(x, x), yy = b.prod(y, y);
            Hom cpx = bb.copy(x), cpy = bb.copy(y);
            Hom dsx = bb.discard(x), dsy = bb.discard(y);
            detail::sweep_rels(bb, {{x, y}}, per, rng, c.sampled,
                               [&](const std::vector<Hom>& e) {
                ++c.checked;
                const Hom& R = e[0];
                Hom lhs = bb.compose(x, y, yy, R, cpy);
                Hom rhs = bb.compose(x, xx, yy, cpx, bb.tensor(x, y, x, y, R, R));
                if (!bb.leq(x, yy, lhs, rhs))
                    detail::fail(c, "copy not lax natural at " +
                                        bb.hom_repr(x, y, R));
                if (!bb.leq(x, b.unit(), bb.compose(x, y, b.unit(), R, dsy), dsx))
                    detail::fail(c, "discard not lax natural at " +
                                        bb.hom_repr(x, y, R));
            });
        });
        rep.clauses.push_back(std::move(c));
    }

    { // the comonoid is coherent with the tensor and the unit object
        ClauseResult c;
        c.name = "coherence.tensor";
        std::mt19937_64 rng(opt.seed + 99);
        auto pairs = detail::config_tuples<2>(objs, 48, rng, c.sampled);
        run_configs(c, pairs, [&](const std::array<Obj, 2>& t) {
            auto [x, y] = t;
            Obj xy = b.prod(x, y);
            Obj xx = b.prod(x, x), yy = b.prod(y, y);
            Obj w = b.prod(xx, yy);
            auto p1 = b.proj1(w), p2 = b.proj2(w);
            auto shuffle = b.pair(b.pair(b.compose(p1, b.proj1(xx)),
                                         b.compose(p2, b.proj1(yy))),
                                  b.pair(b.compose(p1, b.proj2(xx)),
                                         b.compose(p2, b.proj2(yy))));
            Hom rhs = bb.tensor(x, xx, y, yy, bb.copy(x), bb.copy(y));
            rhs = bb.compose(xy, w, b.prod(xy, xy), rhs, bb.graph_of(shuffle));
            ++c.checked;
            if (!bb.eq(xy, b.prod(xy, xy), bb.copy(xy), rhs))
                detail::fail(c, "copy incoherent with tensor at " + b.obj_name(xy));
            Obj ii = b.prod(b.unit(), b.unit());
            Hom dd = bb.tensor(x, b.unit(), y, b.unit(), bb.discard(x),
                               bb.discard(y));
            dd = bb.compose(xy, ii, b.unit(), dd, bb.graph_of(b.rho(b.unit())));
            if (!bb.eq(xy, b.unit(), bb.discard(xy), dd))
                detail::fail(c, "discard incoherent with tensor at " +
                                    b.obj_name(xy));
        });
        ++c.checked;
        try {
            Obj i = b.unit();
            if (!bb.eq(i, b.prod(i, i), bb.copy(i),
                       bb.graph_of(b.lambda_inv(i))))
                detail::fail(c, "copy on the unit is not the unitor");
            if (!bb.eq(i, i, bb.discard(i), bb.identity(i)))
                detail::fail(c, "discard on the unit is not the identity");
        } catch (const SizeBudgetError&) {
        }
        rep.clauses.push_back(std::move(c));
    }

    { // graphs of base morphisms compose functorially
        ClauseResult c;
        c.name = "graph.functor";
        std::mt19937_64 rng(opt.seed + 110);
        auto cfgs = objs;
        detail::trim_configs(cfgs, 48, rng, c.sampled);
        run_configs(c, cfgs, [&](Obj x) {
            ++c.checked;
            if (!bb.eq(x, x, bb.graph_of(b.id(x)), bb.identity(x)))
                detail::fail(c, "graph of the identity is not the identity at " +
                                    b.obj_name(x));
        });
        auto triples = detail::config_tuples<3>(objs, 48, rng, c.sampled);
        std::uint64_t per = detail::per_config(opt.budget, triples.size());
        run_configs(c, triples, [&](const std::array<Obj, 3>& t) {
            auto [x, y, z] = t;
            detail::sweep_homs(b, {{x, y}, {y, z}}, per, rng, c.sampled,
                               [&](const std::vector<BaseCategory::Mor>& m) {
                ++c.checked;
                Hom lhs = bb.graph_of(b.compose(m[0], m[1]));
                Hom rhs = bb.compose(x, y, z, bb.graph_of(m[0]),
                                     bb.graph_of(m[1]));
                if (!bb.eq(x, z, lhs, rhs))
                    detail::fail(c, "graph embedding not functorial on " +
                                        b.mor_repr(m[0]) + " ; " + b.mor_repr(m[1]));
            });
        });
        rep.clauses.push_back(std::move(c));
    }

    { // top and meet are definable from the comonoid structure
        ClauseResult c;
        c.name = "lemma.top_meet";
        std::mt19937_64 rng(opt.seed + 121);
        auto pairs = detail::config_tuples<2>(objs, 48, rng, c.sampled);
        std::uint64_t per = detail::per_config(opt.budget, pairs.size());
        run_configs(c, pairs, [&](const std::array<Obj, 2>& t) {
            auto [x, y] = t;
            ++c.checked;
            Hom via = bb.compose(x, b.unit(), y, bb.discard(x), bb.codiscard(y));
            if (!bb.eq(x, y, via, bb.top(x, y)))
                detail::fail(c, "top is not discard;codiscard over Hom(" +
                                    b.obj_name(x) + ", " + b.obj_name(y) + ")");
            Obj xx = b.prod(x, x), yy = b.prod(y, y);
            detail::sweep_rels(bb, {{x, y}, {x, y}}, per, rng, c.sampled,
                               [&](const std::vector<Hom>& e) {
                ++c.checked;
                Hom mid = bb.tensor(x, y, x, y, e[0], e[1]);
                Hom via2 = bb.compose(x, xx, yy, bb.copy(x), mid);
                via2 = bb.compose(x, yy, y, via2, bb.cocopy(y));
                if (!bb.eq(x, y, via2, bb.meet(x, y, e[0], e[1])))
                    detail::fail(c, "meet is not copy;(R x S);cocopy over Hom(" +
                                        b.obj_name(x) + ", " + b.obj_name(y) + ")");
            });
        });
        rep.clauses.push_back(std::move(c));
    }

    return rep;
}

// Map detection through the two adjunction inequalities; an independent
// cross-check for the equality-and-existential formulation used by the
// backends.
template <class B>
bool is_map_via_adjoints(B& bb, BaseCategory::Obj x, BaseCategory::Obj y,
                         const typename B::Hom& R) {
    auto rop = bb.opposite(x, y, R);
    if (!bb.leq(x, x, bb.identity(x), bb.compose(x, y, x, R, rop)))
        return false;
    return bb.leq(y, y, bb.compose(y, x, y, rop, R), bb.identity(y));
}

struct RucOptions {
    int depth = 1;
    std::uint64_t budget = 20000;    // hom fibers up to this size are exhausted
    std::uint64_t sample_cap = 2000; // draws in fibers beyond it
    std::uint64_t seed = 1;
};

// Every map should be represented by a base morphism. Two independent
// witness criteria are evaluated for every map and every candidate morphism:
// the inclusion criterion (top <= reindex along <id, f> of R) and literal
// graph equality; they must agree, and a map with no witness is a failure.
template <class D>
Report check_ruc(D& P, const RucOptions& opt = {}) {
    using Obj = BaseCategory::Obj;
    using Elem = typename D::Elem;

    BicatOfDoctrine<D> bb(P);
    BaseCategory& b = P.base();
    b.list_objects(opt.depth);
    const std::vector<Obj> objs = b.listed();

    Report rep;
    rep.title = "rule of unique choice";
    ClauseResult wit;
    wit.name = "maps.have_witness";
    ClauseResult agree;
    agree.name = "criteria.agree";
    std::mt19937_64 rng(opt.seed + 7);
    std::uint64_t skipped = 0;

    for (Obj x : objs) {
        for (Obj y : objs) {
            try {
                if (b.hom_size(x, y) > opt.budget) {
                    ++skipped;
                    continue;
                }
                auto handle = [&](const Elem& R) {
                    if (!bb.is_map(x, y, R)) return;
                    ++wit.checked;
                    bool any_graph = false;
                    b.each_hom(x, y, [&](const BaseCategory::Mor& f) {
                        auto idf = b.pair(b.id(x), f);
                        bool incl = P.leq(x, P.top(x), P.reindex(idf, R));
                        bool graph = bb.eq(x, y, bb.graph_of(f), R);
                        ++agree.checked;
                        if (incl != graph)
                            detail::fail(agree,
                                         "inclusion and graph criteria disagree for " +
                                             b.mor_repr(f) + " against " +
                                             bb.hom_repr(x, y, R));
                        if (graph) any_graph = true;
                        return true;
                    });
                    if (!any_graph)
                        detail::fail(wit, "map with no representing morphism in Hom(" +
                                              b.obj_name(x) + ", " + b.obj_name(y) +
                                              "): " + bb.hom_repr(x, y, R));
                };
                std::uint64_t fs = bb.hom_size(x, y);
                if (fs <= opt.budget) {
                    for (std::uint64_t i = 0; i < fs; ++i)
                        handle(bb.hom_at(x, y, i));
                } else {
                    wit.sampled = agree.sampled = true;
                    for (std::uint64_t i = 0; i < opt.sample_cap; ++i)
                        handle(bb.random_hom(x, y, rng));
                }
            } catch (const MissingTableError&) {
                ++skipped;
            } catch (const SizeBudgetError&) {
                ++skipped;
            }
        }
    }
    if (skipped) {
        wit.notes.push_back(std::to_string(skipped) +
                            " hom pair(s) skipped (size cap or missing tables)");
    }
    rep.clauses.push_back(std::move(wit));
    rep.clauses.push_back(std::move(agree));
    return rep;
}

// The diagonal comprehends the equality element: morphisms h : Z -> A x A
// satisfying top <= reindex(h, delta) are exactly the composites f;diag, and
// the factoring f is unique.
template <class D>
Report check_comprehensive_diagonals(D& P, const RucOptions& opt = {}) {
    using Obj = BaseCategory::Obj;

    BaseCategory& b = P.base();
    b.list_objects(opt.depth);
    const std::vector<Obj> objs = b.listed();

    Report rep;
    rep.title = "comprehensive diagonals";
    ClauseResult c;
    c.name = "diagonal.comprehends";
    std::uint64_t skipped = 0;

    for (Obj a : objs) {
        try {
            Obj aa = b.prod(a, a);
            auto d = P.delta(a);
            auto dg = b.diag(a);
            auto pi1 = b.proj1(aa);
            for (Obj z : objs) {
                try {
                    if (b.hom_size(z, aa) > opt.budget) {
                        ++skipped;
                        continue;
                    }
                    b.each_hom(z, aa, [&](const BaseCategory::Mor& h) {
                        if (!P.leq(z, P.top(z), P.reindex(h, d))) return true;
                        ++c.checked;
                        auto f = b.compose(h, pi1);
                        if (!(b.compose(f, dg) == h)) {
                            detail::fail(c, "predicate holds but " + b.mor_repr(h) +
                                                " does not factor through the diagonal");
                            return true;
                        }
                        if (b.hom_size(z, a) <= 1024) {
                            int count = 0;
                            b.each_hom(z, a, [&](const BaseCategory::Mor& g) {
                                if (b.compose(g, dg) == h) ++count;
                                return true;
                            });
                            if (count != 1)
                                detail::fail(c, "factoring through the diagonal not "
                                                "unique for " + b.mor_repr(h));
                        }
                        return true;
                    });
                    if (b.hom_size(z, a) <= opt.budget) {
                        b.each_hom(z, a, [&](const BaseCategory::Mor& f) {
                            ++c.checked;
                            auto h = b.compose(f, dg);
                            if (!P.leq(z, P.top(z), P.reindex(h, d)))
                                detail::fail(c, "diagonal composite " + b.mor_repr(h) +
                                                    " fails the equality predicate");
                            return true;
                        });
                    }
                } catch (const MissingTableError&) {
                    ++skipped;
                } catch (const SizeBudgetError&) {
                    ++skipped;
                }
            }
        } catch (const MissingTableError&) {
            ++skipped;
        } catch (const SizeBudgetError&) {
            ++skipped;
        }
    }
    if (skipped)
        c.notes.push_back(std::to_string(skipped) +
                          " configuration(s) skipped (size cap or missing tables)");
    rep.clauses.push_back(std::move(c));
    return rep;
}

// Set equality between maps and graphs on every listable hom: every graph is
// a map, and every map arises as a graph.
template <class B>
Report verify_maps_are_graphs(B& bb, const RucOptions& opt = {}) {
    using Obj = BaseCategory::Obj;
    using Hom = typename B::Hom;

    BaseCategory& b = bb.base();
    b.list_objects(opt.depth);
    const std::vector<Obj> objs = b.listed();

    Report rep;
    rep.title = "maps are exactly the graphs";
    ClauseResult c;
    c.name = "maps.graphs";
    std::mt19937_64 rng(opt.seed + 13);
    std::uint64_t skipped = 0;

    for (Obj x : objs) {
        for (Obj y : objs) {
            try {
                if (b.hom_size(x, y) > opt.budget) {
                    ++skipped;
                    continue;
                }
                b.each_hom(x, y, [&](const BaseCategory::Mor& f) {
                    ++c.checked;
                    if (!bb.is_map(x, y, bb.graph_of(f)))
                        detail::fail(c, "graph of " + b.mor_repr(f) + " is not a map");
                    return true;
                });
                auto handle = [&](const Hom& R) {
                    if (!bb.is_map(x, y, R)) return;
                    ++c.checked;
                    bool found = false;
                    b.each_hom(x, y, [&](const BaseCategory::Mor& f) {
                        if (bb.eq(x, y, bb.graph_of(f), R)) {
                            found = true;
                            return false;
                        }
                        return true;
                    });
                    if (!found)
                        detail::fail(c, "map is not a graph in Hom(" + b.obj_name(x) +
                                            ", " + b.obj_name(y) + "): " +
                                            bb.hom_repr(x, y, R));
                };
                std::uint64_t fs = bb.hom_size(x, y);
                if (fs <= opt.budget) {
                    for (std::uint64_t i = 0; i < fs; ++i)
                        handle(bb.hom_at(x, y, i));
                } else {
                    c.sampled = true;
                    for (std::uint64_t i = 0; i < opt.sample_cap; ++i)
                        handle(bb.random_hom(x, y, rng));
                }
            } catch (const MissingTableError&) {
                ++skipped;
            } catch (const SizeBudgetError&) {
                ++skipped;
            }
        }
    }
    if (skipped)
        c.notes.push_back(std::to_string(skipped) +
                          " hom pair(s) skipped (size cap or missing tables)");
    rep.clauses.push_back(std::move(c));
    return rep;
}

} // namespace regdiag
