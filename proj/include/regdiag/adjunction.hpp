#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "regdiag/base.hpp"
#include "regdiag/bicat.hpp"
#include "regdiag/bicat_check.hpp"
#include "regdiag/doctrine_check.hpp"
#include "regdiag/errors.hpp"
#include "regdiag/rdoctrine.hpp"
#include "regdiag/report.hpp"

namespace regdiag {

struct AdjunctionCheckOptions {
    int depth = 1;
    std::uint64_t budget = 20000;
    std::uint64_t seed = 1;
};

// Straightens a predicate on x * y into a 1-cell from x to y: widen with a
// unit leg, bend a cup of y in, reassociate so the predicate sees its whole
// domain, and let the spare y wire through. The inverse bends the y wire
// back with a cap.
template <class B>
typename B::Hom epsilon(B& bb, BaseCategory::Obj x, BaseCategory::Obj y,
                        const typename B::Hom& R) {
    using Obj = BaseCategory::Obj;
    BaseCategory& b = bb.base();
    Obj i = b.unit();
    Obj xy = b.prod(x, y);
    Obj yy = b.prod(y, y);
    Obj xi = b.prod(x, i);
    Obj mid = b.prod(x, yy);
    Obj bent = b.prod(xy, y);
    Obj iy = b.prod(i, y);

    auto s = bb.compose(x, xi, mid, bb.graph_of(b.rho_inv(x)),
                        bb.tensor(x, x, i, yy, bb.identity(x), bb.cup(y)));
    s = bb.compose(x, mid, bent, s, bb.graph_of(b.assoc_left(mid)));
    s = bb.compose(x, bent, iy, s, bb.tensor(xy, i, y, y, R, bb.identity(y)));
    return bb.compose(x, iy, y, s, bb.graph_of(b.lambda(y)));
}

template <class B>
typename B::Hom epsilon_inv(B& bb, BaseCategory::Obj x, BaseCategory::Obj y,
                            const typename B::Hom& S) {
    BaseCategory& b = bb.base();
    auto yy = b.prod(y, y);
    return bb.compose(b.prod(x, y), yy, b.unit(),
                      bb.tensor(x, y, y, y, S, bb.identity(y)), bb.cap(y));
}

// The graph of a base morphism as a predicate on x * y, i.e. the relational
// doctrine's reindexing of the equality element along f x id.
template <class B>
typename B::Hom rgraph(B& bb, const BaseCategory::Mor& f) {
    BaseCategory& b = bb.base();
    auto fid = b.prod_mor(f, b.id(f.cod));
    return bb.compose(fid.dom, fid.cod, b.unit(), bb.graph_of(fid),
                      bb.cap(f.cod));
}

// Counit triangle on the bicategory built from a doctrine: shifting a
// predicate into the relational doctrine of its own bicategory and
// straightening it back must be the identity.
template <class D>
Report check_triangle_left(D& P, const AdjunctionCheckOptions& opt = {}) {
    using Obj = BaseCategory::Obj;

    BicatOfDoctrine<D> bb(P);
    BaseCategory& b = P.base();
    b.list_objects(opt.depth);
    const std::vector<Obj> objs = b.listed();

    Report rep;
    rep.title = "counit triangle";
    ClauseResult c;
    c.name = "triangle.left";
    std::mt19937_64 rng(opt.seed + 5);
    std::uint64_t skipped = 0;

    auto pairs = detail::config_tuples<2>(objs, 48, rng, c.sampled);
    std::uint64_t per = detail::per_config(opt.budget, pairs.size());
    for (const auto& t : pairs) {
        try {
            auto [x, y] = t;
            Obj xy = b.prod(x, y);
            auto shift = b.rho(xy);
            detail::sweep_elems(P, {xy}, per, rng, c.sampled,
                                [&](const std::vector<typename D::Elem>& e) {
                ++c.checked;
                auto lifted = P.reindex(shift, e[0]);
                auto back = epsilon(bb, x, y, lifted);
                if (!P.eq(xy, back, e[0]))
                    detail::fail(c, "straightening does not restore " +
                                        P.elem_repr(xy, e[0]) + " over " +
                                        b.obj_name(xy));
            });
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

// Unit triangle and the supporting facts that make the counit well behaved
// on a backend: bending is an order isomorphism pointwise inverse to its
// unbending, it restores unit-shifted predicates, and it matches the two
// notions of graph.
template <class B>
Report check_triangle_right(B& bb, const AdjunctionCheckOptions& opt = {}) {
    using Obj = BaseCategory::Obj;
    using Hom = typename B::Hom;

    BaseCategory& b = bb.base();
    b.list_objects(opt.depth);
    const std::vector<Obj> objs = b.listed();

    Report rep;
    rep.title = "unit triangle";

    auto guard = [&](ClauseResult& c, auto&& body) {
        std::uint64_t skipped = 0;
        try {
            body();
        } catch (const MissingTableError&) {
            ++skipped;
        } catch (const SizeBudgetError&) {
            ++skipped;
        }
        if (skipped)
            c.notes.push_back(std::to_string(skipped) +
                              " configuration(s) skipped (size cap or missing tables)");
    };

    { // predicates on x * I straighten back to the hom they shift
        ClauseResult c;
        c.name = "triangle.right";
        std::mt19937_64 rng(opt.seed + 15);
        auto cfgs = objs;
        detail::trim_configs(cfgs, 48, rng, c.sampled);
        std::uint64_t per = detail::per_config(opt.budget, cfgs.size());
        for (Obj x : cfgs) {
            guard(c, [&] {
                Obj i = b.unit();
                Obj xi = b.prod(x, i);
                Hom gr = bb.graph_of(b.rho(x));
                detail::sweep_rels(bb, {{x, i}}, per, rng, c.sampled,
                                   [&](const std::vector<Hom>& e) {
                    ++c.checked;
                    Hom shifted = bb.compose(xi, x, i, gr, e[0]);
                    if (!bb.eq(x, i, epsilon(bb, x, i, shifted), e[0]))
                        detail::fail(c, "unit triangle broken at " +
                                            bb.hom_repr(x, i, e[0]));
                });
            });
        }
        rep.clauses.push_back(std::move(c));
    }

    { // epsilon and its inverse cancel in both orders
        ClauseResult c;
        c.name = "epsilon.inverse";
        std::mt19937_64 rng(opt.seed + 25);
        auto pairs = detail::config_tuples<2>(objs, 48, rng, c.sampled);
        std::uint64_t per = detail::per_config(opt.budget, 2 * pairs.size());
        for (const auto& t : pairs) {
            guard(c, [&] {
                auto [x, y] = t;
                Obj xy = b.prod(x, y);
                detail::sweep_rels(bb, {{x, y}}, per, rng, c.sampled,
                                   [&](const std::vector<Hom>& e) {
                    ++c.checked;
                    if (!bb.eq(x, y,
                               epsilon(bb, x, y, epsilon_inv(bb, x, y, e[0])),
                               e[0]))
                        detail::fail(c, "bend then unbend moves " +
                                            bb.hom_repr(x, y, e[0]));
                });
                detail::sweep_rels(bb, {{xy, b.unit()}}, per, rng, c.sampled,
                                   [&](const std::vector<Hom>& e) {
                    ++c.checked;
                    if (!bb.eq(xy, b.unit(),
                               epsilon_inv(bb, x, y, epsilon(bb, x, y, e[0])),
                               e[0]))
                        detail::fail(c, "unbend then bend moves " +
                                            bb.hom_repr(xy, b.unit(), e[0]));
                });
            });
        }
        rep.clauses.push_back(std::move(c));
    }

    { // straightening preserves and reflects the order
        ClauseResult c;
        c.name = "epsilon.order";
        std::mt19937_64 rng(opt.seed + 35);
        auto pairs = detail::config_tuples<2>(objs, 48, rng, c.sampled);
        std::uint64_t per = detail::per_config(opt.budget, pairs.size());
        for (const auto& t : pairs) {
            guard(c, [&] {
                auto [x, y] = t;
                Obj xy = b.prod(x, y);
                Obj i = b.unit();
                detail::sweep_rels(bb, {{xy, i}, {xy, i}}, per, rng, c.sampled,
                                   [&](const std::vector<Hom>& e) {
                    ++c.checked;
                    bool lo = bb.leq(xy, i, e[0], e[1]);
                    bool hi = bb.leq(x, y, epsilon(bb, x, y, e[0]),
                                     epsilon(bb, x, y, e[1]));
                    if (lo != hi)
                        detail::fail(c, "straightening distorts the order over " +
                                            b.obj_name(xy));
                });
            });
        }
        rep.clauses.push_back(std::move(c));
    }

    { // the two graph constructions agree through the bend
        ClauseResult c;
        c.name = "epsilon.graphs";
        std::mt19937_64 rng(opt.seed + 45);
        auto pairs = detail::config_tuples<2>(objs, 48, rng, c.sampled);
        std::uint64_t per = detail::per_config(opt.budget, pairs.size());
        for (const auto& t : pairs) {
            guard(c, [&] {
                auto [x, y] = t;
                Obj xy = b.prod(x, y);
                detail::sweep_homs(b, {{x, y}}, per, rng, c.sampled,
                                   [&](const std::vector<BaseCategory::Mor>& m) {
                    ++c.checked;
                    if (!bb.eq(xy, b.unit(), epsilon_inv(bb, x, y, bb.graph_of(m[0])),
                               rgraph(bb, m[0])))
                        detail::fail(c, "unbent graph of " + b.mor_repr(m[0]) +
                                            " is not its relational graph");
                    if (!bb.eq(x, y, epsilon(bb, x, y, rgraph(bb, m[0])),
                               bb.graph_of(m[0])))
                        detail::fail(c, "relational graph of " + b.mor_repr(m[0]) +
                                            " does not straighten to its graph");
                });
            });
        }
        rep.clauses.push_back(std::move(c));
    }

    return rep;
}

// The unit of the correspondence at a doctrine: shifting fibers along the
// unit isomorphism into the relational doctrine of the doctrine's own
// bicategory. Checks that the shift is a fiberwise order isomorphism
// commuting with every piece of doctrine structure.
template <class D>
Report check_eta(D& P, const AdjunctionCheckOptions& opt = {}) {
    using Obj = BaseCategory::Obj;
    using Elem = typename D::Elem;

    BicatOfDoctrine<D> bb(P);
    RDoctrine<BicatOfDoctrine<D>> R(bb);
    BaseCategory& b = P.base();
    b.list_objects(opt.depth);
    const std::vector<Obj> objs = b.listed();

    Report rep;
    rep.title = "doctrine unit";

    auto guard = [&](ClauseResult& c, auto&& body) {
        try {
            body();
        } catch (const MissingTableError&) {
            c.notes.push_back("configuration skipped (size cap or missing tables)");
        } catch (const SizeBudgetError&) {
            c.notes.push_back("configuration skipped (size cap or missing tables)");
        }
    };

    auto shift = [&](Obj x, const Elem& u) { return P.reindex(b.rho(x), u); };

    { // order embedding and fiberwise surjectivity
        ClauseResult c;
        c.name = "eta.order_iso";
        std::mt19937_64 rng(opt.seed + 55);
        auto cfgs = objs;
        detail::trim_configs(cfgs, 48, rng, c.sampled);
        std::uint64_t per = detail::per_config(opt.budget, 2 * cfgs.size());
        for (Obj x : cfgs) {
            guard(c, [&] {
                Obj xi = b.prod(x, b.unit());
                detail::sweep_elems(P, {x, x}, per, rng, c.sampled,
                                    [&](const std::vector<Elem>& e) {
                    ++c.checked;
                    bool lo = P.leq(x, e[0], e[1]);
                    bool hi = R.leq(x, shift(x, e[0]), shift(x, e[1]));
                    if (lo != hi)
                        detail::fail(c, "unit shift distorts the order at " +
                                            b.obj_name(x));
                });
                detail::sweep_elems(P, {xi}, per, rng, c.sampled,
                                    [&](const std::vector<Elem>& e) {
                    ++c.checked;
                    auto back = P.reindex(b.rho_inv(x), e[0]);
                    if (!R.eq(x, shift(x, back), e[0]))
                        detail::fail(c, "unit shift misses an element over " +
                                            b.obj_name(x));
                });
            });
        }
        rep.clauses.push_back(std::move(c));
    }

    { // top, meet, equality
        ClauseResult c;
        c.name = "eta.structure";
        std::mt19937_64 rng(opt.seed + 65);
        auto cfgs = objs;
        detail::trim_configs(cfgs, 48, rng, c.sampled);
        std::uint64_t per = detail::per_config(opt.budget, cfgs.size());
        for (Obj x : cfgs) {
            guard(c, [&] {
                ++c.checked;
                if (!R.eq(x, shift(x, P.top(x)), R.top(x)))
                    detail::fail(c, "unit shift misses the top at " + b.obj_name(x));
                detail::sweep_elems(P, {x, x}, per, rng, c.sampled,
                                    [&](const std::vector<Elem>& e) {
                    ++c.checked;
                    if (!R.eq(x, shift(x, P.meet(x, e[0], e[1])),
                              R.meet(x, shift(x, e[0]), shift(x, e[1]))))
                        detail::fail(c, "unit shift breaks meets at " +
                                            b.obj_name(x));
                });
                Obj xx = b.prod(x, x);
                if (!R.eq(xx, shift(xx, P.delta(x)), R.delta(x)))
                    detail::fail(c, "unit shift mismatches the equality element at " +
                                        b.obj_name(x));
            });
        }
        rep.clauses.push_back(std::move(c));
    }

    { // existentials
        ClauseResult c;
        c.name = "eta.exists";
        std::mt19937_64 rng(opt.seed + 75);
        std::vector<Obj> prods;
        for (Obj p : objs)
            if (b.is_prod(p)) prods.push_back(p);
        detail::trim_configs(prods, 48, rng, c.sampled);
        std::uint64_t per = detail::per_config(opt.budget, prods.size());
        for (Obj p : prods) {
            guard(c, [&] {
                Obj l = b.left(p), r = b.right(p);
                detail::sweep_elems(P, {p}, per, rng, c.sampled,
                                    [&](const std::vector<Elem>& e) {
                    ++c.checked;
                    if (!R.eq(l, shift(l, P.exists1(p, e[0])),
                              R.exists1(p, shift(p, e[0]))))
                        detail::fail(c, "unit shift breaks the first existential over " +
                                            b.obj_name(p));
                    if (!R.eq(r, shift(r, P.exists2(p, e[0])),
                              R.exists2(p, shift(p, e[0]))))
                        detail::fail(c, "unit shift breaks the second existential over " +
                                            b.obj_name(p));
                });
            });
        }
        rep.clauses.push_back(std::move(c));
    }

    { // naturality in base morphisms
        ClauseResult c;
        c.name = "eta.natural";
        std::mt19937_64 rng(opt.seed + 85);
        auto pairs = detail::config_tuples<2>(objs, 48, rng, c.sampled);
        std::uint64_t per = detail::per_config(opt.budget, pairs.size());
        auto [bm, be] = detail::split_budget(per);
        for (const auto& t : pairs) {
            guard(c, [&] {
                auto [yy, xx] = t;
                detail::sweep_homs(b, {{yy, xx}}, bm, rng, c.sampled,
                                   [&](const std::vector<BaseCategory::Mor>& m) {
                    detail::sweep_elems(P, {xx}, be, rng, c.sampled,
                                        [&](const std::vector<Elem>& e) {
                        ++c.checked;
                        if (!R.eq(yy, shift(yy, P.reindex(m[0], e[0])),
                                  R.reindex(m[0], shift(xx, e[0]))))
                            detail::fail(c, "unit shift not natural along " +
                                                b.mor_repr(m[0]));
                    });
                });
            });
        }
        rep.clauses.push_back(std::move(c));
    }

    return rep;
}

// Whether the unit is an equivalence: the graph embedding must be a
// bijection from base morphisms onto the maps of the bicategory. Injectivity
// reflects comprehensive diagonals, surjectivity reflects unique choice.
template <class D>
Report check_eta_iso(D& P, const RucOptions& opt = {}) {
    using Obj = BaseCategory::Obj;
    using Elem = typename D::Elem;

    BicatOfDoctrine<D> bb(P);
    BaseCategory& b = P.base();
    b.list_objects(opt.depth);
    const std::vector<Obj> objs = b.listed();

    Report rep;
    rep.title = "unit equivalence";
    ClauseResult inj;
    inj.name = "gamma.injective";
    ClauseResult onto;
    onto.name = "gamma.onto_maps";
    std::mt19937_64 rng(opt.seed + 95);
    std::uint64_t skipped = 0;

    for (Obj x : objs) {
        for (Obj y : objs) {
            try {
                std::uint64_t bh = b.hom_size(x, y);
                if (bh > opt.budget) {
                    ++skipped;
                    continue;
                }
                std::vector<typename D::Elem> graphs;
                std::vector<BaseCategory::Mor> mors;
                b.each_hom(x, y, [&](const BaseCategory::Mor& f) {
                    graphs.push_back(bb.graph_of(f));
                    mors.push_back(f);
                    return true;
                });
                for (std::size_t i = 0; i < graphs.size(); ++i)
                    for (std::size_t j = i + 1; j < graphs.size(); ++j) {
                        ++inj.checked;
                        if (bb.eq(x, y, graphs[i], graphs[j]))
                            detail::fail(inj, "graphs of distinct morphisms " +
                                                  b.mor_repr(mors[i]) + " and " +
                                                  b.mor_repr(mors[j]) + " coincide");
                    }
                auto handle = [&](const Elem& R) {
                    if (!bb.is_map(x, y, R)) return;
                    ++onto.checked;
                    for (const auto& g : graphs)
                        if (bb.eq(x, y, g, R)) return;
                    detail::fail(onto, "map outside the image of the graph embedding "
                                       "in Hom(" + b.obj_name(x) + ", " +
                                       b.obj_name(y) + "): " + bb.hom_repr(x, y, R));
                };
                std::uint64_t fs = bb.hom_size(x, y);
                if (fs <= opt.budget) {
                    for (std::uint64_t i = 0; i < fs; ++i)
                        handle(bb.hom_at(x, y, i));
                } else {
                    onto.sampled = true;
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
        onto.notes.push_back(std::to_string(skipped) +
                             " hom pair(s) skipped (size cap or missing tables)");
    rep.clauses.push_back(std::move(inj));
    rep.clauses.push_back(std::move(onto));
    return rep;
}

} // namespace regdiag
