#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "regdiag/base.hpp"
#include "regdiag/errors.hpp"
#include "regdiag/report.hpp"

namespace regdiag {

// A doctrine D plugs into the checks below through this duck-typed surface:
//   using Elem = ...;
//   BaseCategory& base();
//   Elem top(Obj); Elem meet(Obj, Elem, Elem);
//   bool leq(Obj, Elem, Elem); bool eq(Obj, Elem, Elem);
//   Elem reindex(const Mor&, const Elem&);        // contravariant
//   Elem exists1(Obj p, const Elem&);             // adjoint to reindex(proj1)
//   Elem exists2(Obj p, const Elem&);             // adjoint to reindex(proj2)
//   Elem delta(Obj a);                            // element of fiber(a x a)
//   uint64_t fiber_size(Obj); Elem elem_at(Obj, uint64_t);
//   Elem random_elem(Obj, std::mt19937_64&);
//   std::string elem_repr(Obj, const Elem&);

struct DoctrineCheckOptions {
    int depth = 1;                 // product depth of the object universe
    std::uint64_t budget = 20000;  // elementary checks per clause
    std::uint64_t seed = 1;
};

namespace detail {

inline bool fits_budget(const std::vector<std::uint64_t>& sizes,
                        std::uint64_t budget) {
    unsigned __int128 total = 1;
    for (auto s : sizes) {
        total *= s;
        if (total > budget) return false;
    }
    return true;
}

// Enumerates tuples of fiber elements over the objects in xs: exhaustive when
// the tuple space fits the budget, otherwise a seeded sample of budget tuples.
template <class D, class Fn>
void sweep_elems(D& P, const std::vector<BaseCategory::Obj>& xs,
                 std::uint64_t budget, std::mt19937_64& rng, bool& sampled,
                 Fn&& fn) {
    std::vector<std::uint64_t> sizes;
    sizes.reserve(xs.size());
    for (auto x : xs) sizes.push_back(P.fiber_size(x));
    std::vector<typename D::Elem> tup(xs.size());
    if (fits_budget(sizes, budget)) {
        std::vector<std::uint64_t> idx(xs.size(), 0);
        for (;;) {
            for (std::size_t i = 0; i < xs.size(); ++i)
                tup[i] = P.elem_at(xs[i], idx[i]);
            fn(tup);
            std::size_t i = xs.size();
            while (i > 0) {
                --i;
                if (++idx[i] < sizes[i]) break;
                idx[i] = 0;
                if (i == 0) return;
            }
            if (xs.empty()) return;
        }
    }
    sampled = true;
    for (std::uint64_t k = 0; k < budget; ++k) {
        for (std::size_t i = 0; i < xs.size(); ++i)
            tup[i] = P.random_elem(xs[i], rng);
        fn(tup);
    }
}

// Same scheme over tuples of base morphisms with the given (dom, cod) pairs.
template <class Fn>
void sweep_homs(
    BaseCategory& b,
    const std::vector<std::pair<BaseCategory::Obj, BaseCategory::Obj>>& sig,
    std::uint64_t budget, std::mt19937_64& rng, bool& sampled, Fn&& fn) {
    std::vector<std::uint64_t> sizes;
    sizes.reserve(sig.size());
    for (auto [x, y] : sig) {
        std::uint64_t s = b.hom_size(x, y);
        if (s == 0) return;
        sizes.push_back(s);
    }
    std::vector<BaseCategory::Mor> tup(sig.size());
    if (fits_budget(sizes, budget)) {
        std::vector<std::uint64_t> idx(sig.size(), 0);
        for (;;) {
            for (std::size_t i = 0; i < sig.size(); ++i)
                tup[i] = b.hom_at(sig[i].first, sig[i].second, idx[i]);
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
        for (std::size_t i = 0; i < sig.size(); ++i) {
            auto [x, y] = sig[i];
            BaseCategory::Mor m;
            m.dom = x;
            m.cod = y;
            m.tab.resize(b.card(x));
            std::uint64_t cy = b.card(y);
            for (auto& v : m.tab) v = static_cast<std::uint32_t>(rng() % cy);
            tup[i] = std::move(m);
        }
        fn(tup);
    }
}

template <class T>
void trim_configs(std::vector<T>& v, std::size_t cap, std::mt19937_64& rng,
                  bool& sampled) {
    if (v.size() <= cap) return;
    sampled = true;
    std::shuffle(v.begin(), v.end(), rng);
    v.resize(cap);
}

// K-fold object tuples, enumerated when the cross product fits the cap and
// sampled otherwise (the full product over a deep universe is huge).
template <std::size_t K>
std::vector<std::array<BaseCategory::Obj, K>>
config_tuples(const std::vector<BaseCategory::Obj>& objs, std::size_t cap,
              std::mt19937_64& rng, bool& sampled) {
    std::vector<std::array<BaseCategory::Obj, K>> out;
    const std::uint64_t n = objs.size();
    if (n == 0) return out;
    unsigned __int128 total = 1;
    for (std::size_t i = 0; i < K; ++i) total *= n;
    if (total <= cap) {
        out.resize(static_cast<std::size_t>(total));
        for (std::uint64_t t = 0; t < static_cast<std::uint64_t>(total); ++t) {
            std::uint64_t rest = t;
            for (std::size_t i = K; i-- > 0;) {
                out[t][i] = objs[rest % n];
                rest /= n;
            }
        }
        return out;
    }
    sampled = true;
    out.reserve(cap);
    for (std::size_t j = 0; j < cap; ++j) {
        std::array<BaseCategory::Obj, K> t;
        for (std::size_t i = 0; i < K; ++i) t[i] = objs[rng() % n];
        out.push_back(t);
    }
    return out;
}

inline void fail(ClauseResult& c, std::string msg) {
    if (c.failures.size() < 16) c.failures.push_back(std::move(msg));
}

inline std::pair<std::uint64_t, std::uint64_t> split_budget(std::uint64_t per) {
    std::uint64_t bm = std::max<std::uint64_t>(
        2, static_cast<std::uint64_t>(std::sqrt(static_cast<double>(per))));
    return {bm, std::max<std::uint64_t>(2, per / bm)};
}

inline std::uint64_t per_config(std::uint64_t budget, std::size_t configs) {
    return std::max<std::uint64_t>(8, budget / std::max<std::size_t>(1, configs));
}

} // namespace detail

// Checks the doctrine laws over the depth-bounded object universe: fibers are
// meet-semilattices, reindexing is functorial and preserves top and meets,
// the existentials are adjoint to projection-reindexing and satisfy the
// substitution and distribution laws, and the equality elements behave as the
// diagonal. Configurations that outgrow the element cap, or that a partially
// loaded table doctrine has no data for, are skipped and counted in notes.
template <class D>
Report validate_doctrine(D& P, const DoctrineCheckOptions& opt = {}) {
    using Obj = BaseCategory::Obj;
    using Elem = typename D::Elem;

    BaseCategory& b = P.base();
    b.list_objects(opt.depth);
    const std::vector<Obj> objs = b.listed();
    std::vector<Obj> prods;
    for (Obj o : objs)
        if (b.is_prod(o)) prods.push_back(o);

    Report rep;
    rep.title = "doctrine laws";

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

    { // meet is the greatest lower bound, top is the maximum
        ClauseResult c;
        c.name = "fiber.lattice";
        std::mt19937_64 rng(opt.seed + 101);
        auto cfgs = objs;
        detail::trim_configs(cfgs, 64, rng, c.sampled);
        std::uint64_t per = detail::per_config(opt.budget, cfgs.size());
        run_configs(c, cfgs, [&](Obj x) {
            Elem t = P.top(x);
            detail::sweep_elems(P, {x, x, x}, per, rng, c.sampled,
                                [&](const std::vector<Elem>& e) {
                ++c.checked;
                const Elem& a = e[0];
                const Elem& a2 = e[1];
                const Elem& a3 = e[2];
                Elem m = P.meet(x, a, a2);
                if (!P.leq(x, a, a))
                    detail::fail(c, "order not reflexive over " + b.obj_name(x) +
                                        " at " + P.elem_repr(x, a));
                if (!P.leq(x, a, t))
                    detail::fail(c, "top not greatest over " + b.obj_name(x) +
                                        " at " + P.elem_repr(x, a));
                if (!P.leq(x, m, a) || !P.leq(x, m, a2))
                    detail::fail(c, "meet not a lower bound over " + b.obj_name(x) +
                                        " at " + P.elem_repr(x, a) + ", " +
                                        P.elem_repr(x, a2));
                if (P.leq(x, a3, a) && P.leq(x, a3, a2) && !P.leq(x, a3, m))
                    detail::fail(c, "meet not greatest over " + b.obj_name(x) +
                                        " below " + P.elem_repr(x, a3));
                if (P.leq(x, a, a2) && P.leq(x, a2, a) && !P.eq(x, a, a2))
                    detail::fail(c, "order not antisymmetric over " + b.obj_name(x));
            });
        });
        rep.clauses.push_back(std::move(c));
    }

    { // reindexing along identities and composites
        ClauseResult c;
        c.name = "reindex.functorial";
        std::mt19937_64 rng(opt.seed + 202);
        auto id_cfgs = objs;
        detail::trim_configs(id_cfgs, 64, rng, c.sampled);
        std::uint64_t per_id = detail::per_config(opt.budget / 4, id_cfgs.size());
        run_configs(c, id_cfgs, [&](Obj x) {
            detail::sweep_elems(P, {x}, per_id, rng, c.sampled,
                                [&](const std::vector<Elem>& e) {
                ++c.checked;
                if (!P.eq(x, P.reindex(b.id(x), e[0]), e[0]))
                    detail::fail(c, "identity reindexing moved " +
                                        P.elem_repr(x, e[0]) + " over " +
                                        b.obj_name(x));
            });
        });
        auto cfgs = detail::config_tuples<3>(objs, 128, rng, c.sampled);
        std::uint64_t per = detail::per_config(opt.budget, cfgs.size());
        auto [bm, be] = detail::split_budget(per);
        run_configs(c, cfgs, [&, bm = bm, be = be](const std::array<Obj, 3>& t) {
            auto [x, y, z] = t;
            detail::sweep_homs(b, {{x, y}, {y, z}}, bm, rng, c.sampled,
                               [&](const std::vector<BaseCategory::Mor>& m) {
                auto fg = b.compose(m[0], m[1]);
                detail::sweep_elems(P, {z}, be, rng, c.sampled,
                                    [&](const std::vector<Elem>& e) {
                    ++c.checked;
                    if (!P.eq(x, P.reindex(fg, e[0]),
                              P.reindex(m[0], P.reindex(m[1], e[0]))))
                        detail::fail(c, "composite reindexing disagrees " +
                                            b.obj_name(x) + " <- " + b.obj_name(y) +
                                            " <- " + b.obj_name(z) + " at " +
                                            P.elem_repr(z, e[0]));
                });
            });
        });
        rep.clauses.push_back(std::move(c));
    }

    { // every reindexing preserves top and binary meets
        ClauseResult c;
        c.name = "reindex.meet_top";
        std::mt19937_64 rng(opt.seed + 303);
        auto cfgs = detail::config_tuples<2>(objs, 96, rng, c.sampled);
        std::uint64_t per = detail::per_config(opt.budget, cfgs.size());
        auto [bm, be] = detail::split_budget(per);
        run_configs(c, cfgs, [&, bm = bm, be = be](const std::array<Obj, 2>& t) {
            auto [x, y] = t;
            detail::sweep_homs(b, {{x, y}}, bm, rng, c.sampled,
                               [&](const std::vector<BaseCategory::Mor>& m) {
                ++c.checked;
                if (!P.eq(x, P.reindex(m[0], P.top(y)), P.top(x)))
                    detail::fail(c, "top not preserved along " + b.mor_repr(m[0]));
                detail::sweep_elems(P, {y, y}, be, rng, c.sampled,
                                    [&](const std::vector<Elem>& e) {
                    ++c.checked;
                    Elem lhs = P.reindex(m[0], P.meet(y, e[0], e[1]));
                    Elem rhs = P.meet(x, P.reindex(m[0], e[0]),
                                      P.reindex(m[0], e[1]));
                    if (!P.eq(x, lhs, rhs))
                        detail::fail(c, "meet not preserved along " +
                                            b.mor_repr(m[0]) + " at " +
                                            P.elem_repr(y, e[0]) + ", " +
                                            P.elem_repr(y, e[1]));
                });
            });
        });
        rep.clauses.push_back(std::move(c));
    }

    { // the existentials are left adjoint to projection-reindexing
        ClauseResult c;
        c.name = "exists.adjoint";
        std::mt19937_64 rng(opt.seed + 404);
        auto cfgs = prods;
        detail::trim_configs(cfgs, 64, rng, c.sampled);
        std::uint64_t per = detail::per_config(opt.budget, 2 * cfgs.size());
        run_configs(c, cfgs, [&](Obj p) {
            Obj l = b.left(p), r = b.right(p);
            detail::sweep_elems(P, {p, l}, per, rng, c.sampled,
                                [&](const std::vector<Elem>& e) {
                ++c.checked;
                bool lhs = P.leq(l, P.exists1(p, e[0]), e[1]);
                bool rhs = P.leq(p, e[0], P.reindex(b.proj1(p), e[1]));
                if (lhs != rhs)
                    detail::fail(c, "left adjunction broken over " + b.obj_name(p) +
                                        " at " + P.elem_repr(p, e[0]) + " vs " +
                                        P.elem_repr(l, e[1]));
            });
            detail::sweep_elems(P, {p, r}, per, rng, c.sampled,
                                [&](const std::vector<Elem>& e) {
                ++c.checked;
                bool lhs = P.leq(r, P.exists2(p, e[0]), e[1]);
                bool rhs = P.leq(p, e[0], P.reindex(b.proj2(p), e[1]));
                if (lhs != rhs)
                    detail::fail(c, "right adjunction broken over " + b.obj_name(p) +
                                        " at " + P.elem_repr(p, e[0]) + " vs " +
                                        P.elem_repr(r, e[1]));
            });
        });
        rep.clauses.push_back(std::move(c));
    }

    { // existentials commute with substitution along the other component
        ClauseResult c;
        c.name = "exists.beck_chevalley";
        std::mt19937_64 rng(opt.seed + 505);
        auto cfgs = detail::config_tuples<3>(objs, 96, rng, c.sampled);
        std::uint64_t per = detail::per_config(opt.budget, 2 * cfgs.size());
        auto [bm, be] = detail::split_budget(per);
        run_configs(c, cfgs, [&, bm = bm, be = be](const std::array<Obj, 3>& t) {
            auto [x, a, a2] = t;
            Obj xa = b.prod(x, a), xa2 = b.prod(x, a2);
            Obj ax = b.prod(a, x), a2x = b.prod(a2, x);
            detail::sweep_homs(b, {{a2, a}}, bm, rng, c.sampled,
                               [&](const std::vector<BaseCategory::Mor>& m) {
                const auto& f = m[0];
                auto idf = b.prod_mor(b.id(x), f);
                auto fid = b.prod_mor(f, b.id(x));
                detail::sweep_elems(P, {xa}, be, rng, c.sampled,
                                    [&](const std::vector<Elem>& e) {
                    ++c.checked;
                    Elem lhs = P.reindex(f, P.exists2(xa, e[0]));
                    Elem rhs = P.exists2(xa2, P.reindex(idf, e[0]));
                    if (!P.eq(a2, lhs, rhs))
                        detail::fail(c, "substitution square broken over " +
                                            b.obj_name(xa) + " along " +
                                            b.mor_repr(f));
                });
                detail::sweep_elems(P, {ax}, be, rng, c.sampled,
                                    [&](const std::vector<Elem>& e) {
                    ++c.checked;
                    Elem lhs = P.reindex(f, P.exists1(ax, e[0]));
                    Elem rhs = P.exists1(a2x, P.reindex(fid, e[0]));
                    if (!P.eq(a2, lhs, rhs))
                        detail::fail(c, "mirrored substitution square broken over " +
                                            b.obj_name(ax) + " along " +
                                            b.mor_repr(f));
                });
            });
        });
        rep.clauses.push_back(std::move(c));
    }

    { // existentials distribute over meets with reindexed elements
        ClauseResult c;
        c.name = "exists.frobenius";
        std::mt19937_64 rng(opt.seed + 606);
        auto cfgs = prods;
        detail::trim_configs(cfgs, 64, rng, c.sampled);
        std::uint64_t per = detail::per_config(opt.budget, 2 * cfgs.size());
        run_configs(c, cfgs, [&](Obj p) {
            Obj l = b.left(p), r = b.right(p);
            detail::sweep_elems(P, {l, p}, per, rng, c.sampled,
                                [&](const std::vector<Elem>& e) {
                ++c.checked;
                Elem lhs = P.exists1(
                    p, P.meet(p, P.reindex(b.proj1(p), e[0]), e[1]));
                Elem rhs = P.meet(l, e[0], P.exists1(p, e[1]));
                if (!P.eq(l, lhs, rhs))
                    detail::fail(c, "distribution law broken over " + b.obj_name(p) +
                                        " at " + P.elem_repr(l, e[0]) + ", " +
                                        P.elem_repr(p, e[1]));
            });
            detail::sweep_elems(P, {r, p}, per, rng, c.sampled,
                                [&](const std::vector<Elem>& e) {
                ++c.checked;
                Elem lhs = P.exists2(
                    p, P.meet(p, P.reindex(b.proj2(p), e[0]), e[1]));
                Elem rhs = P.meet(r, e[0], P.exists2(p, e[1]));
                if (!P.eq(r, lhs, rhs))
                    detail::fail(c, "mirrored distribution law broken over " +
                                        b.obj_name(p));
            });
        });
        rep.clauses.push_back(std::move(c));
    }

    { // quantification along the diagonal: explicit formula and adjointness
        ClauseResult c;
        c.name = "equality.unit";
        std::mt19937_64 rng(opt.seed + 707);
        auto cfgs = objs;
        detail::trim_configs(cfgs, 64, rng, c.sampled);
        std::uint64_t per = detail::per_config(opt.budget, cfgs.size());
        run_configs(c, cfgs, [&](Obj a) {
            Obj aa = b.prod(a, a);
            Elem d = P.delta(a);
            auto along_diag = [&](const Elem& alpha) {
                return P.meet(aa, P.reindex(b.proj1(aa), alpha), d);
            };
            ++c.checked;
            if (!P.eq(aa, along_diag(P.top(a)), d))
                detail::fail(c, "diagonal image of top is not delta over " +
                                    b.obj_name(a));
            auto dg = b.diag(a);
            detail::sweep_elems(P, {a, aa}, per, rng, c.sampled,
                                [&](const std::vector<Elem>& e) {
                ++c.checked;
                bool lhs = P.leq(aa, along_diag(e[0]), e[1]);
                bool rhs = P.leq(a, e[0], P.reindex(dg, e[1]));
                if (lhs != rhs)
                    detail::fail(c, "diagonal adjunction broken over " +
                                        b.obj_name(a) + " at " +
                                        P.elem_repr(a, e[0]) + " vs " +
                                        P.elem_repr(aa, e[1]));
            });
        });
        rep.clauses.push_back(std::move(c));
    }

    { // quantification along id x diagonal in an ambient context
        ClauseResult c;
        c.name = "equality.general";
        std::mt19937_64 rng(opt.seed + 808);
        auto cfgs = detail::config_tuples<2>(objs, 96, rng, c.sampled);
        std::uint64_t per = detail::per_config(opt.budget, cfgs.size());
        run_configs(c, cfgs, [&](const std::array<Obj, 2>& t) {
            auto [x, a] = t;
            Obj aa = b.prod(a, a);
            Obj w = b.prod(x, aa);
            Obj xa = b.prod(x, a);
            auto e_mor = b.prod_mor(b.id(x), b.diag(a));
            auto u1 = b.prod_mor(b.id(x), b.proj1(aa));
            auto u2 = b.proj2(w);
            Elem dd = P.reindex(u2, P.delta(a));
            detail::sweep_elems(P, {xa, w}, per, rng, c.sampled,
                                [&](const std::vector<Elem>& e) {
                ++c.checked;
                Elem img = P.meet(w, P.reindex(u1, e[0]), dd);
                bool lhs = P.leq(w, img, e[1]);
                bool rhs = P.leq(xa, e[0], P.reindex(e_mor, e[1]));
                if (lhs != rhs)
                    detail::fail(c, "extended diagonal adjunction broken over " +
                                        b.obj_name(w) + " at " +
                                        P.elem_repr(xa, e[0]));
            });
        });
        rep.clauses.push_back(std::move(c));
    }

    { // the equality element of a product decomposes componentwise
        ClauseResult c;
        c.name = "delta.pair";
        std::mt19937_64 rng(opt.seed + 909);
        auto cfgs = prods;
        detail::trim_configs(cfgs, 64, rng, c.sampled);
        run_configs(c, cfgs, [&](Obj p) {
            Obj a = b.left(p), a2 = b.right(p);
            Obj w = b.prod(p, p);
            auto u = b.pair(b.compose(b.proj1(w), b.proj1(p)),
                            b.compose(b.proj2(w), b.proj1(p)));
            auto v = b.pair(b.compose(b.proj1(w), b.proj2(p)),
                            b.compose(b.proj2(w), b.proj2(p)));
            ++c.checked;
            Elem rhs = P.meet(w, P.reindex(u, P.delta(a)),
                              P.reindex(v, P.delta(a2)));
            if (!P.eq(w, P.delta(p), rhs))
                detail::fail(c, "componentwise delta disagrees over " +
                                    b.obj_name(p));
        });
        rep.clauses.push_back(std::move(c));
    }

    { // delta of the unit pulls back to top everywhere
        ClauseResult c;
        c.name = "unit.delta";
        std::mt19937_64 rng(opt.seed + 1010);
        auto cfgs = objs;
        detail::trim_configs(cfgs, 64, rng, c.sampled);
        run_configs(c, cfgs, [&](Obj x) {
            auto m = b.pair(b.bang(x), b.bang(x));
            ++c.checked;
            if (!P.eq(x, P.reindex(m, P.delta(b.unit())), P.top(x)))
                detail::fail(c, "unit delta does not pull back to top over " +
                                    b.obj_name(x));
        });
        rep.clauses.push_back(std::move(c));
    }

    { // lax naturality of the existential across commuting squares
        ClauseResult c;
        c.name = "lax.square";
        std::mt19937_64 rng(opt.seed + 1111);
        auto cfgs = detail::config_tuples<4>(objs, 64, rng, c.sampled);
        std::uint64_t per = detail::per_config(opt.budget, cfgs.size());
        auto [bm, be] = detail::split_budget(per);
        run_configs(c, cfgs, [&, bm = bm, be = be](const std::array<Obj, 4>& t) {
            auto [x, a, y, b2] = t;
            Obj p = b.prod(x, a), q = b.prod(y, b2);
            detail::sweep_homs(b, {{p, y}, {a, b2}}, bm, rng, c.sampled,
                               [&](const std::vector<BaseCategory::Mor>& m) {
                auto h = b.pair(m[0], b.compose(b.proj2(p), m[1]));
                const auto& g = m[1];
                detail::sweep_elems(P, {q}, be, rng, c.sampled,
                                    [&](const std::vector<Elem>& e) {
                    ++c.checked;
                    Elem lhs = P.exists2(p, P.reindex(h, e[0]));
                    Elem rhs = P.reindex(g, P.exists2(q, e[0]));
                    if (!P.leq(a, lhs, rhs))
                        detail::fail(c, "lax square inequality broken " +
                                            b.obj_name(p) + " -> " + b.obj_name(q) +
                                            " at " + P.elem_repr(q, e[0]));
                });
            });
        });
        rep.clauses.push_back(std::move(c));
    }

    return rep;
}

// Compares two doctrines over one shared base category through the index
// bijection i -> elem_at(x, i): fiber sizes must agree, the orders must
// agree on element pairs, and top and binary meets must land on the same
// index. When the pair sweeps run exhaustively this certifies that every
// fiber of the first doctrine is order-isomorphic to the matching fiber of
// the second.
template <class D1, class D2>
Report check_fiberwise_order_iso(D1& P, D2& Q,
                                 const DoctrineCheckOptions& opt = {}) {
    using Obj = BaseCategory::Obj;

    BaseCategory& b = P.base();
    b.list_objects(opt.depth);
    const std::vector<Obj> univ = b.listed();

    Report rep;
    rep.title = "fiberwise order isomorphism";

    auto guarded = [&](ClauseResult& c, auto&& body) {
        std::uint64_t skipped = 0;
        for (Obj x : univ) {
            try {
                body(x);
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
    };

    auto p_index = [&](Obj x, const typename D1::Elem& e, std::uint64_t n) {
        for (std::uint64_t i = 0; i < n; ++i)
            if (P.eq(x, P.elem_at(x, i), e)) return static_cast<std::int64_t>(i);
        return static_cast<std::int64_t>(-1);
    };
    auto q_index = [&](Obj x, const typename D2::Elem& e, std::uint64_t n) {
        for (std::uint64_t i = 0; i < n; ++i)
            if (Q.eq(x, Q.elem_at(x, i), e)) return static_cast<std::int64_t>(i);
        return static_cast<std::int64_t>(-1);
    };

    {
        ClauseResult c;
        c.name = "fiber.sizes";
        guarded(c, [&](Obj x) {
            ++c.checked;
            if (P.fiber_size(x) != Q.fiber_size(x))
                detail::fail(c, "fiber sizes differ over " + b.obj_name(x) +
                                    ": " + std::to_string(P.fiber_size(x)) +
                                    " vs " + std::to_string(Q.fiber_size(x)));
        });
    }
    {
        ClauseResult c;
        c.name = "order.agree";
        std::mt19937_64 rng(opt.seed + 11);
        guarded(c, [&](Obj x) {
            std::uint64_t n = std::min(P.fiber_size(x), Q.fiber_size(x));
            if (n == 0) return;
            auto pair_check = [&](std::uint64_t i, std::uint64_t j) {
                ++c.checked;
                bool lp = P.leq(x, P.elem_at(x, i), P.elem_at(x, j));
                bool lq = Q.leq(x, Q.elem_at(x, i), Q.elem_at(x, j));
                if (lp != lq)
                    detail::fail(c, "order disagrees over " + b.obj_name(x) +
                                        " at indices " + std::to_string(i) +
                                        ", " + std::to_string(j));
            };
            if (n <= opt.budget / n) {
                for (std::uint64_t i = 0; i < n; ++i)
                    for (std::uint64_t j = 0; j < n; ++j) pair_check(i, j);
            } else {
                c.sampled = true;
                for (std::uint64_t k = 0; k < opt.budget; ++k)
                    pair_check(rng() % n, rng() % n);
            }
        });
    }
    {
        ClauseResult c;
        c.name = "top.agree";
        guarded(c, [&](Obj x) {
            std::uint64_t n = std::min(P.fiber_size(x), Q.fiber_size(x));
            ++c.checked;
            std::int64_t ip = p_index(x, P.top(x), n);
            std::int64_t iq = q_index(x, Q.top(x), n);
            if (ip < 0 || ip != iq)
                detail::fail(c, "tops land on different indices over " +
                                    b.obj_name(x));
        });
    }
    {
        ClauseResult c;
        c.name = "meet.agree";
        std::mt19937_64 rng(opt.seed + 12);
        guarded(c, [&](Obj x) {
            std::uint64_t n = std::min(P.fiber_size(x), Q.fiber_size(x));
            if (n == 0) return;
            auto pair_check = [&](std::uint64_t i, std::uint64_t j) {
                ++c.checked;
                std::int64_t ip =
                    p_index(x, P.meet(x, P.elem_at(x, i), P.elem_at(x, j)), n);
                std::int64_t iq =
                    q_index(x, Q.meet(x, Q.elem_at(x, i), Q.elem_at(x, j)), n);
                if (ip < 0 || ip != iq)
                    detail::fail(c, "meets land on different indices over " +
                                        b.obj_name(x) + " at " +
                                        std::to_string(i) + ", " +
                                        std::to_string(j));
            };
            std::uint64_t pair_budget =
                std::max<std::uint64_t>(1, opt.budget / n);
            if (n <= pair_budget / n) {
                for (std::uint64_t i = 0; i < n; ++i)
                    for (std::uint64_t j = 0; j < n; ++j) pair_check(i, j);
            } else {
                c.sampled = true;
                for (std::uint64_t k = 0; k < pair_budget; ++k)
                    pair_check(rng() % n, rng() % n);
            }
        });
    }

    return rep;
}

} // namespace regdiag
