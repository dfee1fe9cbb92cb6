#include "regdiag/functor.hpp"

#include <memory>
#include <random>
#include <string>

namespace regdiag {
namespace {

using Obj = BaseCategory::Obj;
using Mor = BaseCategory::Mor;

// Shared element coding for the structural functors below. A target element
// of F(o) stands for a k-tuple of source elements of o: trivial at the unit,
// a base-card(o) numeral with the first component most significant at an
// atom, and a componentwise zip at a product (a k-tuple of pairs is the pair
// of k-tuples).
struct TupleCoder {
    BaseCategory* src = nullptr;
    BaseCategory* dst = nullptr;
    std::vector<Obj> atom_images;
    int k = 1;

    Obj map_obj(Obj o) const {
        const auto& s = src->shape(o);
        switch (s.kind) {
        case BaseCategory::Shape::Kind::Unit:
            return dst->unit();
        case BaseCategory::Shape::Kind::Atom:
            return atom_images.at(s.atom);
        case BaseCategory::Shape::Kind::Prod:
            return dst->prod(map_obj(s.left), map_obj(s.right));
        }
        throw Error("unreachable shape kind");
    }

    std::vector<std::uint32_t> decode(Obj o, std::uint64_t et) const {
        const auto& s = src->shape(o);
        std::vector<std::uint32_t> xs(k, 0);
        switch (s.kind) {
        case BaseCategory::Shape::Kind::Unit:
            return xs;
        case BaseCategory::Shape::Kind::Atom: {
            std::uint64_t n = src->card(o);
            for (int i = k; i-- > 0;) {
                xs[i] = static_cast<std::uint32_t>(et % n);
                et /= n;
            }
            return xs;
        }
        case BaseCategory::Shape::Kind::Prod: {
            std::uint64_t cr = dst->card(map_obj(s.right));
            auto da = decode(s.left, et / cr);
            auto db = decode(s.right, et % cr);
            std::uint64_t csr = src->card(s.right);
            for (int i = 0; i < k; ++i)
                xs[i] = static_cast<std::uint32_t>(da[i] * csr + db[i]);
            return xs;
        }
        }
        throw Error("unreachable shape kind");
    }

    std::uint64_t encode(Obj o, const std::vector<std::uint32_t>& xs) const {
        const auto& s = src->shape(o);
        switch (s.kind) {
        case BaseCategory::Shape::Kind::Unit:
            return 0;
        case BaseCategory::Shape::Kind::Atom: {
            std::uint64_t n = src->card(o);
            std::uint64_t et = 0;
            for (int i = 0; i < k; ++i) et = et * n + xs[i];
            return et;
        }
        case BaseCategory::Shape::Kind::Prod: {
            std::uint64_t csr = src->card(s.right);
            std::vector<std::uint32_t> us(k), vs(k);
            for (int i = 0; i < k; ++i) {
                us[i] = static_cast<std::uint32_t>(xs[i] / csr);
                vs[i] = static_cast<std::uint32_t>(xs[i] % csr);
            }
            return encode(s.left, us) * dst->card(map_obj(s.right)) +
                   encode(s.right, vs);
        }
        }
        throw Error("unreachable shape kind");
    }

    Mor map_mor(const Mor& f) const {
        Mor out;
        out.dom = map_obj(f.dom);
        out.cod = map_obj(f.cod);
        out.tab.resize(dst->card(out.dom));
        std::vector<std::uint32_t> ys(k);
        for (std::uint64_t et = 0; et < out.tab.size(); ++et) {
            auto xs = decode(f.dom, et);
            for (int i = 0; i < k; ++i) ys[i] = f.tab.at(xs[i]);
            out.tab[et] = static_cast<std::uint32_t>(encode(f.cod, ys));
        }
        return out;
    }
};

FunctorData wrap(BaseCategory& src, BaseCategory& dst, TupleCoder coder) {
    auto c = std::make_shared<TupleCoder>(std::move(coder));
    FunctorData F;
    F.src = &src;
    F.dst = &dst;
    F.on_obj = [c](Obj o) { return c->map_obj(o); };
    F.on_mor = [c](const Mor& f) { return c->map_mor(f); };
    return F;
}

} // namespace

BaseCategory power_target(const BaseCategory& src, int k,
                          std::uint64_t elem_cap) {
    if (k < 1) throw Error("power_target: exponent must be positive");
    std::vector<std::pair<std::string, std::vector<std::string>>> atoms;
    for (int i = 0; i < src.atom_count(); ++i) {
        Obj a = src.atom(i);
        std::uint64_t n = src.card(a);
        std::uint64_t total = 1;
        for (int j = 0; j < k; ++j) {
            if (n != 0 && total > elem_cap / (n == 0 ? 1 : n))
                throw SizeBudgetError("power_target: atom " + src.atom_name(i) +
                                      " exceeds the element cap");
            total *= n;
        }
        std::vector<std::string> names;
        names.reserve(total);
        for (std::uint64_t e = 0; e < total; ++e) {
            std::string nm;
            std::uint64_t rest = e;
            std::vector<std::uint64_t> digits(k);
            for (int j = k; j-- > 0;) {
                digits[j] = n == 0 ? 0 : rest % n;
                rest = n == 0 ? 0 : rest / n;
            }
            for (int j = 0; j < k; ++j) {
                if (j) nm += ".";
                nm += src.elem_name(a, digits[j]);
            }
            names.push_back(std::move(nm));
        }
        atoms.emplace_back(src.atom_name(i), std::move(names));
    }
    return BaseCategory(std::move(atoms), elem_cap);
}

FunctorData atom_power_functor(BaseCategory& src, BaseCategory& dst, int k) {
    if (k < 1) throw Error("atom_power_functor: exponent must be positive");
    if (src.atom_count() != dst.atom_count())
        throw Error("atom_power_functor: atom counts differ");
    TupleCoder coder;
    coder.src = &src;
    coder.dst = &dst;
    coder.k = k;
    for (int i = 0; i < src.atom_count(); ++i) {
        std::uint64_t n = src.card(src.atom(i));
        std::uint64_t want = 1;
        for (int j = 0; j < k; ++j) want *= n;
        if (dst.card(dst.atom(i)) != want)
            throw Error("atom_power_functor: target atom " + dst.atom_name(i) +
                        " has the wrong cardinality");
        coder.atom_images.push_back(dst.atom(i));
    }
    return wrap(src, dst, std::move(coder));
}

FunctorData atom_collapse_functor(BaseCategory& src, BaseCategory& dst,
                                  const std::vector<int>& atom_map) {
    if (static_cast<int>(atom_map.size()) != src.atom_count())
        throw Error("atom_collapse_functor: map size does not match atom count");
    TupleCoder coder;
    coder.src = &src;
    coder.dst = &dst;
    coder.k = 1;
    for (int i = 0; i < src.atom_count(); ++i) {
        int j = atom_map[i];
        if (j < 0 || j >= dst.atom_count())
            throw Error("atom_collapse_functor: target atom index out of range");
        if (src.card(src.atom(i)) != dst.card(dst.atom(j)))
            throw Error("atom_collapse_functor: atoms " + src.atom_name(i) +
                        " and " + dst.atom_name(j) + " differ in cardinality");
        coder.atom_images.push_back(dst.atom(j));
    }
    return wrap(src, dst, std::move(coder));
}

void validate_strict_cartesian(const FunctorData& F, std::uint64_t budget,
                               std::uint64_t seed) {
    BaseCategory& c = *F.src;
    BaseCategory& d = *F.dst;
    if (c.listed().empty()) c.list_objects(1);
    const auto objs = c.listed();

    auto bad = [](const std::string& what) {
        throw NotStrictCartesianError("functor is not strict cartesian: " + what);
    };

    if (F.on_obj(c.unit()) != d.unit()) bad("unit not preserved");
    for (Obj a : objs) {
        if (F.on_mor(c.id(a)) != d.id(F.on_obj(a)))
            bad("identity on " + c.obj_name(a) + " not preserved");
        if (F.on_mor(c.bang(a)) != d.bang(F.on_obj(a)))
            bad("terminal map on " + c.obj_name(a) + " not preserved");
        for (Obj b : objs) {
            Obj p;
            try {
                p = c.prod(a, b);
            } catch (const SizeBudgetError&) {
                continue;
            }
            Obj fp;
            try {
                fp = d.prod(F.on_obj(a), F.on_obj(b));
            } catch (const SizeBudgetError&) {
                continue;
            }
            if (F.on_obj(p) != fp)
                bad("product " + c.obj_name(p) + " not preserved");
            if (F.on_mor(c.proj1(p)) != d.proj1(fp) ||
                F.on_mor(c.proj2(p)) != d.proj2(fp))
                bad("projections of " + c.obj_name(p) + " not preserved");
        }
        if (F.on_mor(c.diag(a)) != d.diag(F.on_obj(a)))
            bad("diagonal on " + c.obj_name(a) + " not preserved");
    }

    std::mt19937_64 rng(seed);
    std::uint64_t done = 0;
    auto random_mor = [&](Obj x, Obj y) {
        Mor m;
        m.dom = x;
        m.cod = y;
        m.tab.resize(c.card(x));
        std::uint64_t cy = c.card(y);
        for (auto& v : m.tab) v = static_cast<std::uint32_t>(rng() % cy);
        return m;
    };
    for (Obj x : objs) {
        for (Obj y : objs) {
            if (c.card(y) == 0 && c.card(x) > 0) continue;
            for (Obj z : objs) {
                if (c.card(z) == 0 && c.card(y) > 0) continue;
                if (done >= budget) return;
                ++done;
                Mor f = random_mor(x, y), g = random_mor(y, z);
                if (F.on_mor(c.compose(f, g)) != d.compose(F.on_mor(f), F.on_mor(g)))
                    bad("composition not preserved on a sample " + c.obj_name(x) +
                        " -> " + c.obj_name(y) + " -> " + c.obj_name(z));
                Mor h = random_mor(x, z);
                try {
                    if (F.on_mor(c.pair(f, h)) != d.pair(F.on_mor(f), F.on_mor(h)))
                        bad("pairing not preserved on a sample over " +
                            c.obj_name(x));
                } catch (const SizeBudgetError&) {
                }
            }
        }
    }
}

} // namespace regdiag
