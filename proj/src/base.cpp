#include "regdiag/base.hpp"

#include <algorithm>
#include <sstream>

namespace regdiag {

BaseCategory::BaseCategory(
    std::vector<std::pair<std::string, std::vector<std::string>>> atoms,
    std::uint64_t elem_cap)
    : cap_(elem_cap) {
    Shape u;
    u.kind = Shape::Kind::Unit;
    unit_ = intern(u, 1);
    for (auto& [name, elems] : atoms) {
        if (elems.size() > cap_)
            throw SizeBudgetError("atom " + name + " exceeds the element cap");
        Shape s;
        s.kind = Shape::Kind::Atom;
        s.atom = static_cast<int>(atom_names_.size());
        atom_names_.push_back(name);
        atom_elems_.push_back(elems);
        atom_objs_.push_back(intern(s, elems.size()));
    }
}

BaseCategory::Obj BaseCategory::intern(Shape s, std::uint64_t card) {
    shapes_.push_back(s);
    cards_.push_back(card);
    return static_cast<Obj>(shapes_.size()) - 1;
}

BaseCategory::Obj BaseCategory::prod(Obj a, Obj b) {
    auto it = prod_index_.find({a, b});
    if (it != prod_index_.end()) return it->second;
    std::uint64_t ca = card(a), cb = card(b);
    if (cb != 0 && ca > cap_ / cb)
        throw SizeBudgetError("product " + obj_name(a) + " x " + obj_name(b) +
                              " exceeds the element cap of " + std::to_string(cap_));
    Shape s;
    s.kind = Shape::Kind::Prod;
    s.left = a;
    s.right = b;
    Obj o = intern(s, ca * cb);
    prod_index_[{a, b}] = o;
    return o;
}

BaseCategory::Obj BaseCategory::left(Obj o) const {
    const Shape& s = shape(o);
    if (s.kind != Shape::Kind::Prod) throw Error("left: not a product");
    return s.left;
}
BaseCategory::Obj BaseCategory::right(Obj o) const {
    const Shape& s = shape(o);
    if (s.kind != Shape::Kind::Prod) throw Error("right: not a product");
    return s.right;
}

std::string BaseCategory::obj_name(Obj o) const {
    const Shape& s = shape(o);
    switch (s.kind) {
    case Shape::Kind::Unit:
        return "I";
    case Shape::Kind::Atom:
        return atom_names_[s.atom];
    case Shape::Kind::Prod:
        return "(" + obj_name(s.left) + " x " + obj_name(s.right) + ")";
    }
    return "?";
}

std::string BaseCategory::elem_name(Obj o, std::uint64_t e) const {
    const Shape& s = shape(o);
    switch (s.kind) {
    case Shape::Kind::Unit:
        return "*";
    case Shape::Kind::Atom:
        return atom_elems_[s.atom].at(e);
    case Shape::Kind::Prod: {
        std::uint64_t cr = card(s.right);
        return "(" + elem_name(s.left, e / cr) + "," + elem_name(s.right, e % cr) + ")";
    }
    }
    return "?";
}

void BaseCategory::list_objects(int depth) {
    std::vector<Obj> cur;
    cur.push_back(unit_);
    for (Obj a : atom_objs_) cur.push_back(a);
    std::vector<Obj> all = cur;
    for (int d = 0; d < depth; ++d) {
        std::vector<Obj> next = all;
        for (Obj a : all)
            for (Obj b : all) {
                std::uint64_t ca = card(a), cb = card(b);
                if (cb != 0 && ca > cap_ / cb) continue;
                Obj p = prod(a, b);
                if (std::find(next.begin(), next.end(), p) == next.end())
                    next.push_back(p);
            }
        all = std::move(next);
    }
    listed_ = std::move(all);
}

bool BaseCategory::is_listed(Obj o) const {
    return std::find(listed_.begin(), listed_.end(), o) != listed_.end();
}

BaseCategory::Mor BaseCategory::id(Obj x) const {
    Mor m;
    m.dom = m.cod = x;
    m.tab.resize(card(x));
    for (std::size_t i = 0; i < m.tab.size(); ++i)
        m.tab[i] = static_cast<std::uint32_t>(i);
    return m;
}

BaseCategory::Mor BaseCategory::compose(const Mor& f, const Mor& g) const {
    if (f.cod != g.dom) throw Error("compose: middle objects differ");
    Mor m;
    m.dom = f.dom;
    m.cod = g.cod;
    m.tab.resize(f.tab.size());
    for (std::size_t i = 0; i < f.tab.size(); ++i) m.tab[i] = g.tab[f.tab[i]];
    return m;
}

BaseCategory::Mor BaseCategory::proj1(Obj p) const {
    const Shape& s = shape(p);
    if (s.kind != Shape::Kind::Prod) throw Error("proj1: not a product");
    Mor m;
    m.dom = p;
    m.cod = s.left;
    std::uint64_t cr = card(s.right);
    m.tab.resize(card(p));
    for (std::uint64_t e = 0; e < m.tab.size(); ++e)
        m.tab[e] = static_cast<std::uint32_t>(e / cr);
    return m;
}

BaseCategory::Mor BaseCategory::proj2(Obj p) const {
    const Shape& s = shape(p);
    if (s.kind != Shape::Kind::Prod) throw Error("proj2: not a product");
    Mor m;
    m.dom = p;
    m.cod = s.right;
    std::uint64_t cr = card(s.right);
    m.tab.resize(card(p));
    for (std::uint64_t e = 0; e < m.tab.size(); ++e)
        m.tab[e] = static_cast<std::uint32_t>(e % cr);
    return m;
}

BaseCategory::Mor BaseCategory::pair(const Mor& f, const Mor& g) {
    if (f.dom != g.dom) throw Error("pair: domains differ");
    Obj p = prod(f.cod, g.cod);
    Mor m;
    m.dom = f.dom;
    m.cod = p;
    std::uint64_t cr = card(g.cod);
    m.tab.resize(f.tab.size());
    for (std::size_t i = 0; i < f.tab.size(); ++i)
        m.tab[i] = static_cast<std::uint32_t>(f.tab[i] * cr + g.tab[i]);
    return m;
}

BaseCategory::Mor BaseCategory::prod_mor(const Mor& f, const Mor& g) {
    Obj d = prod(f.dom, g.dom);
    return pair(compose(proj1(d), f), compose(proj2(d), g));
}

BaseCategory::Mor BaseCategory::diag(Obj x) { return pair(id(x), id(x)); }

BaseCategory::Mor BaseCategory::bang(Obj x) const {
    Mor m;
    m.dom = x;
    m.cod = unit_;
    m.tab.assign(card(x), 0);
    return m;
}

BaseCategory::Mor BaseCategory::symm(Obj p) {
    return pair(proj2(p), proj1(p));
}

BaseCategory::Mor BaseCategory::assoc_right(Obj p) {
    // ((a*b)*c) -> (a*(b*c))
    Obj ab = left(p);
    Mor pa = compose(proj1(p), proj1(ab));
    Mor pb = compose(proj1(p), proj2(ab));
    Mor pc = proj2(p);
    return pair(pa, pair(pb, pc));
}

BaseCategory::Mor BaseCategory::assoc_left(Obj p) {
    // (a*(b*c)) -> ((a*b)*c)
    Obj bc = right(p);
    Mor pa = proj1(p);
    Mor pb = compose(proj2(p), proj1(bc));
    Mor pc = compose(proj2(p), proj2(bc));
    return pair(pair(pa, pb), pc);
}

BaseCategory::Mor BaseCategory::rho(Obj x) {
    Mor m;
    m.dom = prod(x, unit_);
    m.cod = x;
    m.tab.resize(card(x));
    for (std::size_t i = 0; i < m.tab.size(); ++i)
        m.tab[i] = static_cast<std::uint32_t>(i);
    return m;
}

BaseCategory::Mor BaseCategory::rho_inv(Obj x) {
    Mor m;
    m.dom = x;
    m.cod = prod(x, unit_);
    m.tab.resize(card(x));
    for (std::size_t i = 0; i < m.tab.size(); ++i)
        m.tab[i] = static_cast<std::uint32_t>(i);
    return m;
}

BaseCategory::Mor BaseCategory::lambda(Obj x) {
    Mor m;
    m.dom = prod(unit_, x);
    m.cod = x;
    m.tab.resize(card(x));
    for (std::size_t i = 0; i < m.tab.size(); ++i)
        m.tab[i] = static_cast<std::uint32_t>(i);
    return m;
}

BaseCategory::Mor BaseCategory::lambda_inv(Obj x) {
    Mor m;
    m.dom = x;
    m.cod = prod(unit_, x);
    m.tab.resize(card(x));
    for (std::size_t i = 0; i < m.tab.size(); ++i)
        m.tab[i] = static_cast<std::uint32_t>(i);
    return m;
}

BaseCategory::Mor BaseCategory::constant(Obj x, Obj y, std::uint64_t e) const {
    if (e >= card(y)) throw Error("constant: element out of range");
    Mor m;
    m.dom = x;
    m.cod = y;
    m.tab.assign(card(x), static_cast<std::uint32_t>(e));
    return m;
}

bool BaseCategory::is_bijective(const Mor& f) const {
    if (card(f.dom) != card(f.cod)) return false;
    std::vector<char> hit(card(f.cod), 0);
    for (auto v : f.tab) {
        if (hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

BaseCategory::Mor BaseCategory::inverse(const Mor& f) const {
    if (!is_bijective(f)) throw Error("inverse: morphism is not a bijection");
    Mor m;
    m.dom = f.cod;
    m.cod = f.dom;
    m.tab.resize(f.tab.size());
    for (std::size_t i = 0; i < f.tab.size(); ++i)
        m.tab[f.tab[i]] = static_cast<std::uint32_t>(i);
    return m;
}

std::uint64_t BaseCategory::hom_size(Obj x, Obj y) const {
    std::uint64_t cx = card(x), cy = card(y);
    std::uint64_t r = 1;
    const std::uint64_t clamp = 1ull << 62;
    for (std::uint64_t i = 0; i < cx; ++i) {
        if (cy != 0 && r > clamp / cy) return clamp;
        r *= cy;
    }
    return r;
}

BaseCategory::Mor BaseCategory::hom_at(Obj x, Obj y, std::uint64_t idx) const {
    Mor m;
    m.dom = x;
    m.cod = y;
    std::uint64_t cx = card(x), cy = card(y);
    if (cy == 0 && cx > 0) throw Error("hom_at: empty hom-set");
    m.tab.assign(cx, 0);
    for (std::uint64_t i = cx; i-- > 0;) {
        m.tab[i] = static_cast<std::uint32_t>(idx % cy);
        idx /= cy;
    }
    return m;
}

std::string BaseCategory::mor_repr(const Mor& f) const {
    std::ostringstream os;
    os << obj_name(f.dom) << " -> " << obj_name(f.cod) << " [";
    for (std::size_t i = 0; i < f.tab.size(); ++i) {
        if (i) os << " ";
        os << elem_name(f.dom, i) << ":" << elem_name(f.cod, f.tab[i]);
    }
    os << "]";
    return os.str();
}

std::string mor_key(const BaseCategory::Mor& f) {
    std::string k = std::to_string(f.dom) + "|" + std::to_string(f.cod) + "|";
    for (auto v : f.tab) {
        k += std::to_string(v);
        k += ",";
    }
    return k;
}

BaseCategory build_base(
    std::vector<std::pair<std::string, std::vector<std::string>>> atoms,
    int depth, std::uint64_t elem_cap) {
    if (atoms.empty()) throw Error("build_base: at least one atom is required");
    if (depth < 1) throw Error("build_base: depth must be at least 1");
    BaseCategory b(std::move(atoms), elem_cap);
    b.list_objects(depth);
    return b;
}

} // namespace regdiag
