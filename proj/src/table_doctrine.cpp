#include "regdiag/table_doctrine.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace regdiag {

using json = nlohmann::json;
using Obj = BaseCategory::Obj;
using Elem = TableDoctrine::Elem;

std::string table_mor_key(const BaseCategory& b, const BaseCategory::Mor& f) {
    std::string k = b.obj_name(f.dom) + "|" + b.obj_name(f.cod) + "|";
    for (std::size_t i = 0; i < f.tab.size(); ++i) {
        if (i) k += ",";
        k += std::to_string(f.tab[i]);
    }
    return k;
}

TableDoctrine::Fiber& TableDoctrine::fiber(Obj x) {
    auto it = fibers_.find(x);
    if (it == fibers_.end())
        throw MissingTableError("no fiber recorded for " + base_->obj_name(x));
    return it->second;
}

Elem TableDoctrine::meet(Obj x, Elem a, Elem b) {
    const Fiber& f = fiber(x);
    BitVec cand = f.below.at(a);
    cand &= f.below.at(b);
    Elem best = 0;
    bool found = false;
    cand.for_each([&](std::size_t m) {
        if (!found && cand.subset_of(f.below[m])) {
            best = static_cast<Elem>(m);
            found = true;
        }
    });
    if (!found)
        throw SchemaError("fiber over " + base_->obj_name(x) +
                          " has no meet for " + f.names.at(a) + " and " +
                          f.names.at(b));
    return best;
}

Elem TableDoctrine::reindex(const BaseCategory::Mor& f, const Elem& e) {
    auto it = reindex_.find(table_mor_key(*base_, f));
    if (it == reindex_.end())
        throw MissingTableError("no reindexing table for " +
                                base_->mor_repr(f));
    return it->second.at(e);
}

Elem TableDoctrine::exists1(Obj p, const Elem& e) {
    auto it = ex1_.find(p);
    if (it == ex1_.end())
        throw MissingTableError("no left existential table for " +
                                base_->obj_name(p));
    return it->second.at(e);
}

Elem TableDoctrine::exists2(Obj p, const Elem& e) {
    auto it = ex2_.find(p);
    if (it == ex2_.end())
        throw MissingTableError("no right existential table for " +
                                base_->obj_name(p));
    return it->second.at(e);
}

Elem TableDoctrine::delta(Obj a) {
    auto it = delta_.find(a);
    if (it == delta_.end())
        throw MissingTableError("no equality element recorded for " +
                                base_->obj_name(a));
    return it->second;
}

Elem TableDoctrine::elem_at(Obj x, std::uint64_t idx) {
    if (idx >= fiber_size(x))
        throw Error("fiber element index out of range over " +
                    base_->obj_name(x));
    return static_cast<Elem>(idx);
}

namespace {

Obj resolve_obj(BaseCategory& b, const std::map<std::string, int>& atom_ix,
                const json& node) {
    if (node.is_string()) {
        const std::string s = node.get<std::string>();
        if (s == "I") return b.unit();
        auto it = atom_ix.find(s);
        if (it == atom_ix.end())
            throw SchemaError("unknown atom name: " + s);
        return b.atom(it->second);
    }
    if (node.is_array() && node.size() == 2)
        return b.prod(resolve_obj(b, atom_ix, node[0]),
                      resolve_obj(b, atom_ix, node[1]));
    throw SchemaError("object must be an atom name, \"I\", or a pair");
}

Elem checked_index(const json& v, std::size_t n, const std::string& where) {
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= n)
        throw SchemaError("element index out of range in " + where);
    return static_cast<Elem>(v.get<std::uint64_t>());
}

} // namespace

TableDoctrine TableDoctrine::from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("doctrine file: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("doctrine file must be an object");

    TableDoctrine D;

    std::vector<std::pair<std::string, std::vector<std::string>>> atoms;
    std::map<std::string, int> atom_ix;
    for (const auto& a : doc.value("atoms", json::array())) {
        std::string name = a.at("name").get<std::string>();
        std::vector<std::string> elems;
        for (const auto& e : a.at("elements")) elems.push_back(e.get<std::string>());
        atom_ix[name] = static_cast<int>(atoms.size());
        atoms.emplace_back(std::move(name), std::move(elems));
    }
    D.base_ = std::make_unique<BaseCategory>(std::move(atoms));
    BaseCategory& b = *D.base_;

    std::map<std::string, Obj> by_name;
    by_name["I"] = b.unit();
    for (const auto& node : doc.value("objects", json::array())) {
        Obj o = resolve_obj(b, atom_ix, node);
        D.declared_.push_back(o);
        by_name[b.obj_name(o)] = o;
    }
    auto named_obj = [&](const std::string& s, const std::string& where) {
        auto it = by_name.find(s);
        if (it == by_name.end())
            throw SchemaError("unknown object \"" + s + "\" in " + where);
        return it->second;
    };

    const json fibers_doc = doc.value("fibers", json::object());
    for (const auto& [key, fj] : fibers_doc.items()) {
        Obj o = named_obj(key, "fibers");
        Fiber f;
        for (const auto& e : fj.at("elements"))
            f.names.push_back(e.get<std::string>());
        const std::size_t n = f.names.size();
        if (n == 0) throw SchemaError("fiber over " + key + " is empty");
        f.below.assign(n, BitVec(n));
        for (std::size_t i = 0; i < n; ++i) f.below[i].set(i);
        for (const auto& cv : fj.at("covers")) {
            if (!cv.is_array() || cv.size() != 2)
                throw SchemaError("cover must be a pair in fiber over " + key);
            Elem lo = checked_index(cv[0], n, "fiber over " + key);
            Elem hi = checked_index(cv[1], n, "fiber over " + key);
            f.covers.emplace_back(lo, hi);
            f.below[hi].set(lo);
        }
        // Transitive closure by fixpoint over the cover edges.
        for (bool changed = true; changed;) {
            changed = false;
            for (auto [lo, hi] : f.covers) {
                BitVec before = f.below[hi];
                f.below[hi] |= f.below[lo];
                if (!(before == f.below[hi])) changed = true;
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (f.below[i].get(j) && f.below[j].get(i))
                    throw SchemaError("covers relation over " + key +
                                      " has a cycle through " + f.names[i]);
        f.top = checked_index(fj.at("top"), n, "fiber over " + key);
        if (f.below[f.top].count() != n)
            throw SchemaError("declared top of the fiber over " + key +
                              " is not the maximum");
        D.fibers_.emplace(o, std::move(f));
    }

    // Meet-semilattice check: exhaustive for small fibers, sampled for large.
    for (auto& [o, f] : D.fibers_) {
        const std::size_t n = f.names.size();
        auto has_meet = [&](Elem a, Elem bb) {
            BitVec cand = f.below[a];
            cand &= f.below[bb];
            bool found = false;
            cand.for_each([&](std::size_t m) {
                if (!found && cand.subset_of(f.below[m])) found = true;
            });
            return found;
        };
        auto check_pair = [&](Elem a, Elem bb) {
            if (!has_meet(a, bb))
                throw SchemaError("fiber over " + b.obj_name(o) +
                                  " has no meet for " + f.names[a] + " and " +
                                  f.names[bb]);
        };
        if (n <= 1024) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    check_pair(static_cast<Elem>(i), static_cast<Elem>(j));
        } else {
            std::mt19937_64 rng(12345);
            for (int k = 0; k < 20000; ++k)
                check_pair(static_cast<Elem>(rng() % n),
                           static_cast<Elem>(rng() % n));
        }
    }

    const json delta_doc = doc.value("delta", json::object());
    for (const auto& [key, v] : delta_doc.items()) {
        Obj a = named_obj(key, "delta");
        Obj aa = b.prod(a, a);
        auto it = D.fibers_.find(aa);
        if (it == D.fibers_.end())
            throw SchemaError("delta declared for " + key +
                              " but the fiber over its square is absent");
        D.delta_[a] = checked_index(v, it->second.names.size(), "delta " + key);
    }
    for (Obj o : D.declared_) {
        if (!b.is_prod(o) || b.left(o) != b.right(o)) continue;
        if (D.fibers_.count(o) && !D.delta_.count(b.left(o)))
            throw MissingTableError("fiber over " + b.obj_name(o) +
                                    " is declared but delta for " +
                                    b.obj_name(b.left(o)) + " is missing");
    }

    auto load_exists = [&](const char* field, std::map<Obj, std::vector<Elem>>& out,
                           bool left_side) {
        const json field_doc = doc.value(field, json::object());
        for (const auto& [key, tv] : field_doc.items()) {
            Obj p = named_obj(key, field);
            if (!b.is_prod(p))
                throw SchemaError(std::string(field) + " declared over the non-product " + key);
            auto pit = D.fibers_.find(p);
            auto tit = D.fibers_.find(left_side ? b.left(p) : b.right(p));
            if (pit == D.fibers_.end() || tit == D.fibers_.end())
                throw SchemaError(std::string(field) + " over " + key +
                                  " references an absent fiber");
            if (!tv.is_array() || tv.size() != pit->second.names.size())
                throw SchemaError(std::string(field) + " table over " + key +
                                  " has the wrong length");
            std::vector<Elem> tab;
            tab.reserve(tv.size());
            for (const auto& v : tv)
                tab.push_back(checked_index(v, tit->second.names.size(),
                                            std::string(field) + " over " + key));
            out[p] = std::move(tab);
        }
    };
    load_exists("exists1", D.ex1_, true);
    load_exists("exists2", D.ex2_, false);

    const json reindex_doc = doc.value("reindex", json::object());
    for (const auto& [key, tv] : reindex_doc.items()) {
        std::size_t p1 = key.find('|');
        std::size_t p2 = p1 == std::string::npos ? std::string::npos
                                                 : key.find('|', p1 + 1);
        if (p2 == std::string::npos)
            throw SchemaError("reindex key must be dom|cod|tab: " + key);
        Obj dom = named_obj(key.substr(0, p1), "reindex");
        Obj cod = named_obj(key.substr(p1 + 1, p2 - p1 - 1), "reindex");
        BaseCategory::Mor m;
        m.dom = dom;
        m.cod = cod;
        std::string tabs = key.substr(p2 + 1);
        std::stringstream ss(tabs);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            if (cell.empty()) continue;
            std::uint64_t v = std::stoull(cell);
            if (v >= b.card(cod))
                throw SchemaError("morphism table cell out of range in " + key);
            m.tab.push_back(static_cast<std::uint32_t>(v));
        }
        if (m.tab.size() != b.card(dom))
            throw SchemaError("morphism table has the wrong length in " + key);

        auto dit = D.fibers_.find(dom);
        auto cit = D.fibers_.find(cod);
        if (dit == D.fibers_.end() || cit == D.fibers_.end())
            throw SchemaError("reindex table " + key + " references an absent fiber");
        if (!tv.is_array() || tv.size() != cit->second.names.size())
            throw SchemaError("reindex table " + key + " has the wrong length");
        std::vector<Elem> tab;
        tab.reserve(tv.size());
        for (const auto& v : tv)
            tab.push_back(checked_index(v, dit->second.names.size(),
                                        "reindex table " + key));
        for (auto [lo, hi] : cit->second.covers) {
            if (!dit->second.below[tab[hi]].get(tab[lo]))
                throw NonMonotoneReindexingError(
                    "reindexing table " + key + " is not monotone: " +
                    cit->second.names[lo] + " <= " + cit->second.names[hi] +
                    " maps to incomparable or reversed elements");
        }
        D.reindex_[table_mor_key(b, m)] = std::move(tab);
    }

    return D;
}

TableDoctrine TableDoctrine::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open doctrine file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

} // namespace regdiag
