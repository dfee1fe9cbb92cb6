#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "regdiag/errors.hpp"

namespace regdiag {

// A small category of finite sets with strictly chosen finite products:
// objects are shape trees built from the unit and named atoms by binary
// product, morphisms are total function tables. Objects are interned and
// materialized on demand, subject to an element-count cap so auxiliary
// constructions cannot blow up silently.
//
// Element convention: the unit has the single element 0 (printed "*"); a
// product element is left * card(right) + right.
class BaseCategory {
public:
    using Obj = int;

    struct Shape {
        enum class Kind { Unit, Atom, Prod } kind = Kind::Unit;
        int atom = -1;
        Obj left = -1, right = -1;
    };

    struct Mor {
        Obj dom = -1, cod = -1;
        std::vector<std::uint32_t> tab;
        bool operator==(const Mor& o) const = default;
    };

    BaseCategory(std::vector<std::pair<std::string, std::vector<std::string>>> atoms,
                 std::uint64_t elem_cap = 4096);

    std::uint64_t elem_cap() const { return cap_; }

    Obj unit() const { return unit_; }
    int atom_count() const { return static_cast<int>(atom_objs_.size()); }
    Obj atom(int i) const { return atom_objs_.at(i); }
    const std::string& atom_name(int i) const { return atom_names_.at(i); }

    // Interned product; materializes the object if new. Throws
    // SizeBudgetError when the cardinality would exceed the cap.
    Obj prod(Obj a, Obj b);

    const Shape& shape(Obj o) const { return shapes_.at(o); }
    bool is_prod(Obj o) const { return shape(o).kind == Shape::Kind::Prod; }
    Obj left(Obj o) const;
    Obj right(Obj o) const;
    std::uint64_t card(Obj o) const { return cards_.at(o); }
    int object_count() const { return static_cast<int>(shapes_.size()); }

    std::string obj_name(Obj o) const;
    std::string elem_name(Obj o, std::uint64_t e) const;

    // Fills the listed universe with every object of product depth at most
    // `depth` over the unit and the atoms (cap-respecting).
    void list_objects(int depth);
    const std::vector<Obj>& listed() const { return listed_; }
    bool is_listed(Obj o) const;

    Mor id(Obj x) const;
    // Diagrammatic order: x --f--> y --g--> z gives compose(f, g) : x -> z.
    Mor compose(const Mor& f, const Mor& g) const;
    Mor proj1(Obj p) const;
    Mor proj2(Obj p) const;
    Mor pair(const Mor& f, const Mor& g);
    Mor prod_mor(const Mor& f, const Mor& g);
    Mor diag(Obj x);
    Mor bang(Obj x) const;
    Mor symm(Obj p);                 // a*b -> b*a
    Mor assoc_right(Obj p);          // (a*b)*c -> a*(b*c)
    Mor assoc_left(Obj p);           // a*(b*c) -> (a*b)*c
    Mor rho(Obj x);                  // x*I -> x
    Mor rho_inv(Obj x);              // x -> x*I
    Mor lambda(Obj x);               // I*x -> x
    Mor lambda_inv(Obj x);           // x -> I*x
    Mor constant(Obj x, Obj y, std::uint64_t e) const;

    bool is_bijective(const Mor& f) const;
    Mor inverse(const Mor& f) const;

    // card(y)^card(x), clamped to 2^62 on overflow.
    std::uint64_t hom_size(Obj x, Obj y) const;

    // Morphism with lexicographic index `idx` in Hom(x, y): the table read
    // as a base-card(y) numeral, first cell most significant.
    Mor hom_at(Obj x, Obj y, std::uint64_t idx) const;

    // Enumerates Hom(x, y) in index order while fn returns true. The caller
    // is responsible for budgeting via hom_size.
    template <class Fn>
    void each_hom(Obj x, Obj y, Fn&& fn) const {
        Mor m;
        m.dom = x;
        m.cod = y;
        std::uint64_t cy = card(y);
        if (cy == 0 && card(x) > 0) return;
        m.tab.assign(card(x), 0);
        for (;;) {
            if (!fn(static_cast<const Mor&>(m))) return;
            // Odometer from the last cell (least significant).
            std::size_t i = m.tab.size();
            while (i > 0) {
                --i;
                if (++m.tab[i] < cy) break;
                m.tab[i] = 0;
                if (i == 0) return;
            }
            if (m.tab.empty()) return;
        }
    }

    std::string mor_repr(const Mor& f) const;

private:
    Obj intern(Shape s, std::uint64_t card);

    std::uint64_t cap_;
    std::vector<Shape> shapes_;
    std::vector<std::uint64_t> cards_;
    std::map<std::pair<Obj, Obj>, Obj> prod_index_;
    Obj unit_ = -1;
    std::vector<Obj> atom_objs_;
    std::vector<std::string> atom_names_;
    std::vector<std::vector<std::string>> atom_elems_;
    std::vector<Obj> listed_;
};

// Stable byte key identifying a morphism (dom, cod, table); used for
// table-backed doctrines.
std::string mor_key(const BaseCategory::Mor& f);

// Category over the given atoms with the object universe materialized up to
// the product depth bound. depth must be at least 1.
BaseCategory build_base(
    std::vector<std::pair<std::string, std::vector<std::string>>> atoms,
    int depth, std::uint64_t elem_cap = 4096);

} // namespace regdiag
