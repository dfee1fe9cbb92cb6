#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "regdiag/base.hpp"
#include "regdiag/bitvec.hpp"
#include "regdiag/errors.hpp"

namespace regdiag {

// A doctrine given entirely by finite tables loaded from JSON: fiber posets
// (element names, covering relation, top), equality elements, existential
// tables per product, and reindexing tables keyed by morphism. Useful both
// for doctrines recorded from a live one and for handwritten fixtures.
//
// The tables may cover only part of the base category. Any operation that
// needs data the file does not carry throws MissingTableError, which the
// sweeping validators treat as "skip this configuration", so a partial
// doctrine can still be checked on the region it covers.
class TableDoctrine {
public:
    using Elem = std::uint32_t;
    using Obj = BaseCategory::Obj;

    static TableDoctrine from_file(const std::string& path);
    static TableDoctrine from_json_text(const std::string& text);

    BaseCategory& base() { return *base_; }

    Elem top(Obj x) { return fiber(x).top; }
    Elem meet(Obj x, Elem a, Elem b);
    bool leq(Obj x, Elem a, Elem b) {
        const Fiber& f = fiber(x);
        return f.below.at(b).get(a);
    }
    bool eq(Obj x, Elem a, Elem b) {
        (void)x;
        return a == b;
    }
    Elem reindex(const BaseCategory::Mor& f, const Elem& e);
    Elem exists1(Obj p, const Elem& e);
    Elem exists2(Obj p, const Elem& e);
    Elem delta(Obj a);

    std::uint64_t fiber_size(Obj x) { return fiber(x).names.size(); }
    Elem elem_at(Obj x, std::uint64_t idx);
    Elem random_elem(Obj x, std::mt19937_64& rng) {
        return static_cast<Elem>(rng() % fiber_size(x));
    }
    std::string elem_repr(Obj x, const Elem& e) {
        return fiber(x).names.at(e);
    }

    const std::vector<Obj>& declared_objects() const { return declared_; }

private:
    struct Fiber {
        std::vector<std::string> names;
        // below[j] holds the set of elements i with i <= j.
        std::vector<BitVec> below;
        std::vector<std::pair<Elem, Elem>> covers;
        Elem top = 0;
    };

    TableDoctrine() = default;
    Fiber& fiber(Obj x);

    std::unique_ptr<BaseCategory> base_;
    std::vector<Obj> declared_;
    std::map<Obj, Fiber> fibers_;
    std::map<Obj, Elem> delta_;
    std::map<Obj, std::vector<Elem>> ex1_, ex2_;
    std::map<std::string, std::vector<Elem>> reindex_;
};

// Stable name-based key for a base morphism: "dom|cod|t0,t1,...". Shared by
// the table loader and by tools that serialize doctrines.
std::string table_mor_key(const BaseCategory& b, const BaseCategory::Mor& f);

} // namespace regdiag
