// Generates the doctrine table fixtures by recording a live powerset
// doctrine while the validators sweep it, then replaying the dump through
// TableDoctrine and deriving three corrupted variants with pinned failure
// modes. Run from the repository root; writes into fixtures/ by default.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "regdiag/adjunction.hpp"
#include "regdiag/base.hpp"
#include "regdiag/bitvec.hpp"
#include "regdiag/doctrine_check.hpp"
#include "regdiag/errors.hpp"
#include "regdiag/pow_doctrine.hpp"
#include "regdiag/table_doctrine.hpp"

using json = nlohmann::json;
using namespace regdiag;

namespace {

// Proxies a powerset doctrine and records every fiber and table the caller
// touches, in exactly the shape TableDoctrine loads. Fibers whose
// cardinality exceeds the cap raise MissingTableError up front, so a
// validation run over the recorder skips precisely the configurations the
// replayed table file will skip. random_elem consumes one generator draw,
// matching TableDoctrine, instead of delegating to the powerset's
// bit-by-bit sampler.
class RecordingDoctrine {
public:
    using Elem = BitVec;
    using Obj = BaseCategory::Obj;
    using Mor = BaseCategory::Mor;

    RecordingDoctrine(PowersetDoctrine& p, std::uint64_t max_card)
        : p_(&p), b_(&p.base()), cap_(max_card) {}

    BaseCategory& base() { return *b_; }

    Elem top(Obj x) {
        touch(x);
        return p_->top(x);
    }
    Elem meet(Obj x, const Elem& a, const Elem& b) {
        touch(x);
        return p_->meet(x, a, b);
    }
    bool leq(Obj x, const Elem& a, const Elem& b) {
        touch(x);
        return p_->leq(x, a, b);
    }
    bool eq(Obj x, const Elem& a, const Elem& b) { return p_->eq(x, a, b); }

    Elem reindex(const Mor& f, const Elem& e) {
        record_reindex(f);
        return p_->reindex(f, e);
    }
    Elem exists1(Obj p, const Elem& e) {
        record_exists(p, true);
        return p_->exists1(p, e);
    }
    Elem exists2(Obj p, const Elem& e) {
        record_exists(p, false);
        return p_->exists2(p, e);
    }
    Elem delta(Obj a) {
        record_delta(a);
        return p_->delta(a);
    }

    std::uint64_t fiber_size(Obj x) {
        touch(x);
        return p_->fiber_size(x);
    }
    Elem elem_at(Obj x, std::uint64_t idx) {
        touch(x);
        return p_->elem_at(x, idx);
    }
    Elem random_elem(Obj x, std::mt19937_64& rng) {
        std::uint64_t n = fiber_size(x);
        return p_->elem_at(x, rng() % n);
    }
    std::string elem_repr(Obj x, const Elem& e) {
        touch(x);
        return p_->elem_repr(x, e);
    }

    // Records delta for every square fiber already recorded, so the dump
    // passes the loader's delta completeness check.
    void close_squares() {
        std::vector<Obj> sq;
        for (Obj o : fibers_)
            if (b_->is_prod(o) && b_->left(o) == b_->right(o))
                sq.push_back(b_->left(o));
        for (Obj a : sq) record_delta(a);
    }

    std::string dump_json(
        const std::vector<std::pair<std::string, std::vector<std::string>>>&
            atoms) {
        json doc;
        doc["atoms"] = json::array();
        for (const auto& [name, elems] : atoms)
            doc["atoms"].push_back({{"name", name}, {"elements", elems}});

        std::set<Obj> declared = fibers_;
        for (const auto& [a, idx] : delta_) declared.insert(a);
        doc["objects"] = json::array();
        for (Obj o : declared) doc["objects"].push_back(obj_node(o));

        json fib = json::object();
        for (Obj o : fibers_) {
            std::uint64_t c = b_->card(o);
            std::uint64_t n = 1ull << c;
            json fj;
            fj["elements"] = json::array();
            for (std::uint64_t i = 0; i < n; ++i)
                fj["elements"].push_back(p_->elem_repr(o, p_->elem_at(o, i)));
            fj["covers"] = json::array();
            for (std::uint64_t i = 0; i < n; ++i)
                for (std::uint64_t j = 0; j < c; ++j)
                    if (!((i >> j) & 1))
                        fj["covers"].push_back({i, i | (1ull << j)});
            fj["top"] = n - 1;
            fib[b_->obj_name(o)] = std::move(fj);
        }
        doc["fibers"] = std::move(fib);

        json dj = json::object();
        for (const auto& [a, idx] : delta_) dj[b_->obj_name(a)] = idx;
        doc["delta"] = std::move(dj);

        auto dump_ex = [&](const std::map<Obj, std::vector<std::uint64_t>>& m) {
            json out = json::object();
            for (const auto& [p, tab] : m) out[b_->obj_name(p)] = tab;
            return out;
        };
        doc["exists1"] = dump_ex(ex1_);
        doc["exists2"] = dump_ex(ex2_);

        json rj = json::object();
        for (const auto& [key, tab] : reindex_) rj[key] = tab;
        doc["reindex"] = std::move(rj);

        return doc.dump();
    }

private:
    void touch(Obj x) {
        if (fibers_.count(x)) return;
        if (b_->card(x) > cap_)
            throw MissingTableError("fiber over " + b_->obj_name(x) +
                                    " exceeds the recording cap");
        fibers_.insert(x);
    }

    std::uint64_t idx_of(Obj x, const Elem& e) {
        std::uint64_t idx = 0;
        e.for_each([&](std::size_t j) { idx |= 1ull << j; });
        (void)x;
        return idx;
    }

    void record_reindex(const Mor& f) {
        std::string key = table_mor_key(*b_, f);
        if (reindex_.count(key)) return;
        touch(f.dom);
        touch(f.cod);
        std::vector<std::uint64_t> tab;
        std::uint64_t n = 1ull << b_->card(f.cod);
        tab.reserve(n);
        for (std::uint64_t i = 0; i < n; ++i)
            tab.push_back(idx_of(f.dom, p_->reindex(f, p_->elem_at(f.cod, i))));
        reindex_[key] = std::move(tab);
    }

    void record_exists(Obj p, bool left_side) {
        auto& store = left_side ? ex1_ : ex2_;
        if (store.count(p)) return;
        Obj tgt = left_side ? b_->left(p) : b_->right(p);
        touch(p);
        touch(tgt);
        std::vector<std::uint64_t> tab;
        std::uint64_t n = 1ull << b_->card(p);
        tab.reserve(n);
        for (std::uint64_t i = 0; i < n; ++i) {
            Elem e = p_->elem_at(p, i);
            tab.push_back(idx_of(tgt, left_side ? p_->exists1(p, e)
                                                : p_->exists2(p, e)));
        }
        store[p] = std::move(tab);
    }

    void record_delta(Obj a) {
        if (delta_.count(a)) return;
        touch(b_->prod(a, a));
        delta_[a] = idx_of(b_->prod(a, a), p_->delta(a));
    }

    json obj_node(Obj o) {
        const auto& s = b_->shape(o);
        if (s.kind == BaseCategory::Shape::Kind::Unit) return "I";
        if (s.kind == BaseCategory::Shape::Kind::Atom)
            return b_->atom_name(s.atom);
        return json::array({obj_node(s.left), obj_node(s.right)});
    }

    PowersetDoctrine* p_;
    BaseCategory* b_;
    std::uint64_t cap_;
    std::set<Obj> fibers_;
    std::map<Obj, std::uint64_t> delta_;
    std::map<Obj, std::vector<std::uint64_t>> ex1_, ex2_;
    std::map<std::string, std::vector<std::uint64_t>> reindex_;
};

int failures = 0;

void require(bool ok, const std::string& what) {
    if (ok) {
        std::printf("  ok: %s\n", what.c_str());
    } else {
        std::printf("  FAILED: %s\n", what.c_str());
        ++failures;
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
    if (!out) {
        std::printf("  FAILED: cannot write %s\n", path.c_str());
        ++failures;
    } else {
        std::printf("  wrote %s (%zu bytes)\n", path.c_str(), text.size());
    }
}

std::vector<std::string> failing_clauses(const Report& r) {
    std::vector<std::string> out;
    for (const auto& c : r.clauses)
        if (!c.passed()) out.push_back(c.name);
    return out;
}

bool same_stats(const Report& a, const Report& b) {
    if (a.clauses.size() != b.clauses.size()) return false;
    for (std::size_t i = 0; i < a.clauses.size(); ++i) {
        const auto& x = a.clauses[i];
        const auto& y = b.clauses[i];
        if (x.name != y.name || x.checked != y.checked ||
            x.sampled != y.sampled || x.passed() != y.passed())
            return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "fixtures";

    std::vector<std::pair<std::string, std::vector<std::string>>> atoms = {
        {"A", {"0", "1"}}};
    BaseCategory base(atoms);
    PowersetDoctrine pow(base);
    RecordingDoctrine rec(pow, 12);

    DoctrineCheckOptions dopt;
    AdjunctionCheckOptions aopt;

    std::printf("recording a validation sweep over the powerset doctrine\n");
    Report r1 = validate_doctrine(rec, dopt);
    std::printf("%s", r1.summary().c_str());
    require(r1.ok(), "recorded doctrine validates");

    Report t1 = check_triangle_left(rec, aopt);
    require(t1.ok(), "recorded doctrine passes the left triangle");

    rec.close_squares();
    std::string good = rec.dump_json(atoms);
    write_file(dir + "/pow2.doctrine.json", good);

    TableDoctrine td = TableDoctrine::from_json_text(good);
    Report r2 = validate_doctrine(td, dopt);
    require(r2.ok(), "replayed table doctrine validates");
    require(same_stats(r1, r2),
            "replay matches the recording clause by clause");
    Report t2 = check_triangle_left(td, aopt);
    require(t2.ok(), "replayed table doctrine passes the left triangle");
    require(t1.clauses.size() == t2.clauses.size() && same_stats(t1, t2),
            "triangle replay matches the recording");

    // The corrupted existential fixture comes from a recording over a
    // one element atom, which keeps its tables small while the default
    // validation options still sweep every recorded configuration.
    std::printf("recording the small doctrine for the corrupted fixture\n");
    std::vector<std::pair<std::string, std::vector<std::string>>> atoms1 = {
        {"A", {"0"}}};
    BaseCategory base1(atoms1);
    PowersetDoctrine pow1(base1);
    RecordingDoctrine rec1(pow1, 12);
    Report s1 = validate_doctrine(rec1, dopt);
    require(s1.ok(), "small recorded doctrine validates");
    rec1.close_squares();
    std::string small = rec1.dump_json(atoms1);
    {
        TableDoctrine ts = TableDoctrine::from_json_text(small);
        Report s2 = validate_doctrine(ts, dopt);
        require(s2.ok() && same_stats(s1, s2),
                "small replay matches its recording");
    }

    json doc = json::parse(small);

    // Corrupt one existential table entry. Prefer a flip that trips only
    // the Frobenius reciprocity clause; otherwise take the flip with the
    // fewest collateral clause failures that still includes it.
    std::printf("searching for an existential flip that breaks Frobenius\n");
    auto left_factor = [](const std::string& prod_name) -> std::string {
        if (prod_name.size() < 2 || prod_name.front() != '(') return {};
        std::string s = prod_name.substr(1, prod_name.size() - 2);
        int depth = 0;
        for (std::size_t i = 0; i + 3 <= s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') --depth;
            if (depth == 0 && s.compare(i, 3, " x ") == 0)
                return s.substr(0, i);
        }
        return {};
    };
    std::vector<std::pair<std::size_t, std::string>> ex_keys;
    for (auto& [key, tab] : doc["exists1"].items())
        if (tab.size() <= 64) ex_keys.emplace_back(tab.size(), key);
    std::sort(ex_keys.begin(), ex_keys.end());
    json best;
    std::size_t best_extra = SIZE_MAX;
    std::string best_desc;
    bool done = false;
    for (const auto& [sz, key] : ex_keys) {
        if (done) break;
        auto& tab = doc["exists1"][key];
        std::string left_name = left_factor(key);
        std::uint64_t left_n =
            doc["fibers"].contains(left_name)
                ? doc["fibers"][left_name]["elements"].size()
                : 0;
        if (left_n == 0) continue;
        for (std::size_t i = 0; i < tab.size() && !done; ++i) {
            std::uint64_t orig = tab[i].get<std::uint64_t>();
            for (std::uint64_t v = 0; v < left_n && !done; ++v) {
                if (v == orig) continue;
                json cand = doc;
                cand["exists1"][key][i] = v;
                TableDoctrine bad = TableDoctrine::from_json_text(cand.dump());
                Report rb = validate_doctrine(bad, dopt);
                auto fails = failing_clauses(rb);
                bool has_frob = false;
                for (const auto& n : fails)
                    if (n == "exists.frobenius") has_frob = true;
                if (!has_frob) continue;
                std::size_t extra = fails.size() - 1;
                if (extra < best_extra) {
                    best_extra = extra;
                    best = cand;
                    best_desc = "exists1[" + key + "][" + std::to_string(i) +
                                "] = " + std::to_string(v) + " (was " +
                                std::to_string(orig) + ")";
                    if (extra == 0) done = true;
                }
            }
        }
    }
    require(!best.is_null(), "found a Frobenius-breaking flip");
    if (!best.is_null()) {
        std::printf("  flip: %s, collateral failures: %zu\n",
                    best_desc.c_str(), best_extra);
        std::string bad_text = best.dump();
        write_file(dir + "/bad_exists.doctrine.json", bad_text);
        TableDoctrine bad = TableDoctrine::from_json_text(bad_text);
        Report rb = validate_doctrine(bad, dopt);
        require(!rb.ok(), "corrupted existential fixture fails validation");
        const ClauseResult* fc = rb.find("exists.frobenius");
        require(fc && !fc->passed() && !fc->failures.empty(),
                "Frobenius clause reports a witness");
        if (fc && !fc->failures.empty())
            std::printf("  witness: %s\n", fc->failures.front().c_str());
    }

    // The two loader rejection fixtures are small enough to keep literal.
    // A square fiber without its equality element must be refused.
    {
        const std::string text = R"json({
 "atoms": [{"name": "A", "elements": ["0"]}],
 "objects": ["A", ["A", "A"]],
 "fibers": {
  "A": {"elements": ["empty", "all"], "covers": [[0, 1]], "top": 1},
  "(A x A)": {"elements": ["empty", "all"], "covers": [[0, 1]], "top": 1}
 },
 "delta": {}
}
)json";
        write_file(dir + "/missing_delta.doctrine.json", text);
        bool threw = false;
        try {
            TableDoctrine::from_json_text(text);
        } catch (const MissingTableError& e) {
            threw = true;
            std::printf("  load rejected: %s\n", e.what());
        }
        require(threw, "missing delta fixture throws MissingTableError");
    }

    // A reindexing table that reverses a covering edge must be refused.
    {
        const std::string text = R"json({
 "atoms": [{"name": "A", "elements": ["0"]}],
 "objects": ["A"],
 "fibers": {
  "A": {"elements": ["empty", "all"], "covers": [[0, 1]], "top": 1}
 },
 "reindex": {"A|A|0": [1, 0]}
}
)json";
        write_file(dir + "/nonmonotone.doctrine.json", text);
        bool threw = false;
        try {
            TableDoctrine::from_json_text(text);
        } catch (const NonMonotoneReindexingError& e) {
            threw = true;
            std::printf("  load rejected: %s\n", e.what());
        }
        require(threw, "non-monotone fixture throws NonMonotoneReindexingError");
    }

    if (failures) {
        std::printf("%d generation step(s) failed\n", failures);
        return 1;
    }
    std::printf("all fixtures generated\n");
    return 0;
}
