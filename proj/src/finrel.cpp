#include "regdiag/finrel.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "regdiag/errors.hpp"

namespace regdiag {

using nlohmann::json;

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > (~0ull) / base) throw SizeBudgetError("power overflow");
        r *= base;
    }
    return r;
}

int FinModel::elem_by_name(const std::string& n) const {
    for (int i = 0; i < size; ++i)
        if (elem_names[i] == n) return i;
    throw ModelError("unknown carrier element: " + n);
}

void FinModel::validate() const {
    if (size <= 0) throw ModelError("carrier must be non-empty");
    if (static_cast<int>(elem_names.size()) != size)
        throw ModelError("element name list does not match carrier size");
    for (const auto& f : sig.fun_names()) {
        auto it = fun.find(f);
        if (it == fun.end()) throw ModelError("missing function table: " + f);
        std::uint64_t want = ipow(size, sig.fun_arity(f));
        if (it->second.size() != want)
            throw ModelError("function table for " + f + " has " +
                             std::to_string(it->second.size()) + " entries, expected " +
                             std::to_string(want));
        for (int v : it->second)
            if (v < 0 || v >= size)
                throw ModelError("function table for " + f + " leaves the carrier");
    }
    for (const auto& p : sig.pred_names()) {
        auto it = pred.find(p);
        if (it == pred.end()) throw ModelError("missing predicate table: " + p);
        std::uint64_t want = ipow(size, sig.pred_arity(p));
        if (it->second.size() != want)
            throw ModelError("predicate table for " + p + " has wrong size");
    }
}

FinModel FinModel::from_json_text(const std::string& text, const Signature& sig) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("model JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("carrier") || !j["carrier"].is_array())
        throw ParseError("model JSON: expected an object with a \"carrier\" array");
    FinModel m;
    m.sig = sig;
    for (const auto& e : j["carrier"]) {
        if (!e.is_string()) throw ParseError("model JSON: carrier elements must be strings");
        m.elem_names.push_back(e.get<std::string>());
    }
    m.size = static_cast<int>(m.elem_names.size());
    if (m.size == 0) throw ParseError("model JSON: empty carrier");

    auto tuple_index = [&](const std::string& key, int arity) {
        // Comma-separated element names; empty key for arity 0.
        std::vector<std::string> parts;
        std::string cur;
        for (char c : key) {
            if (c == ',') {
                parts.push_back(cur);
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                cur.push_back(c);
            }
        }
        if (!cur.empty() || arity == 1) parts.push_back(cur);
        if (arity == 0) {
            if (!(key.empty() || parts.empty()))
                throw ParseError("model JSON: nullary table key must be empty");
            return std::size_t{0};
        }
        if (static_cast<int>(parts.size()) != arity)
            throw ParseError("model JSON: key \"" + key + "\" does not have " +
                             std::to_string(arity) + " components");
        std::size_t idx = 0;
        for (const auto& p : parts) idx = idx * m.size + m.elem_by_name(p);
        return idx;
    };

    if (j.contains("functions")) {
        for (auto& [name, table] : j["functions"].items()) {
            int ar = sig.fun_arity(name);
            std::uint64_t n = ipow(m.size, ar);
            std::vector<int> tab(n, -1);
            if (table.is_string() && ar == 0) {
                tab[0] = m.elem_by_name(table.get<std::string>());
            } else if (table.is_object()) {
                for (auto& [k, v] : table.items()) {
                    if (!v.is_string())
                        throw ParseError("model JSON: function values must be element names");
                    tab[tuple_index(k, ar)] = m.elem_by_name(v.get<std::string>());
                }
            } else {
                throw ParseError("model JSON: function table for " + name +
                                 " must be an object");
            }
            for (std::uint64_t i = 0; i < n; ++i)
                if (tab[i] < 0)
                    throw ModelError("function table for " + name + " is not total");
            m.fun[name] = std::move(tab);
        }
    }
    if (j.contains("predicates")) {
        for (auto& [name, rows] : j["predicates"].items()) {
            int ar = sig.pred_arity(name);
            std::uint64_t n = ipow(m.size, ar);
            BitVec bits(n);
            if (!rows.is_array())
                throw ParseError("model JSON: predicate table for " + name +
                                 " must be an array of tuples");
            for (const auto& row : rows) {
                if (!row.is_array() || static_cast<int>(row.size()) != ar)
                    throw ParseError("model JSON: predicate " + name +
                                     " rows must be arrays of length " +
                                     std::to_string(ar));
                std::size_t idx = 0;
                for (const auto& e : row) idx = idx * m.size + m.elem_by_name(e.get<std::string>());
                bits.set(idx);
            }
            m.pred[name] = std::move(bits);
        }
    }
    m.validate();
    return m;
}

FinModel FinModel::from_file(const std::string& path, const Signature& sig) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open model file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str(), sig);
}

std::string FinModel::to_json_text() const {
    json j;
    j["carrier"] = elem_names;
    j["functions"] = json::object();
    for (const auto& [name, tab] : fun) {
        int ar = sig.fun_arity(name);
        json t = json::object();
        for (std::size_t i = 0; i < tab.size(); ++i) {
            auto digits = decode_tuple(i, size, ar);
            std::string key;
            for (std::size_t d = 0; d < digits.size(); ++d) {
                if (d) key += ",";
                key += elem_names[digits[d]];
            }
            t[key] = elem_names[tab[i]];
        }
        j["functions"][name] = t;
    }
    j["predicates"] = json::object();
    for (const auto& [name, bits] : pred) {
        int ar = sig.pred_arity(name);
        json rows = json::array();
        bits.for_each([&](std::size_t i) {
            auto digits = decode_tuple(i, size, ar);
            json row = json::array();
            for (int d : digits) row.push_back(elem_names[d]);
            rows.push_back(row);
        });
        j["predicates"][name] = rows;
    }
    return j.dump(2);
}

FinRelation::FinRelation(int k, int dom_w, int cod_w)
    : k_(k), dom_w_(dom_w), cod_w_(cod_w) {
    if (k <= 0) throw ModelError("relation carrier must be positive");
    if (dom_w < 0 || cod_w < 0) throw WidthMismatchError("negative relation width");
    dom_size_ = ipow(k, dom_w);
    cod_size_ = ipow(k, cod_w);
    rows_.assign(dom_size_, BitVec(cod_size_));
}

std::size_t FinRelation::pair_count() const {
    std::size_t c = 0;
    for (const auto& r : rows_) c += r.count();
    return c;
}

bool FinRelation::operator==(const FinRelation& o) const {
    return k_ == o.k_ && dom_w_ == o.dom_w_ && cod_w_ == o.cod_w_ && rows_ == o.rows_;
}

FinRelation rel_identity(int k, int w) {
    FinRelation r(k, w, w);
    for (std::size_t a = 0; a < r.dom_size(); ++a) r.set(a, a);
    return r;
}

FinRelation rel_full(int k, int dom_w, int cod_w) {
    FinRelation r(k, dom_w, cod_w);
    for (std::size_t a = 0; a < r.dom_size(); ++a)
        for (std::size_t b = 0; b < r.cod_size(); ++b) r.set(a, b);
    return r;
}

FinRelation rel_compose(const FinRelation& r, const FinRelation& s) {
    if (r.carrier() != s.carrier())
        throw ModelError("relation composition across different carriers");
    if (r.cod_width() != s.dom_width())
        throw WidthMismatchError("relation composition: middle widths differ");
    FinRelation out(r.carrier(), r.dom_width(), s.cod_width());
    for (std::size_t a = 0; a < r.dom_size(); ++a) {
        r.row(a).for_each([&](std::size_t b) { out.row(a) |= s.row(b); });
    }
    return out;
}

FinRelation rel_tensor(const FinRelation& r, const FinRelation& s) {
    if (r.carrier() != s.carrier())
        throw ModelError("relation tensor across different carriers");
    int k = r.carrier();
    std::uint64_t bits = ipow(k, r.dom_width() + s.dom_width());
    std::uint64_t cbits = ipow(k, r.cod_width() + s.cod_width());
    if (bits > 0 && cbits > (1ull << 40) / bits)
        throw SizeBudgetError("relation tensor exceeds the size cap");
    FinRelation out(k, r.dom_width() + s.dom_width(), r.cod_width() + s.cod_width());
    for (std::size_t a1 = 0; a1 < r.dom_size(); ++a1) {
        r.row(a1).for_each([&](std::size_t b1) {
            for (std::size_t a2 = 0; a2 < s.dom_size(); ++a2) {
                std::size_t arow = a1 * s.dom_size() + a2;
                std::size_t base = b1 * s.cod_size();
                s.row(a2).for_each(
                    [&](std::size_t b2) { out.row(arow).set(base + b2); });
            }
        });
    }
    return out;
}

FinRelation rel_converse(const FinRelation& r) {
    FinRelation out(r.carrier(), r.cod_width(), r.dom_width());
    for (std::size_t a = 0; a < r.dom_size(); ++a)
        r.row(a).for_each([&](std::size_t b) { out.set(b, a); });
    return out;
}

FinRelation rel_meet(const FinRelation& r, const FinRelation& s) {
    if (r.carrier() != s.carrier() || r.dom_width() != s.dom_width() ||
        r.cod_width() != s.cod_width())
        throw WidthMismatchError("relation meet: shapes differ");
    FinRelation out = r;
    for (std::size_t a = 0; a < out.dom_size(); ++a) out.row(a) &= s.row(a);
    return out;
}

bool rel_subset(const FinRelation& r, const FinRelation& s) {
    if (r.carrier() != s.carrier() || r.dom_width() != s.dom_width() ||
        r.cod_width() != s.cod_width())
        throw WidthMismatchError("relation inclusion: shapes differ");
    for (std::size_t a = 0; a < r.dom_size(); ++a)
        if (!r.row(a).subset_of(s.row(a))) return false;
    return true;
}

namespace {

FinRelation eval_rec(const FinModel& m, const DiagramPtr& d, std::uint64_t max_bits) {
    int k = m.size;
    std::uint64_t dbits = ipow(k, d->dom());
    std::uint64_t cbits = ipow(k, d->cod());
    if (dbits > 0 && cbits > max_bits / dbits)
        throw SizeBudgetError("diagram evaluation exceeds the size cap");

    switch (d->tag()) {
    case Diagram::Tag::Seq:
        return rel_compose(eval_rec(m, d->left(), max_bits),
                           eval_rec(m, d->right(), max_bits));
    case Diagram::Tag::Tensor:
        return rel_tensor(eval_rec(m, d->left(), max_bits),
                          eval_rec(m, d->right(), max_bits));
    case Diagram::Tag::Gen:
        break;
    }

    switch (d->gen_kind()) {
    case GenKind::Empty: {
        FinRelation r(k, 0, 0);
        r.set(0, 0);
        return r;
    }
    case GenKind::Id:
        return rel_identity(k, 1);
    case GenKind::Swap: {
        FinRelation r(k, 2, 2);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                r.set(static_cast<std::size_t>(a) * k + b,
                      static_cast<std::size_t>(b) * k + a);
        return r;
    }
    case GenKind::Copy: {
        FinRelation r(k, 1, 2);
        for (int a = 0; a < k; ++a)
            r.set(a, static_cast<std::size_t>(a) * k + a);
        return r;
    }
    case GenKind::Discard: {
        FinRelation r(k, 1, 0);
        for (int a = 0; a < k; ++a) r.set(a, 0);
        return r;
    }
    case GenKind::Cocopy: {
        FinRelation r(k, 2, 1);
        for (int a = 0; a < k; ++a)
            r.set(static_cast<std::size_t>(a) * k + a, a);
        return r;
    }
    case GenKind::Codiscard: {
        FinRelation r(k, 0, 1);
        for (int a = 0; a < k; ++a) r.set(0, a);
        return r;
    }
    case GenKind::FunBox: {
        auto it = m.fun.find(d->symbol());
        if (it == m.fun.end())
            throw ModelError("no table for function " + d->symbol());
        FinRelation r(k, d->dom(), 1);
        for (std::size_t a = 0; a < r.dom_size(); ++a) r.set(a, it->second[a]);
        return r;
    }
    case GenKind::PredBox: {
        auto it = m.pred.find(d->symbol());
        if (it == m.pred.end())
            throw ModelError("no table for predicate " + d->symbol());
        FinRelation r(k, d->dom(), 0);
        it->second.for_each([&](std::size_t a) { r.set(a, 0); });
        return r;
    }
    case GenKind::Hole:
        throw ModelError("cannot evaluate a diagram containing holes");
    }
    throw Error("unreachable");
}

} // namespace

FinRelation eval_diagram(const FinModel& m, const DiagramPtr& d, std::uint64_t max_bits) {
    return eval_rec(m, d, max_bits);
}

InclusionResult check_inclusion(const FinRelation& lhs, const FinRelation& rhs) {
    if (lhs.carrier() != rhs.carrier() || lhs.dom_width() != rhs.dom_width() ||
        lhs.cod_width() != rhs.cod_width())
        throw WidthMismatchError("inclusion check: shapes differ");
    InclusionResult res;
    for (std::size_t a = 0; a < lhs.dom_size(); ++a) {
        if (lhs.row(a).subset_of(rhs.row(a))) continue;
        BitVec extra = lhs.row(a);
        extra.subtract(rhs.row(a));
        res.holds = false;
        res.witness_dom = a;
        std::size_t b = 0;
        extra.for_each([&](std::size_t i) {
            if (b == 0) b = i + 1;
        });
        res.witness_cod = b - 1;
        return res;
    }
    res.holds = true;
    return res;
}

std::vector<int> decode_tuple(std::size_t index, int k, int width) {
    std::vector<int> out(width, 0);
    for (int i = width - 1; i >= 0; --i) {
        out[i] = static_cast<int>(index % k);
        index /= k;
    }
    return out;
}

std::string tuple_to_string(const FinModel& m, std::size_t index, int width) {
    auto digits = decode_tuple(index, m.size, width);
    std::string s = "(";
    for (int i = 0; i < width; ++i) {
        if (i) s += ",";
        s += m.elem_names[digits[i]];
    }
    return s + ")";
}

} // namespace regdiag
