#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "regdiag/bitvec.hpp"
#include "regdiag/diagram.hpp"
#include "regdiag/signature.hpp"

namespace regdiag {

// A finite model: carrier {0..size-1} with optional element names, total
// function tables and predicate tables for every symbol of the signature.
// Tuple indices are leftmost-major: (a1,...,an) has index
// ((a1*k + a2)*k + ...)*k + an over carrier size k.
struct FinModel {
    Signature sig;
    int size = 0;
    std::vector<std::string> elem_names;

    // Function tables, one output element per input tuple index.
    std::map<std::string, std::vector<int>> fun;
    // Predicate tables, one bit per tuple index.
    std::map<std::string, BitVec> pred;

    const std::string& name_of(int e) const { return elem_names[e]; }
    int elem_by_name(const std::string& n) const;

    // Checks tables exist, are total and in range for every symbol.
    void validate() const;

    static FinModel from_json_text(const std::string& text, const Signature& sig);
    static FinModel from_file(const std::string& path, const Signature& sig);
    std::string to_json_text() const;
};

std::uint64_t ipow(std::uint64_t base, int exp);

// A relation between tuple powers of a common carrier: dom_w and cod_w are
// widths, the carrier size is k. Stored row-per-domain-index.
class FinRelation {
public:
    FinRelation() = default;
    FinRelation(int k, int dom_w, int cod_w);

    int carrier() const { return k_; }
    int dom_width() const { return dom_w_; }
    int cod_width() const { return cod_w_; }
    std::size_t dom_size() const { return dom_size_; }
    std::size_t cod_size() const { return cod_size_; }

    bool get(std::size_t a, std::size_t b) const { return rows_[a].get(b); }
    void set(std::size_t a, std::size_t b, bool v = true) { rows_[a].set(b, v); }
    const BitVec& row(std::size_t a) const { return rows_[a]; }
    BitVec& row(std::size_t a) { return rows_[a]; }

    std::size_t pair_count() const;
    bool operator==(const FinRelation& o) const;
    bool operator!=(const FinRelation& o) const { return !(*this == o); }

private:
    int k_ = 1;
    int dom_w_ = 0, cod_w_ = 0;
    std::size_t dom_size_ = 1, cod_size_ = 1;
    std::vector<BitVec> rows_;
};

FinRelation rel_identity(int k, int w);
FinRelation rel_full(int k, int dom_w, int cod_w);
FinRelation rel_compose(const FinRelation& r, const FinRelation& s);
FinRelation rel_tensor(const FinRelation& r, const FinRelation& s);
FinRelation rel_converse(const FinRelation& r);
FinRelation rel_meet(const FinRelation& r, const FinRelation& s);
bool rel_subset(const FinRelation& r, const FinRelation& s);

// Structural evaluation of a diagram in a model. Widths are capped so that
// no intermediate relation exceeds `max_bits` bits (SizeBudgetError).
FinRelation eval_diagram(const FinModel& m, const DiagramPtr& d,
                         std::uint64_t max_bits = (1ull << 28));

struct InclusionResult {
    bool holds = false;
    // When the inclusion fails: a pair present on the left, absent on the
    // right (domain and codomain tuple indices).
    std::size_t witness_dom = 0, witness_cod = 0;
};

InclusionResult check_inclusion(const FinRelation& lhs, const FinRelation& rhs);

// Decodes a tuple index into element indices (leftmost major).
std::vector<int> decode_tuple(std::size_t index, int k, int width);
std::string tuple_to_string(const FinModel& m, std::size_t index, int width);

} // namespace regdiag
