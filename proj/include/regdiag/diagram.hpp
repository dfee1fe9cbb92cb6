#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "regdiag/signature.hpp"

namespace regdiag {

// String diagrams for a one-sorted relational signature, as immutable terms.
// Objects are natural-number widths; a diagram has a domain width (wires in,
// drawn on the left) and a codomain width (wires out, on the right).
//
// Generators:
//   empty      0 -> 0   the tensor unit
//   id         1 -> 1
//   swap       2 -> 2
//   copy       1 -> 2
//   discard    1 -> 0
//   cocopy     2 -> 1
//   codiscard  0 -> 1
//   fun box f  ar(f) -> 1
//   pred box P ar(P) -> 0
//   hole       n -> m   a metavariable leaf, only valid inside rule schemas
//
// Composite nodes: seq (left-to-right composition) and tensor (side by side).
// Trees are shared immutably through DiagramPtr; structural helpers below
// build the usual derived wirings.

enum class GenKind : std::uint8_t {
    Empty,
    Id,
    Swap,
    Copy,
    Discard,
    Cocopy,
    Codiscard,
    FunBox,
    PredBox,
    Hole,
};

class Diagram;
using DiagramPtr = std::shared_ptr<const Diagram>;

class Diagram {
public:
    enum class Tag : std::uint8_t { Gen, Seq, Tensor };

    Tag tag() const { return tag_; }
    GenKind gen_kind() const { return kind_; }
    const std::string& symbol() const { return sym_; }
    int dom() const { return dom_; }
    int cod() const { return cod_; }
    const DiagramPtr& left() const { return l_; }
    const DiagramPtr& right() const { return r_; }

    bool is_gen(GenKind k) const { return tag_ == Tag::Gen && kind_ == k; }

    // Number of generator leaves other than empty/id/swap. Handy as a crude
    // size measure: identities and symmetries carry no boxes.
    int box_count() const;

    bool contains_hole() const;

    static DiagramPtr empty();
    static DiagramPtr id1();
    static DiagramPtr swap11();
    static DiagramPtr copy1();
    static DiagramPtr discard1();
    static DiagramPtr cocopy1();
    static DiagramPtr codiscard1();
    static DiagramPtr fun_box(const std::string& name, int arity);
    static DiagramPtr pred_box(const std::string& name, int arity);
    // Metavariable leaf named `name` with the given interface.
    static DiagramPtr hole(const std::string& name, int dom, int cod);

    static DiagramPtr seq(DiagramPtr a, DiagramPtr b);
    static DiagramPtr tensor(DiagramPtr a, DiagramPtr b);

private:
    Diagram(Tag t, GenKind k, std::string sym, int dom, int cod, DiagramPtr l,
            DiagramPtr r)
        : tag_(t), kind_(k), sym_(std::move(sym)), dom_(dom), cod_(cod),
          l_(std::move(l)), r_(std::move(r)) {}

    Tag tag_;
    GenKind kind_ = GenKind::Empty;
    std::string sym_;
    int dom_ = 0;
    int cod_ = 0;
    DiagramPtr l_;
    DiagramPtr r_;
};

// n parallel wires (empty when n = 0, a tensor chain of id otherwise).
DiagramPtr identity(int n);

// Sequential / parallel folds over a list. seq_all of an empty list is not
// defined (widths unknown); tensor_all of an empty list is `empty`.
DiagramPtr seq_all(const std::vector<DiagramPtr>& ds);
DiagramPtr tensor_all(const std::vector<DiagramPtr>& ds);

// Derived structural families.
DiagramPtr copy_n(int n);       // n -> 2n, duplicates the whole bus
DiagramPtr discard_n(int n);    // n -> 0
DiagramPtr cocopy_n(int n);     // 2n -> n
DiagramPtr codiscard_n(int n);  // 0 -> n
DiagramPtr swap_nm(int n, int m); // n+m -> m+n, crosses the two buses
DiagramPtr cup_n(int n);        // 0 -> 2n
DiagramPtr cap_n(int n);        // 2n -> 0
DiagramPtr top_nm(int n, int m); // n -> m, the everywhere-true relation

// Builds a wire permutation as a diagram: wire entering at position i leaves
// at position perm[i]. perm must be a permutation of 0..n-1.
DiagramPtr permutation_diagram(const std::vector<int>& perm);

// copy ; (d1 (x) d2) ; cocopy, the order-theoretic meet of two parallel
// diagrams with equal interfaces.
DiagramPtr meet(DiagramPtr d1, DiagramPtr d2);

// Bends the interface around: converse(d) : m -> n for d : n -> m.
DiagramPtr converse(DiagramPtr d);

// Named derived-family dispatch used by the text syntax: kind is one of
// copy, discard, cocopy, codiscard, swap, cup, cap, top, id.
DiagramPtr derived(const std::string& kind, const std::vector<int>& params);

} // namespace regdiag
