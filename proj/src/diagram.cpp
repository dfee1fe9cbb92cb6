#include "regdiag/diagram.hpp"

#include <algorithm>

#include "regdiag/errors.hpp"

namespace regdiag {

int Diagram::box_count() const {
    switch (tag_) {
    case Tag::Gen:
        switch (kind_) {
        case GenKind::Empty:
        case GenKind::Id:
        case GenKind::Swap:
            return 0;
        default:
            return 1;
        }
    case Tag::Seq:
    case Tag::Tensor:
        return l_->box_count() + r_->box_count();
    }
    return 0;
}

bool Diagram::contains_hole() const {
    switch (tag_) {
    case Tag::Gen:
        return kind_ == GenKind::Hole;
    case Tag::Seq:
    case Tag::Tensor:
        return l_->contains_hole() || r_->contains_hole();
    }
    return false;
}

DiagramPtr Diagram::empty() {
    static DiagramPtr d(new Diagram(Tag::Gen, GenKind::Empty, "", 0, 0, nullptr, nullptr));
    return d;
}
DiagramPtr Diagram::id1() {
    static DiagramPtr d(new Diagram(Tag::Gen, GenKind::Id, "", 1, 1, nullptr, nullptr));
    return d;
}
DiagramPtr Diagram::swap11() {
    static DiagramPtr d(new Diagram(Tag::Gen, GenKind::Swap, "", 2, 2, nullptr, nullptr));
    return d;
}
DiagramPtr Diagram::copy1() {
    static DiagramPtr d(new Diagram(Tag::Gen, GenKind::Copy, "", 1, 2, nullptr, nullptr));
    return d;
}
DiagramPtr Diagram::discard1() {
    static DiagramPtr d(new Diagram(Tag::Gen, GenKind::Discard, "", 1, 0, nullptr, nullptr));
    return d;
}
DiagramPtr Diagram::cocopy1() {
    static DiagramPtr d(new Diagram(Tag::Gen, GenKind::Cocopy, "", 2, 1, nullptr, nullptr));
    return d;
}
DiagramPtr Diagram::codiscard1() {
    static DiagramPtr d(new Diagram(Tag::Gen, GenKind::Codiscard, "", 0, 1, nullptr, nullptr));
    return d;
}

DiagramPtr Diagram::fun_box(const std::string& name, int arity) {
    if (arity < 0) throw SignatureError("negative arity for " + name);
    return DiagramPtr(new Diagram(Tag::Gen, GenKind::FunBox, name, arity, 1, nullptr, nullptr));
}

DiagramPtr Diagram::pred_box(const std::string& name, int arity) {
    if (arity < 0) throw SignatureError("negative arity for " + name);
    return DiagramPtr(new Diagram(Tag::Gen, GenKind::PredBox, name, arity, 0, nullptr, nullptr));
}

DiagramPtr Diagram::hole(const std::string& name, int dom, int cod) {
    if (dom < 0 || cod < 0) throw WidthMismatchError("negative hole width");
    return DiagramPtr(new Diagram(Tag::Gen, GenKind::Hole, name, dom, cod, nullptr, nullptr));
}

DiagramPtr Diagram::seq(DiagramPtr a, DiagramPtr b) {
    if (!a || !b) throw Error("seq of null diagram");
    if (a->cod() != b->dom())
        throw WidthMismatchError("seq: left codomain " + std::to_string(a->cod()) +
                                 " != right domain " + std::to_string(b->dom()));
    int dom = a->dom(), cod = b->cod();
    return DiagramPtr(new Diagram(Tag::Seq, GenKind::Empty, "", dom, cod,
                                  std::move(a), std::move(b)));
}

DiagramPtr Diagram::tensor(DiagramPtr a, DiagramPtr b) {
    if (!a || !b) throw Error("tensor of null diagram");
    int dom = a->dom() + b->dom(), cod = a->cod() + b->cod();
    return DiagramPtr(new Diagram(Tag::Tensor, GenKind::Empty, "", dom, cod,
                                  std::move(a), std::move(b)));
}

DiagramPtr identity(int n) {
    if (n < 0) throw WidthMismatchError("identity of negative width");
    if (n == 0) return Diagram::empty();
    DiagramPtr d = Diagram::id1();
    for (int i = 1; i < n; ++i) d = Diagram::tensor(d, Diagram::id1());
    return d;
}

DiagramPtr seq_all(const std::vector<DiagramPtr>& ds) {
    if (ds.empty()) throw Error("seq_all of empty list");
    DiagramPtr d = ds[0];
    for (std::size_t i = 1; i < ds.size(); ++i) d = Diagram::seq(d, ds[i]);
    return d;
}

DiagramPtr tensor_all(const std::vector<DiagramPtr>& ds) {
    if (ds.empty()) return Diagram::empty();
    DiagramPtr d = ds[0];
    for (std::size_t i = 1; i < ds.size(); ++i) d = Diagram::tensor(d, ds[i]);
    return d;
}

DiagramPtr copy_n(int n) {
    if (n < 0) throw WidthMismatchError("copy of negative width");
    if (n == 0) return Diagram::empty();
    if (n == 1) return Diagram::copy1();
    // Duplicate the first wire and the remaining bus, then pull the first
    // duplicate of the bus across: 1+(n-1) -> 1+1+(n-1)+(n-1) -> 1+(n-1)+1+(n-1).
    DiagramPtr rest = copy_n(n - 1);
    DiagramPtr stage = Diagram::tensor(Diagram::copy1(), rest);
    DiagramPtr shuffle =
        Diagram::tensor(Diagram::tensor(identity(1), swap_nm(1, n - 1)), identity(n - 1));
    return Diagram::seq(stage, shuffle);
}

DiagramPtr discard_n(int n) {
    if (n < 0) throw WidthMismatchError("discard of negative width");
    if (n == 0) return Diagram::empty();
    DiagramPtr d = Diagram::discard1();
    for (int i = 1; i < n; ++i) d = Diagram::tensor(d, Diagram::discard1());
    return d;
}

DiagramPtr cocopy_n(int n) {
    if (n < 0) throw WidthMismatchError("cocopy of negative width");
    if (n == 0) return Diagram::empty();
    if (n == 1) return Diagram::cocopy1();
    DiagramPtr shuffle =
        Diagram::tensor(Diagram::tensor(identity(1), swap_nm(n - 1, 1)), identity(n - 1));
    DiagramPtr stage = Diagram::tensor(Diagram::cocopy1(), cocopy_n(n - 1));
    return Diagram::seq(shuffle, stage);
}

DiagramPtr codiscard_n(int n) {
    if (n < 0) throw WidthMismatchError("codiscard of negative width");
    if (n == 0) return Diagram::empty();
    DiagramPtr d = Diagram::codiscard1();
    for (int i = 1; i < n; ++i) d = Diagram::tensor(d, Diagram::codiscard1());
    return d;
}

DiagramPtr swap_nm(int n, int m) {
    if (n < 0 || m < 0) throw WidthMismatchError("swap of negative width");
    if (n == 0) return identity(m);
    if (m == 0) return identity(n);
    if (n == 1 && m == 1) return Diagram::swap11();
    // Move the first left wire across the m bus one position at a time, then
    // recurse on the remaining n-1 wires.
    if (n == 1) {
        // 1+m: swap with first of bus, then recurse past the rest.
        DiagramPtr step = Diagram::tensor(Diagram::swap11(), identity(m - 1));
        return Diagram::seq(step, Diagram::tensor(identity(1), swap_nm(1, m - 1)));
    }
    DiagramPtr first = Diagram::tensor(identity(n - 1), swap_nm(1, m));
    return Diagram::seq(first, Diagram::tensor(swap_nm(n - 1, m), identity(1)));
}

DiagramPtr cup_n(int n) { return Diagram::seq(codiscard_n(n), copy_n(n)); }

DiagramPtr cap_n(int n) { return Diagram::seq(cocopy_n(n), discard_n(n)); }

DiagramPtr top_nm(int n, int m) { return Diagram::seq(discard_n(n), codiscard_n(m)); }

DiagramPtr permutation_diagram(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p])
            throw Error("permutation_diagram: not a permutation");
        seen[p] = true;
    }
    // Selection sort with adjacent transpositions; each pass emits one layer
    // id ⊗ swap ⊗ id. cur[i] = original index of the wire now at position i.
    std::vector<int> cur(n);
    for (int i = 0; i < n; ++i) cur[i] = i;
    DiagramPtr d = identity(n);
    bool touched = false;
    for (int target = 0; target < n; ++target) {
        // Find the wire that must end at position target: original index j
        // with perm[j] == target.
        int j = 0;
        while (perm[cur[j]] != target) ++j;
        while (j > target) {
            DiagramPtr layer = tensor_all({identity(j - 1), Diagram::swap11(),
                                           identity(n - j - 1)});
            d = touched ? Diagram::seq(d, layer) : layer;
            touched = true;
            std::swap(cur[j - 1], cur[j]);
            --j;
        }
    }
    return d;
}

DiagramPtr meet(DiagramPtr d1, DiagramPtr d2) {
    if (d1->dom() != d2->dom() || d1->cod() != d2->cod())
        throw WidthMismatchError("meet: interfaces differ");
    int n = d1->dom(), m = d1->cod();
    return seq_all({copy_n(n), Diagram::tensor(d1, d2), cocopy_n(m)});
}

DiagramPtr converse(DiagramPtr d) {
    int n = d->dom(), m = d->cod();
    DiagramPtr bend_in = Diagram::tensor(cup_n(n), identity(m));
    DiagramPtr middle = tensor_all({identity(n), d, identity(m)});
    DiagramPtr bend_out = Diagram::tensor(identity(n), cap_n(m));
    return seq_all({bend_in, middle, bend_out});
}

DiagramPtr derived(const std::string& kind, const std::vector<int>& params) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw Error("derived " + kind + ": expected " + std::to_string(k) +
                        " parameter(s)");
    };
    if (kind == "id") {
        need(1);
        return identity(params[0]);
    }
    if (kind == "copy") {
        need(1);
        return copy_n(params[0]);
    }
    if (kind == "discard") {
        need(1);
        return discard_n(params[0]);
    }
    if (kind == "cocopy") {
        need(1);
        return cocopy_n(params[0]);
    }
    if (kind == "codiscard") {
        need(1);
        return codiscard_n(params[0]);
    }
    if (kind == "swap") {
        need(2);
        return swap_nm(params[0], params[1]);
    }
    if (kind == "cup") {
        need(1);
        return cup_n(params[0]);
    }
    if (kind == "cap") {
        need(1);
        return cap_n(params[0]);
    }
    if (kind == "top") {
        need(2);
        return top_nm(params[0], params[1]);
    }
    throw Error("derived: unknown family " + kind);
}

} // namespace regdiag
