#include "regdiag/portgraph.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>

#include "regdiag/errors.hpp"

namespace regdiag {

namespace {

struct UnionFind {
    std::vector<int> parent;
    int fresh() {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct BuildState {
    UnionFind nets;
    std::vector<PortGraph::Box> boxes;
    // Per box: net of each in port / out port.
    std::vector<std::vector<int>> box_in_nets;
    std::vector<std::vector<int>> box_out_nets;

    int add_box(std::string label, const std::vector<int>& in_nets,
                const std::vector<int>& out_nets) {
        boxes.push_back({std::move(label), static_cast<int>(in_nets.size()),
                         static_cast<int>(out_nets.size())});
        box_in_nets.push_back(in_nets);
        box_out_nets.push_back(out_nets);
        return static_cast<int>(boxes.size()) - 1;
    }
};

std::string gen_label(const Diagram& d) {
    switch (d.gen_kind()) {
    case GenKind::Copy:
        return "copy";
    case GenKind::Discard:
        return "discard";
    case GenKind::Cocopy:
        return "cocopy";
    case GenKind::Codiscard:
        return "codiscard";
    case GenKind::FunBox:
        return "fun:" + d.symbol();
    case GenKind::PredBox:
        return "pred:" + d.symbol();
    case GenKind::Hole:
        return "hole:" + d.symbol();
    default:
        throw Error("gen_label: wiring generator has no box label");
    }
}

void build(const DiagramPtr& d, const std::vector<int>& ins,
           const std::vector<int>& outs, BuildState& st) {
    assert(static_cast<int>(ins.size()) == d->dom());
    assert(static_cast<int>(outs.size()) == d->cod());
    switch (d->tag()) {
    case Diagram::Tag::Gen:
        switch (d->gen_kind()) {
        case GenKind::Empty:
            return;
        case GenKind::Id:
            st.nets.unite(ins[0], outs[0]);
            return;
        case GenKind::Swap:
            st.nets.unite(ins[0], outs[1]);
            st.nets.unite(ins[1], outs[0]);
            return;
        default:
            st.add_box(gen_label(*d), ins, outs);
            return;
        }
    case Diagram::Tag::Seq: {
        std::vector<int> mid(d->left()->cod());
        for (auto& n : mid) n = st.nets.fresh();
        build(d->left(), ins, mid, st);
        build(d->right(), mid, outs, st);
        return;
    }
    case Diagram::Tag::Tensor: {
        std::vector<int> ins_l(ins.begin(), ins.begin() + d->left()->dom());
        std::vector<int> ins_r(ins.begin() + d->left()->dom(), ins.end());
        std::vector<int> outs_l(outs.begin(), outs.begin() + d->left()->cod());
        std::vector<int> outs_r(outs.begin() + d->left()->cod(), outs.end());
        build(d->left(), ins_l, outs_l, st);
        build(d->right(), ins_r, outs_r, st);
        return;
    }
    }
}

} // namespace

PortGraph to_port_graph(const DiagramPtr& d) {
    BuildState st;
    std::vector<int> ins(d->dom()), outs(d->cod());
    for (auto& n : ins) n = st.nets.fresh();
    for (auto& n : outs) n = st.nets.fresh();
    build(d, ins, outs, st);

    // Resolve each net to its unique source and target.
    std::map<int, PortGraph::End> src_of, tgt_of;
    auto put_src = [&](int net, PortGraph::End e) {
        int r = st.nets.find(net);
        if (src_of.count(r)) throw Error("port graph: net with two sources");
        src_of[r] = e;
    };
    auto put_tgt = [&](int net, PortGraph::End e) {
        int r = st.nets.find(net);
        if (tgt_of.count(r)) throw Error("port graph: net with two targets");
        tgt_of[r] = e;
    };
    for (int i = 0; i < d->dom(); ++i) put_src(ins[i], {-1, i});
    for (int j = 0; j < d->cod(); ++j) put_tgt(outs[j], {-1, j});
    for (std::size_t b = 0; b < st.boxes.size(); ++b) {
        for (std::size_t p = 0; p < st.box_in_nets[b].size(); ++p)
            put_tgt(st.box_in_nets[b][p], {static_cast<int>(b), static_cast<int>(p)});
        for (std::size_t p = 0; p < st.box_out_nets[b].size(); ++p)
            put_src(st.box_out_nets[b][p], {static_cast<int>(b), static_cast<int>(p)});
    }

    PortGraph g;
    g.n_in = d->dom();
    g.n_out = d->cod();
    g.boxes = st.boxes;
    auto tgt = [&](int net) {
        auto it = tgt_of.find(st.nets.find(net));
        if (it == tgt_of.end()) throw Error("port graph: dangling wire (no target)");
        return it->second;
    };
    auto src = [&](int net) {
        auto it = src_of.find(st.nets.find(net));
        if (it == src_of.end()) throw Error("port graph: dangling wire (no source)");
        return it->second;
    };
    g.input_target.resize(g.n_in);
    for (int i = 0; i < g.n_in; ++i) g.input_target[i] = tgt(ins[i]);
    g.output_source.resize(g.n_out);
    for (int j = 0; j < g.n_out; ++j) g.output_source[j] = src(outs[j]);
    g.box_target.resize(g.boxes.size());
    g.box_source.resize(g.boxes.size());
    for (std::size_t b = 0; b < g.boxes.size(); ++b) {
        g.box_target[b].resize(g.boxes[b].n_out);
        for (int p = 0; p < g.boxes[b].n_out; ++p)
            g.box_target[b][p] = tgt(st.box_out_nets[b][p]);
        g.box_source[b].resize(g.boxes[b].n_in);
        for (int p = 0; p < g.boxes[b].n_in; ++p)
            g.box_source[b][p] = src(st.box_in_nets[b][p]);
    }
    return g;
}

namespace {

// Color refinement state for canonical_encoding.
struct Canon {
    const PortGraph& g;
    int n;
    std::vector<int> label_rank; // initial color per box

    explicit Canon(const PortGraph& gr) : g(gr), n(static_cast<int>(gr.boxes.size())) {
        std::vector<std::string> keys(n);
        for (int b = 0; b < n; ++b) {
            std::ostringstream k;
            k << g.boxes[b].label << "/" << g.boxes[b].n_in << "/" << g.boxes[b].n_out;
            keys[b] = k.str();
        }
        std::vector<std::string> sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        label_rank.resize(n);
        for (int b = 0; b < n; ++b)
            label_rank[b] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), keys[b]) - sorted.begin());
    }

    // One refinement sweep: recolor boxes by (color, neighborhood signature)
    // until stable. Boundary endpoints contribute position-exact tokens.
    void refine(std::vector<int>& color) const {
        for (;;) {
            std::vector<std::vector<long long>> key(n);
            for (int b = 0; b < n; ++b) {
                auto& k = key[b];
                k.push_back(color[b]);
                for (const auto& e : g.box_source[b]) {
                    if (e.box < 0) {
                        k.push_back(-1);
                        k.push_back(e.port);
                    } else {
                        k.push_back(1);
                        k.push_back(color[e.box]);
                        k.push_back(e.port);
                    }
                }
                k.push_back(-7); // separator between in and out sides
                for (const auto& e : g.box_target[b]) {
                    if (e.box < 0) {
                        k.push_back(-2);
                        k.push_back(e.port);
                    } else {
                        k.push_back(2);
                        k.push_back(color[e.box]);
                        k.push_back(e.port);
                    }
                }
            }
            std::vector<std::vector<long long>> sorted = key;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            std::vector<int> next(n);
            for (int b = 0; b < n; ++b)
                next[b] = static_cast<int>(
                    std::lower_bound(sorted.begin(), sorted.end(), key[b]) - sorted.begin());
            if (next == color) return;
            color = std::move(next);
        }
    }

    bool discrete(const std::vector<int>& color) const {
        std::vector<char> seen(n, 0);
        for (int c : color) {
            if (seen[c]) return false;
            seen[c] = 1;
        }
        return true;
    }

    std::string encode(const std::vector<int>& color) const {
        // color is discrete here; canonical index of box b is color[b].
        std::vector<int> of_rank(n);
        for (int b = 0; b < n; ++b) of_rank[color[b]] = b;
        auto tgt_token = [&](const PortGraph::End& e, std::ostringstream& os) {
            if (e.box < 0)
                os << "o" << e.port;
            else
                os << "b" << color[e.box] << "." << e.port;
        };
        std::ostringstream os;
        os << g.n_in << ">" << g.n_out << "|";
        for (int r = 0; r < n; ++r) {
            const auto& bx = g.boxes[of_rank[r]];
            os << bx.label << "(" << bx.n_in << "," << bx.n_out << ");";
        }
        os << "|";
        for (int i = 0; i < g.n_in; ++i) {
            os << "i" << i << ">";
            tgt_token(g.input_target[i], os);
            os << ";";
        }
        for (int r = 0; r < n; ++r) {
            int b = of_rank[r];
            for (int p = 0; p < g.boxes[b].n_out; ++p) {
                os << "b" << r << "." << p << ">";
                tgt_token(g.box_target[b][p], os);
                os << ";";
            }
        }
        return os.str();
    }

    std::string search(std::vector<int> color) const {
        refine(color);
        if (discrete(color)) return encode(color);
        // Pick the smallest non-singleton color class and individualize each
        // member; keep the lexicographically smallest result.
        int pick = -1;
        {
            std::vector<int> count(n, 0);
            for (int c : color) ++count[c];
            for (int c = 0; c < n; ++c)
                if (count[c] >= 2) {
                    pick = c;
                    break;
                }
        }
        std::string best;
        int fresh = *std::max_element(color.begin(), color.end()) + 1;
        for (int b = 0; b < n; ++b) {
            if (color[b] != pick) continue;
            std::vector<int> next = color;
            next[b] = fresh;
            std::string s = search(std::move(next));
            if (best.empty() || s < best) best = std::move(s);
        }
        return best;
    }
};

} // namespace

std::string canonical_encoding(const PortGraph& g) {
    if (g.boxes.empty()) {
        std::ostringstream os;
        os << g.n_in << ">" << g.n_out << "||";
        for (int i = 0; i < g.n_in; ++i)
            os << "i" << i << ">o" << g.input_target[i].port << ";";
        return os.str();
    }
    Canon c(g);
    return c.search(c.label_rank);
}

std::string canonical_encoding(const DiagramPtr& d) {
    return canonical_encoding(to_port_graph(d));
}

bool iso_equal(const DiagramPtr& a, const DiagramPtr& b) {
    if (a->dom() != b->dom() || a->cod() != b->cod()) return false;
    return canonical_encoding(a) == canonical_encoding(b);
}

std::string to_dot(const DiagramPtr& d, const std::string& name) {
    PortGraph g = to_port_graph(d);
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n  rankdir=LR;\n  node [shape=box];\n";
    for (int i = 0; i < g.n_in; ++i)
        os << "  in" << i << " [shape=plaintext,label=\"in " << i << "\"];\n";
    for (int j = 0; j < g.n_out; ++j)
        os << "  out" << j << " [shape=plaintext,label=\"out " << j << "\"];\n";
    for (std::size_t b = 0; b < g.boxes.size(); ++b)
        os << "  b" << b << " [label=\"" << g.boxes[b].label << "\"];\n";
    auto tgt_name = [&](const PortGraph::End& e) {
        std::ostringstream t;
        if (e.box < 0)
            t << "out" << e.port;
        else
            t << "b" << e.box;
        return t.str();
    };
    for (int i = 0; i < g.n_in; ++i) {
        const auto& e = g.input_target[i];
        os << "  in" << i << " -> " << tgt_name(e);
        if (e.box >= 0) os << " [headlabel=\"" << e.port << "\"]";
        os << ";\n";
    }
    for (std::size_t b = 0; b < g.boxes.size(); ++b)
        for (int p = 0; p < g.boxes[b].n_out; ++p) {
            const auto& e = g.box_target[b][p];
            os << "  b" << b << " -> " << tgt_name(e) << " [taillabel=\"" << p << "\"";
            if (e.box >= 0) os << ",headlabel=\"" << e.port << "\"";
            os << "];\n";
        }
    os << "}\n";
    return os.str();
}

} // namespace regdiag
