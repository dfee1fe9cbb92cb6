#pragma once

#include <string>
#include <vector>

#include "regdiag/diagram.hpp"

namespace regdiag {

// Hypergraph-free wiring view of a diagram. Boxes keep their generator
// identity and ordered ports; identities and symmetries dissolve into plain
// wires. Every wire has exactly one source (a graph input or a box output)
// and one target (a graph output or a box input).
struct PortGraph {
    struct Box {
        std::string label; // kind-prefixed, e.g. "copy", "fun:f", "pred:P"
        int n_in = 0;
        int n_out = 0;
    };

    // Endpoint. For targets: box == -1 means graph output `port`, otherwise
    // input port `port` of box `box`. For sources: box == -1 means graph
    // input `port`, otherwise output port `port` of box `box`.
    struct End {
        int box = -1;
        int port = 0;
        bool operator==(const End& o) const {
            return box == o.box && port == o.port;
        }
    };

    int n_in = 0;
    int n_out = 0;
    std::vector<Box> boxes;
    std::vector<End> input_target;          // per graph input
    std::vector<std::vector<End>> box_target; // per box, per out port

    // Derived reverse wiring, filled by to_port_graph.
    std::vector<End> output_source;           // per graph output
    std::vector<std::vector<End>> box_source; // per box, per in port
};

// Unfolds a diagram term into its port graph. Well-defined for any
// well-typed term, including ones containing hole leaves (holes become
// boxes labelled with their name and interface).
PortGraph to_port_graph(const DiagramPtr& d);

// Canonical string encoding of a port graph, invariant under box renumbering
// but not under boundary permutation: two diagrams are wiring-isomorphic
// relative to their shared boundary exactly when their encodings coincide.
// Computed by positional boundary seeding, iterated color refinement and,
// on ties, individualization with lexicographic minimization.
std::string canonical_encoding(const PortGraph& g);

std::string canonical_encoding(const DiagramPtr& d);

// Boundary-respecting wiring isomorphism of the two diagrams.
bool iso_equal(const DiagramPtr& a, const DiagramPtr& b);

// Graphviz dot rendering of the wiring (left-to-right rank direction).
std::string to_dot(const DiagramPtr& d, const std::string& name = "diagram");

} // namespace regdiag
