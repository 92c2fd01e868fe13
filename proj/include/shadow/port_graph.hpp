#pragma once

// Orientation-free crossing graph used to assemble diagrams before arcs are numbered.
// Port p = 4*node + slot, slots counter-clockwise. A strand passes slot s <-> s^2.

#include "shadow/diagram.hpp"

#include <string>
#include <vector>

namespace shadow {

struct PortGraph {
    std::vector<int> link;   // partner port, -1 if open
    std::vector<int> under;  // per node: 0 -> slots 0,2 carry the under strand; 1 -> slots 1,3

    int nodes() const { return static_cast<int>(under.size()); }
    int add_node(int under_parity) {
        under.push_back(under_parity);
        link.insert(link.end(), 4, -1);
        return nodes() - 1;
    }
    static int port(int node, int slot) { return 4 * node + slot; }
    void connect(int p, int q) {
        link[p] = q;
        link[q] = p;
    }
    // splice node x into the connection at port a: a <-> x.near ... x.far <-> old partner
    void splice(int a, int x, int near_slot, int far_slot) {
        int c = link[a];
        connect(a, port(x, near_slot));
        connect(port(x, far_slot), c);
    }
};

struct Seed {
    std::string label;
    int port = -1;  // entry port; -1 for a crossingless loop
};

// Numbers arcs component by component in seed order; components not reached by a seed get
// labels extra_prefix1, extra_prefix2, ...
// under_in, when given, receives per node the port slot that became PD slot 0.
LinkDiagram trace(const PortGraph& g, const std::vector<Seed>& seeds,
                  const std::string& extra_prefix = "X", std::vector<int>* under_in = nullptr);

// PD -> port graph, node i = crossing i, slot j = PD position j (under parity 0).
PortGraph port_graph_of(const LinkDiagram& d);
// entry port (crossing*4+slot) where arc a ends
int entry_port_of_arc(const LinkDiagram& d, int arc);

} // namespace shadow
