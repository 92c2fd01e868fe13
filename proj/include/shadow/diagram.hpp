#pragma once

#include "shadow/braid.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace shadow {

// PD crossing: arcs listed counter-clockwise starting at the incoming under arc.
struct PDCrossing {
    std::array<int, 4> arcs{};
    int sign = 1;
    bool operator==(const PDCrossing&) const = default;
};

// Arcs of a component in traversal order; empty for a crossingless loop.
struct Component {
    std::string label;
    std::vector<int> arcs;
    bool operator==(const Component&) const = default;
};

using Corner = std::pair<int, int>;  // (crossing, slot): sector between slot and slot+1

// Where the unbounded region and any crossingless loops sit.
struct Layout {
    Corner outer{0, 0};
    std::map<std::string, Corner> loops;  // loop label -> corner of the region holding it
};

struct LinkDiagram {
    std::vector<PDCrossing> crossings;
    std::vector<Component> components;
    std::optional<BraidWord> braid;  // set when crossing t is letter t of a braid closure
    std::optional<Layout> layout;

    int crossing_count() const { return static_cast<int>(crossings.size()); }
    int component_count() const { return static_cast<int>(components.size()); }
    int loop_count() const;
    int arc_count() const { return 2 * crossing_count(); }
    const Component* find(const std::string& label) const;
};

// Checks: arc double occurrence, component consistency, Euler per graph component.
// Returns an empty string when all hold, otherwise the first problem.
std::string validate(const LinkDiagram& d);

LinkDiagram closure_diagram(const BraidWord& b);
LinkDiagram braided_link(const BraidWord& b);
// closure of (b x 1) * s_n ... s_1^2 ... s_n, the extra strand being the axis
BraidWord braided_link_word(const BraidWord& b);

// drop components by label; arcs renumbered
LinkDiagram remove_components(const LinkDiagram& d, const std::vector<std::string>& labels);
// same crossings up to arc relabelling, same number of loops
bool pd_isomorphic(const LinkDiagram& a, const LinkDiagram& b);

std::string to_pd_text(const LinkDiagram& d);
LinkDiagram parse_pd_text(const std::string& text);

struct GraphEdge {
    int v0 = -1, s0 = -1, v1 = -1, s1 = -1;  // v0/v1 = -1 for a loop edge
    int arc = 0;
    bool in_box = true;   // false for braid-closure arcs that wrap around
    std::string loop;     // label when this is a crossingless loop
};

struct Face {
    std::vector<Corner> corners;            // traversal order
    std::vector<std::pair<int, int>> steps;  // (edge, direction): 0 = v0->v1, 1 = v1->v0
    std::vector<std::string> loops;         // crossingless loops on the boundary
};

struct PlanarGraph4V {
    std::vector<int> sign;
    std::vector<GraphEdge> edges;  // graph edges, then one entry per loop
    std::vector<Face> faces;
    int outer_face = -1;   // unbounded region (beyond any outer loop)
    int graph_outer = -1;  // outermost region of the graph itself
    bool connected = true;
    std::vector<std::array<int, 4>> edge_at;      // edge index at (vertex, slot)
    std::vector<std::array<int, 2>> edge_faces;   // face on each side, by traversal direction
    std::vector<std::array<int, 4>> corner_face;  // face index of corner (vertex, slot)

    int vertex_count() const { return static_cast<int>(sign.size()); }
    int graph_edge_count() const { return 2 * vertex_count(); }
    int face_of(Corner c) const;
    std::vector<int> neighbours(int face) const;  // sorted, unique
    bool touches(int face, const std::string& loop) const;
};

PlanarGraph4V project_to_graph(const LinkDiagram& d);

struct FaceReport {
    std::vector<Face> faces;
    int v = 0, e = 0, r = 0;
    bool euler_verify = false;
};
FaceReport faces(const PlanarGraph4V& g);

std::vector<int> maximal_tree(const PlanarGraph4V& g, const std::vector<int>& restrict_to = {});

struct DualPath {
    std::vector<int> faces;  // start .. outer
    std::vector<int> edges;  // edges[i] separates faces[i] and faces[i+1]
};
DualPath dual_shortest_path(const PlanarGraph4V& g, int from_face);

} // namespace shadow
