#include "shadow/fsl.hpp"
#include "shadow/errors.hpp"
#include "shadow/port_graph.hpp"

#include <algorithm>
#include <cstdlib>

namespace shadow {

const char* to_string(Framing f) {
    switch (f) {
    case Framing::zero: return "zero";
    case Framing::drilled: return "drilled";
    case Framing::plain: return "plain";
    }
    return "plain";
}

int SurgeryPresentation::zero_count() const {
    return static_cast<int>(std::count(framing.begin(), framing.end(), Framing::zero));
}

namespace {

// Port graph of the augmented link before arcs are numbered.
struct Fingers {
    LinkDiagram base;  // closure of the shifted braid
    PlanarGraph4V g;
    PortGraph pg;
    std::vector<int> face_of_finger;           // finger j lives in this face
    std::vector<int> parent, parent_edge;      // per face, -1 for the annulus face
    std::vector<std::vector<int>> order;       // per face: wire ids along parent edge, face's direction
    std::vector<std::vector<int>> nodes;       // per face: wire crossings on the parent edge, same order
    std::vector<int> wire_first;               // crossing of each wire on its own face's parent edge
    std::vector<int> c_nodes;                  // crossings on C in C's direction
    std::vector<int> c_of_wire;
    std::vector<int> start_port;               // per face: vertex port where its parent edge starts
    std::vector<std::vector<int>> children;    // per face, in boundary order after the parent edge
};

bool is_over(int wire) { return wire % 2 == 0; }

int step_dir(const Face& f, int edge) {
    for (auto [e, d] : f.steps)
        if (e == edge) return d;
    throw std::logic_error("edge not on face");
}

// base: a diagram whose first component is a crossingless loop C in the outer region
Fingers build_fingers(LinkDiagram base) {
    Fingers F;
    F.base = std::move(base);
    F.g = project_to_graph(F.base);
    const auto& g = F.g;
    const int O = g.graph_outer;
    const int NF = static_cast<int>(g.faces.size());

    F.parent.assign(NF, -1);
    F.parent_edge.assign(NF, -1);
    for (int f = 0; f < NF; ++f) {
        if (f == O || f == g.outer_face) continue;
        auto p = dual_shortest_path(g, f);
        F.parent[f] = p.faces[1];
        F.parent_edge[f] = p.edges[0];
        F.face_of_finger.push_back(f);
    }
    const int M = static_cast<int>(F.face_of_finger.size());
    std::vector<int> finger_at(NF, -1);
    for (int j = 0; j < M; ++j) finger_at[F.face_of_finger[j]] = j;

    // children in boundary order, starting right after the parent edge
    F.children.assign(NF, {});
    for (int f = 0; f < NF; ++f) {
        if (f == g.outer_face) continue;
        const auto& steps = g.faces[f].steps;
        int n = static_cast<int>(steps.size()), start = 0;
        if (F.parent_edge[f] >= 0)
            for (int i = 0; i < n; ++i)
                if (steps[i].first == F.parent_edge[f]) start = i + 1;
        for (int i = 0; i < n; ++i) {
            int e = steps[(start + i) % n].first;
            for (int a = 0; a < NF; ++a)
                if (F.parent[a] == f && F.parent_edge[a] == e &&
                    std::find(F.children[f].begin(), F.children[f].end(), a) == F.children[f].end())
                    F.children[f].push_back(a);
        }
    }

    // wire order along each parent edge, deepest faces first
    std::vector<int> depth(NF, 0);
    for (int f = 0; f < NF; ++f)
        for (int h = f; F.parent[h] >= 0; h = F.parent[h]) ++depth[f];
    std::vector<int> by_depth;
    for (int f = 0; f < NF; ++f)
        if (F.parent[f] >= 0) by_depth.push_back(f);
    std::stable_sort(by_depth.begin(), by_depth.end(), [&](int x, int y) { return depth[x] > depth[y]; });

    auto gather = [&](int f, bool own) {
        std::vector<int> x;
        if (own) {
            x.push_back(2 * finger_at[f]);
            x.push_back(2 * finger_at[f] + 1);
        }
        for (int a : F.children[f]) x.insert(x.end(), F.order[a].rbegin(), F.order[a].rend());
        return x;
    };
    F.order.assign(NF, {});
    for (int f : by_depth) {
        auto x = gather(f, true);
        F.order[f].assign(x.rbegin(), x.rend());
    }

    // wire crossings on graph edges
    F.pg = port_graph_of(F.base);
    auto& pg = F.pg;
    F.nodes.assign(NF, {});
    F.start_port.assign(NF, -1);
    F.wire_first.assign(2 * M, -1);
    std::vector<int> last_node(2 * M, -1);  // crossing nearest the annulus so far
    for (int f : by_depth) {
        int e = F.parent_edge[f];
        const auto& ge = g.edges[e];
        int p = step_dir(g.faces[f], e) == 0 ? PortGraph::port(ge.v0, ge.s0) : PortGraph::port(ge.v1, ge.s1);
        F.start_port[f] = p;
        int a = p;
        for (int w : F.order[f]) {
            int x = pg.add_node(is_over(w) ? 0 : 1);
            pg.splice(a, x, 0, 2);
            a = PortGraph::port(x, 2);
            F.nodes[f].push_back(x);
            if (finger_at[f] == w / 2) {
                F.wire_first[w] = x;
            } else {
                pg.connect(PortGraph::port(last_node[w], 3), PortGraph::port(x, 1));
            }
            last_node[w] = x;
        }
    }
    for (int j = 0; j < M; ++j)
        pg.connect(PortGraph::port(F.wire_first[2 * j], 1), PortGraph::port(F.wire_first[2 * j + 1], 1));

    // crossings on C, met in the annulus face's boundary order
    auto around = gather(O, false);
    F.c_of_wire.assign(2 * M, -1);
    for (int w : around) {
        int y = pg.add_node(is_over(w) ? 0 : 1);
        F.c_nodes.push_back(y);
        F.c_of_wire[w] = y;
        pg.connect(PortGraph::port(y, 3), PortGraph::port(last_node[w], 3));
    }
    const int nc = static_cast<int>(around.size());
    for (int i = 0; i < nc; ++i) {
        pg.connect(PortGraph::port(F.c_nodes[i], 2), PortGraph::port(F.c_nodes[(i + 1) % nc], 0));
        if (i % 2 == 0) pg.connect(PortGraph::port(F.c_nodes[i], 1), PortGraph::port(F.c_nodes[i + 1], 1));
    }
    return F;
}

// Half twist of C with the graph edge a finger leaves through, placed in the annulus
// just past that finger's wires.
void half_twist(Fingers& F, int finger, int parity) {
    int f = F.face_of_finger[finger];
    if (F.parent[f] != F.g.graph_outer) throw std::logic_error("twist needs a finger next to C");
    auto& pg = F.pg;
    int t = pg.add_node(parity);
    int x = F.nodes[f].front();
    int y = F.c_of_wire[F.order[f].front()];
    int p = pg.link[PortGraph::port(x, 0)];
    int yn = pg.link[PortGraph::port(y, 2)];
    pg.connect(PortGraph::port(t, 3), PortGraph::port(x, 0));
    pg.connect(PortGraph::port(t, 2), p);
    pg.connect(PortGraph::port(t, 0), PortGraph::port(y, 2));
    pg.connect(PortGraph::port(t, 1), yn);
}

// k crossings stacked in a column, capped top and bottom; C encloses it
LinkDiagram plat_chain(int k, std::vector<int>* uin_out = nullptr) {
    PortGraph pg;
    for (int i = 0; i < k; ++i) pg.add_node(0);
    auto P = PortGraph::port;
    // slots: 0 SW, 1 SE, 2 NE, 3 NW
    for (int i = 0; i + 1 < k; ++i) {
        pg.connect(P(i, 3), P(i + 1, 0));
        pg.connect(P(i, 2), P(i + 1, 1));
    }
    pg.connect(P(k - 1, 3), P(k - 1, 2));
    pg.connect(P(0, 0), P(0, 1));
    std::vector<int> uin;
    LinkDiagram d = trace(pg, {{"C", -1}, {"K1", P(0, 0)}}, "X", &uin);
    Layout lay;
    lay.outer = {0, (5 - uin[0]) % 4};  // east of the bottom crossing
    lay.loops["C"] = lay.outer;
    d.layout = lay;
    if (uin_out) *uin_out = uin;
    return d;
}

Fingers braid_fingers(const BraidWord& b) {
    if (b.length() == 0) throw DomainError("augmentation needs a nonempty word");
    if (!generators_all_present(b)) throw MissingGenerator("every generator must appear at least once");
    auto base = closure_diagram(shift_up(b, 1));
    // shifted closure: K1 is the untouched front strand, K2.. are the closure of b
    for (std::size_t i = 1; i < base.components.size(); ++i) base.components[i].label = "K" + std::to_string(i);
    return build_fingers(std::move(base));
}

std::vector<Seed> seeds_of(const Fingers& F, const std::string& finger_prefix) {
    std::vector<Seed> seeds;
    for (std::size_t i = 1; i < F.base.components.size(); ++i) {
        const auto& c = F.base.components[i];
        seeds.push_back({c.label, c.arcs.empty() ? -1 : entry_port_of_arc(F.base, c.arcs.back())});
    }
    seeds.push_back({"C", PortGraph::port(F.c_nodes.back(), 2)});
    for (std::size_t j = 0; j < F.face_of_finger.size(); ++j)
        seeds.push_back({finger_prefix + std::to_string(j + 1), PortGraph::port(F.wire_first[2 * j], 1)});
    return seeds;
}

void check(const LinkDiagram& d, std::size_t components) {
    auto bad = validate(d);
    if (!bad.empty()) throw std::logic_error("augmented diagram invalid: " + bad);
    if (d.components.size() != components) throw std::logic_error("augmented diagram has stray components");
}

} // namespace

LinkDiagram chain_link(int k, const std::vector<std::pair<int, int>>& twists) {
    if (k < 1) throw DomainError("chain length must be positive");
    Fingers F = build_fingers(plat_chain(k));
    for (auto [finger, parity] : twists) half_twist(F, finger, parity);
    auto d = trace(F.pg, seeds_of(F, "R"));
    auto bad = validate(d);
    if (!bad.empty()) throw std::logic_error("chain link invalid: " + bad);
    return d;
}

FamilyLink make_family(char family, int k) {
    if (k < 1) throw DomainError("family parameter must be positive");
    if (family != 'L' && family != 'J' && family != 'K') throw DomainError(std::string("unknown family ") + family);
    std::vector<int> uin;
    Fingers F = build_fingers(plat_chain(k, &uin));
    // fingers of the bottom and top cap regions
    auto finger_of = [&](Corner c) {
        int f = F.g.face_of(c);
        auto it = std::find(F.face_of_finger.begin(), F.face_of_finger.end(), f);
        return static_cast<int>(it - F.face_of_finger.begin());
    };
    int bottom = finger_of({0, (4 - uin[0]) % 4}), top = finger_of({k - 1, (6 - uin[k - 1]) % 4});
    FamilyLink out;
    out.family = family;
    out.k = k;
    out.expected_crossings = 5 * k + 4;
    out.expected_components = k + 3;
    if (family != 'K') {
        half_twist(F, bottom, 0);
        out.expected_crossings = 5 * k + 5;
        out.expected_components = k + 2;
    }
    if (family == 'L') {
        half_twist(F, top, 0);
        out.expected_crossings = 5 * k + 6;
        out.expected_components = k % 2 ? k + 2 : k + 3;
    }
    out.diagram = trace(F.pg, seeds_of(F, "R"));
    auto bad = validate(out.diagram);
    if (!bad.empty()) throw std::logic_error("family diagram invalid: " + bad);
    out.predicted_volume = 2 * k * v8();
    return out;
}

AugmentedLink augment_to_fsl(const BraidWord& b) {
    Fingers F = braid_fingers(b);
    AugmentedLink out;
    out.base = b;
    out.complexity = static_cast<int>(b.length());
    out.diagram = trace(F.pg, seeds_of(F, "R"));
    int m = closure_component_count(b);
    check(out.diagram, m + 1 + F.face_of_finger.size());
    for (std::size_t j = 0; j < F.face_of_finger.size(); ++j) out.added_components.push_back("R" + std::to_string(j + 1));
    out.predicted_volume = 2 * out.complexity * v8();
    return out;
}

SurgeryPresentation fsl_surgery_presentation(const BraidWord& b) {
    Fingers F = braid_fingers(b);
    auto& pg = F.pg;
    const auto& g = F.g;
    std::vector<int> region_first;
    for (int f : F.face_of_finger) {
        // wire ports facing into f, in f's boundary order
        std::vector<std::pair<int, int>> meet;  // (wire over?, port)
        for (auto [e, d] : g.faces[f].steps) {
            if (e == F.parent_edge[f]) {
                for (std::size_t i = 0; i < F.nodes[f].size(); ++i)
                    meet.push_back({is_over(F.order[f][i]), PortGraph::port(F.nodes[f][i], 1)});
                continue;
            }
            for (int a : F.children[f]) {
                if (F.parent_edge[a] != e) continue;
                for (std::size_t i = F.nodes[a].size(); i-- > 0;)
                    meet.push_back({is_over(F.order[a][i]), PortGraph::port(F.nodes[a][i], 3)});
            }
        }
        std::vector<int> ring;
        for (auto [over, port] : meet) {
            int x = pg.add_node(over ? 0 : 1);
            pg.splice(port, x, 3, 1);
            ring.push_back(x);
        }
        for (std::size_t i = 0; i < ring.size(); ++i)
            pg.connect(PortGraph::port(ring[i], 2), PortGraph::port(ring[(i + 1) % ring.size()], 0));
        region_first.push_back(ring.front());
    }
    auto seeds = seeds_of(F, "R");
    for (std::size_t j = 0; j < region_first.size(); ++j)
        seeds.push_back({"F" + std::to_string(j + 1), PortGraph::port(region_first[j], 0)});

    SurgeryPresentation out;
    out.complexity = static_cast<int>(b.length());
    out.diagram = trace(pg, seeds);
    int m = closure_component_count(b);
    check(out.diagram, m + 1 + 2 * F.face_of_finger.size());
    for (const auto& c : out.diagram.components) out.framing.push_back(c.label[0] == 'R' ? Framing::zero : Framing::plain);
    return out;
}

} // namespace shadow

namespace shadow {

TableLinksCatalog catalog_table_links() {
    TableLinksCatalog c;
    c.rows = {
        {"FSL1", {"L10n32"}},
        {"FSL2", {"L10n36"}},
        {"FSL3", {"L6a4", "L9n25", "L11n287", "L11n378"}},
        {"FSL4", {"L10n84", "L10n87"}},
        {"FSL5", {"L8n5", "L9n26", "L10n70", "L11n376", "L11n385"}},
        {"FSL6", {"L8n7", "L10n97", "L10n105", "L10n108"}},
    };
    c.theorem_links = {"L6a4",   "L8n5",    "L8n7",    "L9n25",   "L9n26",   "L10n32",
                       "L10n36", "L10n70",  "L10n84",  "L10n87",  "L10n97",  "L10n105",
                       "L10n108", "L11n287", "L11n376", "L11n378", "L11n385"};
    c.family_match = {{"FSL3", "L1"}, {"FSL5", "J1"}, {"FSL6", "K1"}};
    c.complexity_two = {{"L11n387", "candidate, unverified"}, {"L11n388", "candidate, unverified"}};
    c.unresolved = {{"L10n59", "volume 2 v8, no match found numerically; not settled"}};
    return c;
}

WhiteheadRecord whitehead_distinct(int k) {
    if (k < 1) throw DomainError("k must be positive");
    WhiteheadRecord r;
    r.k = k;
    r.chain_components = 2 * k + 1;
    r.max_fsl_components = k + 4;
    r.distinct = r.chain_components > r.max_fsl_components;
    r.explanation = "a chain of volume " + std::to_string(2 * k) + " v8 has " + std::to_string(r.chain_components) +
                    " components, the shadow links at most " + std::to_string(r.max_fsl_components) +
                    (r.distinct ? "; counts differ" : "; counts do not separate them");
    return r;
}

} // namespace shadow
