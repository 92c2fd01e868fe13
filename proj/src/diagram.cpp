#include "shadow/diagram.hpp"
#include "shadow/errors.hpp"
#include "shadow/port_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace shadow {

namespace {

int over_in_slot(int sign) { return sign > 0 ? 3 : 1; }
bool is_in_slot(int slot, int sign) { return slot == 0 || slot == over_in_slot(sign); }

struct Occurrence {
    int crossing, slot;
};

// arc -> (tail occurrence, head occurrence)
std::vector<std::array<Occurrence, 2>> arc_ends(const LinkDiagram& d) {
    int A = d.arc_count();
    std::vector<std::array<Occurrence, 2>> ends(A + 1, {Occurrence{-1, -1}, Occurrence{-1, -1}});
    for (int c = 0; c < d.crossing_count(); ++c) {
        const auto& x = d.crossings[c];
        for (int s = 0; s < 4; ++s) {
            int a = x.arcs[s];
            if (a < 1 || a > A) throw std::invalid_argument("arc label out of range");
            int which = is_in_slot(s, x.sign) ? 1 : 0;
            if (ends[a][which].crossing != -1) throw std::invalid_argument("arc used twice in one direction");
            ends[a][which] = {c, s};
        }
    }
    for (int a = 1; a <= A; ++a)
        if (ends[a][0].crossing < 0 || ends[a][1].crossing < 0)
            throw std::invalid_argument("arc " + std::to_string(a) + " is not used exactly twice");
    return ends;
}

} // namespace

int LinkDiagram::loop_count() const {
    int n = 0;
    for (const auto& c : components)
        if (c.arcs.empty()) ++n;
    return n;
}

const Component* LinkDiagram::find(const std::string& label) const {
    for (const auto& c : components)
        if (c.label == label) return &c;
    return nullptr;
}

// ---------------------------------------------------------------- port graph

LinkDiagram trace(const PortGraph& g, const std::vector<Seed>& seeds, const std::string& extra_prefix,
                  std::vector<int>* under_in) {
    const int P = 4 * g.nodes();
    std::vector<char> entered(P, 0);
    std::vector<int> label(P, 0);
    LinkDiagram d;
    int next = 1;

    auto walk = [&](int start, const std::string& name) {
        Component comp{name, {}};
        int p = start;
        int guard = 0;
        do {
            if (p < 0 || p >= P) throw std::logic_error("open port while tracing " + name);
            if (entered[p]) throw std::logic_error("port entered twice while tracing " + name);
            entered[p] = 1;
            int e = (p & ~3) | ((p & 3) ^ 2);
            int q = g.link[e];
            if (q < 0) throw std::logic_error("open port while tracing " + name);
            label[e] = label[q] = next;
            comp.arcs.push_back(next++);
            p = q;
            if (++guard > P) throw std::logic_error("runaway trace");
        } while (p != start);
        d.components.push_back(std::move(comp));
    };

    for (const auto& s : seeds) {
        if (s.port < 0) d.components.push_back({s.label, {}});
        else if (!entered[s.port] && !entered[(s.port & ~3) | ((s.port & 3) ^ 2)])
            walk(s.port, s.label);  // otherwise already reached through an earlier seed
    }
    int extra = 0;
    for (int p = 0; p < P; ++p) {
        int mate = (p & ~3) | ((p & 3) ^ 2);
        if (!entered[p] && !entered[mate]) walk(p, extra_prefix + std::to_string(++extra));
    }

    d.crossings.resize(g.nodes());
    if (under_in) under_in->assign(g.nodes(), 0);
    for (int v = 0; v < g.nodes(); ++v) {
        int u = g.under[v];
        int uin = entered[4 * v + u] ? u : (u + 2) % 4;
        if (under_in) (*under_in)[v] = uin;
        int oin = entered[4 * v + (u + 1) % 4] ? (u + 1) % 4 : (u + 3) % 4;
        PDCrossing x;
        for (int j = 0; j < 4; ++j) x.arcs[j] = label[4 * v + (uin + j) % 4];
        x.sign = oin == (uin + 3) % 4 ? 1 : -1;
        d.crossings[v] = x;
    }
    return d;
}

PortGraph port_graph_of(const LinkDiagram& d) {
    PortGraph g;
    for (int c = 0; c < d.crossing_count(); ++c) g.add_node(0);
    auto ends = arc_ends(d);
    for (int a = 1; a <= d.arc_count(); ++a)
        g.connect(4 * ends[a][0].crossing + ends[a][0].slot, 4 * ends[a][1].crossing + ends[a][1].slot);
    return g;
}

int entry_port_of_arc(const LinkDiagram& d, int arc) {
    for (int c = 0; c < d.crossing_count(); ++c)
        for (int s = 0; s < 4; ++s)
            if (d.crossings[c].arcs[s] == arc && is_in_slot(s, d.crossings[c].sign)) return 4 * c + s;
    throw std::invalid_argument("arc " + std::to_string(arc) + " has no entry");
}

// ---------------------------------------------------------------- validation

std::string validate(const LinkDiagram& d) {
    std::vector<std::array<Occurrence, 2>> ends;
    try {
        ends = arc_ends(d);
    } catch (const std::exception& e) {
        return e.what();
    }
    const int A = d.arc_count();
    std::vector<int> owner(A + 1, -1);
    for (int i = 0; i < d.component_count(); ++i)
        for (int a : d.components[i].arcs) {
            if (a < 1 || a > A) return "component arc out of range";
            if (owner[a] != -1) return "arc in two components";
            owner[a] = i;
        }
    for (int a = 1; a <= A; ++a)
        if (owner[a] == -1) return "arc " + std::to_string(a) + " in no component";
    // consecutive arcs must pass straight through one crossing
    for (const auto& comp : d.components) {
        std::size_t m = comp.arcs.size();
        for (std::size_t i = 0; i < m; ++i) {
            int a = comp.arcs[i], b = comp.arcs[(i + 1) % m];
            auto head = ends[a][1];
            auto tail = ends[b][0];
            if (head.crossing != tail.crossing || (head.slot ^ 2) != tail.slot)
                return "component " + comp.label + " breaks between arcs " + std::to_string(a) + " and " +
                       std::to_string(b);
        }
    }
    if (d.crossing_count() == 0) return {};
    // Euler characteristic per connected piece of the crossing graph
    const int V = d.crossing_count();
    std::vector<int> piece(V, -1);
    int pieces = 0;
    for (int s = 0; s < V; ++s) {
        if (piece[s] != -1) continue;
        std::deque<int> q{s};
        piece[s] = pieces;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int j = 0; j < 4; ++j) {
                int a = d.crossings[v].arcs[j];
                for (auto o : ends[a])
                    if (piece[o.crossing] == -1) {
                        piece[o.crossing] = pieces;
                        q.push_back(o.crossing);
                    }
            }
        }
        ++pieces;
    }
    std::vector<int> fcount(pieces, 0), vcount(pieces, 0);
    for (int v = 0; v < V; ++v) ++vcount[piece[v]];
    std::vector<char> seen(4 * V, 0);
    for (int v = 0; v < V; ++v)
        for (int s = 0; s < 4; ++s) {
            if (seen[4 * v + s]) continue;
            ++fcount[piece[v]];
            int cv = v, cs = s;
            while (!seen[4 * cv + cs]) {
                seen[4 * cv + cs] = 1;
                int a = d.crossings[cv].arcs[(cs + 1) % 4];
                auto o0 = ends[a][0], o1 = ends[a][1];
                Occurrence here{cv, (cs + 1) % 4};
                auto there = (o0.crossing == here.crossing && o0.slot == here.slot) ? o1 : o0;
                cv = there.crossing;
                cs = there.slot;
            }
        }
    for (int p = 0; p < pieces; ++p)
        if (vcount[p] - 2 * vcount[p] + fcount[p] != 2)
            return "Euler check fails (V=" + std::to_string(vcount[p]) + ", F=" + std::to_string(fcount[p]) + ")";
    return {};
}

// ---------------------------------------------------------------- braid closures

namespace {

// slot layout of a braid letter, counter-clockwise starting at the incoming under end
//   positive: SE NE NW SW      negative: SW SE NE NW
struct LetterSlots {
    int sw, se, nw, ne, west, east;  // west/east = corner index
};
LetterSlots letter_slots(int e) {
    if (e > 0) return {3, 0, 2, 1, 2, 0};
    return {0, 1, 3, 2, 3, 1};
}

} // namespace

LinkDiagram closure_diagram(const BraidWord& b) {
    PortGraph g;
    const int n = b.strands;
    std::vector<int> open(n + 1, -1), first(n + 1, -1);
    for (int e : b.letters) {
        int i = std::abs(e);
        int v = g.add_node(0);
        auto ls = letter_slots(e);
        int bl = PortGraph::port(v, ls.sw), br = PortGraph::port(v, ls.se);
        if (open[i] < 0) first[i] = bl;
        else g.connect(open[i], bl);
        if (open[i + 1] < 0) first[i + 1] = br;
        else g.connect(open[i + 1], br);
        open[i] = PortGraph::port(v, ls.nw);
        open[i + 1] = PortGraph::port(v, ls.ne);
    }
    for (int q = 1; q <= n; ++q)
        if (open[q] >= 0) g.connect(open[q], first[q]);

    std::vector<Seed> seeds;
    auto cyc = permutation_of(b).cycles();
    for (std::size_t j = 0; j < cyc.size(); ++j) {
        int q = cyc[j][0];
        seeds.push_back({"K" + std::to_string(j + 1), first[q]});
    }
    LinkDiagram d = trace(g, seeds);
    d.braid = b;

    if (!b.letters.empty()) {
        Layout lay;
        int lo = n, hi = 0, lo_at = -1, hi_at = -1;
        for (int t = 0; t < static_cast<int>(b.length()); ++t) {
            int i = std::abs(b.letters[t]);
            if (i < lo) lo = i, lo_at = t;
            if (i > hi) hi = i, hi_at = t;
        }
        lay.outer = {lo_at, letter_slots(b.letters[lo_at]).west};
        for (std::size_t j = 0; j < cyc.size(); ++j) {
            if (first[cyc[j][0]] >= 0) continue;
            int q = cyc[j][0];
            Corner c = lay.outer;
            if (q > hi + 1) c = {hi_at, letter_slots(b.letters[hi_at]).east};
            else if (q > lo) {
                // between two blocks: east side of the nearest letter on the left
                for (int t = 0; t < static_cast<int>(b.length()); ++t)
                    if (std::abs(b.letters[t]) == q - 2) c = {t, letter_slots(b.letters[t]).east};
            }
            lay.loops["K" + std::to_string(j + 1)] = c;
        }
        d.layout = lay;
    }
    return d;
}

BraidWord braided_link_word(const BraidWord& b) {
    const int n = b.strands;
    std::vector<int> w = b.letters;
    for (int i = n; i >= 1; --i) w.push_back(i);
    for (int i = 1; i <= n; ++i) w.push_back(i);
    return BraidWord(n + 1, std::move(w));
}

LinkDiagram braided_link(const BraidWord& b) {
    LinkDiagram d = closure_diagram(braided_link_word(b));
    // the axis strand is a fixed point at the last position, so it is the last cycle
    d.components.back().label = "axis";
    return d;
}

// ---------------------------------------------------------------- component removal / comparison

LinkDiagram remove_components(const LinkDiagram& d, const std::vector<std::string>& labels) {
    std::set<std::string> drop(labels.begin(), labels.end());
    const int V = d.crossing_count();
    std::vector<char> gone(d.arc_count() + 1, 0);
    for (const auto& c : d.components)
        if (drop.count(c.label))
            for (int a : c.arcs) gone[a] = 1;

    PortGraph g = port_graph_of(d);
    std::vector<char> keep(V, 1);
    for (int v = 0; v < V; ++v) {
        const auto& x = d.crossings[v];
        bool under_gone = gone[x.arcs[0]], over_gone = gone[x.arcs[1]];
        if (!under_gone && !over_gone) continue;
        keep[v] = 0;
        if (under_gone && over_gone) continue;
        int s = under_gone ? 1 : 0;
        int a = g.link[4 * v + s], b = g.link[4 * v + (s ^ 2)];
        if (a == 4 * v + (s ^ 2)) continue;  // strand closes up through this crossing alone
        g.connect(a, b);
    }
    std::vector<int> renum(V, -1);
    PortGraph h;
    for (int v = 0; v < V; ++v)
        if (keep[v]) renum[v] = h.add_node(0);
    for (int v = 0; v < V; ++v) {
        if (!keep[v]) continue;
        for (int s = 0; s < 4; ++s) {
            int p = g.link[4 * v + s];
            h.link[4 * renum[v] + s] = 4 * renum[p / 4] + p % 4;
        }
    }
    std::vector<Seed> seeds;
    for (const auto& c : d.components) {
        if (drop.count(c.label)) continue;
        int port = -1;
        for (int a : c.arcs) {
            int e = entry_port_of_arc(d, a);
            if (keep[e / 4]) {
                port = 4 * renum[e / 4] + e % 4;
                break;
            }
        }
        seeds.push_back({c.label, port});
    }
    return trace(h, seeds);
}

bool pd_isomorphic(const LinkDiagram& a, const LinkDiagram& b) {
    if (a.crossing_count() != b.crossing_count() || a.loop_count() != b.loop_count()) return false;
    const int V = a.crossing_count();
    if (V == 0) return true;
    auto ea = arc_ends(a), eb = arc_ends(b);

    std::vector<int> cmap(V, -1), used(V, 0);
    std::vector<int> amap(a.arc_count() + 1, 0);

    // try to extend the current map from crossing ca -> cb; returns false on conflict
    auto extend = [&](int ca0, int cb0, std::vector<int>& cm, std::vector<int>& us, std::vector<int>& am) {
        std::deque<std::pair<int, int>> q{{ca0, cb0}};
        while (!q.empty()) {
            auto [ca, cb] = q.front();
            q.pop_front();
            if (cm[ca] == cb) continue;
            if (cm[ca] != -1 || us[cb]) return false;
            if (a.crossings[ca].sign != b.crossings[cb].sign) return false;
            cm[ca] = cb;
            us[cb] = 1;
            for (int s = 0; s < 4; ++s) {
                int x = a.crossings[ca].arcs[s], y = b.crossings[cb].arcs[s];
                if (am[x] != 0 && am[x] != y) return false;
                am[x] = y;
                for (int w = 0; w < 2; ++w) {
                    auto oa = ea[x][w], ob = eb[y][w];
                    if (oa.slot != ob.slot) return false;
                    q.push_back({oa.crossing, ob.crossing});
                }
            }
        }
        return true;
    };

    for (int s = 0; s < V; ++s) {
        if (cmap[s] != -1) continue;
        bool ok = false;
        for (int t = 0; t < V && !ok; ++t) {
            if (used[t]) continue;
            auto cm = cmap;
            auto us = used;
            auto am = amap;
            if (extend(s, t, cm, us, am)) {
                cmap = cm, used = us, amap = am;
                ok = true;
            }
        }
        if (!ok) return false;
    }
    return true;
}

// ---------------------------------------------------------------- text form

std::string to_pd_text(const LinkDiagram& d) {
    std::ostringstream os;
    for (const auto& x : d.crossings)
        os << "X[" << x.arcs[0] << ',' << x.arcs[1] << ',' << x.arcs[2] << ',' << x.arcs[3] << ','
           << (x.sign > 0 ? '+' : '-') << "]\n";
    for (std::size_t i = 0; i < d.components.size(); ++i)
        if (d.components[i].arcs.empty()) os << "U[" << i + 1 << "]\n";
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        os << "C[" << i + 1 << ',' << d.components[i].label;
        for (int a : d.components[i].arcs) os << ',' << a;
        os << "]\n";
    }
    return os.str();
}

LinkDiagram parse_pd_text(const std::string& text) {
    LinkDiagram d;
    std::vector<std::pair<int, Component>> comps;
    std::vector<int> loops;
    std::size_t i = 0;
    auto fail = [&](const std::string& m) -> void { throw ParseError(m, i); };
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto integer = [&] {
        std::size_t s = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (s == i) fail("expected integer");
        return std::stoi(text.substr(s, i - s));
    };
    auto expect = [&](char c) {
        if (i >= text.size() || text[i] != c) fail(std::string("expected '") + c + "'");
        ++i;
    };
    for (;;) {
        skip();
        if (i >= text.size()) break;
        char tag = text[i++];
        expect('[');
        if (tag == 'X') {
            PDCrossing x;
            for (int j = 0; j < 4; ++j) {
                x.arcs[j] = integer();
                expect(',');
            }
            if (i < text.size() && (text[i] == '+' || text[i] == '-')) x.sign = text[i++] == '+' ? 1 : -1;
            else fail("expected sign");
            expect(']');
            d.crossings.push_back(x);
        } else if (tag == 'U') {
            loops.push_back(integer());
            expect(']');
        } else if (tag == 'C') {
            int n = integer();
            expect(',');
            std::size_t s = i;
            while (i < text.size() && text[i] != ',' && text[i] != ']') ++i;
            Component c{text.substr(s, i - s), {}};
            while (i < text.size() && text[i] == ',') {
                ++i;
                c.arcs.push_back(integer());
            }
            expect(']');
            comps.push_back({n, std::move(c)});
        } else {
            --i;
            fail("unknown record");
        }
    }
    if (!comps.empty()) {
        std::sort(comps.begin(), comps.end(), [](auto& x, auto& y) { return x.first < y.first; });
        for (auto& [n, c] : comps) d.components.push_back(std::move(c));
    } else {
        int k = 0;
        std::vector<char> done(d.arc_count() + 1, 0);
        // follow arcs from the lowest unused one
        std::vector<std::array<Occurrence, 2>> ends;
        try {
            ends = arc_ends(d);
        } catch (const std::exception& e) {
            throw ParseError(std::string("invalid diagram: ") + e.what(), text.size());
        }
        for (int a = 1; a <= d.arc_count(); ++a) {
            if (done[a]) continue;
            Component c{"K" + std::to_string(++k), {}};
            int cur = a;
            do {
                done[cur] = 1;
                c.arcs.push_back(cur);
                auto h = ends[cur][1];
                cur = d.crossings[h.crossing].arcs[h.slot ^ 2];
            } while (cur != a);
            d.components.push_back(std::move(c));
        }
        for (std::size_t j = 0; j < loops.size(); ++j) d.components.push_back({"U" + std::to_string(j + 1), {}});
    }
    std::string bad = validate(d);
    if (!bad.empty()) throw ParseError("invalid diagram: " + bad, text.size());
    return d;
}

// ---------------------------------------------------------------- planar graph

int PlanarGraph4V::face_of(Corner c) const { return corner_face[c.first][c.second]; }

std::vector<int> PlanarGraph4V::neighbours(int face) const {
    std::set<int> out;
    for (const auto& ef : edge_faces) {
        if (ef[0] == face && ef[1] != face) out.insert(ef[1]);
        if (ef[1] == face && ef[0] != face) out.insert(ef[0]);
    }
    return {out.begin(), out.end()};
}

bool PlanarGraph4V::touches(int face, const std::string& loop) const {
    const auto& l = faces[face].loops;
    return std::find(l.begin(), l.end(), loop) != l.end();
}

PlanarGraph4V project_to_graph(const LinkDiagram& d) {
    if (d.crossing_count() == 0) throw EmptyDiagram("diagram has no crossings");
    const int V = d.crossing_count();
    auto ends = arc_ends(d);
    PlanarGraph4V g;
    for (const auto& x : d.crossings) g.sign.push_back(x.sign);
    g.edge_at.assign(V, {-1, -1, -1, -1});
    for (int a = 1; a <= d.arc_count(); ++a) {
        GraphEdge e;
        e.v0 = ends[a][0].crossing;
        e.s0 = ends[a][0].slot;
        e.v1 = ends[a][1].crossing;
        e.s1 = ends[a][1].slot;
        e.arc = a;
        if (d.braid) e.in_box = e.v1 > e.v0;
        g.edge_at[e.v0][e.s0] = a - 1;
        g.edge_at[e.v1][e.s1] = a - 1;
        g.edges.push_back(e);
    }
    g.edge_faces.assign(g.edges.size(), {-1, -1});

    // connectivity
    {
        std::vector<char> seen(V, 0);
        std::deque<int> q{0};
        seen[0] = 1;
        int count = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int s = 0; s < 4; ++s) {
                const auto& e = g.edges[g.edge_at[v][s]];
                int w = e.v0 == v ? e.v1 : e.v0;
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    q.push_back(w);
                }
            }
        }
        g.connected = count == V;
    }
    if (!g.connected) return g;

    // rotation-system faces
    g.corner_face.assign(V, {-1, -1, -1, -1});
    for (int v = 0; v < V; ++v)
        for (int s = 0; s < 4; ++s) {
            if (g.corner_face[v][s] != -1) continue;
            int f = static_cast<int>(g.faces.size());
            Face face;
            int cv = v, cs = s;
            while (g.corner_face[cv][cs] == -1) {
                g.corner_face[cv][cs] = f;
                face.corners.push_back({cv, cs});
                int out = (cs + 1) % 4;
                int ei = g.edge_at[cv][out];
                const auto& e = g.edges[ei];
                int dir;
                if (e.v0 == cv && e.s0 == out) dir = 0, cv = e.v1, cs = e.s1;
                else dir = 1, cv = e.v0, cs = e.s0;
                face.steps.push_back({ei, dir});
                g.edge_faces[ei][dir] = f;
            }
            g.faces.push_back(std::move(face));
        }

    // outer region
    Corner outer{0, 0};
    if (d.layout) outer = d.layout->outer;
    else {
        std::size_t best = 0;
        for (int f = 0; f < static_cast<int>(g.faces.size()); ++f)
            if (g.faces[f].steps.size() > best) best = g.faces[f].steps.size(), outer = g.faces[f].corners[0];
    }
    g.graph_outer = g.face_of(outer);
    g.outer_face = g.graph_outer;

    // crossingless loops: each splits the region holding it; nested loops go inside the previous one
    std::map<int, int> innermost;  // region -> current face on the far side of its last loop
    for (const auto& comp : d.components) {
        if (!comp.arcs.empty()) continue;
        Corner c = outer;
        if (d.layout) {
            auto it = d.layout->loops.find(comp.label);
            if (it != d.layout->loops.end()) c = it->second;
        }
        int region = g.face_of(c);
        int host = innermost.count(region) ? innermost[region] : region;
        int beyond = static_cast<int>(g.faces.size());
        Face fb;
        fb.loops.push_back(comp.label);
        g.faces.push_back(fb);
        g.faces[host].loops.push_back(comp.label);
        GraphEdge e;
        e.loop = comp.label;
        e.in_box = false;
        g.edges.push_back(e);
        g.edge_faces.push_back({host, beyond});
        innermost[region] = beyond;
        if (region == g.graph_outer) g.outer_face = beyond;
    }
    return g;
}

FaceReport faces(const PlanarGraph4V& g) {
    if (!g.connected) throw DisconnectedGraph("graph is not connected");
    FaceReport r;
    r.faces = g.faces;
    r.v = g.vertex_count();
    r.e = static_cast<int>(g.edges.size());
    r.r = static_cast<int>(g.faces.size());
    r.euler_verify = r.v - r.e + r.r == 2;
    return r;
}

std::vector<int> maximal_tree(const PlanarGraph4V& g, const std::vector<int>& restrict_to) {
    if (!g.connected) throw DisconnectedGraph("graph is not connected");
    std::vector<char> allowed(g.vertex_count(), restrict_to.empty() ? 1 : 0);
    for (int v : restrict_to) allowed.at(v) = 1;
    std::vector<int> cand;
    for (int i = 0; i < g.graph_edge_count(); ++i) {
        const auto& e = g.edges[i];
        if (e.v0 == e.v1 || !e.in_box) continue;
        if (!allowed[e.v0] || !allowed[e.v1]) continue;
        if (g.edge_faces[i][0] == g.graph_outer || g.edge_faces[i][1] == g.graph_outer) continue;
        cand.push_back(i);
    }
    std::vector<char> in(g.vertex_count(), 0);
    int need = 0, start = -1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (allowed[v]) {
            ++need;
            if (start < 0) start = v;
        }
    std::vector<int> tree;
    if (need == 0) return tree;
    in[start] = 1;
    int have = 1;
    while (have < need) {
        int pick = -1;
        for (int i : cand) {
            const auto& e = g.edges[i];
            if (in[e.v0] != in[e.v1]) {
                pick = i;
                break;
            }
        }
        if (pick < 0) throw NoValidTree("no tree satisfies the edge conditions");
        in[g.edges[pick].v0] = in[g.edges[pick].v1] = 1;
        tree.push_back(pick);
        ++have;
    }
    return tree;
}

DualPath dual_shortest_path(const PlanarGraph4V& g, int from_face) {
    if (!g.connected) throw DisconnectedGraph("graph is not connected");
    const int F = static_cast<int>(g.faces.size());
    std::vector<int> dist(F, -1);
    std::deque<int> q{g.outer_face};
    dist[g.outer_face] = 0;
    while (!q.empty()) {
        int f = q.front();
        q.pop_front();
        for (int h : g.neighbours(f))
            if (dist[h] < 0) {
                dist[h] = dist[f] + 1;
                q.push_back(h);
            }
    }
    DualPath p;
    int f = from_face;
    p.faces.push_back(f);
    while (f != g.outer_face) {
        int best_face = -1, best_edge = -1;
        for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
            const auto& ef = g.edge_faces[i];
            int other = ef[0] == f ? ef[1] : ef[1] == f ? ef[0] : -1;
            if (other < 0 || other == f || dist[other] != dist[f] - 1) continue;
            if (best_face < 0 || other < best_face) best_face = other, best_edge = i;
        }
        p.edges.push_back(best_edge);
        p.faces.push_back(best_face);
        f = best_face;
    }
    return p;
}

} // namespace shadow
