#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "shadow/braid.hpp"
#include "shadow/diagram.hpp"
#include "shadow/errors.hpp"
#include "shadow/port_graph.hpp"
#include "support.hpp"

#include <numeric>
#include <set>

using namespace shadow;

namespace {

BraidWord W(int n, std::vector<int> w) { return BraidWord(n, std::move(w)); }

// closure of b with an untouched strand in front, as a planar graph
PlanarGraph4V front_graph(const BraidWord& b) { return project_to_graph(closure_diagram(shift_up(b, 1))); }

int faces_off(const PlanarGraph4V& g, const std::string& loop) {
    int n = 0;
    for (int f = 0; f < static_cast<int>(g.faces.size()); ++f) n += !g.touches(f, loop);
    return n;
}

bool valid_tree_edge(const PlanarGraph4V& g, int i, const std::vector<char>& allowed) {
    const auto& e = g.edges[i];
    return e.v0 != e.v1 && e.in_box && allowed[e.v0] && allowed[e.v1] && g.edge_faces[i][0] != g.graph_outer &&
           g.edge_faces[i][1] != g.graph_outer;
}

bool spans(const PlanarGraph4V& g, const std::vector<int>& edges, const std::vector<char>& allowed) {
    int V = g.vertex_count();
    std::vector<int> parent(V);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int i : edges) {
        int a = find(g.edges[i].v0), b = find(g.edges[i].v1);
        if (a == b) return false;
        parent[a] = b;
    }
    int root = -1;
    for (int v = 0; v < V; ++v) {
        if (!allowed[v]) continue;
        if (root < 0) root = find(v);
        else if (find(v) != root) return false;
    }
    return true;
}

// oracle: does any subset of the admissible edges form a spanning tree?
bool some_tree_exists(const PlanarGraph4V& g, const std::vector<char>& allowed) {
    std::vector<int> cand;
    for (int i = 0; i < g.graph_edge_count(); ++i)
        if (valid_tree_edge(g, i, allowed)) cand.push_back(i);
    int need = static_cast<int>(std::count(allowed.begin(), allowed.end(), 1)) - 1;
    int m = static_cast<int>(cand.size());
    if (need == 0) return true;
    if (m > 20) return true;  // not exercised
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (__builtin_popcount(mask) != need) continue;
        std::vector<int> pick;
        for (int j = 0; j < m; ++j)
            if (mask >> j & 1) pick.push_back(cand[j]);
        if (spans(g, pick, allowed)) return true;
    }
    return false;
}

} // namespace

TEST_CASE("closure diagrams") {
    auto hopf = closure_diagram(W(2, {1, 1}));
    CHECK(hopf.crossing_count() == 2);
    CHECK(hopf.component_count() == 2);
    CHECK(validate(hopf).empty());

    auto l6a4 = closure_diagram(W(3, {1, -2, 1, -2, 1, -2}));
    CHECK(l6a4.crossing_count() == 6);
    CHECK(l6a4.component_count() == 3);
    for (int t = 0; t < 6; ++t) CHECK(l6a4.crossings[t].sign == (t % 2 ? -1 : 1));

    auto unlink = closure_diagram(W(2, {}));
    CHECK(unlink.crossing_count() == 0);
    CHECK(unlink.component_count() == 2);
    CHECK(unlink.loop_count() == 2);
    CHECK(validate(unlink).empty());
}

TEST_CASE("braided links") {
    auto d = braided_link(make_bk(1));
    CHECK(d.component_count() == 4);
    CHECK(d.crossing_count() == 4 + 6);
    CHECK(d.components.back().label == "axis");
    CHECK(d.find("axis")->arcs.size() == 6);
    CHECK(validate(d).empty());

    auto h = braided_link(W(1, {}));
    CHECK(h.component_count() == 2);
    CHECK(h.crossing_count() == 2);

    CHECK(braided_link(make_bk(2)).component_count() == 6);
    CHECK(braided_link_word(W(2, {1})) == W(3, {1, 2, 1, 1, 2}));
}

TEST_CASE("projection to planar graphs") {
    auto trefoil = project_to_graph(closure_diagram(W(2, {1, 1, 1})));
    CHECK(trefoil.vertex_count() == 3);
    CHECK(trefoil.edges.size() == 6);
    CHECK(trefoil.faces.size() == 5);

    auto g = front_graph(W(2, {1, -1, -1}));
    CHECK(g.vertex_count() == 3);
    CHECK(g.faces.size() == 6);
    CHECK(faces_off(g, "K1") == 4);
    CHECK(g.touches(g.outer_face, "K1"));
    CHECK(g.touches(g.graph_outer, "K1"));

    auto two = project_to_graph(closure_diagram(W(2, {1, 1})));
    CHECK(two.vertex_count() == 2);
    CHECK(two.faces.size() == 4);

    CHECK_THROWS_AS(project_to_graph(closure_diagram(W(3, {}))), EmptyDiagram);
}

TEST_CASE("face reports") {
    auto r = faces(front_graph(W(2, {1, -1, -1})));
    CHECK(r.r == 6);
    CHECK(r.v == 3);
    CHECK(r.euler_verify);

    CHECK(faces(project_to_graph(closure_diagram(W(2, {1, 1, 1})))).r == 5);

    auto one = faces(front_graph(W(2, {1})));
    CHECK(one.v == 1);
    CHECK(one.e == 3);
    CHECK(one.r == 4);
    CHECK(one.euler_verify);

    CHECK_THROWS_AS(faces(project_to_graph(closure_diagram(W(4, {1, 3})))), DisconnectedGraph);
}

TEST_CASE("maximal trees") {
    for (int k = 3; k <= 7; ++k) {
        CAPTURE(k);
        auto g = project_to_graph(closure_diagram(W(2, std::vector<int>(k, 1))));
        auto t = maximal_tree(g);
        REQUIRE(t.size() == static_cast<std::size_t>(k - 1));
        int inner = -1;
        for (int f = 0; f < static_cast<int>(g.faces.size()); ++f)
            if (f != g.graph_outer && g.faces[f].steps.size() == static_cast<std::size_t>(k)) inner = f;
        REQUIRE(inner >= 0);
        for (int i : t) CHECK((g.edge_faces[i][0] == inner || g.edge_faces[i][1] == inner));
        // consecutive: tree edges chain crossing t -> t+1
        for (int i : t) CHECK(g.edges[i].v1 == g.edges[i].v0 + 1);
    }
    CHECK(maximal_tree(project_to_graph(closure_diagram(W(2, {1})))).empty());

    auto g = front_graph(W(2, {1, -1, -1}));
    auto t = maximal_tree(g);
    CHECK(t.size() == 2);
    std::vector<char> all(g.vertex_count(), 1);
    CHECK(spans(g, t, all));
    for (int i : t) CHECK(valid_tree_edge(g, i, all));

    CHECK(maximal_tree(g, {0}).empty());
}

TEST_CASE("dual shortest paths") {
    auto g = front_graph(W(2, {1, -1, -1}));
    for (int f = 0; f < static_cast<int>(g.faces.size()); ++f) {
        auto n = g.neighbours(g.outer_face);
        if (std::find(n.begin(), n.end(), f) == n.end()) continue;
        CHECK(dual_shortest_path(g, f).edges.size() == 1);
    }
    for (int k = 3; k <= 6; ++k) {
        auto c = project_to_graph(closure_diagram(W(2, std::vector<int>(k, 1))));
        int inner = -1;
        for (int f = 0; f < static_cast<int>(c.faces.size()); ++f)
            if (f != c.graph_outer && c.faces[f].steps.size() == static_cast<std::size_t>(k)) inner = f;
        auto p = dual_shortest_path(c, inner);
        CHECK(p.edges.size() == 2);
        CHECK(p.faces.back() == c.outer_face);
    }
    auto p = dual_shortest_path(g, g.outer_face);
    CHECK(p.faces.size() == 1);
    CHECK(p.edges.empty());
}

TEST_CASE("PD text") {
    auto d = braided_link(make_bk(1));
    auto s = to_pd_text(d);
    auto e = parse_pd_text(s);
    CHECK(e.crossings == d.crossings);
    CHECK(e.components == d.components);
    CHECK(to_pd_text(e) == s);

    auto u = closure_diagram(W(3, {1, 1}));
    auto v = parse_pd_text(to_pd_text(u));
    CHECK(v.loop_count() == 1);
    CHECK(v.components == u.components);

    auto bare = parse_pd_text("X[1,3,2,4,+]\nX[3,1,4,2,+]\n");
    CHECK(bare.component_count() == 2);
    CHECK_THROWS_AS(parse_pd_text("X[1,2,3,4,+]"), ParseError);
    CHECK_THROWS_AS(parse_pd_text("X[1,2"), ParseError);
    CHECK_THROWS_AS(parse_pd_text("Q[1]"), ParseError);
}

TEST_CASE("component removal") {
    auto d = braided_link(make_bk(2));
    auto r = remove_components(d, {"axis"});
    CHECK(validate(r).empty());
    CHECK(pd_isomorphic(r, closure_diagram(make_bk(2))));
    CHECK_FALSE(pd_isomorphic(r, closure_diagram(make_bk(2).inverse())));
    auto only_axis = remove_components(d, {"K1", "K2", "K3", "K4", "K5"});
    CHECK(only_axis.crossing_count() == 0);
    CHECK(only_axis.component_count() == 1);
}

TEST_CASE("property: random closures are valid diagrams") {
    std::mt19937_64 rng(testing_support::seed());
    std::uniform_int_distribution<int> nd(1, 6), ld(0, 16);
    for (int trial = 0; trial < 300; ++trial) {
        auto b = testing_support::random_braid(rng, nd(rng), ld(rng));
        CAPTURE(to_string(b));
        auto d = closure_diagram(b);
        REQUIRE(validate(d) == "");
        CHECK(d.crossing_count() == static_cast<int>(b.length()));
        CHECK(d.component_count() == closure_component_count(b));
        auto bl = braided_link(b);
        REQUIRE(validate(bl) == "");
        CHECK(pd_isomorphic(remove_components(bl, {"axis"}), d));
        auto back = parse_pd_text(to_pd_text(bl));
        CHECK(back.crossings == bl.crossings);
    }
}

TEST_CASE("property: front strand gives k+3 faces, k+1 off the front strand") {
    std::mt19937_64 rng(testing_support::seed() + 7);
    std::uniform_int_distribution<int> nd(2, 6);
    for (int trial = 0; trial < 300; ++trial) {
        int n = nd(rng);
        auto b = testing_support::random_full_braid(rng, n, 16);
        CAPTURE(to_string(b));
        auto g = front_graph(b);
        int k = static_cast<int>(b.length());
        auto r = faces(g);
        CHECK(r.euler_verify);
        CHECK(r.r == k + 3);
        CHECK(faces_off(g, "K1") == k + 1);

        std::vector<char> all(g.vertex_count(), 1);
        bool exists = some_tree_exists(g, all);
        try {
            auto t = maximal_tree(g);
            CHECK(exists);
            CHECK(t.size() == static_cast<std::size_t>(k - 1));
            CHECK(spans(g, t, all));
            for (int i : t) CHECK(valid_tree_edge(g, i, all));
        } catch (const NoValidTree&) {
            CHECK_FALSE(exists);
        }
        for (int f = 0; f < static_cast<int>(g.faces.size()); ++f) {
            auto p = dual_shortest_path(g, f);
            CHECK(p.faces.back() == g.outer_face);
            for (std::size_t i = 0; i < p.edges.size(); ++i) {
                auto ef = g.edge_faces[p.edges[i]];
                std::set<int> s{ef[0], ef[1]};
                CHECK(s == std::set<int>{p.faces[i], p.faces[i + 1]});
            }
        }
    }
}
