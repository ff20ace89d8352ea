#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/successor.hpp"

using namespace rainbow;

namespace {

const KColoring kC5Coloring{3, {1, 2, 3, 1, 2}};

}  // namespace

TEST_CASE("successor digraph of a proper coloring") {
    Graph c5 = generate_cycle(5);
    auto dg = build_successor_digraph(c5, kC5Coloring);
    CHECK(dg.step == 1);
    CHECK(dg.modulus == 3);
    CHECK(dg.arcs == std::vector<std::pair<int, int>>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(dg.out[0] == std::vector<int>{1, 4});
    CHECK(dg.in[4] == std::vector<int>{0, 3});
    CHECK(is_acyclic(dg).acyclic);
}

TEST_CASE("two colors orient every edge both ways") {
    Graph p2 = generate_path(2);
    auto dg = build_successor_digraph(p2, KColoring{2, {1, 2}});
    CHECK(dg.arcs == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
    auto chk = is_acyclic(dg);
    CHECK(!chk.acyclic);
    REQUIRE(chk.cycle.size() == 2);
    CHECK(std::is_permutation(chk.cycle.begin(), chk.cycle.end(), std::vector<int>{0, 1}.begin()));
}

TEST_CASE("circular successor digraph of the optimal five-cycle coloring") {
    Graph c5 = generate_cycle(5);
    CircularColoring c{5, 2, {1, 3, 5, 2, 4}};
    auto dg = build_successor_digraph(c5, c);
    CHECK(dg.step == 2);
    CHECK(dg.modulus == 5);
    CHECK(dg.arcs.size() == 5);
    auto chk = is_acyclic(dg);
    CHECK(!chk.acyclic);
    CHECK(chk.cycle.size() == 5);  // the whole graph is one directed cycle
    CHECK(walk_depth_ok(dg, 5) == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("reported directed cycles are genuine") {
    auto check_cycle = [](const SuccessorDigraph& dg, const std::vector<int>& cyc) {
        REQUIRE(!cyc.empty());
        for (size_t i = 0; i < cyc.size(); ++i) {
            int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            CHECK(std::binary_search(dg.out[u].begin(), dg.out[u].end(), v));
        }
    };
    Graph k4 = generate_complete(4);
    auto dg = build_successor_digraph(k4, KColoring{4, {1, 2, 3, 4}});
    // colors 1..4 chase each other around: 4+1 wraps to 1, closing a cycle
    CHECK(dg.arcs == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto chk = is_acyclic(dg);
    CHECK(!chk.acyclic);
    check_cycle(dg, chk.cycle);
}

TEST_CASE("forward and backward reachability") {
    Graph c5 = generate_cycle(5);
    auto dg = build_successor_digraph(c5, kC5Coloring);
    CHECK(forward_set(dg, {2}) == std::vector<int>{2, 3, 4});
    CHECK(backward_set(dg, {2}) == std::vector<int>{0, 1, 2});
    CHECK(forward_set(dg, {0}) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(backward_set(dg, {0}) == std::vector<int>{0});
    CHECK(forward_set(dg, {}) == std::vector<int>{});
    CHECK(forward_set(dg, {2, 0}) == std::vector<int>{0, 1, 2, 3, 4});
    // monotone and idempotent
    auto f2 = forward_set(dg, {2});
    CHECK(forward_set(dg, f2) == f2);
    // in an acyclic digraph forward and backward meet only at the source
    for (int v = 0; v < 5; ++v) {
        auto fwd = forward_set(dg, {v});
        auto bwd = backward_set(dg, {v});
        std::vector<int> both;
        std::set_intersection(fwd.begin(), fwd.end(), bwd.begin(), bwd.end(),
                              std::back_inserter(both));
        CHECK(both == std::vector<int>{v});
    }
}

TEST_CASE("shift up and shift down recolor reachable sets") {
    Graph c5 = generate_cycle(5);
    auto up = shift_up(c5, kC5Coloring, {2});
    CHECK(up.colors == std::vector<int>{1, 2, 1, 2, 3});  // forward set {2,3,4} moved +1
    CHECK(up.k == 3);
    auto down = shift_down(c5, kC5Coloring, {2});
    CHECK(down.colors == std::vector<int>{3, 1, 2, 1, 2});  // backward set {0,1,2} moved -1
    CHECK(is_proper(c5, up));
    CHECK(is_proper(c5, down));
}

TEST_CASE("shifts preserve properness on sampled colorings") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_gnp(7, 0.4, rng());
        auto f = random_greedy_coloring(g, rng);
        int x = static_cast<int>(rng() % g.vertex_count());
        auto up = shift_up(g, f, {x});
        auto down = shift_down(g, f, {x});
        CHECK(is_proper(g, up));
        CHECK(is_proper(g, down));
        // vertices outside the shifted set keep their colors
        auto dg = build_successor_digraph(g, f);
        auto fwd = forward_set(dg, {x});
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!std::binary_search(fwd.begin(), fwd.end(), v)) CHECK(up.colors[v] == f.colors[v]);
    }
}

TEST_CASE("walk depth classification") {
    Graph c5 = generate_cycle(5);
    auto dg = build_successor_digraph(c5, kC5Coloring);
    CHECK(walk_depth_ok(dg, 1) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(walk_depth_ok(dg, 3) == std::vector<int>{0, 1, 2});
    CHECK(walk_depth_ok(dg, 5) == std::vector<int>{0});
    CHECK(walk_depth_ok(dg, 6) == std::vector<int>{});
    CHECK_THROWS_AS(walk_depth_ok(dg, 0), std::invalid_argument);
}
