#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

#include "oracle.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/harness.hpp"

using namespace rainbow;

TEST_CASE("coloring shape validation") {
    Graph c4 = generate_cycle(4);
    CHECK_NOTHROW(validate_coloring_shape(c4, {2, {1, 2, 1, 2}}));
    CHECK_THROWS_AS(validate_coloring_shape(c4, {2, {1, 2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_coloring_shape(c4, {2, {1, 2, 1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_coloring_shape(c4, {2, {0, 2, 1, 2}}), std::invalid_argument);
}

TEST_CASE("improper edge detection reports the first edge in order") {
    Graph c4 = generate_cycle(4);
    CHECK(!find_improper_edge(c4, {2, {1, 2, 1, 2}}).has_value());
    auto e = find_improper_edge(c4, {2, {1, 1, 1, 2}});
    REQUIRE(e.has_value());
    CHECK(*e == std::make_pair(0, 1));
    e = find_improper_edge(c4, {2, {1, 2, 2, 1}});
    REQUIRE(e.has_value());
    CHECK(*e == std::make_pair(0, 3));  // (0,3) precedes (1,2) in edge order
    CHECK(is_proper(c4, {2, {1, 2, 1, 2}}));
    CHECK(!is_proper(c4, {2, {1, 2, 1, 1}}));
    CHECK(!is_proper(c4, {2, {1, 2, 1}}));  // shape mismatch is just "not proper"
}

TEST_CASE("chromatic numbers of the standard examples") {
    auto chi = [](const Graph& g) { return chromatic_number(g).chi; };
    CHECK(chi(generate_complete(1)) == 1);
    CHECK(chi(generate_complete(2)) == 2);
    CHECK(chi(generate_path(4)) == 2);
    CHECK(chi(generate_cycle(4)) == 2);
    CHECK(chi(generate_cycle(5)) == 3);
    CHECK(chi(generate_cycle(7)) == 3);
    CHECK(chi(generate_complete(4)) == 4);
    CHECK(chi(generate_petersen()) == 3);
    CHECK(chi(generate_wheel(5)) == 4);  // odd rim
    CHECK(chi(generate_wheel(6)) == 3);  // even rim
    CHECK(chi(mycielski(generate_cycle(5))) == 4);
    CHECK(chi(mycielski(generate_complete(2))) == 3);
    CHECK(chi(Graph(0, {})) == 0);
    CHECK(chi(Graph(3, {})) == 1);
}

TEST_CASE("chromatic witness is a proper optimal coloring") {
    for (const Graph& g : {generate_cycle(5), generate_petersen(), generate_wheel(5),
                           mycielski(generate_cycle(5))}) {
        auto res = chromatic_number(g);
        CHECK(is_proper(g, res.witness));
        CHECK(res.witness.k == res.chi);
        CHECK(count_proper_colorings(g, res.chi - 1) == 0);
    }
}

TEST_CASE("coloring counts match the closed formulas") {
    CHECK(count_proper_colorings(generate_cycle(5), 3) == oracle::cycle_coloring_count(5, 3));
    CHECK(oracle::cycle_coloring_count(5, 3) == 30);
    CHECK(count_proper_colorings(generate_cycle(6), 2) == 2);
    CHECK(count_proper_colorings(generate_cycle(6), 3) == 66);
    CHECK(count_proper_colorings(generate_cycle(7), 3) == 126);
    CHECK(count_proper_colorings(generate_complete(4), 4) == 24);
    CHECK(count_proper_colorings(generate_complete(4), 3) == 0);
    CHECK(count_proper_colorings(generate_path(5), 3) == oracle::path_coloring_count(5, 3));
    CHECK(oracle::path_coloring_count(5, 3) == 48);
    for (int c = 2; c <= 4; ++c) {
        CHECK(count_proper_colorings(generate_cycle(6), c) == oracle::cycle_coloring_count(6, c));
        CHECK(count_proper_colorings(generate_complete(4), c) ==
              oracle::complete_coloring_count(4, c));
    }
    CHECK(count_proper_colorings(Graph(0, {}), 3) == 1);  // the empty coloring
    CHECK(count_proper_colorings(generate_complete(1), 0) == 0);
}

TEST_CASE("proper colorings enumerate in lexicographic order") {
    Graph c5 = generate_cycle(5);
    std::vector<std::vector<int>> seen;
    for_each_proper_coloring(c5, 3, [&](const KColoring& f) {
        CHECK(f.k == 3);
        CHECK(is_proper(c5, f));
        seen.push_back(f.colors);
        return seen.size() < 4;
    });
    REQUIRE(seen.size() == 4);
    CHECK(seen[0] == std::vector<int>{1, 2, 1, 2, 3});
    for (size_t i = 0; i + 1 < seen.size(); ++i) CHECK(seen[i] < seen[i + 1]);

    auto all = enumerate_proper_colorings(c5, 3);
    CHECK(all.size() == 30);
    CHECK(all.front().colors == seen.front());
}

TEST_CASE("circular chromatic numbers of the standard examples") {
    auto num = [](const Graph& g) {
        auto r = circular_chromatic_number(g);
        CHECK(is_valid_circular(g, r.witness));
        CHECK(r.witness.n == r.number.n);
        CHECK(r.witness.d == r.number.d);
        return std::make_pair(r.number.n, r.number.d);
    };
    CHECK(num(generate_cycle(5)) == std::make_pair(5, 2));
    CHECK(num(generate_cycle(7)) == std::make_pair(7, 3));
    CHECK(num(generate_cycle(9)) == std::make_pair(9, 4));
    CHECK(num(generate_complete(4)) == std::make_pair(4, 1));
    CHECK(num(generate_cycle(4)) == std::make_pair(2, 1));
    CHECK(num(generate_path(3)) == std::make_pair(2, 1));
    CHECK(num(generate_complete(1)) == std::make_pair(1, 1));
    CHECK(num(Graph(3, {})) == std::make_pair(1, 1));
    CHECK(num(generate_petersen()) == std::make_pair(3, 1));
    CHECK_THROWS_AS(circular_chromatic_number(Graph(0, {})), std::invalid_argument);
}

TEST_CASE("circular coloring feasibility search") {
    CHECK(!find_circular_coloring(generate_cycle(5), 7, 3).has_value());  // 7/3 < 5/2
    auto c = find_circular_coloring(generate_cycle(5), 5, 2);
    REQUIRE(c.has_value());
    CHECK(is_valid_circular(generate_cycle(5), *c));
    CHECK_THROWS_AS(find_circular_coloring(generate_cycle(5), 0, 1), std::invalid_argument);

    CHECK(is_valid_circular(generate_cycle(5), {5, 2, {1, 3, 5, 2, 4}}));
    CHECK(!is_valid_circular(generate_cycle(5), {5, 2, {1, 2, 5, 2, 4}}));
    CHECK(!is_valid_circular(generate_cycle(5), {5, 2, {1, 3, 5, 2}}));
}

TEST_CASE("circular chromatic number agrees with full enumeration") {
    for_each_connected_graph(5, [&](const Graph& g) {
        auto r = circular_chromatic_number(g);
        int chi = chromatic_number(g).chi;
        CHECK(oracle::circular_feasible(g, r.number.n, r.number.d));
        // nothing strictly better is feasible
        for (int n = 1; n <= g.vertex_count(); ++n)
            for (int d = 1; d <= n; ++d) {
                if (std::gcd(n, d) != 1) continue;
                if (n * r.number.d >= r.number.n * d) continue;       // not better
                if (n <= (chi - 1) * d) continue;                     // below chi-1
                CHECK(!oracle::circular_feasible(g, n, d));
            }
        return true;
    });
}

TEST_CASE("optimal colorings with full successor walks") {
    CHECK(find_theorem5_coloring(generate_cycle(5), 5, 2).values ==
          std::vector<int>{1, 3, 5, 2, 4});
    CHECK(find_theorem5_coloring(generate_complete(3), 3, 1).values ==
          std::vector<int>{1, 2, 3});
    CHECK(find_theorem5_coloring(generate_cycle(4), 2, 1).values ==
          std::vector<int>{1, 2, 1, 2});
    CHECK_THROWS_AS(find_theorem5_coloring(Graph(4, {{0, 1}, {2, 3}}), 2, 1), hypothesis_error);
    CHECK_THROWS_AS(find_theorem5_coloring(generate_cycle(4), 4, 2), std::invalid_argument);
}

TEST_CASE("greedy random coloring is deterministic per seed") {
    Graph pet = generate_petersen();
    std::mt19937_64 a(7), b(7), c(8);
    auto fa = random_greedy_coloring(pet, a);
    auto fb = random_greedy_coloring(pet, b);
    auto fc = random_greedy_coloring(pet, c);
    CHECK(fa.colors == fb.colors);
    CHECK(fa.k == fb.k);
    CHECK(is_proper(pet, fa));
    CHECK(is_proper(pet, fc));
    CHECK(fa.k >= 3);
}
