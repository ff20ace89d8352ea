#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

// Proper coloring with colors 1..k.
struct KColoring {
    int k = 0;
    std::vector<int> colors;  // colors[v] in [1, k]
};

// Circular (n,d)-coloring: values 1..n, adjacent values at circular distance
// >= d, i.e. d <= |c(u)-c(v)| <= n-d on every edge.
struct CircularColoring {
    int n = 0, d = 1;
    std::vector<int> values;  // values[v] in [1, n]
};

// A reduced fraction n/d representing a circular chromatic number.
struct CircularNumber {
    int n = 0, d = 1;
};

// Throws std::invalid_argument when the assignment does not fit the graph
// (wrong length, value outside [1,k]).
void validate_coloring_shape(const Graph& g, const KColoring& f);

// First edge (in lexicographic edge order) whose endpoints share a color.
std::optional<std::pair<int, int>> find_improper_edge(const Graph& g, const KColoring& f);
bool is_proper(const Graph& g, const KColoring& f);

bool is_valid_circular(const Graph& g, const CircularColoring& c);

struct ChromaticResult {
    int chi = 0;
    KColoring witness;
};
// Exact chromatic number by iterative deepening from a greedy clique bound.
ChromaticResult chromatic_number(const Graph& g);

// Feasibility search for an (n,d)-coloring; deterministic, first solution in
// the fixed search order.  nullopt when none exists.
std::optional<CircularColoring> find_circular_coloring(const Graph& g, int n, int d);

struct CircularResult {
    CircularNumber number;
    CircularColoring witness;
};
// Exact circular chromatic number of a connected graph: the least reduced n/d
// with chi-1 < n/d <= chi and n <= |V| that admits an (n,d)-coloring.
// Edgeless graphs give 1/1; bipartite graphs with an edge give 2/1.
CircularResult circular_chromatic_number(const Graph& g);

// An optimal (n,d)-coloring whose successor digraph lets every vertex begin a
// directed walk through n vertices (colors then sweep all n values).  Requires
// (n,d) to be the reduced circular chromatic number of connected g; such a
// coloring always exists, so exhausting the search means a bug upstream.
CircularColoring find_theorem5_coloring(const Graph& g, int n, int d);

// Enumerates proper colorings with colors from [1,k] in lexicographic order of
// the color vector.  fn returns false to stop early.  Vertices with no valid
// color prune as usual; the empty graph yields one empty coloring.
template <class F>
void for_each_proper_coloring(const Graph& g, int k, F&& fn);

std::vector<KColoring> enumerate_proper_colorings(const Graph& g, int k);
long long count_proper_colorings(const Graph& g, int k);

// Proper coloring sampled by first-fit greedy along a random vertex order;
// k is the largest color used.  Deterministic for a given rng state.
KColoring random_greedy_coloring(const Graph& g, std::mt19937_64& rng);

// ---- implementation ----

template <class F>
void for_each_proper_coloring(const Graph& g, int k, F&& fn) {
    const int n = g.vertex_count();
    if (k < 0) return;
    KColoring view{k, {}};
    if (n == 0) {
        fn(view);
        return;
    }
    // Iterative backtracking, vertex 0 outermost, so colorings appear in
    // lexicographic order of the color vector.
    std::vector<int> colors(n, 0);
    int v = 0;
    for (;;) {
        if (v == n) {
            view.colors = colors;
            if (!fn(view)) return;
            --v;
        }
        int c = colors[v] + 1;
        colors[v] = 0;
        for (; c <= k; ++c) {
            bool ok = true;
            for (int w : g.neighbors(v))
                if (w < v && colors[w] == c) {
                    ok = false;
                    break;
                }
            if (ok) break;
        }
        if (c <= k) {
            colors[v] = c;
            ++v;
        } else if (--v < 0) {
            return;
        }
    }
}

} // namespace rainbow
