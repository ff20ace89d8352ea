#pragma once

// Brute-force reference implementations used only by the tests.  Everything
// here favors obviousness over speed and shares no code with the library's
// subset-DP verifier, so agreement between the two is meaningful evidence.

#include <cstdint>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace oracle {

struct Verdicts {
    std::vector<char> begins;
    std::vector<char> lies_on;
};

// Enumerates every simple path whose colors are pairwise distinct by plain
// depth-first search; a path of order k marks its first vertex (begins) and
// all its vertices (lies_on).
Verdicts rainbow_verdicts(const rainbow::Graph& g, const rainbow::KColoring& f);

// Same enumeration, limited depth: which vertices start a rainbow path of
// exactly `order` vertices.
std::vector<char> begins_of_order(const rainbow::Graph& g, const rainbow::KColoring& f,
                                  int order);

// Does the orientation contain a directed path of k distinctly colored
// vertices?  Checked by enumerating directed simple paths.
bool directed_rainbow_exists(const rainbow::Orientation& o, const rainbow::KColoring& f);

// Number of proper colorings with at most `colors` colors for three closed
// formulas, used to cross-check the coloring enumerator.
long long cycle_coloring_count(int length, int colors);     // (c-1)^n + (-1)^n (c-1)
long long complete_coloring_count(int size, int colors);    // falling factorial
long long path_coloring_count(int length, int colors);      // c (c-1)^(n-1)

// Labeled connected graphs on exactly n vertices, by the subtraction
// recurrence over the smallest-labeled component.
long long connected_graph_count(int n);

// Is there an (n,d)-coloring at all?  Full value-vector enumeration; intended
// for graphs with at most ~7 vertices.
bool circular_feasible(const rainbow::Graph& g, int n, int d);

// Does g contain a cycle of exactly k vertices?  Tries every k-subset and
// every cyclic order of it.
bool cycle_exists(const rainbow::Graph& g, int k);

} // namespace oracle
