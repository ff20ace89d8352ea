#pragma once

#include <utility>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// Directed view of a colored graph: edge {u,v} becomes arc (u,v) exactly when
// color(v) = color(u) + step (mod modulus).  An edge can carry both arcs only
// when modulus == 2*step.
struct SuccessorDigraph {
    int step = 1;
    int modulus = 1;
    std::vector<std::pair<int, int>> arcs;  // lexicographic
    std::vector<std::vector<int>> out, in;  // sorted adjacency
    int vertex_count() const { return static_cast<int>(out.size()); }
};

// Step 1 modulo k.
SuccessorDigraph build_successor_digraph(const Graph& g, const KColoring& f);
// Step d modulo n.
SuccessorDigraph build_successor_digraph(const Graph& g, const CircularColoring& c);

struct AcyclicityCheck {
    bool acyclic = true;
    std::vector<int> cycle;  // a directed cycle (vertex sequence) when not acyclic
};
AcyclicityCheck is_acyclic(const SuccessorDigraph& dg);

// All vertices reachable from `sources` along arcs (including the sources),
// ascending.  backward_set follows arcs in reverse.
std::vector<int> forward_set(const SuccessorDigraph& dg, const std::vector<int>& sources);
std::vector<int> backward_set(const SuccessorDigraph& dg, const std::vector<int>& sinks);

// Recolors by +1 (wrapping k to 1) on the forward set of xs in the successor
// digraph of f, respectively -1 (wrapping 1 to k) on the backward set.  The
// result is always proper again; that is re-checked and a failure raises
// internal_error.
KColoring shift_up(const Graph& g, const KColoring& f, const std::vector<int>& xs);
KColoring shift_down(const Graph& g, const KColoring& f, const std::vector<int>& xs);

// Vertices that begin a directed walk visiting `depth` vertices (repeats
// allowed), ascending.  depth >= 1; every vertex begins a 1-vertex walk.
std::vector<int> walk_depth_ok(const SuccessorDigraph& dg, int depth);

} // namespace rainbow
