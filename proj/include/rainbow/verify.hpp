#pragma once

#include <optional>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// Verdicts for a colored graph.  A rainbow path here always means a path on
// exactly k vertices showing all k colors, where k comes from the coloring.
// "begins" marks vertices that are the first vertex of such a path; "lies_on"
// marks vertices appearing anywhere on one.  Witness vectors are sized n only
// when witnesses were requested; entries are present exactly on true verdicts.
struct RainbowReport {
    int k = 0;
    std::vector<bool> begins, lies_on;
    std::vector<std::optional<PathWitness>> begins_witness, lies_on_witness;
    bool all_begins() const;
    bool all_lies_on() const;
};

struct VerifyOptions {
    int k_ceiling = 10;      // refuse colorings with more colors than this
    bool witnesses = true;   // reconstruct a witness path per true verdict
};

// Exact verdicts by dynamic programming over (vertex, color subset) pairs:
// D(v,S) holds when some rainbow path with color set S starts at v.  A vertex
// lies on a full rainbow path exactly when two color-disjoint partial paths
// (sharing only the vertex's own color) both start at it — gluing them end to
// end is a path because distinct colors force distinct vertices.
// Graphs over 64 vertices or colorings above the ceiling are rejected with
// std::invalid_argument.
RainbowReport verify_rainbow(const Graph& g, const KColoring& f, const VerifyOptions& opts = {});

// Vertices beginning a rainbow path on `order` vertices (order <= k, colors
// all distinct but not necessarily all of [k]).
std::vector<bool> begins_rainbow_of_order(const Graph& g, const KColoring& f, int order,
                                          int k_ceiling = 10);

// A rainbow path on `order` vertices starting at v, if one exists.
std::optional<PathWitness> rainbow_path_from(const Graph& g, const KColoring& f, int v, int order,
                                             int k_ceiling = 10);

struct DirectedRainbowCheck {
    bool found = false;
    std::optional<PathWitness> witness;
};

// Does any directed path on k vertices with k distinct colors exist?  Arcs
// are followed head-first, so the witness starts at the path's first vertex.
DirectedRainbowCheck verify_directed_rainbow(const Orientation& o, const KColoring& f,
                                             int k_ceiling = 10);

} // namespace rainbow
