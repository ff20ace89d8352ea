#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

struct Rational {
    long long num = 0;
    long long den = 1;  // reduced, den > 0
};
Rational make_rational(long long num, long long den);

// Evidence trail of the class-by-class recoloring: the optimal circular
// coloring it starts from, the derived k-coloring, the classes V_1..V_n in
// order, and which subset of each class V_{k+1}..V_n was pushed to color k
// (empty entries mark steps where the residue test let the coloring stand).
struct Theorem1Trace {
    CircularColoring base_circular;
    KColoring initial_f;
    std::vector<std::vector<int>> color_classes;   // V_1..V_n
    std::vector<std::vector<int>> recolored_sets;  // X_{k+1}..X_n
    KColoring final_f;
};

struct Theorem1Result {
    KColoring coloring;
    Theorem1Trace trace;
    RainbowReport report;
};

// A chi-coloring under which every vertex lies on a full rainbow path.
// Requires a connected graph.
Theorem1Result theorem1(const Graph& g);

struct Theorem2Result {
    CircularColoring shifted_circular;
    KColoring coloring;
    std::vector<int> strong_set;  // begin full rainbow paths
    std::vector<int> weak_set;    // begin rainbow paths of order k-1
    Rational bound;               // k(n+d-kd)/n, the guaranteed strong fraction
    int shift = 0;                // rotation applied to the base circular coloring
    RainbowReport report;
    std::vector<std::optional<PathWitness>> weak_witnesses;  // order k-1, per vertex
};

// The quantitative begins-guarantee for graphs with chi_c strictly below chi.
// Errors out (hypothesis) when chi_c = chi.
Theorem2Result theorem2(const Graph& g);

struct Theorem3Options {
    std::int64_t budget_ms = 30000;  // wall clock; 0 fails immediately, negative = unlimited
    int k_ceiling = 10;
    int search_cap = 4000;  // distinct colorings explored by the shift-sequence search
};

struct Theorem3Result {
    KColoring coloring;
    RainbowReport report;
    int phase1_iterations = 0;
    std::string phase2_stage;  // phase1 | greedy | bfs | exhaustive
    std::vector<int> directed_cycle;  // in the final phase-1 successor digraph
};

// A chi-coloring under which every vertex begins a full rainbow path, for
// connected graphs containing a cycle of length chi >= 3.  The cycle may be
// supplied; otherwise it is searched.  phase 1 is the proof's local search on
// the cycle; phase 2 extends the property to all vertices by verified
// recoloring search (see the implementation notes).
Theorem3Result theorem3(const Graph& g, std::optional<PathWitness> cycle = std::nullopt,
                        const Theorem3Options& opts = {});

struct Theorem4Decomposition {
    std::vector<int> sources;  // in-degree 0
    std::vector<int> sinks;    // out-degree 0
    std::vector<int> middle;   // both degrees positive
    std::string case_tag;      // triangle | layered | recolored
};

struct Theorem4Result {
    KColoring coloring;
    PathWitness witness;  // directed path on 3 vertices, 3 distinct colors
    Theorem4Decomposition decomposition;
};

// For any orientation of a connected 3-chromatic graph: a 3-coloring whose
// orientation contains a directed rainbow path on 3 vertices.
Theorem4Result theorem4(const Orientation& d);

} // namespace rainbow
