#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// ---- corpus enumeration ----

// Visits every connected graph on 1..max_n labeled vertices, vertex counts
// ascending and edge sets in increasing bitmask order (pairs ranked
// lexicographically).  The callback returns false to stop early.
// Labeled counts per vertex count: 1, 1, 4, 38, 728, 26704, 1866256.
void for_each_connected_graph(int max_n, const std::function<bool(const Graph&)>& fn);
std::vector<Graph> enumerate_connected_graphs(int max_n);

// ---- sweep configuration and reporting ----

extern const std::vector<std::string> kSweepChecks;  // the six known check names

struct SweepConfig {
    int max_vertices = 5;                 // exhaustive corpus bound; 0 = families only
    std::vector<GeneratorSpec> families;  // extra corpus members, in order
    std::uint64_t seed = 1;
    std::int64_t budget_ms = 30000;       // per (graph, check) wall-clock budget
    std::set<std::string> checks{kSweepChecks.begin(), kSweepChecks.end()};
    bool counterexample_search = false;
};

struct SweepRecord {
    std::string graph;   // edge-list serialization; parse_edge_list_string replays it
    std::string check;
    std::string outcome;          // "pass" | "fail" | "skipped"
    std::string reason;           // empty for pass; "open: ..." marks undecided cases
    std::vector<int> coloring;    // offending coloring on fail, else empty
};

struct SweepCounters {
    int pass = 0, fail = 0, skipped = 0, open = 0;  // open counts within skipped
};

struct ColoringCensus {
    long long total = 0;
    long long begins_everywhere = 0;
    long long lies_on_everywhere = 0;
};

// Exhaustive verdict counts over all proper k-colorings of g.
ColoringCensus census_colorings(const Graph& g, int k);

// First proper k-coloring (lexicographic order) whose report has begins set
// for every vertex, if any.
std::optional<KColoring> find_begins_everywhere_coloring(const Graph& g, int k);

struct C7Report {
    ColoringCensus c7;  // 3-colorings of the 7-cycle: expect begins count 0
    ColoringCensus c5;  // 3-colorings of the 5-cycle: expect begins count >= 1
};

// The 7-cycle is the lone stated exception to the begins-everywhere
// conjecture; this confirms it by exhaustion and contrasts with the 5-cycle.
C7Report confirm_c7_exception();

struct CounterexampleResult {
    std::optional<std::string> graph;  // serialization of a refuting graph, if found
    std::vector<SweepRecord> records;  // one decision record per corpus graph
    bool complete = true;              // false when a budget cut the scan short
};

// Scans the corpus for a graph (other than the 7-cycle) whose chromatic
// number k admits no k-coloring with the begins property everywhere.  Graphs
// with k = 3, or k = 4 with a 4-cycle, would refute published results and are
// returned; other begins-free graphs are recorded "open".
CounterexampleResult search_counterexample(const SweepConfig& cfg);

struct SweepReport {
    std::vector<SweepRecord> records;
    SweepCounters counters;
    std::optional<C7Report> c7;
    std::optional<CounterexampleResult> counterexample;
};

// Runs every enabled check on every corpus graph.  A check passes only when
// the independent verifier confirms the construction's claim; graphs missing
// a hypothesis are skipped with a reason; a refuted claim is always a fail.
SweepReport run_sweep(const SweepConfig& cfg);

std::vector<Graph> build_corpus(const SweepConfig& cfg);

} // namespace rainbow
