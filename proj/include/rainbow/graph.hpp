#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

// Simple undirected graph on vertices 0..n-1.  Immutable once built: edges are
// deduplicated and stored as (min,max) pairs in lexicographic order, adjacency
// lists are sorted ascending.  Self-loops are rejected.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// A walk witness: an ordered list of distinct vertices, each consecutive pair
// adjacent in the host graph (or joined by an arc when directed is set).
struct PathWitness {
    std::vector<int> vertices;
    bool directed = false;
};

// An orientation of a graph: every edge carries exactly one direction.
class Orientation {
public:
    Orientation() = default;
    // Throws std::invalid_argument unless arcs covers each base edge exactly once
    // and contains nothing else.
    Orientation(Graph base, std::vector<std::pair<int, int>> arcs);

    const Graph& base() const { return base_; }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
    bool has_arc(int u, int v) const;

private:
    Graph base_;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<std::vector<int>> out_, in_;
};

// ---- file formats ----

// DIMACS .col: "c" comments, one "p edge <n> <m>" header, "e <u> <v>" lines with
// 1-based endpoints.  Unknown line types are ignored, duplicate edges collapse,
// self-loops and out-of-range endpoints are parse errors naming the line.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs_string(const std::string& text);
// Canonical writer: header, then "e u v" with u < v (1-based) in lexicographic
// order.  parse(write(g)) == g.
std::string write_dimacs(const Graph& g);

// Plain edge list: one "u v" pair per line, 0-based, "#" starts a comment.
// An optional "n <count>" line pins the vertex count (required for graphs with
// trailing isolated vertices); otherwise it is max index + 1.  The writer
// always emits the "n" line, so parse(write(g)) == g.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_string(const std::string& text);
std::string write_edge_list(const Graph& g);

// Arc list for an orientation of g: one "tail head" pair per line, 0-based,
// "#" comments.  Must orient each edge of g exactly once.
Orientation parse_orientation(const Graph& g, std::istream& in);
Orientation parse_orientation_string(const Graph& g, const std::string& text);

// ---- generators ----

Graph generate_cycle(int k);     // C_k, k >= 3
Graph generate_complete(int k);  // K_k, k >= 1
Graph generate_path(int k);      // P_k on k vertices, k >= 1
Graph generate_wheel(int k);     // C_k plus a dominating hub, k >= 4
Graph generate_petersen();
Graph mycielski(const Graph& g);
// Each unordered pair becomes an edge with probability p, decided in
// lexicographic pair order from a seeded mt19937_64 stream.  Deterministic for
// a fixed (n, p, seed); independent of platform.
Graph random_gnp(int n, double p, std::uint64_t seed);

// Named-family dispatcher used by sweep configs.
struct GeneratorSpec {
    std::string family;  // cycle | complete | path | wheel | petersen | mycielski | gnp
    int k = 0;           // size parameter for cycle/complete/path/wheel
    int n = 0;           // vertex count for gnp
    double p = 0.0;      // edge probability for gnp
    std::uint64_t seed = 0;
    std::shared_ptr<GeneratorSpec> base;  // for mycielski
};
Graph generate(const GeneratorSpec& spec);

// ---- structure ----

// Components ordered by smallest contained vertex, vertices ascending inside.
std::vector<std::vector<int>> connected_components(const Graph& g);
// A graph must have at least one vertex to count as connected.
bool is_connected(const Graph& g);

// Lexicographically least cycle of exactly k distinct vertices, as the vertex
// sequence v_1..v_k with consecutive pairs and {v_k, v_1} adjacent; v_1 is the
// least vertex of the cycle.  k >= 3.  nullopt when no such cycle exists.
std::optional<PathWitness> find_cycle_of_length(const Graph& g, int k);

// ---- witness validation ----

bool is_path_of(const Graph& g, const PathWitness& w);
bool is_directed_path_of(const Orientation& o, const PathWitness& w);
bool is_cycle_of(const Graph& g, const std::vector<int>& vertices);

bool operator==(const Graph& a, const Graph& b);

} // namespace rainbow
