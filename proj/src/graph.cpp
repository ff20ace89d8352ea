#include "rainbow/graph.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>
#include <stdexcept>

#include "rainbow/errors.hpp"

namespace rainbow {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (auto& [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::adjacent(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges() == b.edges();
}

Orientation::Orientation(Graph base, std::vector<std::pair<int, int>> arcs)
    : base_(std::move(base)), arcs_(std::move(arcs)) {
    const int n = base_.vertex_count();
    for (auto [u, v] : arcs_) {
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw std::invalid_argument("arc endpoint out of range");
        if (!base_.adjacent(u, v))
            throw std::invalid_argument("arc does not correspond to an edge");
    }
    std::sort(arcs_.begin(), arcs_.end());
    if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end())
        throw std::invalid_argument("duplicate arc");
    if (static_cast<int>(arcs_.size()) != base_.edge_count())
        throw std::invalid_argument("orientation must cover every edge exactly once");
    // Edge coverage: m arcs, all distinct, all on edges; an edge oriented both
    // ways would leave another edge uncovered, so check for antiparallel pairs.
    for (auto [u, v] : arcs_)
        if (u > v && std::binary_search(arcs_.begin(), arcs_.end(), std::make_pair(v, u)))
            throw std::invalid_argument("edge oriented in both directions");
    out_.assign(n, {});
    in_.assign(n, {});
    for (auto [u, v] : arcs_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    for (auto& a : out_) std::sort(a.begin(), a.end());
    for (auto& a : in_) std::sort(a.begin(), a.end());
}

bool Orientation::has_arc(int u, int v) const {
    const int n = base_.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n) return false;
    const auto& a = out_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

// ---- file formats ----

namespace {

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

[[noreturn]] void fail_line(int lineno, const std::string& what) {
    throw parse_error("line " + std::to_string(lineno) + ": " + what);
}

} // namespace

Graph parse_dimacs(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line)) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) fail_line(lineno, "duplicate problem line");
            std::string kind;
            long long pn = -1, pm = -1;
            if (!(ls >> kind >> pn >> pm)) fail_line(lineno, "malformed problem line");
            if (kind != "edge" && kind != "edges" && kind != "col")
                fail_line(lineno, "unsupported problem type '" + kind + "'");
            if (pn < 0 || pm < 0) fail_line(lineno, "negative size in problem line");
            n = static_cast<int>(pn);
            have_header = true;
            continue;
        }
        if (tag == "e") {
            if (!have_header) fail_line(lineno, "edge before problem line");
            long long u = 0, v = 0;
            if (!(ls >> u >> v)) fail_line(lineno, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                fail_line(lineno, "vertex out of range");
            if (u == v) fail_line(lineno, "self-loop");
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }
        // Other line types (node markers etc.) are tolerated and skipped.
    }
    if (!have_header) throw parse_error("missing problem line");
    return Graph(n, std::move(edges));
}

Graph parse_dimacs_string(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

std::string write_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::vector<std::pair<int, int>> edges;
    int max_v = -1;
    long long declared_n = -1;
    bool saw_any = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (blank(line)) continue;
        saw_any = true;
        std::istringstream ls(line);
        if (ls.peek() == 'n') {
            char tag;
            ls >> tag;
            if (!(ls >> declared_n) || declared_n < 1)
                fail_line(lineno, "expected a positive vertex count after 'n'");
            std::string rest;
            if (ls >> rest) fail_line(lineno, "trailing text");
            continue;
        }
        long long u = 0, v = 0;
        if (!(ls >> u >> v)) fail_line(lineno, "expected two vertex indices");
        std::string rest;
        if (ls >> rest) fail_line(lineno, "trailing text");
        if (u < 0 || v < 0) fail_line(lineno, "negative vertex index");
        if (u == v) fail_line(lineno, "self-loop");
        max_v = std::max(max_v, static_cast<int>(std::max(u, v)));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (!saw_any) throw parse_error("empty graph file");
    if (declared_n >= 0 && declared_n <= max_v)
        throw parse_error("declared vertex count is too small for the listed edges");
    return Graph(declared_n >= 0 ? static_cast<int>(declared_n) : max_v + 1, std::move(edges));
}

Graph parse_edge_list_string(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Orientation parse_orientation(const Graph& g, std::istream& in) {
    std::string line;
    int lineno = 0;
    std::vector<std::pair<int, int>> arcs;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (blank(line)) continue;
        std::istringstream ls(line);
        long long u = 0, v = 0;
        if (!(ls >> u >> v)) fail_line(lineno, "expected tail and head");
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
            fail_line(lineno, "vertex out of range");
        arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    try {
        return Orientation(g, std::move(arcs));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

Orientation parse_orientation_string(const Graph& g, const std::string& text) {
    std::istringstream in(text);
    return parse_orientation(g, in);
}

// ---- generators ----

Graph generate_cycle(int k) {
    if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return Graph(k, std::move(e));
}

Graph generate_complete(int k) {
    if (k < 1) throw std::invalid_argument("complete graph needs at least 1 vertex");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
    return Graph(k, std::move(e));
}

Graph generate_path(int k) {
    if (k < 1) throw std::invalid_argument("path needs at least 1 vertex");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return Graph(k, std::move(e));
}

Graph generate_wheel(int k) {
    if (k < 4) throw std::invalid_argument("wheel rim needs at least 4 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) {
        e.emplace_back(i, (i + 1) % k);
        e.emplace_back(i, k);
    }
    return Graph(k + 1, std::move(e));
}

Graph generate_petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner 5-cycle with step 2
        e.emplace_back(i, 5 + i);                // spokes
    }
    return Graph(10, std::move(e));
}

Graph mycielski(const Graph& g) {
    const int n = g.vertex_count();
    // Vertices: 0..n-1 original, n..2n-1 shadow copies, 2n the apex.
    std::vector<std::pair<int, int>> e(g.edges());
    for (auto [u, v] : g.edges()) {
        e.emplace_back(u, n + v);
        e.emplace_back(v, n + u);
    }
    for (int i = 0; i < n; ++i) e.emplace_back(n + i, 2 * n);
    return Graph(2 * n + 1, std::move(e));
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability out of [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            // 53 uniform bits -> [0,1); avoids distribution objects, which are
            // free to differ between standard libraries.
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < p) e.emplace_back(i, j);
        }
    return Graph(n, std::move(e));
}

Graph generate(const GeneratorSpec& spec) {
    if (spec.family == "cycle") return generate_cycle(spec.k);
    if (spec.family == "complete") return generate_complete(spec.k);
    if (spec.family == "path") return generate_path(spec.k);
    if (spec.family == "wheel") return generate_wheel(spec.k);
    if (spec.family == "petersen") return generate_petersen();
    if (spec.family == "mycielski") {
        if (!spec.base) throw std::invalid_argument("mycielski needs a base spec");
        return mycielski(generate(*spec.base));
    }
    if (spec.family == "gnp") return random_gnp(spec.n, spec.p, spec.seed);
    throw std::invalid_argument("unknown graph family '" + spec.family + "'");
}

// ---- structure ----

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        std::vector<int> stack{s}, members;
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    return connected_components(g).size() == 1;
}

namespace {

// Depth-first extension of a partial cycle whose least vertex is fixed first;
// exploring neighbors in ascending order yields the lexicographically least
// witness overall.
bool extend_cycle(const Graph& g, int k, std::vector<int>& path, std::vector<char>& used) {
    int v = path.back();
    if (static_cast<int>(path.size()) == k)
        return g.adjacent(v, path.front());
    for (int w : g.neighbors(v)) {
        if (w <= path.front() || used[w]) continue;
        used[w] = 1;
        path.push_back(w);
        if (extend_cycle(g, k, path, used)) return true;
        path.pop_back();
        used[w] = 0;
    }
    return false;
}

} // namespace

std::optional<PathWitness> find_cycle_of_length(const Graph& g, int k) {
    if (k < 3) throw std::invalid_argument("cycle length must be at least 3");
    const int n = g.vertex_count();
    if (k > n) return std::nullopt;
    std::vector<char> used(n, 0);
    for (int s = 0; s < n; ++s) {
        std::vector<int> path{s};
        used[s] = 1;
        if (extend_cycle(g, k, path, used)) return PathWitness{path, false};
        used[s] = 0;
    }
    return std::nullopt;
}

// ---- witness validation ----

bool is_path_of(const Graph& g, const PathWitness& w) {
    const auto& p = w.vertices;
    if (p.empty()) return false;
    std::vector<int> sorted(p);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (sorted.front() < 0 || sorted.back() >= g.vertex_count()) return false;
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.adjacent(p[i], p[i + 1])) return false;
    return true;
}

bool is_directed_path_of(const Orientation& o, const PathWitness& w) {
    if (!is_path_of(o.base(), w)) return false;
    const auto& p = w.vertices;
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (!o.has_arc(p[i], p[i + 1])) return false;
    return true;
}

bool is_cycle_of(const Graph& g, const std::vector<int>& vertices) {
    if (vertices.size() < 3) return false;
    if (!is_path_of(g, PathWitness{vertices, false})) return false;
    return g.adjacent(vertices.back(), vertices.front());
}

} // namespace rainbow
