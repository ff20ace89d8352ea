#include "rainbow/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rainbow/errors.hpp"
#include "rainbow/rng.hpp"
#include "rainbow/successor.hpp"

namespace rainbow {

void validate_coloring_shape(const Graph& g, const KColoring& f) {
    if (static_cast<int>(f.colors.size()) != g.vertex_count())
        throw std::invalid_argument("coloring length does not match vertex count");
    for (int c : f.colors)
        if (c < 1 || c > f.k) throw std::invalid_argument("color value outside [1,k]");
}

std::optional<std::pair<int, int>> find_improper_edge(const Graph& g, const KColoring& f) {
    for (auto [u, v] : g.edges())
        if (f.colors[u] == f.colors[v]) return std::make_pair(u, v);
    return std::nullopt;
}

bool is_proper(const Graph& g, const KColoring& f) {
    if (static_cast<int>(f.colors.size()) != g.vertex_count()) return false;
    for (int c : f.colors)
        if (c < 1 || c > f.k) return false;
    return !find_improper_edge(g, f).has_value();
}

bool is_valid_circular(const Graph& g, const CircularColoring& c) {
    if (c.n < 1 || c.d < 1) return false;
    if (static_cast<int>(c.values.size()) != g.vertex_count()) return false;
    for (int x : c.values)
        if (x < 1 || x > c.n) return false;
    for (auto [u, v] : g.edges()) {
        int diff = std::abs(c.values[u] - c.values[v]);
        if (diff < c.d || diff > c.n - c.d) return false;
    }
    return true;
}

namespace {

// Vertices sorted by decreasing degree, index ascending on ties.  Both exact
// searches below branch in this order so high-degree vertices prune early.
std::vector<int> degree_order(const Graph& g) {
    std::vector<int> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

// Greedy clique along the degree order; a cheap lower bound for chi.
int greedy_clique_bound(const Graph& g, const std::vector<int>& order) {
    std::vector<int> clique;
    for (int v : order) {
        bool all = true;
        for (int u : clique)
            if (!g.adjacent(u, v)) {
                all = false;
                break;
            }
        if (all) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

bool try_k_coloring(const Graph& g, const std::vector<int>& order, int k,
                    std::vector<int>& colors, int pos, int used) {
    if (pos == static_cast<int>(order.size())) return true;
    int v = order[pos];
    // Colors above used+1 are interchangeable with used+1; skipping them
    // breaks the color-permutation symmetry.
    int cap = std::min(k, used + 1);
    for (int c = 1; c <= cap; ++c) {
        bool ok = true;
        for (int w : g.neighbors(v))
            if (colors[w] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        colors[v] = c;
        if (try_k_coloring(g, order, k, colors, pos + 1, std::max(used, c))) return true;
        colors[v] = 0;
    }
    return false;
}

} // namespace

ChromaticResult chromatic_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return {0, {0, {}}};
    if (g.edge_count() == 0) return {1, {1, std::vector<int>(n, 1)}};
    auto order = degree_order(g);
    int lb = std::max(2, greedy_clique_bound(g, order));
    for (int k = lb;; ++k) {
        std::vector<int> colors(n, 0);
        if (try_k_coloring(g, order, k, colors, 0, 0))
            return {k, {k, std::move(colors)}};
    }
}

namespace {

// Variable order for the circular searches: breadth-first layers from the
// highest-degree vertex of each component, so all but the first vertex of a
// component see an already-assigned neighbor.
std::vector<int> bfs_order(const Graph& g) {
    const int n = g.vertex_count();
    auto deg_rank = degree_order(g);
    std::vector<char> seen(n, 0);
    std::vector<int> order;
    order.reserve(n);
    for (int s : deg_rank) {
        if (seen[s]) continue;
        seen[s] = 1;
        std::size_t head = order.size();
        order.push_back(s);
        while (head < order.size()) {
            int v = order[head++];
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
        }
    }
    return order;
}

bool circular_ok(int a, int b, int n, int d) {
    int diff = std::abs(a - b);
    return diff >= d && diff <= n - d;
}

// Backtracking over (n,d)-values in bfs order.  The first vertex is pinned to
// value 1: rotating all values by a constant preserves both validity and the
// successor digraph, so every solution class has a representative with value 1
// on that vertex.  `accept` sees each complete assignment and may reject it to
// continue the enumeration (used by the walk-property search).
template <class Accept>
bool search_circular(const Graph& g, int n, int d, std::vector<int>& values, Accept&& accept) {
    const int nv = g.vertex_count();
    auto order = bfs_order(g);
    std::vector<int> pos_of(nv);
    for (int i = 0; i < nv; ++i) pos_of[order[i]] = i;
    std::vector<int> val(nv, 0);

    auto feasible = [&](int v, int x) {
        for (int w : g.neighbors(v))
            if (val[w] != 0 && !circular_ok(x, val[w], n, d)) return false;
        return true;
    };

    int pos = 0;
    std::vector<int> choice(nv, 0);
    while (pos >= 0) {
        if (pos == nv) {
            values = val;
            if (accept(values)) return true;
            --pos;
            val[order[pos]] = 0;
            continue;
        }
        int v = order[pos];
        int limit = (pos == 0) ? 1 : n;
        int x = ++choice[pos];
        for (; x <= limit; ++x)
            if (feasible(v, x)) break;
        if (x <= limit) {
            choice[pos] = x;
            val[v] = x;
            ++pos;
            if (pos < nv) choice[pos] = 0;
        } else {
            choice[pos] = 0;
            --pos;
            if (pos >= 0) val[order[pos]] = 0;
        }
    }
    return false;
}

} // namespace

std::optional<CircularColoring> find_circular_coloring(const Graph& g, int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("n and d must be positive");
    std::vector<int> values;
    if (search_circular(g, n, d, values, [](const std::vector<int>&) { return true; }))
        return CircularColoring{n, d, std::move(values)};
    return std::nullopt;
}

CircularResult circular_chromatic_number(const Graph& g) {
    const int nv = g.vertex_count();
    if (nv == 0) throw std::invalid_argument("circular chromatic number needs a vertex");
    int chi = chromatic_number(g).chi;
    if (chi <= 1) return {{1, 1}, {1, 1, std::vector<int>(nv, 1)}};
    // Candidate fractions n/d with chi-1 < n/d <= chi and n <= |V|, reduced,
    // in increasing value; the minimum is always attained among these.
    std::vector<std::pair<int, int>> cands;
    for (int n = 2; n <= nv; ++n)
        for (int d = 1; d * (chi - 1) < n; ++d) {
            if (n > d * chi) continue;  // n/d > chi
            if (std::gcd(n, d) != 1) continue;
            cands.emplace_back(n, d);
        }
    std::sort(cands.begin(), cands.end(), [](auto a, auto b) {
        return static_cast<long long>(a.first) * b.second <
               static_cast<long long>(b.first) * a.second;
    });
    for (auto [n, d] : cands)
        if (auto c = find_circular_coloring(g, n, d))
            return {{n, d}, std::move(*c)};
    throw internal_error("no circular coloring found although chi/1 is always feasible");
}

CircularColoring find_theorem5_coloring(const Graph& g, int n, int d) {
    if (!is_connected(g)) throw hypothesis_error("graph must be connected");
    if (n < 1 || d < 1 || std::gcd(n, d) != 1)
        throw std::invalid_argument("n/d must be a positive reduced fraction");
    const int nv = g.vertex_count();
    std::vector<int> values;
    bool found = search_circular(g, n, d, values, [&](const std::vector<int>& val) {
        CircularColoring c{n, d, val};
        auto dg = build_successor_digraph(g, c);
        // Every vertex must start a directed walk through n vertices; the set
        // that still can only shrinks round by round, so bail out early.
        std::vector<char> ok(nv, 1), next(nv);
        for (int round = 1; round < n; ++round) {
            bool all = true;
            for (int v = 0; v < nv; ++v) {
                char r = 0;
                for (int w : dg.out[v])
                    if (ok[w]) {
                        r = 1;
                        break;
                    }
                next[v] = r;
                all = all && r;
            }
            ok.swap(next);
            if (!all) return false;
        }
        return true;
    });
    if (!found)
        throw internal_error("optimal circular coloring with the walk property not found");
    return CircularColoring{n, d, std::move(values)};
}

std::vector<KColoring> enumerate_proper_colorings(const Graph& g, int k) {
    std::vector<KColoring> out;
    for_each_proper_coloring(g, k, [&](const KColoring& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

long long count_proper_colorings(const Graph& g, int k) {
    long long c = 0;
    for_each_proper_coloring(g, k, [&](const KColoring&) {
        ++c;
        return true;
    });
    return c;
}

KColoring random_greedy_coloring(const Graph& g, std::mt19937_64& rng) {
    const int n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    deterministic_shuffle(order, rng);
    std::vector<int> colors(n, 0);
    int k = 0;
    for (int v : order) {
        std::uint64_t taken = 0;  // n <= 64 in every sampling context
        for (int w : g.neighbors(v))
            if (colors[w] > 0 && colors[w] <= 64) taken |= 1ULL << (colors[w] - 1);
        int c = 1;
        while (taken & (1ULL << (c - 1))) ++c;
        colors[v] = c;
        k = std::max(k, c);
    }
    if (n == 0) k = 0;
    return {std::max(k, 1), std::move(colors)};
}

} // namespace rainbow
