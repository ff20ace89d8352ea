#include "rainbow/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace rainbow {

bool RainbowReport::all_begins() const {
    return std::all_of(begins.begin(), begins.end(), [](bool b) { return b; });
}

bool RainbowReport::all_lies_on() const {
    return std::all_of(lies_on.begin(), lies_on.end(), [](bool b) { return b; });
}

namespace {

struct Tables {
    int n = 0, k = 0;
    std::uint32_t full = 0;
    std::vector<std::uint64_t> nbr;     // adjacency as vertex bitmasks
    std::vector<std::uint64_t> cclass;  // vertices per color, 0-based color index
    std::vector<std::uint64_t> D;       // D[S]: starters of rainbow paths with color set S
};

void check_limits(const Graph& g, const KColoring& f, int k_ceiling) {
    validate_coloring_shape(g, f);
    if (g.vertex_count() > 64)
        throw std::invalid_argument("rainbow verification supports at most 64 vertices");
    if (f.k > k_ceiling)
        throw std::invalid_argument("color count exceeds the verification ceiling");
    if (f.k > 25) throw std::invalid_argument("color count too large for subset tables");
}

// Fills D over all color subsets in increasing numeric order (every proper
// subset precedes its supersets).  adj decides which neighborhood extends a
// path: undirected neighbors, or out-neighbors for the directed variant.
Tables compute_tables(const std::vector<std::uint64_t>& adj, const std::vector<int>& colors,
                      int n, int k) {
    Tables t;
    t.n = n;
    t.k = k;
    t.full = (k >= 32) ? 0xffffffffu : ((1u << k) - 1);
    t.nbr = adj;
    t.cclass.assign(k, 0);
    for (int v = 0; v < n; ++v) t.cclass[colors[v] - 1] |= 1ULL << v;
    t.D.assign(std::size_t{1} << k, 0);
    for (std::uint32_t S = 1; S <= t.full; ++S) {
        std::uint64_t bits = 0;
        for (std::uint32_t rem = S; rem;) {
            int c = std::countr_zero(rem);
            rem &= rem - 1;
            std::uint32_t sub = S & ~(1u << c);
            if (!sub) {
                bits |= t.cclass[c];  // single-vertex paths
                continue;
            }
            std::uint64_t prev = t.D[sub];
            if (!prev) continue;
            for (std::uint64_t cand = t.cclass[c]; cand;) {
                int v = std::countr_zero(cand);
                cand &= cand - 1;
                if (t.nbr[v] & prev) bits |= 1ULL << v;
            }
        }
        t.D[S] = bits;
    }
    return t;
}

Tables compute_tables(const Graph& g, const KColoring& f) {
    const int n = g.vertex_count();
    std::vector<std::uint64_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1ULL << v;
        adj[v] |= 1ULL << u;
    }
    return compute_tables(adj, f.colors, n, f.k);
}

// Walks the table back out into an explicit path starting at v with color set
// S; always picks the least-numbered usable neighbor, so witnesses are stable.
PathWitness extract_path(const Tables& t, const std::vector<int>& colors, int v, std::uint32_t S,
                         bool directed) {
    PathWitness w;
    w.directed = directed;
    for (;;) {
        w.vertices.push_back(v);
        S &= ~(1u << (colors[v] - 1));
        if (!S) break;
        std::uint64_t next = t.nbr[v] & t.D[S];
        v = std::countr_zero(next);  // nonempty by construction of D
    }
    return w;
}

} // namespace

RainbowReport verify_rainbow(const Graph& g, const KColoring& f, const VerifyOptions& opts) {
    check_limits(g, f, opts.k_ceiling);
    const int n = g.vertex_count();
    auto t = compute_tables(g, f);
    RainbowReport rep;
    rep.k = f.k;
    rep.begins.assign(n, false);
    rep.lies_on.assign(n, false);
    if (opts.witnesses) {
        rep.begins_witness.assign(n, std::nullopt);
        rep.lies_on_witness.assign(n, std::nullopt);
    }
    std::vector<std::uint32_t> split(n, 0);  // chosen front set for a lies_on gluing
    const std::uint64_t starters = t.D[t.full];
    for (int v = 0; v < n; ++v) {
        if (starters >> v & 1) {
            rep.begins[v] = true;
            rep.lies_on[v] = true;
            continue;
        }
        std::uint32_t fbit = 1u << (f.colors[v] - 1);
        std::uint32_t rest = t.full & ~fbit;
        // Split the palette: v must start one path per side, the sides sharing
        // only v's color.  T runs over all subsets of the other colors.
        for (std::uint32_t T = rest;; T = (T - 1) & rest) {
            std::uint32_t S1 = T | fbit;
            std::uint32_t S2 = (t.full & ~S1) | fbit;
            if ((t.D[S1] >> v & 1) && (t.D[S2] >> v & 1)) {
                rep.lies_on[v] = true;
                split[v] = S1;
                break;
            }
            if (!T) break;
        }
    }
    if (opts.witnesses) {
        for (int v = 0; v < n; ++v) {
            if (rep.begins[v]) {
                rep.begins_witness[v] = extract_path(t, f.colors, v, t.full, false);
                rep.lies_on_witness[v] = rep.begins_witness[v];
            } else if (rep.lies_on[v]) {
                std::uint32_t S1 = split[v];
                std::uint32_t S2 = (t.full & ~S1) | (1u << (f.colors[v] - 1));
                auto front = extract_path(t, f.colors, v, S1, false);
                auto back = extract_path(t, f.colors, v, S2, false);
                PathWitness w;
                w.vertices.assign(front.vertices.rbegin(), front.vertices.rend());
                w.vertices.insert(w.vertices.end(), back.vertices.begin() + 1,
                                  back.vertices.end());
                rep.lies_on_witness[v] = std::move(w);
            }
        }
    }
    return rep;
}

std::vector<bool> begins_rainbow_of_order(const Graph& g, const KColoring& f, int order,
                                          int k_ceiling) {
    check_limits(g, f, k_ceiling);
    if (order < 1 || order > f.k) throw std::invalid_argument("path order outside [1,k]");
    auto t = compute_tables(g, f);
    std::uint64_t any = 0;
    for (std::uint32_t S = 1; S <= t.full; ++S)
        if (std::popcount(S) == order) any |= t.D[S];
    std::vector<bool> out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) out[v] = any >> v & 1;
    return out;
}

std::optional<PathWitness> rainbow_path_from(const Graph& g, const KColoring& f, int v, int order,
                                             int k_ceiling) {
    check_limits(g, f, k_ceiling);
    if (order < 1 || order > f.k) throw std::invalid_argument("path order outside [1,k]");
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    auto t = compute_tables(g, f);
    for (std::uint32_t S = 1; S <= t.full; ++S)
        if (std::popcount(S) == order && (t.D[S] >> v & 1))
            return extract_path(t, f.colors, v, S, false);
    return std::nullopt;
}

DirectedRainbowCheck verify_directed_rainbow(const Orientation& o, const KColoring& f,
                                             int k_ceiling) {
    const Graph& g = o.base();
    check_limits(g, f, k_ceiling);
    const int n = g.vertex_count();
    std::vector<std::uint64_t> adj(n, 0);
    for (auto [u, v] : o.arcs()) adj[u] |= 1ULL << v;
    auto t = compute_tables(adj, f.colors, n, f.k);
    std::uint64_t starters = t.D[t.full];
    if (!starters) return {false, std::nullopt};
    int v = std::countr_zero(starters);
    return {true, extract_path(t, f.colors, v, t.full, true)};
}

} // namespace rainbow
