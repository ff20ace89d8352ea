#include "rainbow/successor.hpp"

#include <algorithm>
#include <stdexcept>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

SuccessorDigraph build(const Graph& g, const std::vector<int>& color, int step, int modulus) {
    SuccessorDigraph dg;
    dg.step = step;
    dg.modulus = modulus;
    const int n = g.vertex_count();
    dg.out.assign(n, {});
    dg.in.assign(n, {});
    auto succ = [&](int a, int b) {  // b = a + step (mod modulus), values 1-based
        return (a - 1 + step) % modulus == (b - 1) % modulus;
    };
    for (auto [u, v] : g.edges()) {
        if (succ(color[u], color[v])) dg.arcs.emplace_back(u, v);
        if (succ(color[v], color[u])) dg.arcs.emplace_back(v, u);
    }
    std::sort(dg.arcs.begin(), dg.arcs.end());
    for (auto [u, v] : dg.arcs) {
        dg.out[u].push_back(v);
        dg.in[v].push_back(u);
    }
    return dg;
}

} // namespace

SuccessorDigraph build_successor_digraph(const Graph& g, const KColoring& f) {
    validate_coloring_shape(g, f);
    return build(g, f.colors, 1, f.k);
}

SuccessorDigraph build_successor_digraph(const Graph& g, const CircularColoring& c) {
    if (static_cast<int>(c.values.size()) != g.vertex_count())
        throw std::invalid_argument("coloring length does not match vertex count");
    return build(g, c.values, c.d, c.n);
}

AcyclicityCheck is_acyclic(const SuccessorDigraph& dg) {
    const int n = dg.vertex_count();
    // Iterative DFS; a back edge to a vertex still on the stack closes a cycle.
    std::vector<int> state(n, 0);  // 0 fresh, 1 on stack, 2 done
    std::vector<int> parent(n, -1);
    for (int s = 0; s < n; ++s) {
        if (state[s]) continue;
        std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
        state[s] = 1;
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            if (idx < dg.out[v].size()) {
                int w = dg.out[v][idx++];
                if (state[w] == 0) {
                    state[w] = 1;
                    parent[w] = v;
                    stack.emplace_back(w, 0);
                } else if (state[w] == 1) {
                    std::vector<int> cycle{v};
                    for (int x = v; x != w; x = parent[x]) cycle.push_back(parent[x]);
                    std::reverse(cycle.begin(), cycle.end());
                    return {false, std::move(cycle)};
                }
            } else {
                state[v] = 2;
                stack.pop_back();
            }
        }
    }
    return {true, {}};
}

namespace {

std::vector<int> reach(const std::vector<std::vector<int>>& adj, const std::vector<int>& start,
                       int n) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int v : start) {
        if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
        if (!seen[v]) {
            seen[v] = 1;
            stack.push_back(v);
        }
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

} // namespace

std::vector<int> forward_set(const SuccessorDigraph& dg, const std::vector<int>& sources) {
    return reach(dg.out, sources, dg.vertex_count());
}

std::vector<int> backward_set(const SuccessorDigraph& dg, const std::vector<int>& sinks) {
    return reach(dg.in, sinks, dg.vertex_count());
}

namespace {

KColoring shift(const Graph& g, const KColoring& f, const std::vector<int>& xs, int dir) {
    auto dg = build_successor_digraph(g, f);
    auto region = dir > 0 ? forward_set(dg, xs) : backward_set(dg, xs);
    KColoring out = f;
    for (int v : region) out.colors[v] = (out.colors[v] - 1 + f.k + dir) % f.k + 1;
    if (!is_proper(g, out))
        throw internal_error("recoloring along a reachable set broke properness");
    return out;
}

} // namespace

KColoring shift_up(const Graph& g, const KColoring& f, const std::vector<int>& xs) {
    return shift(g, f, xs, +1);
}

KColoring shift_down(const Graph& g, const KColoring& f, const std::vector<int>& xs) {
    return shift(g, f, xs, -1);
}

std::vector<int> walk_depth_ok(const SuccessorDigraph& dg, int depth) {
    if (depth < 1) throw std::invalid_argument("walk depth must be at least 1");
    const int n = dg.vertex_count();
    std::vector<char> ok(n, 1), next(n);
    for (int round = 1; round < depth; ++round) {
        bool any = false;
        for (int v = 0; v < n; ++v) {
            char r = 0;
            for (int w : dg.out[v])
                if (ok[w]) {
                    r = 1;
                    break;
                }
            next[v] = r;
            any = any || r;
        }
        ok.swap(next);
        if (!any) break;
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (ok[v]) out.push_back(v);
    return out;
}

} // namespace rainbow
