#include "rainbow/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <stdexcept>

#include "rainbow/errors.hpp"
#include "rainbow/successor.hpp"

namespace rainbow {

Rational make_rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

namespace {

void require_connected(const Graph& g) {
    if (!is_connected(g)) throw hypothesis_error("graph must be connected and nonempty");
}

// Residue test from the recoloring argument: values whose residue mod d lies
// in [1, n mod d] mark the classes whose vertices already sit on full rainbow
// paths under the current coloring.
bool residue_in_window(int value, int n, int d) {
    int r = value % d;
    return r >= 1 && r <= n % d;
}

} // namespace

// ---- theorem 1 ----

Theorem1Result theorem1(const Graph& g) {
    require_connected(g);
    const int nv = g.vertex_count();
    auto chrom = chromatic_number(g);
    const int k = chrom.chi;
    auto circ = circular_chromatic_number(g);
    const int n = circ.number.n, d = circ.number.d;
    if ((n + d - 1) / d != k)
        throw internal_error("circular chromatic number outside (chi-1, chi]");

    auto c = find_theorem5_coloring(g, n, d);

    Theorem1Trace trace;
    trace.base_circular = c;
    trace.color_classes.assign(n, {});
    for (int i = 1; i <= n; ++i) {
        int value = ((i - 1) * d) % n + 1;
        for (int v = 0; v < nv; ++v)
            if (c.values[v] == value) trace.color_classes[i - 1].push_back(v);
    }

    KColoring f{k, std::vector<int>(nv)};
    for (int v = 0; v < nv; ++v) f.colors[v] = (c.values[v] + d - 1) / d;
    if (!is_proper(g, f)) throw internal_error("derived k-coloring is not proper");
    trace.initial_f = f;

    if (d >= 2) {
        // Classes V_1..V_k stand as-is; walk the remaining classes in order,
        // recoloring to k the vertices of V_{i+1} still missing a full rainbow
        // path whenever the residue test fails.
        for (int i = k; i <= n - 1; ++i) {
            int value_next = (i * d) % n + 1;  // the c-value of class V_{i+1}
            if (residue_in_window(value_next, n, d)) {
                trace.recolored_sets.emplace_back();
                continue;
            }
            auto rep = verify_rainbow(g, f, {10, false});
            std::vector<int> x;
            for (int u : trace.color_classes[i])  // V_{i+1}
                if (!rep.lies_on[u]) x.push_back(u);
            for (int u : x) {
                if (f.colors[u] == k)
                    throw internal_error("recoloring candidate already carries color k");
                f.colors[u] = k;
            }
            if (!is_proper(g, f)) throw internal_error("recoloring step broke properness");
            trace.recolored_sets.push_back(std::move(x));
        }
    }
    trace.final_f = f;

    Theorem1Result res;
    res.coloring = f;
    res.trace = std::move(trace);
    res.report = verify_rainbow(g, f);
    if (!res.report.all_lies_on())
        throw internal_error("some vertex missing from every full rainbow path");
    if (d == 1 && !res.report.all_begins())
        throw internal_error("integral case must let every vertex begin a rainbow path");
    return res;
}

// ---- theorem 2 ----

Theorem2Result theorem2(const Graph& g) {
    require_connected(g);
    const int nv = g.vertex_count();
    auto chrom = chromatic_number(g);
    const int k = chrom.chi;
    auto circ = circular_chromatic_number(g);
    const int n = circ.number.n, d = circ.number.d;
    if (d == 1)
        throw hypothesis_error("chi_c equals chi: the strict-fraction bound does not apply");

    auto c = find_theorem5_coloring(g, n, d);

    // Rotating all values by s keeps both the coloring constraints and the
    // walk property (the defining congruence is shift-invariant); pick the
    // rotation putting the most vertices into the favourable residue window.
    auto shifted_value = [&](int value, int s) { return (value - 1 + s) % n + 1; };
    int best_s = 0, best_count = -1;
    for (int s = 0; s < n; ++s) {
        int count = 0;
        for (int v = 0; v < nv; ++v)
            if (residue_in_window(shifted_value(c.values[v], s), n, d)) ++count;
        if (count > best_count) {
            best_count = count;
            best_s = s;
        }
    }
    const long long size_i = static_cast<long long>(k) * (n % d);  // |I| = k(n mod d)
    if (static_cast<long long>(best_count) * n < size_i * nv)
        throw internal_error("no rotation reaches the average residue count");

    Theorem2Result res;
    res.shift = best_s;
    res.shifted_circular = c;
    for (int& value : res.shifted_circular.values) value = shifted_value(value, best_s);
    if (!is_valid_circular(g, res.shifted_circular))
        throw internal_error("rotated circular coloring lost validity");

    res.coloring = {k, std::vector<int>(nv)};
    for (int v = 0; v < nv; ++v)
        res.coloring.colors[v] = (res.shifted_circular.values[v] + d - 1) / d;
    if (!is_proper(g, res.coloring)) throw internal_error("derived k-coloring is not proper");

    for (int v = 0; v < nv; ++v) {
        if (residue_in_window(res.shifted_circular.values[v], n, d))
            res.strong_set.push_back(v);
        else
            res.weak_set.push_back(v);
    }
    // n + d - kd = n mod d, so the guarantee is |strong| >= k(n mod d)/n * |V|.
    res.bound = make_rational(size_i, n);
    if (static_cast<long long>(res.strong_set.size()) * n < size_i * nv)
        throw internal_error("strong set smaller than the guaranteed bound");

    res.report = verify_rainbow(g, res.coloring);
    for (int u : res.strong_set)
        if (!res.report.begins[u])
            throw internal_error("strong vertex does not begin a full rainbow path");
    auto order_ok = begins_rainbow_of_order(g, res.coloring, k - 1);
    res.weak_witnesses.assign(nv, std::nullopt);
    for (int v : res.weak_set) {
        if (!order_ok[v])
            throw internal_error("weak vertex does not begin a rainbow path of order k-1");
        res.weak_witnesses[v] = rainbow_path_from(g, res.coloring, v, k - 1);
    }
    return res;
}

// ---- theorem 3 ----

namespace {

struct Window {
    int start = 0;  // index into the cycle sequence
    int dir = +1;   // +1 forward, -1 backward
    int len = 0;
};

// Longest run of consecutive cycle vertices with pairwise distinct colors,
// scanned deterministically (starts ascending, forward before backward).
Window longest_window(const std::vector<int>& cyc, const KColoring& f) {
    const int k = static_cast<int>(cyc.size());
    Window best;
    for (int s = 0; s < k; ++s)
        for (int dir : {+1, -1}) {
            std::vector<char> seen(f.k + 1, 0);
            int len = 0;
            for (int t = 0; t < k; ++t) {
                int v = cyc[((s + dir * t) % k + k) % k];
                if (seen[f.colors[v]]) break;
                seen[f.colors[v]] = 1;
                ++len;
            }
            if (len > best.len) best = {s, dir, len};
        }
    return best;
}

// Bijection on [k] sending the window colors to 1..len in window order and
// the remaining colors to len+1..k in increasing order.
KColoring canonical_relabel(const KColoring& f, const std::vector<int>& cyc, const Window& w) {
    const int k = f.k;
    const int cl = static_cast<int>(cyc.size());
    std::vector<int> perm(k + 1, 0);
    for (int t = 0; t < w.len; ++t) {
        int v = cyc[((w.start + w.dir * t) % cl + cl) % cl];
        perm[f.colors[v]] = t + 1;
    }
    int next = w.len;
    for (int c = 1; c <= k; ++c)
        if (perm[c] == 0) perm[c] = ++next;
    KColoring out{k, f.colors};
    for (int& c : out.colors) c = perm[c];
    return out;
}

std::vector<bool> begins_vector(const Graph& g, const KColoring& f, int k_ceiling) {
    return verify_rainbow(g, f, {k_ceiling, false}).begins;
}

int count_true(const std::vector<bool>& b) {
    return static_cast<int>(std::count(b.begin(), b.end(), true));
}

struct Deadline {
    bool enabled = false;
    std::chrono::steady_clock::time_point until;
    void check(const char* where) const {
        if (enabled && std::chrono::steady_clock::now() >= until)
            throw budget_error(std::string("search budget exhausted during ") + where);
    }
};

} // namespace

Theorem3Result theorem3(const Graph& g, std::optional<PathWitness> cycle,
                        const Theorem3Options& opts) {
    Deadline deadline;
    if (opts.budget_ms == 0) throw budget_error("search budget exhausted before start");
    if (opts.budget_ms > 0) {
        deadline.enabled = true;
        deadline.until =
            std::chrono::steady_clock::now() + std::chrono::milliseconds(opts.budget_ms);
    }

    require_connected(g);
    auto chrom = chromatic_number(g);
    const int k = chrom.chi;
    if (k < 3) throw hypothesis_error("chromatic number below 3 admits no cycle of length chi");
    if (cycle) {
        if (static_cast<int>(cycle->vertices.size()) != k || !is_cycle_of(g, cycle->vertices))
            throw std::invalid_argument("supplied cycle is not a cycle of length chi");
    } else {
        cycle = find_cycle_of_length(g, k);
        if (!cycle) throw hypothesis_error("graph contains no cycle of length chi");
    }
    const std::vector<int>& cyc = cycle->vertices;

    Theorem3Result res;
    KColoring f = chrom.witness;

    // Phase 1, following the proof: canonicalize the longest rainbow window
    // u_1..u_l along the cycle, look at the predecessor u_k (color j in [l]),
    // and shift around u_j; the window grows every round until the successor
    // digraph stops being acyclic.
    int prev_len = 0;
    for (int guard = 0;; ++guard) {
        deadline.check("phase 1");
        if (guard > k + 1) throw internal_error("window growth failed to terminate");
        Window w = longest_window(cyc, f);
        f = canonical_relabel(f, cyc, w);
        auto dg = build_successor_digraph(g, f);
        auto chk = is_acyclic(dg);
        if (!chk.acyclic) {
            res.directed_cycle = std::move(chk.cycle);
            break;
        }
        if (w.len >= k)
            throw internal_error("fully rainbow cycle must close a directed cycle");
        if (w.len <= prev_len)
            throw internal_error("longest rainbow window along the cycle failed to grow");
        prev_len = w.len;
        ++res.phase1_iterations;
        int pred = cyc[((w.start - w.dir) % k + k) % k];  // u_k, the window's predecessor
        int j = f.colors[pred];
        if (j < 2 || j > w.len)
            throw internal_error("predecessor color fell outside the window");
        int u_j = cyc[((w.start + w.dir * (j - 1)) % k + k) % k];
        auto fwd = forward_set(dg, {u_j});
        if (!std::binary_search(fwd.begin(), fwd.end(), pred)) {
            f = shift_up(g, f, {u_j});
        } else {
            auto bwd = backward_set(dg, {u_j});
            if (std::binary_search(bwd.begin(), bwd.end(), pred))
                throw internal_error("predecessor reachable both ways in an acyclic digraph");
            f = shift_down(g, f, {u_j});
        }
    }

    // Phase 2.  Every vertex of the directed cycle already begins a full
    // rainbow path (any k consecutive cycle vertices show all k colors, and
    // distinct colors force distinct vertices).  The remaining vertices are
    // covered by verified search: greedy shift improvements, then breadth-
    // first search over shift-reachable colorings, then exhaustive
    // enumeration (existence guaranteed).
    auto begins = begins_vector(g, f, opts.k_ceiling);
    for (int v : res.directed_cycle)
        if (!begins[v]) throw internal_error("directed-cycle vertex fails the begins check");
    res.phase2_stage = "phase1";

    if (!std::all_of(begins.begin(), begins.end(), [](bool b) { return b; })) {
        res.phase2_stage = "greedy";
        int best = count_true(begins);
        for (bool improved = true; improved;) {
            deadline.check("greedy search");
            improved = false;
            // Candidate singletons: failing vertices first, then vertices on a
            // shortest path from each failing vertex toward the good set.
            std::vector<int> cand;
            std::vector<char> in_cand(g.vertex_count(), 0);
            auto add = [&](int v) {
                if (!in_cand[v]) {
                    in_cand[v] = 1;
                    cand.push_back(v);
                }
            };
            for (int v = 0; v < g.vertex_count(); ++v)
                if (!begins[v]) add(v);
            std::vector<int> fails(cand);
            for (int v : fails) {
                // breadth-first tree from v until a good vertex appears
                std::vector<int> par(g.vertex_count(), -2);
                std::vector<int> queue{v};
                par[v] = -1;
                int hit = -1;
                for (std::size_t h = 0; h < queue.size() && hit < 0; ++h)
                    for (int wv : g.neighbors(queue[h])) {
                        if (par[wv] != -2) continue;
                        par[wv] = queue[h];
                        if (begins[wv]) {
                            hit = wv;
                            break;
                        }
                        queue.push_back(wv);
                    }
                for (int x = hit; x >= 0; x = par[x]) add(x);
            }
            for (int x : cand) {
                for (int dir : {+1, -1}) {
                    KColoring f2 = dir > 0 ? shift_up(g, f, {x}) : shift_down(g, f, {x});
                    auto b2 = begins_vector(g, f2, opts.k_ceiling);
                    if (count_true(b2) > best) {
                        best = count_true(b2);
                        f = std::move(f2);
                        begins = std::move(b2);
                        improved = true;
                        break;
                    }
                }
                if (improved) break;
            }
            if (best == g.vertex_count()) break;
        }
    }

    if (!std::all_of(begins.begin(), begins.end(), [](bool b) { return b; })) {
        res.phase2_stage = "bfs";
        std::set<std::vector<int>> seen{f.colors};
        std::vector<KColoring> queue{f};
        bool done = false;
        for (std::size_t h = 0;
             h < queue.size() && !done && seen.size() < static_cast<std::size_t>(opts.search_cap);
             ++h) {
            deadline.check("shift search");
            for (int x = 0; x < g.vertex_count() && !done; ++x)
                for (int dir : {+1, -1}) {
                    KColoring f2 =
                        dir > 0 ? shift_up(g, queue[h], {x}) : shift_down(g, queue[h], {x});
                    if (!seen.insert(f2.colors).second) continue;
                    auto b2 = begins_vector(g, f2, opts.k_ceiling);
                    if (count_true(b2) == g.vertex_count()) {
                        f = std::move(f2);
                        begins = std::move(b2);
                        done = true;
                        break;
                    }
                    queue.push_back(std::move(f2));
                }
        }
    }

    if (!std::all_of(begins.begin(), begins.end(), [](bool b) { return b; })) {
        res.phase2_stage = "exhaustive";
        bool found = false;
        int stride = 0;
        for_each_proper_coloring(g, k, [&](const KColoring& cand) {
            if ((++stride & 255) == 0) deadline.check("exhaustive search");
            auto b2 = begins_vector(g, cand, opts.k_ceiling);
            if (count_true(b2) == g.vertex_count()) {
                f = cand;
                begins = std::move(b2);
                found = true;
                return false;
            }
            return true;
        });
        if (!found)
            throw internal_error("no coloring with the begins property despite the guarantee");
    }

    res.coloring = f;
    res.report = verify_rainbow(g, f, {opts.k_ceiling, true});
    if (!res.report.all_begins())
        throw internal_error("final coloring lost the begins property on re-verification");
    return res;
}

// ---- theorem 4 ----

Theorem4Result theorem4(const Orientation& d) {
    const Graph& g = d.base();
    require_connected(g);
    auto chrom = chromatic_number(g);
    if (chrom.chi != 3) throw hypothesis_error("chromatic number must be exactly 3");
    const int nv = g.vertex_count();

    Theorem4Result res;
    auto& dec = res.decomposition;
    for (int v = 0; v < nv; ++v) {
        if (d.in_degree(v) == 0)
            dec.sources.push_back(v);
        else if (d.out_degree(v) == 0)
            dec.sinks.push_back(v);
        else
            dec.middle.push_back(v);
    }

    auto finish = [&](KColoring f, std::vector<int> path) {
        PathWitness w{std::move(path), true};
        if (!is_directed_path_of(d, w)) throw internal_error("witness is not a directed path");
        std::set<int> cols;
        for (int v : w.vertices) cols.insert(f.colors[v]);
        if (w.vertices.size() != 3 || cols.size() != 3)
            throw internal_error("witness is not rainbow of order 3");
        if (!is_proper(g, f)) throw internal_error("theorem 4 coloring is not proper");
        res.coloring = std::move(f);
        res.witness = std::move(w);
        return res;
    };

    if (auto tri = find_cycle_of_length(g, 3)) {
        // Any proper 3-coloring works; a tournament on 3 vertices always
        // contains a directed path through all of them.
        dec.case_tag = "triangle";
        const auto& t = tri->vertices;
        for (int a : t)
            for (int b : t)
                for (int c : t) {
                    if (a == b || a == c || b == c) continue;
                    if (d.has_arc(a, b) && d.has_arc(b, c))
                        return finish(chrom.witness, {a, b, c});
                }
        throw internal_error("triangle orientation without a directed path");
    }

    bool middle_independent = true;
    std::pair<int, int> inner_edge{-1, -1};
    for (auto [u, v] : g.edges()) {
        bool mu = d.in_degree(u) > 0 && d.out_degree(u) > 0;
        bool mv = d.in_degree(v) > 0 && d.out_degree(v) > 0;
        if (mu && mv) {
            middle_independent = false;
            inner_edge = {u, v};
            break;
        }
    }

    if (dec.middle.empty())
        throw internal_error("no middle vertex although the graph is not bipartite");

    if (middle_independent) {
        // Sources, middle, sinks are three independent layers; color them
        // 1, 2, 3 and read the witness off any middle vertex.
        dec.case_tag = "layered";
        KColoring f{3, std::vector<int>(nv)};
        for (int v : dec.sources) f.colors[v] = 1;
        for (int v : dec.middle) f.colors[v] = 2;
        for (int v : dec.sinks) f.colors[v] = 3;
        int u = dec.middle.front();
        return finish(std::move(f), {d.in_neighbors(u).front(), u, d.out_neighbors(u).front()});
    }

    dec.case_tag = "recolored";
    KColoring f = chrom.witness;
    // A middle vertex with differently colored in/out neighbors yields the
    // path straight away.
    for (int u : dec.middle)
        for (int x : d.in_neighbors(u))
            for (int y : d.out_neighbors(u))
                if (f.colors[x] != f.colors[y]) return finish(f, {x, u, y});
    // Otherwise every middle vertex has a monochromatic neighborhood: take an
    // arc (u,v) inside the middle set and give u the unused third color; v's
    // other out-neighbors still carry u's old color.
    auto [eu, ev] = inner_edge;
    int u = d.has_arc(eu, ev) ? eu : ev;
    int v = u == eu ? ev : eu;
    int t = 6 - f.colors[u] - f.colors[v];
    f.colors[u] = t;
    int w = d.out_neighbors(v).front();
    if (w == u) throw internal_error("antiparallel arc in an orientation");
    return finish(std::move(f), {u, v, w});
}

} // namespace rainbow
