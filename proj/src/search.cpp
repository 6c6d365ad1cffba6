#include "ramsey/search.hpp"

#include "ramsey/parallel.hpp"
#include "ramsey/weighted.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramsey {

namespace {

struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t bound) { return next() % bound; }
};

uint64_t mix_seed(uint64_t seed, uint64_t lane) {
    SplitMix64 rng(seed ^ (0xD1B54A32D192ED03ull * (lane + 1)));
    return rng.next();
}

// --- decomposition-aware integer homomorphism counting ---------------------

std::vector<std::vector<int>> connected_components(const Graph& h) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(h.n, false);
    for (int s = 0; s < h.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack = {s};
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u = 0; u < h.n; ++u)
                if (h.has_edge(v, u) && !seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(comp);
    }
    return comps;
}

Graph induced(const Graph& h, const std::vector<int>& verts) {
    Graph g;
    g.n = static_cast<int>(verts.size());
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            if (h.has_edge(verts[a], verts[b])) g.add_edge(a, b);
    return g;
}

// order the vertices of a connected piece so each new one touches a placed one
std::vector<int> dfs_order(const Graph& h, int start) {
    std::vector<int> order;
    std::vector<bool> placed(h.n, false);
    order.push_back(start);
    placed[start] = true;
    while (static_cast<int>(order.size()) < h.n) {
        int best = -1, best_links = -1;
        for (int v = 0; v < h.n; ++v) {
            if (placed[v]) continue;
            int links = 0;
            for (int u : order)
                if (h.has_edge(u, v)) ++links;
            if (links > best_links) {
                best = v;
                best_links = links;
            }
        }
        order.push_back(best);
        placed[best] = true;
    }
    return order;
}

unsigned long long brute_rooted(const Graph& h, const std::vector<uint32_t>& rows, int n,
                                int root, int root_image) {
    std::vector<int> order = dfs_order(h, root);
    uint32_t full = (1u << n) - 1;
    std::vector<uint32_t> image(h.n);
    image[0] = static_cast<uint32_t>(root_image);

    struct Rec {
        const Graph& h;
        const std::vector<uint32_t>& rows;
        const std::vector<int>& order;
        uint32_t full;
        std::vector<uint32_t>& image;
        unsigned long long run(int level) {
            uint32_t cand = full;
            for (int q = 0; q < level; ++q)
                if (h.has_edge(order[q], order[level])) cand &= rows[image[q]];
            if (level + 1 == h.n) return __builtin_popcount(cand);
            unsigned long long total = 0;
            uint32_t bits = cand;
            while (bits) {
                int x = __builtin_ctz(bits);
                bits &= bits - 1;
                image[level] = static_cast<uint32_t>(x);
                total += run(level + 1);
            }
            return total;
        }
    } rec{h, rows, order, full, image};

    if (h.n == 1) return 1;
    // root is order[0]; make sure its image constrains level 1 onwards
    return rec.run(1);
}

unsigned long long brute_all(const Graph& h, const std::vector<uint32_t>& rows, int n) {
    unsigned long long total = 0;
    for (int x = 0; x < n; ++x) total += brute_rooted(h, rows, n, 0, x);
    return total;
}

// vertices whose removal disconnects the (connected) graph
std::vector<int> articulation_points(const Graph& h) {
    std::vector<int> out;
    for (int a = 0; a < h.n; ++a) {
        std::vector<int> rest;
        for (int v = 0; v < h.n; ++v)
            if (v != a) rest.push_back(v);
        Graph sub = induced(h, rest);
        if (connected_components(sub).size() > 1) out.push_back(a);
    }
    return out;
}

unsigned long long count_connected(const Graph& h, const std::vector<uint32_t>& rows, int n) {
    if (h.n <= 4) return brute_all(h, rows, n);
    std::vector<int> cuts = articulation_points(h);
    if (cuts.empty()) return brute_all(h, rows, n);

    // split at the articulation point balancing the largest piece
    int best_cut = cuts[0];
    size_t best_piece = h.n;
    for (int a : cuts) {
        std::vector<int> rest;
        for (int v = 0; v < h.n; ++v)
            if (v != a) rest.push_back(v);
        size_t largest = 0;
        for (const auto& comp : connected_components(induced(h, rest)))
            largest = std::max(largest, comp.size());
        if (largest < best_piece) {
            best_piece = largest;
            best_cut = a;
        }
    }

    std::vector<int> rest;
    for (int v = 0; v < h.n; ++v)
        if (v != best_cut) rest.push_back(v);
    // rooted counts per piece, then pointwise product over the cut image
    std::vector<unsigned long long> product(n, 1);
    for (const auto& comp : connected_components(induced(h, rest))) {
        std::vector<int> piece = {best_cut};
        for (int idx : comp) piece.push_back(rest[idx]);
        std::sort(piece.begin(), piece.end());
        Graph pg = induced(h, piece);
        int root_pos = static_cast<int>(std::find(piece.begin(), piece.end(), best_cut) -
                                        piece.begin());
        for (int x = 0; x < n; ++x) product[x] *= brute_rooted(pg, rows, n, root_pos, x);
    }
    unsigned long long total = 0;
    for (int x = 0; x < n; ++x) total += product[x];
    return total;
}

} // namespace

unsigned long long hom_count_01(const Graph& h, const std::vector<uint32_t>& rows, int n) {
    unsigned long long total = 1;
    for (const auto& comp : connected_components(h)) {
        Graph sub = induced(h, comp);
        total *= count_connected(sub, rows, n);
    }
    return total;
}

Graph random_regular(int n, int d, uint64_t seed) {
    if (n < 1 || n > 16 || d < 0 || d >= n)
        throw std::invalid_argument("random_regular: need 0 <= d < n <= 16");
    if ((n * d) % 2 != 0) throw std::invalid_argument("random_regular: n*d must be even");
    SplitMix64 rng(mix_seed(seed, 0x5eed));
    std::vector<int> stubs(n * d);
    for (;;) {
        for (int v = 0; v < n; ++v)
            for (int c = 0; c < d; ++c) stubs[v * d + c] = v;
        for (int i = static_cast<int>(stubs.size()) - 1; i > 0; --i)
            std::swap(stubs[i], stubs[rng.below(i + 1)]);
        Graph g;
        g.n = n;
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || g.has_edge(u, v))
                ok = false;
            else
                g.add_edge(u, v);
        }
        if (ok) return g;
    }
}

Graph switch_edges(const Graph& g, int u1, int v1, int u2, int v2) {
    int verts[4] = {u1, v1, u2, v2};
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (verts[a] == verts[b])
                throw std::invalid_argument("switch_edges: vertices must be distinct");
    if (!g.has_edge(u1, v1) || !g.has_edge(u2, v2))
        throw std::invalid_argument("switch_edges: u1v1 and u2v2 must be edges");
    if (g.has_edge(u1, v2) || g.has_edge(u2, v1))
        throw std::invalid_argument("switch_edges: u1v2 and u2v1 must be non-edges");
    Graph out = g;
    out.remove_edge(u1, v1);
    out.remove_edge(u2, v2);
    out.add_edge(u1, v2);
    out.add_edge(u2, v1);
    return out;
}

namespace {

struct Objective {
    const Graph& h1;
    const Graph& h2;
    Rat lambda, two_minus;
    Rat denom1, denom2;
    int n;

    Objective(const SearchConfig& cfg)
        : h1(cfg.h1), h2(cfg.h2), lambda(cfg.lambda), two_minus(Rat(2) - cfg.lambda), n(cfg.n) {
        denom1 = rat_pow(Rat(n), h1.n);
        denom2 = rat_pow(Rat(n), h2.n);
    }

    Rat eval(const Graph& g) const {
        std::vector<uint32_t> red(n), blue(n);
        uint32_t full = (1u << n) - 1;
        for (int v = 0; v < n; ++v) {
            red[v] = g.adj[v];
            blue[v] = (full & ~g.adj[v]); // complement step graphon keeps diagonal 1
        }
        unsigned long long c1 = hom_count_01(h1, red, n);
        unsigned long long c2 = hom_count_01(h2, blue, n);
        return lambda * rat_of(Int(static_cast<unsigned long>(c1)), 1) / denom1 +
               two_minus * rat_of(Int(static_cast<unsigned long>(c2)), 1) / denom2;
    }
};

struct RestartResult {
    std::vector<SearchStep> accepted;
    Graph best;
    Rat best_value;
    Rat min_observed;
};

RestartResult run_restart(const SearchConfig& cfg, int restart) {
    SplitMix64 rng(mix_seed(cfg.seed, restart));
    Objective obj(cfg);
    Graph g = random_regular(cfg.n, cfg.d, rng.next());
    Rat value = obj.eval(g);
    RestartResult res;
    res.accepted.push_back({restart, 0, value});
    res.min_observed = value;

    for (long it = 1; it <= cfg.max_iters; ++it) {
        auto edges = g.edges();
        int m = static_cast<int>(edges.size());
        int u1 = 0, v1 = 0, u2 = 0, v2 = 0;
        bool found = false;
        for (int attempt = 0; attempt < 1000 && !found; ++attempt) {
            auto [a, b] = edges[rng.below(m)];
            auto [c, d] = edges[rng.below(m)];
            if (rng.next() & 1) std::swap(c, d);
            if (a == c || a == d || b == c || b == d) continue;
            if (g.has_edge(a, d) || g.has_edge(c, b)) continue;
            u1 = a;
            v1 = b;
            u2 = c;
            v2 = d;
            found = true;
        }
        if (!found) break; // no valid switch reachable; graph is stuck
        Graph next = switch_edges(g, u1, v1, u2, v2);
        Rat next_value = obj.eval(next);
        res.min_observed = std::min(res.min_observed, next_value);
        if (next_value < value) {
            g = next;
            value = next_value;
            res.accepted.push_back({restart, it, value});
        }
    }
    res.best = g;
    res.best_value = value;
    return res;
}

} // namespace

SearchTrace hill_climb(const SearchConfig& cfg) {
    if ((cfg.n * cfg.d) % 2 != 0 || cfg.d >= cfg.n)
        throw std::invalid_argument("hill_climb: infeasible degree sequence");
    if (cfg.lambda < 0 || cfg.lambda > 2)
        throw std::invalid_argument("hill_climb: lambda outside [0,2]");
    if (cfg.restarts < 1) throw std::invalid_argument("hill_climb: need at least one restart");

    std::vector<RestartResult> results(cfg.restarts);
    std::exception_ptr failure = nullptr;
    int nt = threads_for(cfg.restarts);
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (int r = 0; r < cfg.restarts; ++r) {
        try {
            results[r] = run_restart(cfg, r);
        } catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    SearchTrace trace;
    trace.best_value = results[0].best_value;
    trace.best_graph = results[0].best;
    trace.min_observed = results[0].min_observed;
    for (int r = 0; r < cfg.restarts; ++r) {
        const auto& res = results[r];
        trace.accepted.insert(trace.accepted.end(), res.accepted.begin(), res.accepted.end());
        trace.min_observed = std::min(trace.min_observed, res.min_observed);
        if (res.best_value < trace.best_value) {
            trace.best_value = res.best_value;
            trace.best_graph = res.best;
        }
    }
    return trace;
}

} // namespace ramsey
