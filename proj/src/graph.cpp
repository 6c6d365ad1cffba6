#include "ramsey/graph.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace ramsey {

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("Graph: loop edge " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("Graph: vertex out of range");
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
}

void Graph::remove_edge(int u, int v) {
    adj[u] &= ~(1u << v);
    adj[v] &= ~(1u << u);
}

int Graph::edge_count() const {
    int total = 0;
    for (int i = 0; i < n; ++i) total += degree(i);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

bool Graph::operator==(const Graph& o) const {
    if (n != o.n) return false;
    for (int i = 0; i < n; ++i)
        if (adj[i] != o.adj[i]) return false;
    return true;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1 || n > 16)
        throw std::invalid_argument("from_edge_list: vertex count must be in 1..16");
    Graph g;
    g.n = n;
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph complement(const Graph& g) {
    Graph c;
    c.n = g.n;
    uint32_t full = (1u << g.n) - 1;
    for (int i = 0; i < g.n; ++i) c.adj[i] = full & ~g.adj[i] & ~(1u << i);
    return c;
}

namespace {

constexpr int kCanonMaxN = 11; // 55 pair bits fit a uint64

int pair_count(int n) { return n * (n - 1) / 2; }

} // namespace

uint64_t encode_bits(const Graph& g) {
    int np = pair_count(g.n);
    if (g.n > kCanonMaxN) throw std::invalid_argument("encode_bits: graph too large");
    uint64_t bits = 0;
    int idx = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if (g.has_edge(i, j)) bits |= 1ull << (np - 1 - idx);
    return bits;
}

Graph decode_bits(int n, uint64_t bits) {
    Graph g;
    g.n = n;
    int np = pair_count(n);
    int idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if ((bits >> (np - 1 - idx)) & 1ull) g.add_edge(i, j);
    return g;
}

namespace {

// Branch-and-bound search for the permutation minimizing the colex encoding.
// Positions 0..fixed-1 are pinned to themselves (fixed=0 for plain canon).
struct CanonSearch {
    const Graph& g;
    int fixed;
    int n, np;
    uint64_t best;
    int perm[Graph::max_n];
    bool used[Graph::max_n] = {};

    CanonSearch(const Graph& graph, int fixed_count) : g(graph), fixed(fixed_count) {
        n = g.n;
        np = pair_count(n);
        for (int i = 0; i < fixed; ++i) {
            perm[i] = i;
            used[i] = true;
        }
        best = encode_identity();
        descend(fixed, 0, prefix_bits_for_fixed());
    }

    uint64_t encode_identity() {
        uint64_t bits = 0;
        int idx = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++idx)
                if (g.has_edge(i, j)) bits |= 1ull << (np - 1 - idx);
        return bits;
    }

    uint64_t prefix_bits_for_fixed() {
        uint64_t p = 0;
        for (int j = 1; j < fixed; ++j)
            for (int i = 0; i < j; ++i) p = (p << 1) | (g.has_edge(i, j) ? 1 : 0);
        return p;
    }

    void descend(int pos, int prefix_len_ignored, uint64_t prefix) {
        int placed_pairs = pair_count(pos);
        if (pos == n) {
            best = prefix;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            uint64_t block = 0;
            for (int i = 0; i < pos; ++i)
                block = (block << 1) | (g.has_edge(perm[i], v) ? 1 : 0);
            uint64_t cur = (prefix << pos) | block;
            uint64_t best_prefix = best >> (np - (placed_pairs + pos));
            if (cur > best_prefix) continue;
            used[v] = true;
            perm[pos] = v;
            descend(pos + 1, 0, cur);
            used[v] = false;
        }
    }
};

} // namespace

CanonicalForm canonical_form(const Graph& g) {
    if (g.n > kCanonMaxN)
        throw std::invalid_argument("canonical_form: supported only for n <= " + std::to_string(kCanonMaxN));
    if (g.n == 1) return {1, 0};
    CanonSearch s(g, 0);
    return {g.n, s.best};
}

CanonicalForm canonical_form_rooted(const Graph& g, int r) {
    if (g.n > kCanonMaxN)
        throw std::invalid_argument("canonical_form_rooted: graph too large");
    if (r < 0 || r > g.n) throw std::invalid_argument("canonical_form_rooted: bad root count");
    if (g.n <= 1 || r == g.n) return {g.n, g.n <= kCanonMaxN ? encode_bits(g) : 0};
    CanonSearch s(g, r);
    return {g.n, s.best};
}

namespace {

long count_automorphisms(const Graph& g, int pos, int* perm, bool* used) {
    if (pos == g.n) return 1;
    long total = 0;
    for (int v = 0; v < g.n; ++v) {
        if (used[v] || g.degree(v) != g.degree(pos)) continue;
        bool ok = true;
        for (int i = 0; i < pos && ok; ++i)
            ok = g.has_edge(perm[i], v) == g.has_edge(i, pos);
        if (!ok) continue;
        used[v] = true;
        perm[pos] = v;
        total += count_automorphisms(g, pos + 1, perm, used);
        used[v] = false;
    }
    return total;
}

} // namespace

long automorphism_count(const Graph& g) {
    if (g.n > 10) throw std::invalid_argument("automorphism_count: supported only for n <= 10");
    int perm[Graph::max_n];
    bool used[Graph::max_n] = {};
    return count_automorphisms(g, 0, perm, used);
}

const std::vector<Graph>& enumerate_graphs(int ell) {
    if (ell < 1 || ell > 8)
        throw std::invalid_argument("enumerate_graphs: order must be in 1..8");
    static std::vector<std::vector<Graph>> cache(9);
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (!cache[ell].empty()) return cache[ell];
    if (cache[1].empty()) {
        Graph k1;
        k1.n = 1;
        cache[1] = {k1};
    }
    // Every graph on m vertices is a graph on m-1 vertices plus one vertex,
    // so extending each representative by every attachment mask covers all
    // isomorphism classes.
    for (int m = 2; m <= ell; ++m) {
        if (!cache[m].empty()) continue;
        std::set<uint64_t> seen;
        for (const Graph& p : cache[m - 1]) {
            for (uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
                Graph g = p;
                g.n = m;
                g.adj[m - 1] = mask;
                for (int i = 0; i < m - 1; ++i)
                    if ((mask >> i) & 1u) g.adj[i] |= 1u << (m - 1);
                seen.insert(canonical_form(g).canon_bits);
            }
        }
        std::vector<Graph> out;
        out.reserve(seen.size());
        for (uint64_t bits : seen) out.push_back(decode_bits(m, bits));
        cache[m] = std::move(out);
    }
    return cache[ell];
}

Graph tensor_product(const Graph& g, const Graph& h) {
    if (g.n * h.n > 16) throw std::invalid_argument("tensor_product: product order exceeds 16");
    Graph t;
    t.n = g.n * h.n;
    for (int u = 0; u < g.n; ++u)
        for (int x = 0; x < h.n; ++x)
            for (int v = 0; v < g.n; ++v)
                for (int y = 0; y < h.n; ++y)
                    if (g.has_edge(u, v) && h.has_edge(x, y)) t.add_edge(u * h.n + x, v * h.n + y);
    return t;
}

Graph duplicate_vertices(const Graph& g, const std::vector<int>& vs) {
    int m = g.n + static_cast<int>(vs.size());
    if (m > 16) throw std::invalid_argument("duplicate_vertices: result order exceeds 16");
    for (int v : vs)
        if (v < 0 || v >= g.n) throw std::invalid_argument("duplicate_vertices: vertex out of range");
    Graph out;
    out.n = m;
    for (int i = 0; i < g.n; ++i) out.adj[i] = g.adj[i];
    for (size_t a = 0; a < vs.size(); ++a) {
        int clone = g.n + static_cast<int>(a);
        for (int w = 0; w < g.n; ++w)
            if (g.has_edge(vs[a], w)) out.add_edge(clone, w);
        for (size_t b = 0; b < a; ++b)
            if (g.has_edge(vs[a], vs[b])) out.add_edge(clone, g.n + static_cast<int>(b));
    }
    return out;
}

namespace {

Graph complete_graph(int n) {
    Graph g;
    g.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph cycle_graph(int n) {
    Graph g;
    g.n = n;
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

// 27 lines on a cubic surface: a_1..a_6, b_1..b_6, c_{ij} for i<j.
// Two lines meet iff: a_i,b_j with i != j; c_{ij} with a_k or b_k for
// k in {i,j}; c_{ij},c_{kl} with disjoint index pairs. The Schlafli graph
// is the complement of this 10-regular intersection graph.
Graph schlafli_graph() {
    Graph meet;
    meet.n = 27;
    auto a = [](int i) { return i; };
    auto b = [](int i) { return 6 + i; };
    std::vector<std::pair<int, int>> cpairs;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) cpairs.emplace_back(i, j);
    auto c = [&](int t) { return 12 + t; };
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (i != j) meet.add_edge(a(i), b(j));
    for (size_t t = 0; t < cpairs.size(); ++t) {
        auto [i, j] = cpairs[t];
        meet.add_edge(c(t), a(i));
        meet.add_edge(c(t), a(j));
        meet.add_edge(c(t), b(i));
        meet.add_edge(c(t), b(j));
        for (size_t s = t + 1; s < cpairs.size(); ++s) {
            auto [k, l] = cpairs[s];
            if (k != i && k != j && l != i && l != j) meet.add_edge(c(t), c(s));
        }
    }
    return complement(meet);
}

} // namespace

Graph named_graph(std::string_view name) {
    if (name == "K2") return complete_graph(2);
    if (name == "K3") return complete_graph(3);
    if (name == "K4") return complete_graph(4);
    if (name == "K5") return complete_graph(5);
    if (name == "C4") return cycle_graph(4);
    if (name == "C5") return cycle_graph(5);
    if (name == "C6") return cycle_graph(6);
    if (name == "P3") return from_edge_list(3, {{0, 1}, {1, 2}});
    if (name == "B") return from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}});
    if (name == "D") return from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}});
    if (name == "M")
        return from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}});
    if (name == "K_1_4") return from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    if (name == "C6_complement") return complement(cycle_graph(6));
    if (name == "K3xK4") return tensor_product(complete_graph(3), complete_graph(4));
    if (name == "Schlafli") return schlafli_graph();
    if (name == "H_fig2") return duplicate_vertices(complement(cycle_graph(6)), {0, 3});
    if (name == "bowtie")
        return from_edge_list(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
    throw std::invalid_argument("named_graph: unknown name '" + std::string(name) + "'");
}

const std::vector<std::string>& named_graph_names() {
    static const std::vector<std::string> names = {
        "K2", "K3", "K4", "K5", "C4", "C5", "C6", "P3", "B", "D", "M",
        "K_1_4", "C6_complement", "K3xK4", "Schlafli", "H_fig2", "bowtie"};
    return names;
}

std::string to_graph6(const Graph& g) {
    std::string out;
    out.push_back(static_cast<char>(g.n + 63));
    int bit = 5;
    char cur = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            if (g.has_edge(i, j)) cur |= 1 << bit;
            if (--bit < 0) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                bit = 5;
            }
        }
    if (bit != 5) out.push_back(static_cast<char>(cur + 63));
    return out;
}

Graph from_graph6(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("from_graph6: empty string");
    int n = s[0] - 63;
    if (n < 1 || n > Graph::max_n)
        throw std::invalid_argument("from_graph6: unsupported vertex count");
    Graph g;
    g.n = n;
    size_t pos = 1;
    int bit = 5;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (pos >= s.size()) throw std::invalid_argument("from_graph6: truncated input");
            int c = s[pos] - 63;
            if (c < 0 || c > 63) throw std::invalid_argument("from_graph6: bad character");
            if ((c >> bit) & 1) g.add_edge(i, j);
            if (--bit < 0) {
                bit = 5;
                ++pos;
            }
        }
    return g;
}

std::string to_edge_list_text(const Graph& g) {
    std::string out = std::to_string(g.n) + ";";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        out += first ? " " : ",";
        out += std::to_string(u) + "-" + std::to_string(v);
        first = false;
    }
    return out;
}

Graph from_edge_list_text(std::string_view s) {
    auto semi = s.find(';');
    if (semi == std::string_view::npos)
        throw std::invalid_argument("edge list text: missing ';'");
    int n = std::stoi(std::string(s.substr(0, semi)));
    if (n < 1 || n > Graph::max_n) throw std::invalid_argument("edge list text: bad vertex count");
    Graph g;
    g.n = n;
    std::string rest(s.substr(semi + 1));
    size_t i = 0;
    while (i < rest.size()) {
        while (i < rest.size() && (rest[i] == ' ' || rest[i] == ',')) ++i;
        if (i >= rest.size()) break;
        size_t dash = rest.find('-', i);
        if (dash == std::string::npos) throw std::invalid_argument("edge list text: malformed edge");
        size_t end = rest.find_first_of(", ", dash);
        if (end == std::string::npos) end = rest.size();
        int u = std::stoi(rest.substr(i, dash - i));
        int v = std::stoi(rest.substr(dash + 1, end - dash - 1));
        g.add_edge(u, v);
        i = end;
    }
    return g;
}

} // namespace ramsey
