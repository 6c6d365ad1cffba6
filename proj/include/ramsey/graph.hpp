#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

// Loop-free simple graph, adjacency kept as one 32-bit row per vertex.
// Large enough for the 27-vertex Schlafli graph; everything else in this
// toolkit is much smaller.
struct Graph {
    static constexpr int max_n = 27;

    int n = 0;
    uint32_t adj[max_n] = {};

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const { return __builtin_popcount(adj[v]); }
    int edge_count() const;

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const;
};

// Deterministic bit encoding of the lexicographically minimal adjacency
// matrix over all vertex permutations. Pair bits are taken in colex order
// (0,1),(0,2),(1,2),(0,3),..., most significant first, which matches the
// graph6 bit order. Only valid for n <= 11 (55 pair bits).
struct CanonicalForm {
    int n = 0;
    uint64_t canon_bits = 0;

    bool operator==(const CanonicalForm& o) const { return n == o.n && canon_bits == o.canon_bits; }
    bool operator<(const CanonicalForm& o) const {
        return n != o.n ? n < o.n : canon_bits < o.canon_bits;
    }
};

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

Graph complement(const Graph& g);

// Colex pair-bit encoding of g as labeled (no permutation).
uint64_t encode_bits(const Graph& g);
Graph decode_bits(int n, uint64_t bits);

CanonicalForm canonical_form(const Graph& g);

// Canonical form where vertices 0..r-1 are pinned and only the remaining
// vertices may be permuted. Used for flags.
CanonicalForm canonical_form_rooted(const Graph& g, int r);

long automorphism_count(const Graph& g);

// One representative per isomorphism class, sorted by canonical encoding.
const std::vector<Graph>& enumerate_graphs(int ell);

Graph tensor_product(const Graph& g, const Graph& h);

// Appends one clone per listed vertex. A clone gets exactly the neighbourhood
// of its original; clone-original pairs are non-adjacent, clone-clone pairs
// are adjacent iff the originals are.
Graph duplicate_vertices(const Graph& g, const std::vector<int>& vs);

Graph named_graph(std::string_view name);
const std::vector<std::string>& named_graph_names();

// graph6 (bit-exact per the published format, n <= 62 is plenty here).
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view s);

// Edge-list text format "n; u-v,u-v,...".
std::string to_edge_list_text(const Graph& g);
Graph from_edge_list_text(std::string_view s);

} // namespace ramsey
