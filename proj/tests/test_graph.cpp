#include "test_util.hpp"

#include "ramsey/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace ramsey;

TEST_CASE("from_edge_list basics") {
    Graph k3 = from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.edge_count() == 3);
    CHECK(k3.has_edge(0, 2));

    Graph c5 = from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    CHECK_THROWS(from_edge_list(3, {{0, 0}}));
    CHECK_THROWS(from_edge_list(3, {{0, 3}}));
    CHECK_THROWS(from_edge_list(0, {}));
    // duplicate edges collapse
    CHECK(from_edge_list(2, {{0, 1}, {1, 0}}).edge_count() == 1);
}

TEST_CASE("complement") {
    Graph k5 = named_graph("K5");
    Graph e5 = complement(k5);
    CHECK(e5.edge_count() == 0);
    Graph c5 = named_graph("C5");
    CHECK(complement(complement(c5)) == c5);
    CHECK(c5.edge_count() + complement(c5).edge_count() == 10);

    // complement of C6 is the triangular prism of Figure 2
    Graph p = named_graph("C6_complement");
    CHECK(p.n == 6);
    CHECK(p.edge_count() == 9);
    for (int v = 0; v < 6; ++v) CHECK(p.degree(v) == 3);
    CHECK(p.has_edge(0, 2));
    CHECK(p.has_edge(2, 4));
    CHECK(p.has_edge(0, 4)); // triangle on evens
    CHECK(p.has_edge(0, 3)); // matching edge
}

TEST_CASE("canonical form is relabeling invariant") {
    Graph path_a = from_edge_list(3, {{0, 1}, {1, 2}});
    Graph path_b = from_edge_list(3, {{1, 2}, {2, 0}});
    CHECK(canonical_form(path_a) == canonical_form(path_b));

    Graph c5 = named_graph("C5");
    Graph p5 = from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(!(canonical_form(c5) == canonical_form(p5)));
}

TEST_CASE("all 120 relabelings of the bowtie share one canonical form") {
    Graph bow = named_graph("bowtie");
    std::vector<int> perm = {0, 1, 2, 3, 4};
    std::set<uint64_t> forms;
    do {
        Graph relabeled;
        relabeled.n = 5;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                if (bow.has_edge(i, j)) relabeled.add_edge(perm[i], perm[j]);
        forms.insert(canonical_form(relabeled).canon_bits);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(forms.size() == 1);
}

TEST_CASE("canonical equality matches brute-force isomorphism") {
    testutil::Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng.below(5)); // up to 6
        Graph g = testutil::random_graph(n, rng);
        Graph h = testutil::random_graph(n, rng);
        bool canon_equal = canonical_form(g) == canonical_form(h);
        CHECK(canon_equal == testutil::isomorphic_brute(g, h));
    }
}

TEST_CASE("automorphism counts") {
    CHECK(automorphism_count(named_graph("K5")) == 120);
    CHECK(automorphism_count(named_graph("C5")) == 10);
    CHECK(automorphism_count(named_graph("bowtie")) == 8);
    CHECK(automorphism_count(named_graph("M")) == 8);
}

TEST_CASE("enumerate_graphs counts 1,2,4,11,34,156") {
    const int expected[] = {0, 1, 2, 4, 11, 34, 156};
    for (int ell = 1; ell <= 6; ++ell)
        CHECK(static_cast<int>(enumerate_graphs(ell).size()) == expected[ell]);
    CHECK_THROWS(enumerate_graphs(0));
    CHECK_THROWS(enumerate_graphs(9));
    // deterministic order: sorted canonical encodings, and every entry is its
    // own canonical labeling
    const auto& g5 = enumerate_graphs(5);
    for (size_t i = 0; i + 1 < g5.size(); ++i)
        CHECK(canonical_form(g5[i]).canon_bits < canonical_form(g5[i + 1]).canon_bits);
    for (const Graph& g : g5) CHECK(encode_bits(g) == canonical_form(g).canon_bits);
}

TEST_CASE("tensor product") {
    Graph k = named_graph("K3xK4");
    CHECK(k.n == 12);
    CHECK(k.edge_count() == 36);
    for (int v = 0; v < 12; ++v) CHECK(k.degree(v) == 6);

    Graph g = named_graph("C5");
    Graph k1;
    k1.n = 1;
    Graph t = tensor_product(g, k1);
    CHECK(t.n == 5);
    CHECK(t.edge_count() == 0);

    // degree multiplicativity
    Graph b = named_graph("B");
    Graph prod = tensor_product(b, named_graph("K3"));
    for (int u = 0; u < b.n; ++u)
        for (int x = 0; x < 3; ++x) CHECK(prod.degree(u * 3 + x) == b.degree(u) * 2);

    CHECK_THROWS(tensor_product(named_graph("K5"), named_graph("K5")));
}

TEST_CASE("duplicate_vertices") {
    // duplicating both endpoints of a matching edge of C6-bar gives Figure 2's H
    Graph h = named_graph("H_fig2");
    CHECK(h.n == 8);
    CHECK(h.edge_count() == 16);

    // uniqueness: every adjacent pair of C6-bar with no common triangle gives
    // the same graph up to isomorphism
    Graph prism = named_graph("C6_complement");
    std::set<uint64_t> forms;
    int qualifying = 0;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) {
            if (!prism.has_edge(u, v)) continue;
            if ((prism.adj[u] & prism.adj[v]) != 0) continue; // common triangle
            ++qualifying;
            forms.insert(canonical_form(duplicate_vertices(prism, {u, v})).canon_bits);
        }
    CHECK(qualifying == 3);
    CHECK(forms.size() == 1);
    CHECK(forms.count(canonical_form(h).canon_bits) == 1);

    // duplicate in the empty graph stays empty
    Graph e3;
    e3.n = 3;
    Graph bigger = duplicate_vertices(e3, {0, 1});
    CHECK(bigger.n == 5);
    CHECK(bigger.edge_count() == 0);

    // clones copy degrees in K4
    Graph k4 = named_graph("K4");
    Graph dup = duplicate_vertices(k4, {2});
    CHECK(dup.degree(4) == k4.degree(2));
    CHECK(!dup.has_edge(4, 2));
}

TEST_CASE("named graphs") {
    Graph b = named_graph("B");
    CHECK(b.n == 5);
    CHECK(b.edge_count() == 5);

    Graph m = named_graph("M");
    CHECK(m.n == 6);
    CHECK(m.edge_count() == 7);

    Graph s = named_graph("Schlafli");
    CHECK(s.n == 27);
    for (int v = 0; v < 27; ++v) CHECK(s.degree(v) == 16);
    // strongly regular (27,16,10,8)
    for (int u = 0; u < 27; ++u)
        for (int v = u + 1; v < 27; ++v) {
            int common = __builtin_popcount(s.adj[u] & s.adj[v]);
            CHECK(common == (s.has_edge(u, v) ? 10 : 8));
        }

    CHECK_THROWS(named_graph("nope"));
}

TEST_CASE("graph6 round trip and known encodings") {
    CHECK(to_graph6(named_graph("K3")) == "Bw");
    CHECK(to_graph6(from_edge_list(2, {})) == "A?");
    CHECK(to_graph6(from_edge_list(2, {{0, 1}})) == "A_");
    for (const char* name : {"K5", "C5", "B", "D", "M", "Schlafli", "H_fig2"}) {
        Graph g = named_graph(name);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("edge list text round trip") {
    for (const char* name : {"K3", "C5", "M", "bowtie"}) {
        Graph g = named_graph(name);
        CHECK(from_edge_list_text(to_edge_list_text(g)) == g);
    }
    Graph e2 = from_edge_list_text("2;");
    CHECK(e2.n == 2);
    CHECK(e2.edge_count() == 0);
    CHECK_THROWS(from_edge_list_text("oops"));
}
