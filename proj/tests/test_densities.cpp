#include "test_util.hpp"

#include "ramsey/weighted.hpp"

#include <doctest.h>

using namespace ramsey;

TEST_CASE("from_graph and complement_w") {
    WeightedGraph w = from_graph(named_graph("K2"));
    CHECK(w.at(0, 1) == 1);
    CHECK(w.at(0, 0) == 0);

    WeightedGraph c = complement_w(w);
    CHECK(c.at(0, 0) == 1); // complemented step graphon carries diagonal 1
    CHECK(c.at(0, 1) == 0);
    CHECK(complement_w(c).w == w.w);

    WeightedGraph ones(2);
    ones.set(0, 0, 1);
    ones.set(1, 1, 1);
    ones.set(0, 1, 1);
    WeightedGraph zeros = complement_w(ones);
    for (const Rat& x : zeros.w) CHECK(x == 0);
}

TEST_CASE("hom_density paper values") {
    Graph k3 = named_graph("K3"), c5 = named_graph("C5");
    WeightedGraph prism = from_graph(named_graph("C6_complement"));
    CHECK(hom_density(k3, prism) == rat(1, 18));
    CHECK(hom_density(c5, complement_w(prism)) == rat(17, 432));

    CHECK(hom_density(k3, from_graph(k3)) == rat(6, 27));

    // constant kernel: p^e
    CHECK(hom_density(c5, ConstGraphon{rat(1, 2)}) == rat(1, 32));
    CHECK(hom_density(named_graph("B"), ConstGraphon{rat(1, 3)}) == rat(1, 243));
}

TEST_CASE("hom_density agrees with the serial reference and brute counts") {
    testutil::Rng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 3 + static_cast<int>(rng.below(3));
        WeightedGraph w = testutil::random_weighted(n, rng);
        for (const char* name : {"K3", "P3", "C4", "D"}) {
            Graph h = named_graph(name);
            CHECK(hom_density(h, w) == hom_density_serial(h, w));
        }
    }
    // 0/1 fast path agrees with the rational reference on graphs
    for (int trial = 0; trial < 10; ++trial) {
        int n = 4 + static_cast<int>(rng.below(3));
        Graph g = testutil::random_graph(n, rng);
        for (const char* name : {"K3", "C5", "D"}) {
            Graph h = named_graph(name);
            CHECK(hom_density(h, from_graph(g)) == hom_density_serial(h, from_graph(g)));
        }
    }
}

TEST_CASE("t_inj paper values") {
    CHECK(t_inj(named_graph("K3"), named_graph("K5")) == 1);
    CHECK(t_inj(named_graph("C5"), complement(named_graph("K5"))) == 0);
    CHECK(t_inj(named_graph("K3"), named_graph("K_1_4")) == 0);
    CHECK(t_inj(named_graph("C5"), complement(named_graph("K_1_4"))) == 0);
    CHECK_THROWS(t_inj(named_graph("M"), named_graph("K5")));
    // C5 in itself: 10 of 120 injections
    CHECK(t_inj(named_graph("C5"), named_graph("C5")) == rat(1, 12));
}

TEST_CASE("induced_density") {
    CHECK(induced_density(named_graph("K2"), named_graph("K5")) == 1);
    CHECK(induced_density(named_graph("K3"), named_graph("C5")) == 0);

    // P3 in C5 against exhaustive triples
    Graph p3 = named_graph("P3"), c5 = named_graph("C5");
    long hits = 0, total = 0;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            for (int c = b + 1; c < 5; ++c) {
                ++total;
                int edges = c5.has_edge(a, b) + c5.has_edge(a, c) + c5.has_edge(b, c);
                if (edges == 2) ++hits; // induced path
            }
    CHECK(induced_density(p3, c5) == rat(hits, total));
    CHECK_THROWS(induced_density(named_graph("K5"), named_graph("K3")));
}

TEST_CASE("t_ind_weighted: sum-to-one and the tind lemma") {
    testutil::Rng rng(17);
    // sum over all 34 five-vertex graphs of d(J,W) = 1
    for (int trial = 0; trial < 3; ++trial) {
        int n = 3 + static_cast<int>(rng.below(4));
        WeightedGraph w = testutil::random_weighted(n, rng);
        for (int ell = 3; ell <= 5; ++ell) {
            Rat sum = 0;
            for (const Graph& j : enumerate_graphs(ell)) sum += d_weighted(j, w);
            CHECK(sum == 1);
        }
    }

    CHECK(t_ind_weighted(from_edge_list(1, {}), testutil::random_weighted(4, rng)) == 1);

    // t(H,W) = sum_J t_inj(H,J) d(J,W)
    for (int trial = 0; trial < 3; ++trial) {
        int n = 3 + static_cast<int>(rng.below(3));
        WeightedGraph w = testutil::random_weighted(n, rng);
        for (const char* name : {"K3", "C4", "C5", "D"}) {
            Graph h = named_graph(name);
            int ell = h.n;
            Rat sum = 0;
            for (const Graph& j : enumerate_graphs(ell)) sum += t_inj(h, j) * d_weighted(j, w);
            CHECK(sum == hom_density(h, w));
        }
    }
    // and at a level above v(H)
    {
        WeightedGraph w = testutil::random_weighted(4, rng);
        Graph h = named_graph("K3");
        Rat sum = 0;
        for (const Graph& j : enumerate_graphs(5)) sum += t_inj(h, j) * d_weighted(j, w);
        CHECK(sum == hom_density(h, w));
    }
}

TEST_CASE("t_ind_weighted agrees with the serial reference") {
    testutil::Rng rng(29);
    WeightedGraph w = testutil::random_weighted(4, rng);
    for (const char* name : {"K3", "P3", "C4"}) {
        Graph j = named_graph(name);
        CHECK(t_ind_weighted(j, w) == t_ind_weighted_serial(j, w));
    }
}

TEST_CASE("cycle density by trace") {
    Graph prism = named_graph("C6_complement");
    CHECK(cycle_density_trace(3, prism) == rat(1, 18));

    // the complement graphon path gives 17/432 for C5
    CHECK(hom_density(named_graph("C5"), complement_w(from_graph(prism))) == rat(17, 432));

    testutil::Rng rng(31);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 3 + static_cast<int>(rng.below(4));
        Graph g = testutil::random_graph(n, rng);
        for (int k = 3; k <= 5; ++k) {
            Graph ck = k == 3 ? named_graph("K3") : named_graph(k == 4 ? "C4" : "C5");
            CHECK(cycle_density_trace(k, g) == hom_density(ck, from_graph(g)));
        }
    }
    CHECK_THROWS(cycle_density_trace(2, prism));
}

TEST_CASE("Goodman's formula") {
    // tensor construction: all five quoted densities
    WeightedGraph wk = from_graph(named_graph("K3xK4"));
    WeightedGraph wkc = complement_w(wk);
    Graph k2 = named_graph("K2"), k3 = named_graph("K3"), p3 = named_graph("P3");
    CHECK(hom_density(k2, wk) == rat(1, 2));
    CHECK(hom_density(k2, wkc) == rat(1, 2));
    CHECK(hom_density(p3, wk) == rat(1, 4));
    CHECK(hom_density(p3, wkc) == rat(1, 4));
    CHECK(hom_density(k3, wk) == rat(1, 12));
    CHECK(hom_density(k3, wkc) == rat(1, 6));

    auto [lhs, rhs] = goodman_check(wk);
    CHECK(lhs == rhs);
    CHECK(lhs == rat(1, 4));

    // const 1/2
    WeightedGraph half(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) half.at(i, j) = rat(1, 2);
    auto [l2, r2] = goodman_check(half);
    CHECK(l2 == r2);
    CHECK(l2 == rat(1, 4));

    // exact identity on graphs and random weighted graphs
    testutil::Rng rng(37);
    for (const Graph& g : enumerate_graphs(5)) {
        auto [a, b] = goodman_check(from_graph(g));
        CHECK(a == b);
    }
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng.below(5));
        auto [a, b] = goodman_check(testutil::random_weighted(n, rng));
        CHECK(a == b);
    }
}

TEST_CASE("objective paper values") {
    Graph k3 = named_graph("K3"), c5 = named_graph("C5");
    Rat lambda = rat(10, 17);
    CHECK(objective(k3, c5, lambda, from_graph(named_graph("C6_complement"))) == rat(3, 34));
    CHECK(objective(k3, c5, lambda, from_graph(named_graph("K2"))) == rat(3, 34));
    CHECK(objective(k3, c5, lambda, from_graph(named_graph("H_fig2"))) == rat(3, 34));

    Graph d = named_graph("D"), m = named_graph("M");
    WeightedGraph wk = from_graph(named_graph("K3xK4"));
    CHECK(hom_density(d, wk) == rat(1, 72));
    CHECK(hom_density(m, complement_w(wk)) == rat(1, 72));
    CHECK(objective(d, m, rat(5, 6), wk) == rat(1, 36));

    CHECK_THROWS(objective(k3, c5, rat(5, 2), from_graph(named_graph("K2"))));
    Graph empty2 = from_edge_list(2, {});
    CHECK_THROWS(objective(k3, empty2, rat(1), from_graph(named_graph("K2"))));
    CHECK(objective(k3, empty2, rat(0), from_graph(named_graph("K2")), true) == 2);
}

TEST_CASE("objective bounds on random inputs") {
    testutil::Rng rng(41);
    Graph k3 = named_graph("K3"), c4 = named_graph("C4");
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng.below(4));
        WeightedGraph w = testutil::random_weighted(n, rng);
        Rat lambda = rat(static_cast<long>(rng.below(9)), 4);
        Rat value = objective(k3, c4, lambda, w);
        CHECK(value >= 0);
        CHECK(value <= 2);
    }
}

TEST_CASE("trivial lower bound") {
    CHECK(trivial_lower_bound(rat(1), 6, 3, 3) == rat(1, 120));
    CHECK(trivial_lower_bound(rat(0), 6, 3, 3) == 0);
    CHECK(trivial_lower_bound(rat(1), 9, 3, 4) == rat(1, 3024));
    CHECK_THROWS(trivial_lower_bound(rat(1), 2, 3, 4));
}

TEST_CASE("lambda0 and balance_p") {
    CHECK(compute_lambda0(5, 5, rat(1, 2)) == 1);
    CHECK(compute_lambda0(4, 4, rat(1, 2)) == 1);
    CHECK_THROWS(compute_lambda0(0, 5, rat(1, 2)));
    CHECK_THROWS(compute_lambda0(3, 5, rat(1)));

    auto [lo, hi] = balance_p(5, 5, rat(1, 1000));
    CHECK(lo == rat(1, 2));
    CHECK(hi == rat(1, 2));
    CHECK(Rat(2) * rat_pow(rat(1, 2), 5) == rat(1, 16));

    // p = (1-p)^2 has root (3-sqrt(5))/2 = 0.381966...
    Rat eps = rat(1, 1000000000);
    auto [lo2, hi2] = balance_p(1, 2, eps);
    CHECK(hi2 - lo2 <= eps);
    CHECK(rat_double(lo2) == doctest::Approx(0.3819660112).epsilon(1e-8));
    CHECK(rat_pow(lo2, 1) <= rat_pow(Rat(1) - lo2, 2));
    CHECK(rat_pow(hi2, 1) >= rat_pow(Rat(1) - hi2, 2));

    // lambda0 at the balanced p satisfies the derivative-vanishing condition:
    // lambda0*e1*p^(e1-1) = (2-lambda0)*e2*(1-p)^(e2-1)
    Rat p = rat(38196601, 100000000);
    Rat l0 = compute_lambda0(3, 5, p);
    Rat left = l0 * Rat(3) * rat_pow(p, 2);
    Rat right = (Rat(2) - l0) * Rat(5) * rat_pow(Rat(1) - p, 4);
    CHECK(left == right);
}

TEST_CASE("hom_density consistency with brute-force hom counts") {
    testutil::Rng rng(43);
    for (int trial = 0; trial < 5; ++trial) {
        int n = 3 + static_cast<int>(rng.below(4));
        Graph g = testutil::random_graph(n, rng);
        for (const char* name : {"K3", "P3", "C4", "C5", "D"}) {
            Graph h = named_graph(name);
            // direct odometer count
            long hom = 0;
            std::vector<int> phi(h.n, 0);
            for (;;) {
                bool ok = true;
                for (auto [u, v] : h.edges())
                    if (!g.has_edge(phi[u], phi[v])) {
                        ok = false;
                        break;
                    }
                if (ok) ++hom;
                int pos = h.n - 1;
                while (pos >= 0 && ++phi[pos] == n) phi[pos--] = 0;
                if (pos < 0) break;
            }
            CHECK(hom_density(h, from_graph(g)) ==
                  rat_of(Int(hom), rat_pow(Rat(n), h.n).get_num()));
        }
    }
}
