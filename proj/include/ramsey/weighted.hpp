#pragma once

#include "ramsey/graph.hpp"
#include "ramsey/rat.hpp"

#include <utility>
#include <vector>

namespace ramsey {

// Step-graphon representative: symmetric rational weights in [0,1] on n parts.
// Unlike Graph, the diagonal may be nonzero (complements carry diagonal 1).
struct WeightedGraph {
    int n = 0;
    std::vector<Rat> w;

    WeightedGraph() = default;
    explicit WeightedGraph(int parts) : n(parts), w(static_cast<size_t>(parts) * parts, Rat(0)) {}

    Rat& at(int i, int j) { return w[static_cast<size_t>(i) * n + j]; }
    const Rat& at(int i, int j) const { return w[static_cast<size_t>(i) * n + j]; }

    void set(int i, int j, const Rat& value) {
        at(i, j) = value;
        at(j, i) = value;
    }

    // Throws unless symmetric with all entries in [0,1].
    void validate() const;
};

struct ConstGraphon {
    Rat p;
};

WeightedGraph from_graph(const Graph& g);

// Entrywise 1-w, including the diagonal: the complement of a 0/1 step
// graphon has diagonal 1. Distinct from complement(Graph), which is loop-free.
WeightedGraph complement_w(const WeightedGraph& w);

// t(H,W): average over ALL maps V(H)->[n] of the product of edge weights.
Rat hom_density(const Graph& h, const WeightedGraph& w);
Rat hom_density(const Graph& h, const ConstGraphon& c);

// Plain single-threaded rational evaluation, no 0/1 shortcut. Reference
// implementation for tests and the benchmark.
Rat hom_density_serial(const Graph& h, const WeightedGraph& w);

// Fraction of injective maps V(H)->V(J) that are homomorphisms.
Rat t_inj(const Graph& h, const Graph& j);

// Probability that a uniform v(F)-subset of V(J) induces a copy of F.
Rat induced_density(const Graph& f, const Graph& j);

// Induced analogue of hom_density: edges take w, non-edges take 1-w.
Rat t_ind_weighted(const Graph& j, const WeightedGraph& w);
Rat t_ind_weighted_serial(const Graph& j, const WeightedGraph& w);

// d(J,W) = v(J)!/aut(J) * t_ind(J,W).
Rat d_weighted(const Graph& j, const WeightedGraph& w);

// t(C_k, G) = trace(A^k)/n^k, exact integer matrix powers.
Rat cycle_density_trace(int k, const Graph& g);

// lhs = t(K3,W) + t(K3,1-W); rhs = the edge/path polynomial that Goodman's
// formula says it equals.
std::pair<Rat, Rat> goodman_check(const WeightedGraph& w);

// lambda*t(H1,W) + (2-lambda)*t(H2,1-W).
Rat objective(const Graph& h1, const Graph& h2, const Rat& lambda, const WeightedGraph& w,
              bool allow_empty_h2 = false);
Rat objective(const Graph& h1, const Graph& h2, const Rat& lambda, const ConstGraphon& c,
              bool allow_empty_h2 = false);

// min{lambda,2-lambda} * (r - max(v1,v2))! / r!
Rat trivial_lower_bound(const Rat& lambda, int ramsey_number, int v1, int v2);

// 2*e2*(1-p)^(e2-1) / (e1*p^(e1-1) + e2*(1-p)^(e2-1))
Rat compute_lambda0(int e1, int e2, const Rat& p);

// Bracket of the unique root of p^e1 = (1-p)^e2 in (0,1), width <= precision.
std::pair<Rat, Rat> balance_p(int e1, int e2, const Rat& precision);

} // namespace ramsey
