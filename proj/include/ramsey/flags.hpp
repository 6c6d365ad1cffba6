#pragma once

#include "ramsey/graph.hpp"
#include "ramsey/rat.hpp"
#include "ramsey/ratmatrix.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

// Rooted graph: vertices 0..r-1 are individually labeled roots. Two flags are
// the same only under isomorphisms fixing every root pointwise.
struct Flag {
    Graph g;
    int r = 0;

    int k() const { return g.n; }
    int root_pairs() const { return 2 * g.n - r; }
};

struct FlagFamily {
    Graph root;
    int k = 0;
    std::vector<Flag> flags;

    int r() const { return root.n; }
    int t() const { return static_cast<int>(flags.size()); }
    // Level at which the pair coefficients live: 2k - r.
    int pair_level() const { return 2 * k - root.n; }
};

bool flag_isomorphic(const Flag& a, const Flag& b);

// Induced subgraph of the roots.
Graph root_graph(const Flag& f);

// All k-vertex flags whose root part equals the given root graph, one per
// root-fixing isomorphism class. Deterministic order: (edge count, rooted
// canonical encoding). Representatives are the lexicographically smallest
// members of their classes.
FlagFamily enumerate_flags(const Graph& root, int k);

// a_r(F1,F2;J) for v(J) = 2k-r: the probability that a uniformly random
// bijection of V(J) onto positions {roots, extension1, extension2} induces
// exactly the labeled pattern F1 on roots+extension1 and F2 on
// roots+extension2. Pairs between the two extensions are unconstrained.
Rat a_coeff(const Flag& f1, const Flag& f2, const Graph& j);

// Level-ell coefficient, ell >= 2k-r: sum over (2k-r)-vertex graphs J0 of
// a_coeff(F1,F2;J0) * induced_density(J0,J).
Rat a_coeff_lifted(const Flag& f1, const Flag& f2, const Graph& j, int ell);

// t x t table of a-coefficients for one family against J (v(J) = 2k-r),
// computed in a single pass over bijections.
RatMatrix a_coeff_table(const FlagFamily& family, const Graph& j);

// Flags serialize as "k r; edge-list" with roots 0..r-1.
std::string to_flag_text(const Flag& f);
Flag from_flag_text(std::string_view s);

} // namespace ramsey
