#pragma once

#include "ramsey/graph.hpp"
#include "ramsey/rat.hpp"

#include <cstdint>
#include <vector>

namespace ramsey {

struct SearchConfig {
    int n = 12;
    int d = 6;
    Graph h1, h2;
    Rat lambda;
    long max_iters = 5000;
    int restarts = 20;
    uint64_t seed = 0;
};

struct SearchStep {
    int restart = 0;
    long iteration = 0;
    Rat value;
};

struct SearchTrace {
    std::vector<SearchStep> accepted; // strictly decreasing within each restart
    Graph best_graph;
    Rat best_value;
    Rat min_observed; // over every evaluated proposal, accepted or not
};

// Configuration-model d-regular graph; the whole pairing is resampled until
// it is simple. Deterministic in the seed.
Graph random_regular(int n, int d, uint64_t seed);

// Replace edges u1v1,u2v2 by u1v2,u2v1. Requires four distinct vertices, the
// first two pairs present and the new pairs absent.
Graph switch_edges(const Graph& g, int u1, int v1, int u2, int v2);

// Random-switching descent on d-regular graphs: propose a uniformly random
// valid switch, keep it only when the exact rational objective strictly
// decreases. Restarts run independently (and in parallel) with seeds derived
// from cfg.seed.
SearchTrace hill_climb(const SearchConfig& cfg);

// Exact count of homomorphisms from h into the 0/1 symmetric matrix given as
// bitmask rows (diagonal bits allowed). Decomposes at bridges and cut
// vertices so small dense targets stay cheap.
unsigned long long hom_count_01(const Graph& h, const std::vector<uint32_t>& rows, int n);

} // namespace ramsey
