#pragma once

#include "ramsey/flags.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/rat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ramsey {

struct SdpBlockSpec {
    Graph root;
    int k = 0;
};

// All (root,k) shapes with 2k-r <= ell and k <= 5: the repository convention
// behind `--blocks auto`.
std::vector<SdpBlockSpec> auto_blocks(int ell);

// Sparse SDPA text for: maximize t subject to, for every ell-vertex J,
//   lambda*t_inj(H1,J) + (2-lambda)*t_inj(H2,comp(J)) - sum_q <A_q,C_q(J)> >= t,
// A_q PSD, and 0 <= lambda <= 2 when lambda is a variable. Encoded as a
// minimization of -t per the SDPA convention. Deterministic output; rationals
// are rounded to 17 significant digits here and nowhere else.
std::string export_sdp(const Graph& h1, const Graph& h2, int ell,
                       const std::vector<SdpBlockSpec>& blocks, std::optional<Rat> lambda);

// Exact per-J slack of a candidate solution against the exported constraint
// set (no solver involved): base(J) - sum_q <A_q,C_q(J)> - t.
std::vector<Rat> sdp_constraint_slacks(const Graph& h1, const Graph& h2, int ell,
                                       const std::vector<FlagFamily>& families,
                                       const std::vector<RatMatrix>& mats, const Rat& lambda,
                                       const Rat& t);

} // namespace ramsey
