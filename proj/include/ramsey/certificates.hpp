#pragma once

#include "ramsey/flags.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/rat.hpp"
#include "ramsey/ratmatrix.hpp"
#include "ramsey/weighted.hpp"

#include <string>
#include <variant>
#include <vector>

namespace ramsey {

// One quadratic-form block of a flag-algebra lower-bound certificate:
// a t x t PSD matrix over an ordered family of root-compatible flags,
// with a global rational scale factor.
struct FlagBlock {
    int r = 0;
    int k = 0;
    Graph root;
    std::vector<Flag> flags;
    Rat scale = 1;
    RatMatrix matrix; // stored unscaled; the effective block is scale*matrix
};

struct LowerBoundCertificate {
    Graph h1, h2;
    Rat lambda, alpha;
    int ell = 0;
    std::vector<FlagBlock> blocks;
};

using GraphonSpec = std::variant<ConstGraphon, WeightedGraph>;

struct AlphaCertificate {
    Graph h1, h2;
    Rat lambda, alpha;
    GraphonSpec w1, w2;
};

struct VerificationReport {
    std::vector<PsdVerdict> psd;   // per block, for scale*matrix
    std::vector<Rat> values;       // per graph of enumerate_graphs(ell)
    Rat min_value;
    std::vector<int> tight;        // indices attaining min_value
    bool all_psd = false;
    bool verdict = false;          // all_psd && min_value >= alpha
};

// Exact check of Lemma-style lower-bound certificates: for every l-vertex J,
//   lambda*t_inj(H1,J) + (2-lambda)*t_inj(H2,comp(J)) - sum_q <scale_q*A_q, a-table_q(J)> >= alpha
// plus exact PSD of every scaled block matrix.
VerificationReport verify_lower(const LowerBoundCertificate& cert);

struct AlphaReport {
    Rat t_h1_w1, t_h2_cw1; // densities at W1 and 1-W1
    Rat t_h1_w2, t_h2_cw2; // densities at W2 and 1-W2
    Rat combo1, combo2;    // the two lambda-weighted sums
    bool cond[4] = {false, false, false, false};
    bool verdict = false;
};

AlphaReport verify_alpha(const AlphaCertificate& cert);

struct PCommonReport {
    Rat lhs, rhs;
    bool holds = false;
};

// (p,1-p)-common inequality at a single witness W:
//   t(H1,W)/(e1 p^(e1-1)) + t(H2,1-W)/(e2 (1-p)^(e2-1)) >= p/e1 + (1-p)/e2.
PCommonReport check_p_common(const Graph& h1, const Graph& h2, const Rat& p,
                             const WeightedGraph& w);

struct CertContext {
    Graph h1, h2;
    Rat lambda, alpha;
    int ell = 0;
};

struct RecoverOptions {
    // Assignment tried first at each depth: hint[matrix_index] = flag index
    // in enumerate_flags order. Empty = none.
    std::vector<int> hint;
    // Per enumerate_graphs(ell) index: require value(J) == alpha exactly.
    // Empty = only the >= alpha constraint is enforced.
    std::vector<char> require_tight;
};

// Authoring-time search: find an assignment of matrix indices to the
// enumerate_flags(root,k) family such that verify_lower succeeds with this
// block added to the fixed partner blocks. Backtracking over partial
// assignments with exact interval pruning of the per-J quadratic-form
// contribution. Returns ordering[matrix_index] = enumerate_flags index.
// Throws if no ordering exists.
std::vector<int> recover_flag_ordering(const Graph& root, int k, const Rat& scale,
                                       const RatMatrix& matrix, const CertContext& context,
                                       const std::vector<FlagBlock>& partner_blocks,
                                       const RecoverOptions& opts = {});

// Unresolved block for the joint search: matrix + family shape, ordering open.
struct UnresolvedBlock {
    Graph root;
    int k = 0;
    Rat scale = 1;
    RatMatrix matrix;
};

// Joint recovery across several blocks whose orderings are all unknown.
// Returns one ordering per block, or empty if none exists. `require_tight`
// as in RecoverOptions; `hints` may be empty or one hint per block.
std::vector<std::vector<int>> recover_block_orderings(
    const CertContext& context, const std::vector<UnresolvedBlock>& unresolved,
    const std::vector<FlagBlock>& partner_blocks, const std::vector<char>& require_tight = {},
    const std::vector<std::vector<int>>& hints = {}, long node_limit = -1);

// Certificate JSON files (UTF-8, versioned by the "kind" tag).
LowerBoundCertificate load_lower_certificate(const std::string& path);
AlphaCertificate load_alpha_certificate(const std::string& path);
void save_certificate(const LowerBoundCertificate& cert, const std::string& path);
void save_certificate(const AlphaCertificate& cert, const std::string& path);

std::string certificate_kind(const std::string& path); // "lower" or "alpha"

} // namespace ramsey
