#include "ramsey/certificates.hpp"

#include "ramsey/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>

namespace ramsey {

namespace {

void check_block(const FlagBlock& block, int ell) {
    if (block.root.n != block.r) throw std::invalid_argument("certificate block: root order != r");
    if (block.matrix.dim != static_cast<int>(block.flags.size()))
        throw std::invalid_argument("certificate block: matrix dimension != flag count");
    if (!block.matrix.is_symmetric())
        throw std::invalid_argument("certificate block: matrix is not symmetric");
    if (2 * block.k - block.r > ell)
        throw std::invalid_argument("certificate block: 2k-r exceeds the certificate level");
    Graph root = block.root;
    for (const Flag& f : block.flags) {
        if (f.r != block.r || f.k() != block.k)
            throw std::invalid_argument("certificate block: flag with wrong r or k");
        if (!(root_graph(f) == root))
            throw std::invalid_argument("certificate block: flag root part differs from block root");
    }
    for (size_t a = 0; a < block.flags.size(); ++a)
        for (size_t b = a + 1; b < block.flags.size(); ++b)
            if (flag_isomorphic(block.flags[a], block.flags[b]))
                throw std::invalid_argument("certificate block: duplicate flags");
}

// Per-block machinery for the sum over J. Blocks at level 2k-r = ell contract
// a fresh bijection table per J; blocks below the level precompute the
// contracted scalar for every (2k-r)-vertex graph and lift through induced
// densities.
struct BlockEvaluator {
    const FlagBlock* block;
    FlagFamily family;
    int m = 0;
    bool direct = false;
    std::vector<Rat> lifted_scalar; // per enumerate_graphs(m) index

    BlockEvaluator(const FlagBlock& b, int ell) : block(&b) {
        family.root = b.root;
        family.k = b.k;
        family.flags = b.flags;
        m = 2 * b.k - b.r;
        direct = (m == ell);
        if (!direct) {
            const auto& smalls = enumerate_graphs(m);
            lifted_scalar.resize(smalls.size());
            for (size_t i = 0; i < smalls.size(); ++i)
                lifted_scalar[i] = contract(a_coeff_table(family, smalls[i]));
        }
    }

    Rat contract(const RatMatrix& table) const {
        Rat total = 0;
        int t = table.dim;
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) {
                const Rat& w = block->matrix.at(i, j);
                if (w != 0) total += w * table.at(i, j);
            }
        return total * block->scale;
    }

    Rat sos(const Graph& j) const {
        if (direct) return contract(a_coeff_table(family, j));
        Rat total = 0;
        const auto& smalls = enumerate_graphs(m);
        std::map<uint64_t, int> canon_to_idx;
        for (size_t i = 0; i < smalls.size(); ++i)
            canon_to_idx.emplace(canonical_form(smalls[i]).canon_bits, static_cast<int>(i));
        // induced densities of every m-vertex pattern inside j at once
        std::vector<long> hits(smalls.size(), 0);
        std::vector<int> pick(m);
        for (int i = 0; i < m; ++i) pick[i] = i;
        long subsets = 0;
        for (;;) {
            Graph sub;
            sub.n = m;
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b)
                    if (j.has_edge(pick[a], pick[b])) sub.add_edge(a, b);
            ++hits[canon_to_idx.at(canonical_form(sub).canon_bits)];
            ++subsets;
            int i = m - 1;
            while (i >= 0 && pick[i] == j.n - m + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int t2 = i + 1; t2 < m; ++t2) pick[t2] = pick[t2 - 1] + 1;
        }
        for (size_t i = 0; i < smalls.size(); ++i)
            if (hits[i]) total += rat(hits[i], subsets) * lifted_scalar[i];
        return total;
    }
};

} // namespace

VerificationReport verify_lower(const LowerBoundCertificate& cert) {
    if (cert.lambda < 0 || cert.lambda > 2)
        throw std::invalid_argument("certificate: lambda outside [0,2]");
    if (cert.ell < std::max(cert.h1.n, cert.h2.n))
        throw std::invalid_argument("certificate: level below max(v(H1),v(H2))");
    for (const FlagBlock& b : cert.blocks) check_block(b, cert.ell);

    VerificationReport report;
    report.all_psd = true;
    for (const FlagBlock& b : cert.blocks) {
        report.psd.push_back(is_psd(scaled(b.matrix, b.scale)));
        report.all_psd = report.all_psd && report.psd.back().psd;
    }

    std::vector<BlockEvaluator> evals;
    evals.reserve(cert.blocks.size());
    for (const FlagBlock& b : cert.blocks) evals.emplace_back(b, cert.ell);

    const auto& graphs = enumerate_graphs(cert.ell);
    int count = static_cast<int>(graphs.size());
    report.values.assign(count, Rat(0));
    Rat two_minus = Rat(2) - cert.lambda;

    std::exception_ptr failure = nullptr;
    int nt = threads_for(count);
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (int gi = 0; gi < count; ++gi) {
        try {
            const Graph& j = graphs[gi];
            Rat value = cert.lambda * t_inj(cert.h1, j) + two_minus * t_inj(cert.h2, complement(j));
            for (const auto& ev : evals) value -= ev.sos(j);
            report.values[gi] = value;
        } catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    report.min_value = report.values[0];
    for (const Rat& v : report.values) report.min_value = std::min(report.min_value, v);
    for (int gi = 0; gi < count; ++gi)
        if (report.values[gi] == report.min_value) report.tight.push_back(gi);
    report.verdict = report.all_psd && report.min_value >= cert.alpha;
    return report;
}

namespace {

Rat density_of(const Graph& h, const GraphonSpec& spec, bool complemented) {
    if (std::holds_alternative<ConstGraphon>(spec)) {
        Rat p = std::get<ConstGraphon>(spec).p;
        return hom_density(h, ConstGraphon{complemented ? Rat(1) - p : p});
    }
    const WeightedGraph& w = std::get<WeightedGraph>(spec);
    return hom_density(h, complemented ? complement_w(w) : w);
}

} // namespace

AlphaReport verify_alpha(const AlphaCertificate& cert) {
    if (cert.lambda < 0 || cert.lambda > 2)
        throw std::invalid_argument("certificate: lambda outside [0,2]");
    AlphaReport rep;
    rep.t_h1_w1 = density_of(cert.h1, cert.w1, false);
    rep.t_h2_cw1 = density_of(cert.h2, cert.w1, true);
    rep.t_h1_w2 = density_of(cert.h1, cert.w2, false);
    rep.t_h2_cw2 = density_of(cert.h2, cert.w2, true);
    Rat two_minus = Rat(2) - cert.lambda;
    rep.combo1 = cert.lambda * rep.t_h1_w1 + two_minus * rep.t_h2_cw1;
    rep.combo2 = cert.lambda * rep.t_h1_w2 + two_minus * rep.t_h2_cw2;
    rep.cond[0] = rep.combo1 <= cert.alpha;
    rep.cond[1] = rep.combo2 <= cert.alpha;
    rep.cond[2] = rep.t_h1_w1 >= rep.t_h2_cw1;
    rep.cond[3] = rep.t_h1_w2 <= rep.t_h2_cw2;
    rep.verdict = rep.cond[0] && rep.cond[1] && rep.cond[2] && rep.cond[3];
    return rep;
}

PCommonReport check_p_common(const Graph& h1, const Graph& h2, const Rat& p,
                             const WeightedGraph& w) {
    if (h1.edge_count() == 0 || h2.edge_count() == 0)
        throw std::invalid_argument("check_p_common: H1 and H2 must be non-empty");
    if (p <= 0 || p >= 1) throw std::invalid_argument("check_p_common: p must lie in (0,1)");
    int e1 = h1.edge_count(), e2 = h2.edge_count();
    Rat red = Rat(e1) * rat_pow(p, e1 - 1);
    Rat blue = Rat(e2) * rat_pow(Rat(1) - p, e2 - 1);
    PCommonReport rep;
    rep.lhs = hom_density(h1, w) / red + hom_density(h2, complement_w(w)) / blue;
    rep.rhs = p / Rat(e1) + (Rat(1) - p) / Rat(e2);
    rep.holds = rep.lhs >= rep.rhs;
    return rep;
}

// ---------------------------------------------------------------------------
// ordering recovery

namespace {

// Backtracking over partial assignments of matrix indices to flags, jointly
// across all unresolved blocks. Pairs of a block contribute exactly once both
// endpoints are placed; everything else is bounded by [neg,pos]*tmax interval
// arithmetic, exact in rationals.
struct MultiSearch {
    struct Slot {
        int block;
        int index;
    };

    int nblocks = 0;
    std::vector<int> tsize;
    std::vector<RatMatrix> mats; // already scaled
    // tables[q][ji]: flattened t_q x t_q table over enumerate_flags order
    std::vector<std::vector<std::vector<Rat>>> tables;
    std::vector<std::vector<Rat>> tmax; // [q][ji]
    std::vector<Rat> slack;             // per J
    std::vector<char> tight;            // per J
    std::vector<Slot> order;
    std::vector<std::vector<Rat>> neg_rem, pos_rem; // [depth][q]
    std::vector<std::vector<int>> assignment;       // [q][index] -> flag or -1
    std::vector<std::vector<bool>> used;            // [q][flag]
    std::vector<Rat> assigned_sum;                  // per J
    std::vector<std::vector<int>> hints;            // per block, may be empty
    long nodes = 0;
    long node_limit = -1;
    bool aborted = false;

    bool feasible(int ji, int depth) const {
        Rat lb = assigned_sum[ji];
        for (int q = 0; q < nblocks; ++q)
            if (neg_rem[depth][q] != 0) lb += neg_rem[depth][q] * tmax[q][ji];
        if (lb > slack[ji]) return false;
        if (tight[ji]) {
            Rat ub = assigned_sum[ji];
            for (int q = 0; q < nblocks; ++q)
                if (pos_rem[depth][q] != 0) ub += pos_rem[depth][q] * tmax[q][ji];
            if (ub < slack[ji]) return false;
        }
        return true;
    }

    bool run() {
        int nj = static_cast<int>(slack.size());
        int total_slots = 0;
        assignment.assign(nblocks, {});
        used.assign(nblocks, {});
        for (int q = 0; q < nblocks; ++q) {
            assignment[q].assign(tsize[q], -1);
            used[q].assign(tsize[q], false);
            total_slots += tsize[q];
        }
        assigned_sum.assign(nj, Rat(0));

        // static per-depth interval sums of pairs not yet fully assigned
        neg_rem.assign(total_slots + 1, std::vector<Rat>(nblocks, Rat(0)));
        pos_rem.assign(total_slots + 1, std::vector<Rat>(nblocks, Rat(0)));
        std::vector<std::vector<bool>> in_set(nblocks);
        for (int q = 0; q < nblocks; ++q) in_set[q].assign(tsize[q], false);
        for (int depth = 0; depth <= total_slots; ++depth) {
            if (depth > 0) in_set[order[depth - 1].block][order[depth - 1].index] = true;
            for (int q = 0; q < nblocks; ++q) {
                Rat neg = 0, pos = 0;
                for (int i = 0; i < tsize[q]; ++i)
                    for (int j = 0; j < tsize[q]; ++j) {
                        if (in_set[q][i] && in_set[q][j]) continue;
                        const Rat& e = mats[q].at(i, j);
                        if (e > 0)
                            pos += e;
                        else if (e < 0)
                            neg += e;
                    }
                neg_rem[depth][q] = neg;
                pos_rem[depth][q] = pos;
            }
        }
        for (int ji = 0; ji < nj; ++ji)
            if (!feasible(ji, 0)) return false;
        return place(0, total_slots);
    }

    bool place(int depth, int total_slots) {
        if (node_limit >= 0 && ++nodes > node_limit) {
            aborted = true;
            return false;
        }
        if (depth == total_slots) return true;
        auto [q, index] = order[depth];
        int t = tsize[q];
        std::vector<int> candidates;
        if (!hints[q].empty() && !used[q][hints[q][index]]) candidates.push_back(hints[q][index]);
        for (int f = 0; f < t; ++f)
            if (!used[q][f] && (candidates.empty() || f != candidates[0])) candidates.push_back(f);

        int nj = static_cast<int>(slack.size());
        std::vector<Rat> deltas(nj);
        for (int f : candidates) {
            bool ok = true;
            for (int ji = 0; ji < nj; ++ji) {
                const auto& table = tables[q][ji];
                Rat delta = mats[q].at(index, index) * table[f * t + f];
                for (int i = 0; i < t; ++i) {
                    if (assignment[q][i] < 0 || i == index) continue;
                    const Rat& e = mats[q].at(index, i);
                    if (e != 0) delta += 2 * e * table[f * t + assignment[q][i]];
                }
                deltas[ji] = delta;
                assigned_sum[ji] += delta;
                if (!feasible(ji, depth + 1)) {
                    ok = false;
                    for (int back = ji; back >= 0; --back) assigned_sum[back] -= deltas[back];
                    break;
                }
            }
            if (ok) {
                assignment[q][index] = f;
                used[q][f] = true;
                if (place(depth + 1, total_slots)) return true;
                if (aborted) return false;
                assignment[q][index] = -1;
                used[q][f] = false;
                for (int ji = 0; ji < nj; ++ji) assigned_sum[ji] -= deltas[ji];
            }
        }
        return false;
    }
};

// coefficient table of `family` against every graph of enumerate_graphs(ell),
// lifted when the family's pair level sits below ell
std::vector<RatMatrix> family_tables_at_level(const FlagFamily& family, int ell) {
    const auto& graphs = enumerate_graphs(ell);
    int nj = static_cast<int>(graphs.size());
    int t = family.t();
    int m = family.pair_level();
    std::vector<RatMatrix> small;
    if (m != ell)
        for (const Graph& j0 : enumerate_graphs(m)) small.push_back(a_coeff_table(family, j0));

    std::vector<RatMatrix> out(nj);
    std::exception_ptr failure = nullptr;
    int nt = threads_for(nj);
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (int ji = 0; ji < nj; ++ji) {
        try {
            if (m == ell) {
                out[ji] = a_coeff_table(family, graphs[ji]);
            } else {
                RatMatrix table(t);
                const auto& smalls = enumerate_graphs(m);
                for (size_t s = 0; s < smalls.size(); ++s) {
                    Rat d = induced_density(smalls[s], graphs[ji]);
                    if (d == 0) continue;
                    for (int a = 0; a < t; ++a)
                        for (int b = 0; b < t; ++b) table.at(a, b) += d * small[s].at(a, b);
                }
                out[ji] = std::move(table);
            }
        } catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

} // namespace

std::vector<std::vector<int>> recover_block_orderings(
    const CertContext& context, const std::vector<UnresolvedBlock>& unresolved,
    const std::vector<FlagBlock>& partner_blocks, const std::vector<char>& require_tight,
    const std::vector<std::vector<int>>& hints, long node_limit) {
    for (const FlagBlock& b : partner_blocks) check_block(b, context.ell);
    const auto& graphs = enumerate_graphs(context.ell);
    int nj = static_cast<int>(graphs.size());

    std::vector<BlockEvaluator> partners;
    partners.reserve(partner_blocks.size());
    for (const FlagBlock& b : partner_blocks) partners.emplace_back(b, context.ell);

    MultiSearch search;
    search.nblocks = static_cast<int>(unresolved.size());
    search.node_limit = node_limit;
    search.tables.resize(search.nblocks);
    search.tmax.resize(search.nblocks);
    search.hints.assign(search.nblocks, {});
    if (!hints.empty()) {
        if (hints.size() != unresolved.size())
            throw std::invalid_argument("recover: hints must match unresolved count");
        for (size_t q = 0; q < hints.size(); ++q) {
            if (!hints[q].empty() && hints[q].size() != static_cast<size_t>(unresolved[q].matrix.dim))
                throw std::invalid_argument("recover: hint size mismatch");
            search.hints[q] = hints[q];
        }
    }

    for (const UnresolvedBlock& ub : unresolved) {
        if (ub.scale <= 0) throw std::invalid_argument("recover: block scale must be positive");
        FlagFamily family = enumerate_flags(ub.root, ub.k);
        int t = family.t();
        if (ub.matrix.dim != t)
            throw std::invalid_argument("recover: matrix dimension != flag family size");
        int q = static_cast<int>(search.tsize.size());
        search.tsize.push_back(t);
        search.mats.push_back(scaled(ub.matrix, ub.scale));
        auto tables = family_tables_at_level(family, context.ell);
        search.tables[q].resize(nj);
        search.tmax[q].assign(nj, Rat(0));
        for (int ji = 0; ji < nj; ++ji) {
            std::vector<Rat> flat(static_cast<size_t>(t) * t);
            for (int a = 0; a < t; ++a)
                for (int b = 0; b < t; ++b) {
                    flat[a * t + b] = tables[ji].at(a, b);
                    search.tmax[q][ji] = std::max(search.tmax[q][ji], tables[ji].at(a, b));
                }
            search.tables[q][ji] = std::move(flat);
        }
    }

    search.slack.resize(nj);
    search.tight.assign(nj, 0);
    if (!require_tight.empty()) {
        if (static_cast<int>(require_tight.size()) != nj)
            throw std::invalid_argument("recover: require_tight size mismatch");
        search.tight = require_tight;
    }
    for (int ji = 0; ji < nj; ++ji) {
        Rat base = context.lambda * t_inj(context.h1, graphs[ji]) +
                   (Rat(2) - context.lambda) * t_inj(context.h2, complement(graphs[ji]));
        for (const auto& p : partners) base -= p.sos(graphs[ji]);
        search.slack[ji] = base - context.alpha;
    }

    // slot order: heaviest matrix rows first, interleaved across blocks
    std::vector<std::pair<Rat, MultiSearch::Slot>> weighted;
    for (int q = 0; q < search.nblocks; ++q)
        for (int i = 0; i < search.tsize[q]; ++i) {
            Rat w = 0;
            for (int j = 0; j < search.tsize[q]; ++j) w += abs(search.mats[q].at(i, j));
            weighted.push_back({w, {q, i}});
        }
    std::stable_sort(weighted.begin(), weighted.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (auto& [w, slot] : weighted) search.order.push_back(slot);

    if (!search.run()) return {};
    return search.assignment;
}

std::vector<int> recover_flag_ordering(const Graph& root, int k, const Rat& scale,
                                       const RatMatrix& matrix, const CertContext& context,
                                       const std::vector<FlagBlock>& partner_blocks,
                                       const RecoverOptions& opts) {
    UnresolvedBlock ub{root, k, scale, matrix};
    std::vector<std::vector<int>> hints;
    if (!opts.hint.empty()) hints.push_back(opts.hint);
    auto result = recover_block_orderings(context, {ub}, partner_blocks, opts.require_tight, hints);
    if (result.empty())
        throw std::runtime_error(
            "recover_flag_ordering: no ordering found (certificate or flag family wrong)");
    return result[0];
}

// ---------------------------------------------------------------------------
// JSON serialization

namespace {

using nlohmann::json;

json graphon_to_json(const GraphonSpec& spec) {
    if (std::holds_alternative<ConstGraphon>(spec))
        return json{{"const", rat_str(std::get<ConstGraphon>(spec).p)}};
    const WeightedGraph& w = std::get<WeightedGraph>(spec);
    json weights = json::array();
    for (const Rat& x : w.w) weights.push_back(rat_str(x));
    return json{{"n", w.n}, {"weights", weights}};
}

GraphonSpec graphon_from_json(const json& j) {
    if (j.contains("const")) return ConstGraphon{rat_parse(j.at("const").get<std::string>())};
    WeightedGraph w(j.at("n").get<int>());
    const auto& list = j.at("weights");
    if (list.size() != w.w.size())
        throw std::invalid_argument("certificate: weight list has wrong length");
    for (size_t i = 0; i < w.w.size(); ++i) w.w[i] = rat_parse(list[i].get<std::string>());
    w.validate();
    return w;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open certificate file: " + path);
    json j;
    in >> j;
    return j;
}

void write_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write certificate file: " + path);
    out << j.dump(1) << "\n";
}

Flag flag_from_string(const std::string& text, int r) {
    if (text.find(';') != std::string::npos) {
        std::string head = text.substr(0, text.find(';'));
        // "k r; edges" when two numbers precede the semicolon, else "n; edges"
        int a = 0, b = 0;
        if (sscanf(head.c_str(), "%d %d", &a, &b) == 2) return from_flag_text(text);
    }
    return Flag{from_edge_list_text(text), r};
}

} // namespace

std::string certificate_kind(const std::string& path) {
    return load_json(path).at("kind").get<std::string>();
}

LowerBoundCertificate load_lower_certificate(const std::string& path) {
    json j = load_json(path);
    if (j.at("kind").get<std::string>() != "lower")
        throw std::invalid_argument("certificate: expected kind 'lower'");
    LowerBoundCertificate cert;
    cert.h1 = from_graph6(j.at("h1").get<std::string>());
    cert.h2 = from_graph6(j.at("h2").get<std::string>());
    cert.lambda = rat_parse(j.at("lambda").get<std::string>());
    cert.alpha = rat_parse(j.at("alpha").get<std::string>());
    cert.ell = j.at("ell").get<int>();
    for (const auto& bj : j.at("blocks")) {
        FlagBlock b;
        b.r = bj.at("r").get<int>();
        b.k = bj.at("k").get<int>();
        b.root = from_graph6(bj.at("root").get<std::string>());
        b.scale = rat_parse(bj.at("scale").get<std::string>());
        for (const auto& fs : bj.at("flags"))
            b.flags.push_back(flag_from_string(fs.get<std::string>(), b.r));
        const auto& rows = bj.at("matrix");
        b.matrix = RatMatrix(static_cast<int>(rows.size()));
        for (int a = 0; a < b.matrix.dim; ++a) {
            if (static_cast<int>(rows[a].size()) != b.matrix.dim)
                throw std::invalid_argument("certificate: ragged matrix");
            for (int c = 0; c < b.matrix.dim; ++c)
                b.matrix.at(a, c) = rat_parse(rows[a][c].get<std::string>());
        }
        cert.blocks.push_back(std::move(b));
    }
    return cert;
}

AlphaCertificate load_alpha_certificate(const std::string& path) {
    json j = load_json(path);
    if (j.at("kind").get<std::string>() != "alpha")
        throw std::invalid_argument("certificate: expected kind 'alpha'");
    AlphaCertificate cert;
    cert.h1 = from_graph6(j.at("h1").get<std::string>());
    cert.h2 = from_graph6(j.at("h2").get<std::string>());
    cert.lambda = rat_parse(j.at("lambda").get<std::string>());
    cert.alpha = rat_parse(j.at("alpha").get<std::string>());
    cert.w1 = graphon_from_json(j.at("w1"));
    cert.w2 = graphon_from_json(j.at("w2"));
    return cert;
}

void save_certificate(const LowerBoundCertificate& cert, const std::string& path) {
    json j;
    j["kind"] = "lower";
    j["h1"] = to_graph6(cert.h1);
    j["h2"] = to_graph6(cert.h2);
    j["lambda"] = rat_str(cert.lambda);
    j["alpha"] = rat_str(cert.alpha);
    j["ell"] = cert.ell;
    j["blocks"] = json::array();
    for (const FlagBlock& b : cert.blocks) {
        json bj;
        bj["r"] = b.r;
        bj["k"] = b.k;
        bj["root"] = to_graph6(b.root);
        bj["scale"] = rat_str(b.scale);
        bj["flags"] = json::array();
        for (const Flag& f : b.flags) bj["flags"].push_back(to_edge_list_text(f.g));
        json rows = json::array();
        for (int a = 0; a < b.matrix.dim; ++a) {
            json row = json::array();
            for (int c = 0; c < b.matrix.dim; ++c) row.push_back(rat_str(b.matrix.at(a, c)));
            rows.push_back(row);
        }
        bj["matrix"] = rows;
        j["blocks"].push_back(bj);
    }
    write_json(j, path);
}

void save_certificate(const AlphaCertificate& cert, const std::string& path) {
    json j;
    j["kind"] = "alpha";
    j["h1"] = to_graph6(cert.h1);
    j["h2"] = to_graph6(cert.h2);
    j["lambda"] = rat_str(cert.lambda);
    j["alpha"] = rat_str(cert.alpha);
    j["w1"] = graphon_to_json(cert.w1);
    j["w2"] = graphon_to_json(cert.w2);
    write_json(j, path);
}

} // namespace ramsey
