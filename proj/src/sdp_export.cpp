#include "ramsey/sdp_export.hpp"

#include "ramsey/weighted.hpp"

#include <sstream>
#include <stdexcept>

namespace ramsey {

std::vector<SdpBlockSpec> auto_blocks(int ell) {
    std::vector<SdpBlockSpec> out;
    for (int r = 1; r < 5; ++r)
        for (int k = r + 1; k <= 5; ++k) {
            if (2 * k - r > ell) continue;
            for (const Graph& root : enumerate_graphs(r)) out.push_back({root, k});
        }
    return out;
}

namespace {

struct FamilyTables {
    FlagFamily family;
    // per enumerate_graphs(ell) index: t x t table at level ell
    std::vector<RatMatrix> tables;
};

FamilyTables build_tables(const FlagFamily& fam, int ell) {
    FamilyTables ft;
    ft.family = fam;
    int m = ft.family.pair_level();
    const auto& graphs = enumerate_graphs(ell);
    if (m == ell) {
        for (const Graph& j : graphs) ft.tables.push_back(a_coeff_table(ft.family, j));
        return ft;
    }
    std::vector<RatMatrix> small;
    const auto& smalls = enumerate_graphs(m);
    for (const Graph& j0 : smalls) small.push_back(a_coeff_table(ft.family, j0));
    int t = ft.family.t();
    for (const Graph& j : graphs) {
        RatMatrix table(t);
        for (size_t s = 0; s < smalls.size(); ++s) {
            Rat d = induced_density(smalls[s], j);
            if (d == 0) continue;
            for (int a = 0; a < t; ++a)
                for (int b = 0; b < t; ++b) table.at(a, b) += d * small[s].at(a, b);
        }
        ft.tables.push_back(std::move(table));
    }
    return ft;
}

} // namespace

std::string export_sdp(const Graph& h1, const Graph& h2, int ell,
                       const std::vector<SdpBlockSpec>& blocks, std::optional<Rat> lambda) {
    if (blocks.empty()) throw std::invalid_argument("export_sdp: no blocks");
    for (const auto& b : blocks)
        if (2 * b.k - b.root.n > ell)
            throw std::invalid_argument("export_sdp: block with 2k-r above the level");
    if (lambda && (*lambda < 0 || *lambda > 2))
        throw std::invalid_argument("export_sdp: lambda outside [0,2]");

    const auto& graphs = enumerate_graphs(ell);
    int nj = static_cast<int>(graphs.size());
    bool var_lambda = !lambda.has_value();

    std::vector<FamilyTables> fams;
    fams.reserve(blocks.size());
    for (const auto& b : blocks) fams.push_back(build_tables(enumerate_flags(b.root, b.k), ell));

    // variables: x1 = t, (x2 = lambda), then upper-triangle entries per block
    int nvars = 1 + (var_lambda ? 1 : 0);
    std::vector<int> block_var_base(blocks.size());
    for (size_t q = 0; q < blocks.size(); ++q) {
        block_var_base[q] = nvars;
        int t = fams[q].family.t();
        nvars += t * (t + 1) / 2;
    }

    std::vector<Rat> base1(nj), base2(nj);
    for (int ji = 0; ji < nj; ++ji) {
        base1[ji] = t_inj(h1, graphs[ji]);
        base2[ji] = t_inj(h2, complement(graphs[ji]));
    }

    auto dec = [](const Rat& q) { return rat_decimal(q, 17); };

    std::ostringstream out;
    out << "* flag-algebra lower bound SDP\n";
    out << "* h1 " << to_graph6(h1) << "  h2 " << to_graph6(h2) << "  level " << ell << "\n";
    out << "* maximize t: objective below is -t per the SDPA min convention\n";
    out << "* var 1 = t" << (var_lambda ? ", var 2 = lambda" : "") << ", then per-block upper triangles\n";
    out << nvars << " = mDIM\n";
    int lp_rows = nj + (var_lambda ? 2 : 0);
    out << (blocks.size() + 1) << " = nBLOCK\n";
    out << "{";
    for (size_t q = 0; q < blocks.size(); ++q) out << fams[q].family.t() << ", ";
    out << "-" << lp_rows << "}\n";
    // objective: minimize -t
    out << "-1";
    for (int i = 1; i < nvars; ++i) out << " 0";
    out << "\n";

    // F0: constant matrices. LP row ji: X(ji) = sum x_i F_i(ji) - F0(ji) >= 0.
    // With fixed lambda: constraint base - SOS - t >= 0 has constant part
    // lambda*base1 + (2-lambda)*base2 -> F0 entry is its negative.
    // With variable lambda: constant part is 2*base2.
    int lp_block = static_cast<int>(blocks.size()) + 1;
    for (int ji = 0; ji < nj; ++ji) {
        Rat c = var_lambda ? Rat(Rat(2) * base2[ji])
                           : Rat(*lambda * base1[ji] + (Rat(2) - *lambda) * base2[ji]);
        if (c != 0) out << "0 " << lp_block << " " << (ji + 1) << " " << (ji + 1) << " " << dec(-c) << "\n";
    }
    if (var_lambda) {
        // lambda >= 0 row has no constant; 2 - lambda >= 0 row: F0 = -2
        out << "0 " << lp_block << " " << (nj + 2) << " " << (nj + 2) << " -2\n";
    }

    // var 1 = t: enters every J row with coefficient -1
    for (int ji = 0; ji < nj; ++ji)
        out << "1 " << lp_block << " " << (ji + 1) << " " << (ji + 1) << " -1\n";
    if (var_lambda) {
        // var 2 = lambda: J rows coefficient (base1 - base2); bound rows +1/-1
        for (int ji = 0; ji < nj; ++ji) {
            Rat c = base1[ji] - base2[ji];
            if (c != 0) out << "2 " << lp_block << " " << (ji + 1) << " " << (ji + 1) << " " << dec(c) << "\n";
        }
        out << "2 " << lp_block << " " << (nj + 1) << " " << (nj + 1) << " 1\n";
        out << "2 " << lp_block << " " << (nj + 2) << " " << (nj + 2) << " -1\n";
    }

    // block entries: tie the PSD block to the variable and subtract the
    // coefficient table contribution from every J row
    for (size_t q = 0; q < blocks.size(); ++q) {
        int t = fams[q].family.t();
        int var = block_var_base[q];
        for (int i = 0; i < t; ++i)
            for (int j = i; j < t; ++j) {
                ++var;
                out << var << " " << (q + 1) << " " << (i + 1) << " " << (j + 1) << " 1\n";
                for (int ji = 0; ji < nj; ++ji) {
                    Rat coeff = fams[q].tables[ji].at(i, j) * (i == j ? 1 : 2);
                    if (coeff != 0)
                        out << var << " " << lp_block << " " << (ji + 1) << " " << (ji + 1) << " "
                            << dec(-coeff) << "\n";
                }
            }
    }
    return out.str();
}

std::vector<Rat> sdp_constraint_slacks(const Graph& h1, const Graph& h2, int ell,
                                       const std::vector<FlagFamily>& families,
                                       const std::vector<RatMatrix>& mats, const Rat& lambda,
                                       const Rat& t) {
    if (families.size() != mats.size())
        throw std::invalid_argument("sdp_constraint_slacks: family/matrix count mismatch");
    const auto& graphs = enumerate_graphs(ell);
    std::vector<Rat> slacks;
    slacks.reserve(graphs.size());
    std::vector<FamilyTables> fams;
    for (const auto& f : families) {
        fams.push_back(build_tables(f, ell));
        if (mats[fams.size() - 1].dim != f.t())
            throw std::invalid_argument("sdp_constraint_slacks: matrix dimension mismatch");
    }
    for (size_t ji = 0; ji < graphs.size(); ++ji) {
        Rat value = lambda * t_inj(h1, graphs[ji]) +
                    (Rat(2) - lambda) * t_inj(h2, complement(graphs[ji]));
        for (size_t q = 0; q < families.size(); ++q) {
            const RatMatrix& table = fams[q].tables[ji];
            int tq = families[q].t();
            for (int a = 0; a < tq; ++a)
                for (int b = 0; b < tq; ++b)
                    if (mats[q].at(a, b) != 0) value -= mats[q].at(a, b) * table.at(a, b);
        }
        slacks.push_back(value - t);
    }
    return slacks;
}

} // namespace ramsey
