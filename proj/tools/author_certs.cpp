// Authoring tool: assembles the shipped certificate files from a matrix data
// file, resolving flag orderings against the verifier. Not part of the
// user-facing CLI.

#include "ramsey/certificates.hpp"
#include "ramsey/flags.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/sdp_export.hpp"
#include "ramsey/weighted.hpp"

#include <json.hpp>

#include <array>
#include <fstream>
#include <iostream>
#include <map>

using namespace ramsey;
using nlohmann::json;

namespace {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

RatMatrix matrix_from_json(const json& rows) {
    RatMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) m.at(i, j) = Rat(rows[i][j].get<long>());
    return m;
}

// mask order used by the eight-flag families. bit b of a mask means the
// extension vertex is adjacent to root perm[b].
constexpr std::array<int, 8> kMaskOrder8 = {0, 3, 2, 6, 1, 5, 4, 7};

Flag mask_flag(const Graph& root, int k, int mask, const std::array<int, 3>& perm) {
    Graph g = root;
    g.n = k;
    for (int b = 0; b < root.n; ++b)
        if ((mask >> b) & 1) g.add_edge(perm[b], k - 1);
    return {g, root.n};
}

std::vector<Flag> eight_family(const Graph& root, const std::array<int, 3>& perm) {
    std::vector<Flag> flags;
    for (int mask : kMaskOrder8) flags.push_back(mask_flag(root, 4, mask, perm));
    return flags;
}

Graph three_vertex_root(int edges) {
    switch (edges) {
        case 0: return from_edge_list(3, {});
        case 1: return from_edge_list(3, {{0, 1}});
        case 2: return from_edge_list(3, {{0, 1}, {1, 2}});
        default: return from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
    }
}

void report_verdict(const VerificationReport& rep, const LowerBoundCertificate& cert) {
    std::cout << "  psd: ";
    for (const auto& v : rep.psd) std::cout << (v.psd ? "ok " : "FAIL ");
    std::cout << "\n  min value: " << rat_str(rep.min_value) << " (alpha " << rat_str(cert.alpha)
              << ")\n  tight count: " << rep.tight.size() << "\n  verdict: "
              << (rep.verdict ? "PASS" : "FAIL") << "\n";
}

void author_k3c5(const json& data, const std::string& outdir) {
    LowerBoundCertificate cert;
    cert.h1 = named_graph("K3");
    cert.h2 = named_graph("C5");
    cert.lambda = rat(10, 17);
    cert.alpha = rat(3, 34);
    cert.ell = 5;

    FlagBlock block;
    block.r = 1;
    block.k = 3;
    block.root = from_edge_list(1, {});
    block.scale = rat_parse(data.at("k3_c5").at("scale").get<std::string>());
    block.matrix = matrix_from_json(data.at("k3_c5").at("matrices")[0]);
    for (const char* text :
         {"3 1;", "3 1; 0-1", "3 1; 0-1,0-2", "3 1; 1-2", "3 1; 0-1,1-2", "3 1; 0-1,0-2,1-2"})
        block.flags.push_back(from_flag_text(text));
    cert.blocks.push_back(block);

    auto rep = verify_lower(cert);
    std::cout << "k3_c5:\n";
    report_verdict(rep, cert);
    const auto& graphs = enumerate_graphs(5);
    for (size_t i = 0; i < graphs.size(); ++i)
        if (canonical_form(graphs[i]) == canonical_form(named_graph("K5")))
            std::cout << "  value at K5: " << rat_str(rep.values[i]) << "\n";
    if (!rep.verdict) throw std::runtime_error("k3_c5 certificate failed verification");
    save_certificate(cert, outdir + "/k3_c5.json");

    AlphaCertificate alpha;
    alpha.h1 = cert.h1;
    alpha.h2 = cert.h2;
    alpha.lambda = cert.lambda;
    alpha.alpha = cert.alpha;
    alpha.w1 = from_graph(named_graph("C6_complement"));
    alpha.w2 = from_graph(named_graph("K2"));
    auto arep = verify_alpha(alpha);
    if (!arep.verdict) throw std::runtime_error("k3_c5 alpha certificate failed");
    save_certificate(alpha, outdir + "/k3_c5_alpha.json");
}

void author_c5b(const json& data, const std::string& outdir) {
    Graph c5 = named_graph("C5"), b = named_graph("B");
    const auto& graphs = enumerate_graphs(5);
    int nj = static_cast<int>(graphs.size());
    Rat alpha = rat(1, 16);
    Rat scale = rat_parse(data.at("c5_b").at("scale").get<std::string>());

    std::vector<RatMatrix> mats;
    for (int q = 0; q < 4; ++q) mats.push_back(matrix_from_json(data.at("c5_b").at("matrices")[q]));

    CertContext ctx{c5, b, Rat(1), alpha, 5};
    std::vector<char> tight(nj, 1); // every five-vertex value is exactly 1/16

    // name-derived hint: masks in the printed order, identity bit convention,
    // mapped to enumerate_flags indices
    auto hint_for = [&](const Graph& root) {
        FlagFamily fam = enumerate_flags(root, 4);
        std::vector<int> hint;
        for (int mask : kMaskOrder8) {
            Flag f = mask_flag(root, 4, mask, {0, 1, 2});
            uint64_t canon = canonical_form_rooted(f.g, 3).canon_bits;
            for (int i = 0; i < fam.t(); ++i)
                if (canonical_form_rooted(fam.flags[i].g, 3).canon_bits == canon) {
                    hint.push_back(i);
                    break;
                }
        }
        return hint;
    };

    // the 180-diagonal anchor confines the empty/triangle roots to matrices
    // 0 and 3; try the four pairings consistent with it
    const std::array<std::array<int, 4>, 4> pairings = {
        {{0, 1, 2, 3}, {0, 2, 1, 3}, {3, 1, 2, 0}, {3, 2, 1, 0}}};

    std::vector<std::vector<int>> orderings;
    std::array<int, 4> pairing_used{};
    for (const auto& pairing : pairings) {
        std::vector<UnresolvedBlock> unresolved;
        std::vector<std::vector<int>> hints;
        for (int q = 0; q < 4; ++q) {
            Graph root = three_vertex_root(q);
            unresolved.push_back({root, 4, scale, mats[pairing[q]]});
            hints.push_back(hint_for(root));
        }
        std::cout << "c5_b: trying pairing " << pairing[0] << pairing[1] << pairing[2] << pairing[3]
                  << "\n";
        orderings = recover_block_orderings(ctx, unresolved, {}, tight, hints, 200000000L);
        if (!orderings.empty()) {
            pairing_used = pairing;
            break;
        }
    }
    if (orderings.empty()) throw std::runtime_error("c5_b: recovery found no ordering");
    std::cout << "c5_b: pairing " << pairing_used[0] << pairing_used[1] << pairing_used[2]
              << pairing_used[3] << ", orderings:\n";
    for (const auto& ord : orderings) {
        std::cout << "   ";
        for (int f : ord) std::cout << " " << f;
        std::cout << "\n";
    }

    LowerBoundCertificate cert;
    cert.h1 = c5;
    cert.h2 = b;
    cert.lambda = 1;
    cert.alpha = alpha;
    cert.ell = 5;
    for (int q = 0; q < 4; ++q) {
        FlagBlock block;
        block.r = 3;
        block.k = 4;
        block.root = three_vertex_root(q);
        FlagFamily fam = enumerate_flags(block.root, 4);
        for (int i = 0; i < 8; ++i) block.flags.push_back(fam.flags[orderings[q][i]]);
        block.scale = scale;
        block.matrix = mats[pairing_used[q]];
        cert.blocks.push_back(block);
    }
    auto rep = verify_lower(cert);
    std::cout << "c5_b:\n";
    report_verdict(rep, cert);
    if (!rep.verdict || rep.min_value != alpha || rep.tight.size() != 34)
        throw std::runtime_error("c5_b certificate failed verification");
    save_certificate(cert, outdir + "/c5_b.json");

    AlphaCertificate acert;
    acert.h1 = c5;
    acert.h2 = b;
    acert.lambda = 1;
    acert.alpha = alpha;
    acert.w1 = ConstGraphon{rat(1, 2)};
    acert.w2 = ConstGraphon{rat(1, 2)};
    if (!verify_alpha(acert).verdict) throw std::runtime_error("c5_b alpha certificate failed");
    save_certificate(acert, outdir + "/c5_b_alpha.json");
}

void investigate_dm(const json& data) {
    Graph d = named_graph("D"), m = named_graph("M");
    Rat scale = rat_parse(data.at("d_m").at("scale").get<std::string>());
    std::vector<RatMatrix> mats;
    for (const auto& rows : data.at("d_m").at("matrices")) mats.push_back(matrix_from_json(rows));

    const auto& graphs = enumerate_graphs(6);
    Graph k6bar = from_edge_list(6, {});
    Graph k6 = complement(k6bar);

    Rat base_k6bar = rat(5, 6) * t_inj(d, k6bar) + rat(7, 6) * t_inj(m, k6);
    Rat base_k6 = rat(5, 6) * t_inj(d, k6) + rat(7, 6) * t_inj(m, k6bar);
    std::cout << "base at empty J: " << rat_str(base_k6bar) << ", at complete J: "
              << rat_str(base_k6) << "\n";

    // d(J, W_K) > 0 forces tightness at J; check the empty graph
    WeightedGraph wk = from_graph(named_graph("K3xK4"));
    Rat d_empty = d_weighted(k6bar, wk);
    std::cout << "d(empty6, W_K) = " << rat_str(d_empty) << " (tight required: "
              << (d_empty > 0 ? "yes" : "no") << ")\n";

    // Required: sum over empty-rooted blocks of their empty-flag diagonal
    // equals (base - alpha)/scale. Enumerate every combination.
    Rat needed = (base_k6bar - rat(1, 36)) / scale;
    std::cout << "needed diagonal sum at empty J: " << rat_str(needed) << "\n";
    std::vector<std::vector<Rat>> diag_options;
    for (const auto& mat : mats) {
        std::vector<Rat> opts = {Rat(0)}; // root graph incompatible with the empty pattern
        for (int i = 0; i < mat.dim; ++i) opts.push_back(mat.at(i, i));
        diag_options.push_back(opts);
    }
    long combos = 0, hits = 0;
    std::function<void(size_t, Rat)> walk = [&](size_t qi, Rat acc) {
        if (acc > needed) return;
        if (qi == diag_options.size()) {
            ++combos;
            if (acc == needed) {
                ++hits;
                std::cout << "  exact combination found!\n";
            }
            return;
        }
        for (const Rat& o : diag_options[qi]) walk(qi + 1, acc + o);
    };
    walk(0, Rat(0));
    std::cout << "combinations with sum <= needed explored; exact hits: " << hits << "\n";
    if (hits == 0)
        std::cout << "  -> no assignment of the printed matrices can make the certificate tight "
                     "at the empty 6-vertex graph, so the printed data cannot verify.\n";
}

// exact coefficient tables for the level-6 block shapes, for the offline solve
void dump_tables(const std::string& outpath) {
    Graph d = named_graph("D"), m = named_graph("M");
    const auto& graphs = enumerate_graphs(6);
    int nj = static_cast<int>(graphs.size());

    json out;
    out["graphs"] = json::array();
    for (const Graph& g : graphs) out["graphs"].push_back(to_graph6(g));
    out["base_d"] = json::array();
    out["base_m"] = json::array();
    WeightedGraph wk = from_graph(named_graph("K3xK4"));
    out["d_wk"] = json::array();
    for (int ji = 0; ji < nj; ++ji) {
        out["base_d"].push_back(rat_str(t_inj(d, graphs[ji])));
        out["base_m"].push_back(rat_str(t_inj(m, complement(graphs[ji]))));
        out["d_wk"].push_back(rat_str(d_weighted(graphs[ji], wk)));
    }

    std::vector<std::pair<Graph, int>> shapes;
    shapes.emplace_back(from_edge_list(3, {}), 4); // the 8-flag block
    for (const Graph& root : enumerate_graphs(2)) shapes.emplace_back(root, 4);
    for (const Graph& root : enumerate_graphs(4)) shapes.emplace_back(root, 5);

    out["blocks"] = json::array();
    for (auto& [root, k] : shapes) {
        FlagFamily fam = enumerate_flags(root, k);
        json bj;
        bj["root"] = to_graph6(root);
        bj["r"] = root.n;
        bj["k"] = k;
        bj["flags"] = json::array();
        for (const Flag& f : fam.flags) bj["flags"].push_back(to_flag_text(f));
        int mlevel = fam.pair_level();
        bj["tables"] = json::array();
        std::vector<RatMatrix> small;
        if (mlevel != 6)
            for (const Graph& j0 : enumerate_graphs(mlevel)) small.push_back(a_coeff_table(fam, j0));
        for (int ji = 0; ji < nj; ++ji) {
            RatMatrix table(fam.t());
            if (mlevel == 6) {
                table = a_coeff_table(fam, graphs[ji]);
            } else {
                const auto& smalls = enumerate_graphs(mlevel);
                for (size_t s = 0; s < smalls.size(); ++s) {
                    Rat dd = induced_density(smalls[s], graphs[ji]);
                    if (dd == 0) continue;
                    for (int a = 0; a < fam.t(); ++a)
                        for (int c = 0; c < fam.t(); ++c)
                            table.at(a, c) += dd * small[s].at(a, c);
                }
            }
            json rows = json::array();
            for (int a = 0; a < fam.t(); ++a) {
                json row = json::array();
                for (int c = 0; c < fam.t(); ++c) row.push_back(rat_str(table.at(a, c)));
                rows.push_back(row);
            }
            bj["tables"].push_back(rows);
        }
        out["blocks"].push_back(bj);
        std::cout << "dumped block root=" << to_graph6(root) << " k=" << k << " t=" << fam.t()
                  << "\n";
    }
    std::ofstream f(outpath);
    f << out.dump() << "\n";
    std::cout << "wrote " << outpath << "\n";
}

void author_dm_alpha(const std::string& outdir) {
    AlphaCertificate acert;
    acert.h1 = named_graph("D");
    acert.h2 = named_graph("M");
    acert.lambda = rat(5, 6);
    acert.alpha = rat(1, 36);
    acert.w1 = from_graph(named_graph("K3xK4"));
    acert.w2 = from_graph(named_graph("K3xK4"));
    if (!verify_alpha(acert).verdict) throw std::runtime_error("d_m alpha certificate failed");
    save_certificate(acert, outdir + "/d_m_alpha.json");
    std::cout << "wrote d_m_alpha.json\n";
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: author_certs <k3c5|c5b|dm-investigate|dm-alpha|dumptables> [args]\n";
        return 2;
    }
    std::string cmd = argv[1];
    try {
        if (cmd == "k3c5") {
            author_k3c5(load_json_file(argv[2]), argv[3]);
        } else if (cmd == "c5b") {
            author_c5b(load_json_file(argv[2]), argv[3]);
        } else if (cmd == "dm-investigate") {
            investigate_dm(load_json_file(argv[2]));
        } else if (cmd == "dm-alpha") {
            author_dm_alpha(argv[2]);
        } else if (cmd == "dumptables") {
            dump_tables(argv[2]);
        } else {
            std::cerr << "unknown command " << cmd << "\n";
            return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
