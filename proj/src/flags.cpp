#include "ramsey/flags.hpp"

#include "ramsey/weighted.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace ramsey {

Graph root_graph(const Flag& f) {
    Graph g;
    g.n = f.r;
    for (int i = 0; i < f.r; ++i)
        for (int j = i + 1; j < f.r; ++j)
            if (f.g.has_edge(i, j)) g.add_edge(i, j);
    return g;
}

bool flag_isomorphic(const Flag& a, const Flag& b) {
    if (a.r != b.r || a.k() != b.k())
        throw std::invalid_argument("flag_isomorphic: mismatched root count or size");
    return canonical_form_rooted(a.g, a.r) == canonical_form_rooted(b.g, b.r);
}

FlagFamily enumerate_flags(const Graph& root, int k) {
    if (k > 5) throw std::invalid_argument("enumerate_flags: k must be <= 5");
    int r = root.n;
    if (r > k) throw std::invalid_argument("enumerate_flags: root larger than k");

    // free pairs touch at least one non-root vertex
    std::vector<std::pair<int, int>> free_pairs;
    for (int j = r; j < k; ++j)
        for (int i = 0; i < j; ++i) free_pairs.emplace_back(i, j);

    // The rooted canonical bits are themselves the lexicographically smallest
    // labeled member of each class, so they double as the representative.
    std::set<uint64_t> classes;
    for (uint32_t mask = 0; mask < (1u << free_pairs.size()); ++mask) {
        Graph g = root;
        g.n = k;
        for (size_t b = 0; b < free_pairs.size(); ++b)
            if ((mask >> b) & 1u) g.add_edge(free_pairs[b].first, free_pairs[b].second);
        classes.insert(canonical_form_rooted(g, r).canon_bits);
    }

    FlagFamily fam;
    fam.root = root;
    fam.k = k;
    for (uint64_t canon : classes) fam.flags.push_back({decode_bits(k, canon), r});
    std::stable_sort(fam.flags.begin(), fam.flags.end(), [&](const Flag& a, const Flag& b) {
        int ea = a.g.edge_count(), eb = b.g.edge_count();
        if (ea != eb) return ea < eb;
        return canonical_form_rooted(a.g, a.r).canon_bits < canonical_form_rooted(b.g, b.r).canon_bits;
    });
    return fam;
}

namespace {

void check_pair(const Flag& f1, const Flag& f2) {
    if (f1.r != f2.r || f1.k() != f2.k())
        throw std::invalid_argument("a_coeff: flags have mismatched parameters");
    for (int i = 0; i < f1.r; ++i)
        for (int j = i + 1; j < f1.r; ++j)
            if (f1.g.has_edge(i, j) != f2.g.has_edge(i, j))
                throw std::invalid_argument("a_coeff: flags are not compatible with a common root");
}

// Pattern key of positions `pos` under the bijection sigma: bit per pair in
// colex order, matching encode_bits of the flag graph.
uint32_t pattern_key(const Graph& j, const int* sigma, const int* pos, int count) {
    uint32_t key = 0;
    int np = count * (count - 1) / 2, idx = 0;
    for (int b = 1; b < count; ++b)
        for (int a = 0; a < b; ++a, ++idx)
            if (j.has_edge(sigma[pos[a]], sigma[pos[b]])) key |= 1u << (np - 1 - idx);
    return key;
}

} // namespace

RatMatrix a_coeff_table(const FlagFamily& family, const Graph& j) {
    int r = family.r(), k = family.k, m = family.pair_level();
    if (j.n != m) throw std::invalid_argument("a_coeff_table: v(J) must equal 2k-r");
    int t = family.t();

    std::unordered_map<uint32_t, int> key_to_flag;
    for (int i = 0; i < t; ++i)
        key_to_flag.emplace(static_cast<uint32_t>(encode_bits(family.flags[i].g)), i);

    std::vector<int> pos1(k), pos2(k);
    for (int a = 0; a < k; ++a) pos1[a] = a;
    for (int a = 0; a < r; ++a) pos2[a] = a;
    for (int a = r; a < k; ++a) pos2[a] = k + (a - r);

    std::vector<int> sigma(m);
    for (int i = 0; i < m; ++i) sigma[i] = i;
    std::vector<std::vector<long>> count(t, std::vector<long>(t, 0));
    long total = 0;
    do {
        ++total;
        auto it1 = key_to_flag.find(pattern_key(j, sigma.data(), pos1.data(), k));
        if (it1 == key_to_flag.end()) continue;
        auto it2 = key_to_flag.find(pattern_key(j, sigma.data(), pos2.data(), k));
        if (it2 == key_to_flag.end()) continue;
        ++count[it1->second][it2->second];
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    RatMatrix out(t);
    for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b) out.at(a, b) = rat(count[a][b], total);
    return out;
}

Rat a_coeff(const Flag& f1, const Flag& f2, const Graph& j) {
    check_pair(f1, f2);
    int r = f1.r, k = f1.k(), m = 2 * k - r;
    if (j.n != m) throw std::invalid_argument("a_coeff: v(J) must equal 2k-r");

    std::vector<int> pos1(k), pos2(k);
    for (int a = 0; a < k; ++a) pos1[a] = a;
    for (int a = 0; a < r; ++a) pos2[a] = a;
    for (int a = r; a < k; ++a) pos2[a] = k + (a - r);

    uint32_t key1 = static_cast<uint32_t>(encode_bits(f1.g));
    uint32_t key2 = static_cast<uint32_t>(encode_bits(f2.g));

    std::vector<int> sigma(m);
    for (int i = 0; i < m; ++i) sigma[i] = i;
    long hits = 0, total = 0;
    do {
        ++total;
        if (pattern_key(j, sigma.data(), pos1.data(), k) != key1) continue;
        if (pattern_key(j, sigma.data(), pos2.data(), k) != key2) continue;
        ++hits;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return rat(hits, total);
}

Rat a_coeff_lifted(const Flag& f1, const Flag& f2, const Graph& j, int ell) {
    check_pair(f1, f2);
    int m = 2 * f1.k() - f1.r;
    if (ell < m) throw std::invalid_argument("a_coeff_lifted: level below 2k-r");
    if (j.n != ell) throw std::invalid_argument("a_coeff_lifted: v(J) must equal the level");
    if (ell == m) return a_coeff(f1, f2, j);
    Rat total = 0;
    for (const Graph& j0 : enumerate_graphs(m)) {
        Rat d = induced_density(j0, j);
        if (d == 0) continue;
        total += a_coeff(f1, f2, j0) * d;
    }
    return total;
}

std::string to_flag_text(const Flag& f) {
    std::string body = to_edge_list_text(f.g);
    return std::to_string(f.k()) + " " + std::to_string(f.r) + body.substr(body.find(';'));
}

Flag from_flag_text(std::string_view s) {
    auto semi = s.find(';');
    if (semi == std::string_view::npos) throw std::invalid_argument("flag text: missing ';'");
    std::string head(s.substr(0, semi));
    int k = 0, r = 0;
    if (sscanf(head.c_str(), "%d %d", &k, &r) != 2)
        throw std::invalid_argument("flag text: expected 'k r; edges'");
    Graph g = from_edge_list_text(std::to_string(k) + std::string(s.substr(semi)));
    if (r < 0 || r > k) throw std::invalid_argument("flag text: bad root count");
    return {g, r};
}

} // namespace ramsey
