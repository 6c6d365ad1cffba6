#include "ramsey/weighted.hpp"

#include "ramsey/parallel.hpp"

#include <atomic>
#include <exception>
#include <stdexcept>

namespace ramsey {

namespace {

constexpr long kBudget = 1000000000L; // partial products per evaluation

// Order H's vertices so that each new vertex sees as many already-placed
// neighbours as possible; this is what makes the backtracking prune.
std::vector<int> pruning_order(const Graph& h) {
    std::vector<int> order;
    std::vector<bool> placed(h.n, false);
    for (int step = 0; step < h.n; ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int v = 0; v < h.n; ++v) {
            if (placed[v]) continue;
            int links = 0;
            for (int u : order)
                if (h.has_edge(u, v)) ++links;
            int deg = h.degree(v);
            if (links > best_links || (links == best_links && deg > best_deg)) {
                best = v;
                best_links = links;
                best_deg = deg;
            }
        }
        order.push_back(best);
        placed[best] = true;
    }
    return order;
}

// factors[p] lists (earlier position q, is_edge): the pair factor between the
// vertex placed at p and the one at q. Hom plans take edges only; induced
// plans take every pair.
struct MapPlan {
    int hn = 0;
    std::vector<std::vector<std::pair<int, bool>>> factors;
};

MapPlan make_plan(const Graph& h, bool induced) {
    MapPlan plan;
    plan.hn = h.n;
    std::vector<int> order = pruning_order(h);
    plan.factors.resize(h.n);
    for (int p = 1; p < h.n; ++p)
        for (int q = 0; q < p; ++q) {
            bool edge = h.has_edge(order[q], order[p]);
            if (edge || induced) plan.factors[p].emplace_back(q, edge);
        }
    return plan;
}

bool all_zero_one(const WeightedGraph& w) {
    for (const Rat& x : w.w)
        if (x != 0 && x != 1) return false;
    return true;
}

struct Budget {
    std::atomic<long>* shared;
    long local = 0;
    void spend(long amount) {
        local += amount;
        if (local >= 65536) flush();
    }
    void flush() {
        if (shared->fetch_add(local) + local > kBudget)
            throw std::runtime_error("density evaluation exceeded the 1e9 partial-product budget");
        local = 0;
    }
};

// 0/1 weights: count maps whose factor product is 1 using bitmask candidate
// sets. ones[x] holds the parts y with w(x,y) = 1, diagonal included.
unsigned long long count_01(const MapPlan& plan, const std::vector<uint32_t>& ones, int n,
                            int level, uint32_t* assigned, Budget& budget) {
    uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    unsigned long long total = 0;
    uint32_t cand = full;
    for (auto [q, edge] : plan.factors[level])
        cand &= edge ? ones[assigned[q]] : ~ones[assigned[q]];
    cand &= full;
    budget.spend(plan.factors[level].size() + 1);
    if (level + 1 == plan.hn) return __builtin_popcount(cand);
    while (cand) {
        int x = __builtin_ctz(cand);
        cand &= cand - 1;
        assigned[level] = static_cast<uint32_t>(x);
        total += count_01(plan, ones, n, level + 1, assigned, budget);
    }
    return total;
}

Rat sum_weighted(const MapPlan& plan, const WeightedGraph& w, int level, uint32_t* assigned,
                 const Rat& partial, Budget& budget) {
    Rat total = 0;
    for (int x = 0; x < w.n; ++x) {
        Rat product = partial;
        budget.spend(plan.factors[level].size() + 1);
        for (auto [q, edge] : plan.factors[level]) {
            const Rat& entry = w.at(assigned[q], x);
            if (edge)
                product *= entry;
            else
                product *= Rat(1) - entry;
            if (product == 0) break;
        }
        if (product == 0) continue;
        if (level + 1 == plan.hn) {
            total += product;
        } else {
            assigned[level] = static_cast<uint32_t>(x);
            total += sum_weighted(plan, w, level + 1, assigned, product, budget);
        }
    }
    return total;
}

// Average of the factor product over all n^v maps. Parallelizes over the
// first vertex choice; rational sums reduce exactly, so the result is
// independent of the schedule.
Rat map_average(const Graph& h, const WeightedGraph& w, bool induced) {
    w.validate();
    MapPlan plan = make_plan(h, induced);
    std::atomic<long> spent{0};
    Rat numerator = 0;
    int n = w.n;
    if (h.n == 0) return 1;

    std::exception_ptr failure = nullptr;

    if (all_zero_one(w)) {
        std::vector<uint32_t> ones(n, 0);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (w.at(x, y) == 1) ones[x] |= 1u << y;
        unsigned long long count = 0;
        if (h.n == 1) {
            count = n;
        } else {
            int nt = threads_for(n);
            std::vector<unsigned long long> partial(n, 0);
#pragma omp parallel for schedule(dynamic) num_threads(nt)
            for (int x = 0; x < n; ++x) {
                try {
                    Budget budget{&spent};
                    uint32_t assigned[11];
                    assigned[0] = static_cast<uint32_t>(x);
                    partial[x] = count_01(plan, ones, n, 1, assigned, budget);
                    budget.flush();
                } catch (...) {
#pragma omp critical
                    failure = std::current_exception();
                }
            }
            if (failure) std::rethrow_exception(failure);
            for (auto c : partial) count += c;
        }
        return rat_of(Int(static_cast<unsigned long>(count)), rat_pow(Rat(n), h.n).get_num());
    }

    if (h.n == 1) return 1;
    int nt = threads_for(n);
    std::vector<Rat> partial(n, Rat(0));
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (int x = 0; x < n; ++x) {
        try {
            Budget budget{&spent};
            uint32_t assigned[11];
            assigned[0] = static_cast<uint32_t>(x);
            partial[x] = sum_weighted(plan, w, 1, assigned, Rat(1), budget);
            budget.flush();
        } catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    for (const Rat& p : partial) numerator += p;
    return numerator / rat_pow(Rat(n), h.n);
}

} // namespace

void WeightedGraph::validate() const {
    if (n < 1) throw std::invalid_argument("WeightedGraph: empty");
    if (static_cast<size_t>(n) * n != w.size())
        throw std::invalid_argument("WeightedGraph: bad entry count");
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (at(i, j) != at(j, i)) throw std::invalid_argument("WeightedGraph: not symmetric");
            if (at(i, j) < 0 || at(i, j) > 1)
                throw std::invalid_argument("WeightedGraph: weight outside [0,1]");
        }
}

WeightedGraph from_graph(const Graph& g) {
    WeightedGraph w(g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (g.has_edge(i, j)) w.at(i, j) = 1;
    return w;
}

WeightedGraph complement_w(const WeightedGraph& w) {
    WeightedGraph c(w.n);
    for (size_t i = 0; i < w.w.size(); ++i) c.w[i] = Rat(1) - w.w[i];
    return c;
}

Rat hom_density(const Graph& h, const WeightedGraph& w) {
    if (h.n > 10) throw std::invalid_argument("hom_density: v(H) must be <= 10");
    if (w.n > 27) throw std::invalid_argument("hom_density: at most 27 parts supported");
    return map_average(h, w, false);
}

Rat hom_density(const Graph& h, const ConstGraphon& c) {
    if (c.p < 0 || c.p > 1) throw std::invalid_argument("ConstGraphon: p outside [0,1]");
    return rat_pow(c.p, h.edge_count());
}

Rat hom_density_serial(const Graph& h, const WeightedGraph& w) {
    w.validate();
    auto edges = h.edges();
    std::vector<int> phi(h.n, 0);
    Rat total = 0;
    for (;;) {
        Rat product = 1;
        for (auto [u, v] : edges) {
            product *= w.at(phi[u], phi[v]);
            if (product == 0) break;
        }
        total += product;
        int pos = h.n - 1;
        while (pos >= 0 && ++phi[pos] == w.n) phi[pos--] = 0;
        if (pos < 0) break;
    }
    return total / rat_pow(Rat(w.n), h.n);
}

Rat t_inj(const Graph& h, const Graph& j) {
    if (h.n > j.n) throw std::invalid_argument("t_inj: v(H) exceeds v(J)");
    MapPlan plan = make_plan(h, false);
    std::vector<uint32_t> ones(j.n);
    for (int x = 0; x < j.n; ++x) ones[x] = j.adj[x];
    uint32_t full = (1u << j.n) - 1;

    // injective DFS over candidate masks
    struct Rec {
        const MapPlan& plan;
        const std::vector<uint32_t>& ones;
        uint32_t full;
        uint32_t assigned[11];
        unsigned long long run(int level, uint32_t used) {
            uint32_t cand = full & ~used;
            for (auto [q, edge] : plan.factors[level])
                if (edge) cand &= ones[assigned[q]];
            if (level + 1 == plan.hn) return __builtin_popcount(cand);
            unsigned long long total = 0;
            while (cand) {
                int x = __builtin_ctz(cand);
                cand &= cand - 1;
                assigned[level] = static_cast<uint32_t>(x);
                total += run(level + 1, used | (1u << x));
            }
            return total;
        }
    } rec{plan, ones, full, {}};

    unsigned long long count = h.n == 0 ? 1 : rec.run(0, 0);
    Int denom = 1;
    for (int i = 0; i < h.n; ++i) denom *= j.n - i;
    return rat_of(Int(static_cast<unsigned long>(count)), denom);
}

Rat induced_density(const Graph& f, const Graph& j) {
    if (f.n > j.n) throw std::invalid_argument("induced_density: v(F) exceeds v(J)");
    CanonicalForm target = canonical_form(f);
    std::vector<int> pick(f.n);
    for (int i = 0; i < f.n; ++i) pick[i] = i;
    long hits = 0, subsets = 0;
    for (;;) {
        Graph sub;
        sub.n = f.n;
        for (int a = 0; a < f.n; ++a)
            for (int b = a + 1; b < f.n; ++b)
                if (j.has_edge(pick[a], pick[b])) sub.add_edge(a, b);
        ++subsets;
        if (canonical_form(sub) == target) ++hits;
        int i = f.n - 1;
        while (i >= 0 && pick[i] == j.n - f.n + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int t = i + 1; t < f.n; ++t) pick[t] = pick[t - 1] + 1;
    }
    return rat(hits, subsets);
}

Rat t_ind_weighted(const Graph& j, const WeightedGraph& w) {
    if (j.n > 7) throw std::invalid_argument("t_ind_weighted: v(J) must be <= 7");
    return map_average(j, w, true);
}

Rat t_ind_weighted_serial(const Graph& j, const WeightedGraph& w) {
    w.validate();
    std::vector<int> phi(j.n, 0);
    Rat total = 0;
    for (;;) {
        Rat product = 1;
        for (int u = 0; u < j.n && product != 0; ++u)
            for (int v = u + 1; v < j.n && product != 0; ++v) {
                const Rat& entry = w.at(phi[u], phi[v]);
                product *= j.has_edge(u, v) ? entry : Rat(1) - entry;
            }
        total += product;
        int pos = j.n - 1;
        while (pos >= 0 && ++phi[pos] == w.n) phi[pos--] = 0;
        if (pos < 0) break;
    }
    return total / rat_pow(Rat(w.n), j.n);
}

Rat d_weighted(const Graph& j, const WeightedGraph& w) {
    Rat scale = rat_of(factorial(j.n), Int(automorphism_count(j)));
    return scale * t_ind_weighted(j, w);
}

Rat cycle_density_trace(int k, const Graph& g) {
    if (k < 3 || k > 12) throw std::invalid_argument("cycle_density_trace: k must be in 3..12");
    int n = g.n;
    std::vector<Int> a(static_cast<size_t>(n) * n, Int(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.has_edge(i, j)) a[i * n + j] = 1;
    std::vector<Int> power = a;
    std::vector<Int> next(static_cast<size_t>(n) * n);
    for (int step = 1; step < k; ++step) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Int sum = 0;
                for (int t = 0; t < n; ++t) sum += power[i * n + t] * a[t * n + j];
                next[i * n + j] = sum;
            }
        power.swap(next);
    }
    Int trace = 0;
    for (int i = 0; i < n; ++i) trace += power[i * n + i];
    return rat_of(trace, rat_pow(Rat(n), k).get_num());
}

std::pair<Rat, Rat> goodman_check(const WeightedGraph& w) {
    Graph k2 = named_graph("K2"), k3 = named_graph("K3"), p3 = named_graph("P3");
    WeightedGraph wc = complement_w(w);
    Rat lhs = hom_density(k3, w) + hom_density(k3, wc);
    Rat e = hom_density(k2, w), ec = hom_density(k2, wc);
    Rat path = hom_density(p3, w), pathc = hom_density(p3, wc);
    Rat rhs = e * e * e + ec * ec * ec + rat(3, 2) * (path + pathc - e * e - ec * ec);
    return {lhs, rhs};
}

namespace {

void check_objective_args(const Graph& h2, const Rat& lambda, bool allow_empty_h2) {
    if (lambda < 0 || lambda > 2) throw std::invalid_argument("objective: lambda outside [0,2]");
    if (!allow_empty_h2 && h2.edge_count() == 0)
        throw std::invalid_argument("objective: H2 is empty (the constant is trivially 2); pass allow_empty_h2 to override");
}

} // namespace

Rat objective(const Graph& h1, const Graph& h2, const Rat& lambda, const WeightedGraph& w,
              bool allow_empty_h2) {
    check_objective_args(h2, lambda, allow_empty_h2);
    return lambda * hom_density(h1, w) + (Rat(2) - lambda) * hom_density(h2, complement_w(w));
}

Rat objective(const Graph& h1, const Graph& h2, const Rat& lambda, const ConstGraphon& c,
              bool allow_empty_h2) {
    check_objective_args(h2, lambda, allow_empty_h2);
    ConstGraphon cc{Rat(1) - c.p};
    return lambda * hom_density(h1, c) + (Rat(2) - lambda) * hom_density(h2, cc);
}

Rat trivial_lower_bound(const Rat& lambda, int ramsey_number, int v1, int v2) {
    if (lambda < 0 || lambda > 2)
        throw std::invalid_argument("trivial_lower_bound: lambda outside [0,2]");
    int h = std::max(v1, v2);
    if (ramsey_number < h || v1 < 1 || v2 < 1)
        throw std::invalid_argument("trivial_lower_bound: invalid Ramsey number");
    Rat two_minus = Rat(2) - lambda;
    Rat ell = std::min(lambda, two_minus);
    return ell * rat_of(factorial(ramsey_number - h), factorial(ramsey_number));
}

Rat compute_lambda0(int e1, int e2, const Rat& p) {
    if (e1 < 1 || e2 < 1) throw std::invalid_argument("compute_lambda0: edge counts must be >= 1");
    if (p <= 0 || p >= 1) throw std::invalid_argument("compute_lambda0: p must lie strictly in (0,1)");
    Rat red = Rat(e1) * rat_pow(p, e1 - 1);
    Rat blue = Rat(e2) * rat_pow(Rat(1) - p, e2 - 1);
    return Rat(2) * blue / (red + blue);
}

std::pair<Rat, Rat> balance_p(int e1, int e2, const Rat& precision) {
    if (e1 < 1 || e2 < 1) throw std::invalid_argument("balance_p: edge counts must be >= 1");
    if (e1 == e2) return {rat(1, 2), rat(1, 2)};
    // p^e1 - (1-p)^e2 is strictly increasing on [0,1], negative at 0,
    // positive at 1.
    Rat lo = 0, hi = 1;
    while (hi - lo > precision) {
        Rat mid = (lo + hi) / 2;
        Rat f = rat_pow(mid, e1) - rat_pow(Rat(1) - mid, e2);
        if (f == 0) return {mid, mid};
        if (f > 0)
            hi = mid;
        else
            lo = mid;
    }
    return {lo, hi};
}

} // namespace ramsey
