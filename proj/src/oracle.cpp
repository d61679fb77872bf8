#include "csf/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <set>
#include <string>
#include <thread>

namespace csf {

namespace {

constexpr int kSubsetsEdgeLimit = 30;
constexpr int kComponentsOrderLimit = 14;
constexpr int kComponentsEdgeLimit = 62;
constexpr int kAutoSubsetsEdges = 20;
constexpr int kChromaticOrderLimit = 12;

using SignedPartitionSums = std::map<std::vector<int>, long long>;

// Component-size partition of (V, S) for the edge subset encoded by mask.
void accumulate_mask_range(const Graph& g, const std::vector<std::pair<int, int>>& edges,
                           unsigned long long lo, unsigned long long hi,
                           SignedPartitionSums& acc) {
    int n = g.order();
    std::vector<int> parent(n), size(n);
    std::vector<int> sizes;
    for (unsigned long long mask = lo; mask < hi; ++mask) {
        for (int v = 0; v < n; ++v) {
            parent[v] = v;
            size[v] = 1;
        }
        int edge_bits = 0;
        unsigned long long m = mask;
        while (m) {
            int e = std::countr_zero(m);
            m &= m - 1;
            ++edge_bits;
            int a = edges[e].first, b = edges[e].second;
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            while (parent[b] != b) b = parent[b] = parent[parent[b]];
            if (a != b) {
                if (size[a] < size[b]) std::swap(a, b);
                parent[b] = a;
                size[a] += size[b];
            }
        }
        sizes.clear();
        for (int v = 0; v < n; ++v)
            if (parent[v] == v) sizes.push_back(size[v]);
        std::sort(sizes.begin(), sizes.end(), std::greater<int>());
        acc[sizes] += (edge_bits % 2 == 0) ? 1 : -1;
    }
}

SymFunc finish_power_sums(const SignedPartitionSums& sums, int degree) {
    SymFunc p(Basis::power_sum, degree);
    for (const auto& [sizes, coeff] : sums)
        if (coeff != 0) p.add_term(Partition(sizes), Rational(coeff));
    SymFunc e = p_to_e(p);
    e.assert_integral("csf_oracle");
    return e;
}

}  // namespace

SymFunc csf_oracle_subsets(const Graph& g, int workers) {
    if (g.edge_count() > kSubsetsEdgeLimit)
        throw ResourceLimitError("csf_oracle: " + std::to_string(g.edge_count()) +
                                 " edges exceeds the subset-enumeration limit of " +
                                 std::to_string(kSubsetsEdgeLimit));
    auto edges = g.edges();
    unsigned long long total = 1ULL << edges.size();
    workers = std::max(1, workers);
    if (workers == 1 || total < 4096) {
        SignedPartitionSums acc;
        accumulate_mask_range(g, edges, 0, total, acc);
        return finish_power_sums(acc, g.order());
    }
    std::vector<SignedPartitionSums> partial(workers);
    std::vector<std::thread> threads;
    std::mutex err_mu;
    std::exception_ptr err;
    unsigned long long chunk = total / workers + 1;
    for (int w = 0; w < workers; ++w) {
        unsigned long long lo = std::min(total, w * chunk);
        unsigned long long hi = std::min(total, lo + chunk);
        threads.emplace_back([&, lo, hi, w] {
            try {
                accumulate_mask_range(g, edges, lo, hi, partial[w]);
            } catch (...) {
                std::scoped_lock lock(err_mu);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (err) std::rethrow_exception(err);
    SignedPartitionSums acc;
    for (const auto& part : partial)
        for (const auto& [sizes, coeff] : part) acc[sizes] += coeff;
    return finish_power_sums(acc, g.order());
}

SymFunc csf_oracle_components(const Graph& g) {
    if (g.order() > kComponentsOrderLimit || g.edge_count() > kComponentsEdgeLimit)
        throw ResourceLimitError("csf_oracle: order " + std::to_string(g.order()) + " with " +
                                 std::to_string(g.edge_count()) +
                                 " edges exceeds the component-DP limits (order <= " +
                                 std::to_string(kComponentsOrderLimit) + ", edges <= " +
                                 std::to_string(kComponentsEdgeLimit) + ")");
    int n = g.order();
    if (n == 0) return SymFunc::one(Basis::elementary);

    std::vector<unsigned> adj(n, 0);
    for (const auto& [a, b] : g.edges()) {
        adj[a] |= 1u << b;
        adj[b] |= 1u << a;
    }
    unsigned full = (1u << n) - 1;

    // indep[U] == 1 iff U induces no edges; this equals the signed sum of all
    // edge subsets inside U, the base of the inclusion-exclusion below.
    std::vector<char> indep(full + 1, 1);
    for (unsigned U = 1; U <= full; ++U) {
        int v = std::countr_zero(U);
        unsigned rest = U & (U - 1);
        indep[U] = indep[rest] && !(adj[v] & rest);
    }

    // q[U]: signed count of connected spanning edge subsets of the induced
    // subgraph on U. Extracted from indep[] by peeling the component of the
    // lowest vertex of U.
    std::vector<long long> q(full + 1, 0);
    for (unsigned U = 1; U <= full; ++U) {
        unsigned low = U & (~U + 1);
        unsigned rest = U ^ low;
        long long val = indep[U];
        for (unsigned sub = rest;; sub = (sub - 1) & rest) {
            if (sub != rest) {  // proper submasks W of U containing the lowest vertex
                unsigned W = sub | low;
                if (q[W] != 0 && indep[U ^ W]) val -= q[W];
            }
            if (sub == 0) break;
        }
        q[U] = val;
    }

    // Partitions of popcount(U) packed as 4-bit multiplicity counters per
    // part size (order <= 14 keeps every counter below 16).
    std::vector<std::unordered_map<unsigned long long, long long>> P(full + 1);
    P[0][0] = 1;
    for (unsigned U = 1; U <= full; ++U) {
        unsigned low = U & (~U + 1);
        unsigned rest = U ^ low;
        auto& out = P[U];
        for (unsigned sub = rest;; sub = (sub - 1) & rest) {
            unsigned W = sub | low;
            if (q[W] != 0) {
                unsigned long long bump = 1ULL << (4 * (std::popcount(W) - 1));
                for (const auto& [key, val] : P[U ^ W]) out[key + bump] += q[W] * val;
            }
            if (sub == 0) break;
        }
    }

    SignedPartitionSums sums;
    for (const auto& [key, val] : P[full]) {
        if (val == 0) continue;
        std::vector<int> sizes;
        for (int part = kComponentsOrderLimit; part >= 1; --part) {
            int count = static_cast<int>((key >> (4 * (part - 1))) & 0xf);
            for (int i = 0; i < count; ++i) sizes.push_back(part);
        }
        sums[sizes] += val;
    }
    return finish_power_sums(sums, n);
}

SymFunc csf_oracle(const Graph& g, const OracleOptions& opts) {
    switch (opts.engine) {
        case OracleOptions::Engine::subsets:
            return csf_oracle_subsets(g, opts.workers);
        case OracleOptions::Engine::components:
            return csf_oracle_components(g);
        case OracleOptions::Engine::automatic:
            break;
    }
    if (g.edge_count() <= kAutoSubsetsEdges) return csf_oracle_subsets(g, opts.workers);
    if (g.order() <= kComponentsOrderLimit && g.edge_count() <= kComponentsEdgeLimit)
        return csf_oracle_components(g);
    if (g.edge_count() <= kSubsetsEdgeLimit) return csf_oracle_subsets(g, opts.workers);
    throw ResourceLimitError("csf_oracle: graph with order " + std::to_string(g.order()) +
                             " and " + std::to_string(g.edge_count()) +
                             " edges exceeds all engine limits");
}

namespace {

// Contracts edge (u, v), dropping parallel edges; for deletion-contraction.
Graph contract_edge(const Graph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    Graph out(g.order() - 1);
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : g.edges()) {
        if (a == v) a = u;
        if (b == v) b = u;
        if (a == b) continue;
        if (a > v) --a;
        if (b > v) --b;
        if (a > b) std::swap(a, b);
        if (seen.insert({a, b}).second) out.add_edge(a, b);
    }
    return out;
}

BigInt chromatic_rec(const Graph& g, const BigInt& k_value,
                     std::unordered_map<std::string, BigInt>& memo) {
    if (g.edge_count() == 0) {
        BigInt r = 1;
        for (int i = 0; i < g.order(); ++i) r *= k_value;
        return r;
    }
    std::string key = g.canonical_key();
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    auto [u, v] = g.edges().front();
    Graph deleted = g;
    {
        Graph d(g.order());
        for (auto [a, b] : g.edges())
            if (!(a == u && b == v)) d.add_edge(a, b);
        deleted = std::move(d);
    }
    BigInt result = chromatic_rec(deleted, k_value, memo) -
                    chromatic_rec(contract_edge(g, u, v), k_value, memo);
    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

BigInt chromatic_poly(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("chromatic_poly: negative color count");
    if (g.order() > kChromaticOrderLimit)
        throw ResourceLimitError("chromatic_poly: order " + std::to_string(g.order()) +
                                 " exceeds the limit of " +
                                 std::to_string(kChromaticOrderLimit));
    std::unordered_map<std::string, BigInt> memo;
    return chromatic_rec(g, BigInt(k), memo);
}

SymFunc OracleCache::csf(const Graph& g) {
    std::string key = g.canonical_key();
    if (auto hit = lookup(key)) return *hit;
    SymFunc result = csf_oracle(g, opts_);
    store(key, result);
    return result;
}

std::optional<SymFunc> OracleCache::lookup(const std::string& key) const {
    std::scoped_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

void OracleCache::store(const std::string& key, const SymFunc& f) {
    std::scoped_lock lock(mu_);
    map_.insert_or_assign(key, f);
}

std::vector<std::pair<std::string, SymFunc>> OracleCache::snapshot() const {
    std::scoped_lock lock(mu_);
    std::vector<std::pair<std::string, SymFunc>> out(map_.begin(), map_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::size_t OracleCache::size() const {
    std::scoped_lock lock(mu_);
    return map_.size();
}

SymFunc csf_cached(const Graph& g, OracleCache* cache) {
    return cache ? cache->csf(g) : csf_oracle(g);
}

namespace {

Graph with_edges(const Graph& g, const std::vector<std::pair<int, int>>& extra) {
    Graph out = g;
    for (auto [a, b] : extra) out.add_edge(a, b);
    return out;
}

Graph without_edges(const Graph& g, const std::vector<std::pair<int, int>>& removed) {
    std::set<std::pair<int, int>> drop;
    for (auto [a, b] : removed) drop.insert(std::minmax(a, b));
    Graph out(g.order());
    for (auto e : g.edges())
        if (!drop.count(e)) out.add_edge(e.first, e.second);
    return out;
}

}  // namespace

IdentityReport check_triple_deletion(const Graph& g, const std::array<int, 3>& triple,
                                     OracleCache* cache) {
    auto [t0, t1, t2] = triple;
    std::set<int> distinct{t0, t1, t2};
    if (distinct.size() != 3)
        throw std::invalid_argument("check_triple_deletion: vertices must be distinct");
    if (g.has_edge(t0, t1) || g.has_edge(t0, t2) || g.has_edge(t1, t2))
        throw std::invalid_argument("check_triple_deletion: triple is not stable");

    std::pair<int, int> e1{t0, t1}, e2{t0, t2}, e3{t1, t2};
    auto x = [&](const std::vector<std::pair<int, int>>& extra) {
        return csf_cached(with_edges(g, extra), cache);
    };

    IdentityReport report;
    report.check = "triple-deletion";
    report.detail = "triple (" + std::to_string(t0) + "," + std::to_string(t1) + "," +
                    std::to_string(t2) + ") on " + g.canonical_key();
    SymFunc r1 = x({e1, e2}) - (x({e1}) + x({e2, e3}) - x({e3}));
    SymFunc r2 = x({e1, e2, e3}) - (x({e1, e3}) + x({e2, e3}) - x({e3}));
    if (!r1.is_zero()) report.residuals.emplace_back("two-edge identity", r1);
    if (!r2.is_zero()) report.residuals.emplace_back("three-edge identity", r2);
    report.pass = report.residuals.empty();
    return report;
}

IdentityReport check_ap(const Graph& g, const std::vector<int>& tribe, int x, ApMode mode,
                        OracleCache* cache) {
    if (tribe.empty()) throw std::invalid_argument("check_ap: empty tribe");
    std::set<int> distinct(tribe.begin(), tribe.end());
    if (distinct.size() != tribe.size() || distinct.count(x))
        throw std::invalid_argument("check_ap: tribe vertices and x must be distinct");
    for (size_t i = 0; i < tribe.size(); ++i)
        for (size_t j = i + 1; j < tribe.size(); ++j)
            if (!g.has_edge(tribe[i], tribe[j]))
                throw std::invalid_argument("check_ap: tribe is not a clique");
    for (int v : tribe) {
        bool adjacent = g.has_edge(v, x);
        if (mode == ApMode::add && adjacent)
            throw std::invalid_argument("check_ap: add mode requires x non-adjacent to the tribe");
        if (mode == ApMode::remove && !adjacent)
            throw std::invalid_argument("check_ap: remove mode requires x adjacent to the tribe");
    }
    // Same closed neighborhoods in G - x.
    auto closed_wo_x = [&](int v) {
        std::set<int> s{v};
        for (int u : g.neighbors(v))
            if (u != x) s.insert(u);
        return s;
    };
    for (size_t i = 1; i < tribe.size(); ++i)
        if (closed_wo_x(tribe[i]) != closed_wo_x(tribe[0]))
            throw std::invalid_argument(
                "check_ap: tribe vertices do not share closed neighborhoods in G - x");

    int size = static_cast<int>(tribe.size());
    std::vector<SymFunc> xs;
    for (int i = 0; i <= size; ++i) {
        std::vector<std::pair<int, int>> touched;
        for (int t = 0; t < i; ++t) touched.push_back({x, tribe[t]});
        Graph gi = (mode == ApMode::add) ? with_edges(g, touched) : without_edges(g, touched);
        xs.push_back(csf_cached(gi, cache));
    }

    IdentityReport report;
    report.check = (mode == ApMode::add) ? "ap-add" : "ap-remove";
    report.detail = "tribe size " + std::to_string(size) + " on " + g.canonical_key();
    for (int i = 0; i <= size; ++i)
        for (int j = i; j <= size; ++j)
            for (int k = j; k <= size; ++k) {
                SymFunc r = xs[k].scale(Rational(i - j)) + xs[i].scale(Rational(j - k)) +
                            xs[j].scale(Rational(k - i));
                if (!r.is_zero())
                    report.residuals.emplace_back("(i,j,k)=(" + std::to_string(i) + "," +
                                                      std::to_string(j) + "," +
                                                      std::to_string(k) + ")",
                                                  r);
            }
    report.pass = report.residuals.empty();
    return report;
}

std::vector<PositivityFailure> positivity_scan(const std::vector<NamedGraph>& graphs,
                                               int workers, OracleCache* cache) {
    workers = std::max(1, workers);
    std::vector<std::optional<PositivityFailure>> slots(graphs.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= graphs.size()) return;
            SymFunc f = csf_cached(graphs[i].graph, cache);
            PositivityWitness w = is_e_positive(f);
            if (!w.positive)
                slots[i] = PositivityFailure{graphs[i].spec, w.partition, w.coefficient};
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        std::mutex err_mu;
        std::exception_ptr err;
        for (int w = 0; w < workers; ++w)
            threads.emplace_back([&] {
                try {
                    worker();
                } catch (...) {
                    std::scoped_lock lock(err_mu);
                    if (!err) err = std::current_exception();
                }
            });
        for (auto& t : threads) t.join();
        if (err) std::rethrow_exception(err);
    }
    std::vector<PositivityFailure> out;
    for (auto& slot : slots)
        if (slot) out.push_back(std::move(*slot));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.spec < b.spec; });
    return out;
}

namespace {

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

std::vector<NamedGraph> hat_chain_family(int max_order) {
    std::vector<NamedGraph> out;
    // order = sum(ms) + sum(taus) - l + 1 with l cycles of size >= 2
    std::vector<int> ms, taus;
    std::function<void(int)> pick_taus = [&](int budget) {
        if (taus.size() == ms.size() + 1) {
            out.push_back(NamedGraph{"hatchain:ms=" + join_ints(ms) + ";taus=" + join_ints(taus),
                                     hat_chain(ms, taus)});
            return;
        }
        for (int t = 0; t <= budget; ++t) {
            taus.push_back(t);
            pick_taus(budget - t);
            taus.pop_back();
        }
    };
    std::function<void(int)> pick_ms = [&](int budget) {
        if (!ms.empty()) pick_taus(budget);
        if (ms.size() >= 16) return;
        for (int m = 2; m - 1 <= budget; ++m) {
            ms.push_back(m);
            pick_ms(budget - (m - 1));
            ms.pop_back();
        }
    };
    if (max_order >= 2) pick_ms(max_order - 1);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.spec < b.spec; });
    return out;
}

std::vector<NamedGraph> kayak_paddle_family(int max_order) {
    std::vector<NamedGraph> out;
    for (int g = 3; g <= max_order; ++g)
        for (int h = g; h <= max_order; ++h)
            for (int k = 1; g + h + k - 1 <= max_order; ++k)
                out.push_back(NamedGraph{"kayak:g=" + std::to_string(g) + ",h=" +
                                             std::to_string(h) + ",k=" + std::to_string(k),
                                         kayak_paddle(g, h, k)});
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.spec < b.spec; });
    return out;
}

Graph random_stable_triple_graph(std::mt19937& rng, int order, std::array<int, 3>& triple) {
    if (order < 3) throw std::invalid_argument("random_stable_triple_graph: order must be >= 3");
    std::uniform_int_distribution<int> coin(0, 99);
    for (;;) {
        Graph g(order);
        for (int i = 0; i < order; ++i)
            for (int j = i + 1; j < order; ++j)
                if (coin(rng) < 40) g.add_edge(i, j);
        for (int a = 0; a < order; ++a)
            for (int b = a + 1; b < order; ++b)
                for (int c = b + 1; c < order; ++c)
                    if (!g.has_edge(a, b) && !g.has_edge(a, c) && !g.has_edge(b, c)) {
                        triple = {a, b, c};
                        return g;
                    }
    }
}

Graph random_tribe_graph(std::mt19937& rng, int max_order, ApMode mode, std::vector<int>& tribe,
                         int& x) {
    // Base graph R, then a clique of tribe vertices all adjacent to the same
    // subset of R, then x adjacent to a random subset of R (plus, in remove
    // mode, to the whole tribe).
    std::uniform_int_distribution<int> tribe_size_dist(1, 3);
    std::uniform_int_distribution<int> base_size_dist(1, std::max(1, max_order - 5));
    std::uniform_int_distribution<int> coin(0, 1);
    int k = tribe_size_dist(rng);
    int base = std::min(base_size_dist(rng), max_order - k - 1);
    base = std::max(base, 0);
    Graph g(base + k + 1);
    std::uniform_int_distribution<int> edge_coin(0, 99);
    for (int i = 0; i < base; ++i)
        for (int j = i + 1; j < base; ++j)
            if (edge_coin(rng) < 45) g.add_edge(i, j);
    std::vector<int> shared;
    for (int i = 0; i < base; ++i)
        if (coin(rng)) shared.push_back(i);
    tribe.clear();
    for (int t = 0; t < k; ++t) tribe.push_back(base + t);
    for (int t = 0; t < k; ++t) {
        for (int s : shared) g.add_edge(tribe[t], s);
        for (int u = 0; u < t; ++u) g.add_edge(tribe[u], tribe[t]);
    }
    x = base + k;
    for (int i = 0; i < base; ++i)
        if (coin(rng)) g.add_edge(x, i);
    if (mode == ApMode::remove)
        for (int t : tribe) g.add_edge(x, t);
    return g;
}

}  // namespace csf
