#pragma once

#include <array>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "csf/graph.hpp"
#include "csf/symfunc.hpp"

namespace csf {

/// Thrown when a computation would exceed a resource guard.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleOptions {
    enum class Engine { automatic, subsets, components };
    Engine engine = Engine::automatic;
    int workers = 1;  // used by the subsets engine
};

/// Exact chromatic symmetric function of g in the elementary basis, computed
/// from the signed edge-subset expansion in the power-sum basis. Two engines
/// evaluate the same sum:
///   subsets    — direct enumeration of edge subsets with union-find
///                component sizes; requires edge_count <= 30.
///   components — a signed connected-partition DP over vertex subsets;
///                requires order <= 14 and edge_count <= 62.
/// The automatic engine picks subsets for small edge sets and components
/// otherwise, and throws ResourceLimitError when neither guard admits g.
SymFunc csf_oracle(const Graph& g, const OracleOptions& opts = {});
SymFunc csf_oracle_subsets(const Graph& g, int workers = 1);
SymFunc csf_oracle_components(const Graph& g);

/// Number of proper colorings of g with k colors, by deletion-contraction.
/// Independent of csf_oracle. Requires order <= 12.
BigInt chromatic_poly(const Graph& g, int k);

/// Thread-safe memoization of oracle results keyed by the labeled-graph
/// serialization. Persistence to disk lives in io.hpp.
class OracleCache {
public:
    OracleCache() = default;
    explicit OracleCache(const OracleOptions& opts) : opts_(opts) {}

    SymFunc csf(const Graph& g);
    std::optional<SymFunc> lookup(const std::string& key) const;
    void store(const std::string& key, const SymFunc& f);
    std::vector<std::pair<std::string, SymFunc>> snapshot() const;
    std::size_t size() const;

private:
    OracleOptions opts_;
    mutable std::mutex mu_;
    std::unordered_map<std::string, SymFunc> map_;
};

/// Oracle evaluation through an optional cache.
SymFunc csf_cached(const Graph& g, OracleCache* cache);

struct IdentityReport {
    std::string check;
    std::string detail;
    bool pass = true;
    /// Left-minus-right residuals of the failing equations (empty on pass).
    std::vector<std::pair<std::string, SymFunc>> residuals;
};

/// Verifies both triple-deletion identities for a stable vertex triple
/// (t0, t1, t2), with e1 = t0t1, e2 = t0t2, e3 = t1t2:
///   X(G+e1+e2) = X(G+e1) + X(G+e2+e3) - X(G+e3)
///   X(G+e1+e2+e3) = X(G+e1+e3) + X(G+e2+e3) - X(G+e3)
IdentityReport check_triple_deletion(const Graph& g, const std::array<int, 3>& triple,
                                     OracleCache* cache = nullptr);

enum class ApMode { add, remove };

/// Verifies the arithmetic-progression identity
///   (i-j) X(G_k) + (j-k) X(G_i) + (k-i) X(G_j) = 0
/// for all 0 <= i <= j <= k <= |K|, where (K, x) is a tribe-vertex pair
/// (K a clique whose vertices share closed neighborhoods in G - x) and G_i
/// adds (mode add) or removes (mode remove) i edges between x and K.
IdentityReport check_ap(const Graph& g, const std::vector<int>& tribe, int x, ApMode mode,
                        OracleCache* cache = nullptr);

struct NamedGraph {
    std::string spec;
    Graph graph;
};

struct PositivityFailure {
    std::string spec;
    Partition witness;
    Rational coefficient;
};

/// Runs the oracle and a positivity check over each graph; returns all
/// non-e-positive cases with their first offending coefficient. Results are
/// ordered by spec string regardless of worker scheduling.
std::vector<PositivityFailure> positivity_scan(const std::vector<NamedGraph>& graphs,
                                               int workers = 1, OracleCache* cache = nullptr);

/// All hat-chains of order <= max_order (chains of adjacent-rooted cycles
/// with end tails), one entry per parameter tuple.
std::vector<NamedGraph> hat_chain_family(int max_order);

/// All kayak paddles P^k(C_g, C_h) of order <= max_order with g <= h and
/// k >= 1.
std::vector<NamedGraph> kayak_paddle_family(int max_order);

/// Random graph on `order` vertices with a guaranteed stable triple;
/// returns the triple through `triple`.
Graph random_stable_triple_graph(std::mt19937& rng, int order, std::array<int, 3>& triple);

/// Random instance with a valid tribe-vertex pair for the given mode;
/// returns the tribe clique and vertex x.
Graph random_tribe_graph(std::mt19937& rng, int max_order, ApMode mode,
                         std::vector<int>& tribe, int& x);

}  // namespace csf
