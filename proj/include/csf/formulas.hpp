#pragma once

#include <functional>
#include <vector>

#include "csf/graph.hpp"
#include "csf/oracle.hpp"
#include "csf/symfunc.hpp"

namespace csf {

/// Supplies the chromatic symmetric functions of tailed and path-joined node
/// graphs that the reduction formulas consume. The default providers build
/// the graphs and evaluate them through a memoized oracle; tests may inject
/// arbitrary functions to exercise a formula in isolation.
struct TailProvider {
    std::function<SymFunc(int)> first;   // t -> X of the first node with a tail of length t
    std::function<SymFunc(int)> second;  // t -> X of the second node with a tail of length t
    std::function<SymFunc(int)> bridge;  // k -> X of the nodes joined by a path of length k
    std::function<SymFunc(int)> merged;  // t -> X of the root-identified nodes with a tail t

    static TailProvider for_node(const RootedGraph& g, OracleCache& cache);
    static TailProvider for_pair(const RootedGraph& g, const RootedGraph& h, OracleCache& cache);
    /// Both nodes are single vertices; everything reduces to path functions
    /// and no oracle is needed.
    static TailProvider for_paths();

    TailProvider swapped() const { return TailProvider{second, first, bridge, merged}; }
};

// --- closed-form expansions on compositions ---

/// Path P_n: coefficient w_I on every composition I of n.
CompositionExpansion path_expansion(int n);

/// Lollipop K_a with a tail of length n - a: (a-1)! w_I on compositions with
/// last part >= a.
CompositionExpansion lollipop_expansion(int a, int n);

/// Tadpole C_(n-l) with a tail of length l: surplus(I, l+1) * w_I.
CompositionExpansion tadpole_expansion(int n, int l);

/// K-chain with clique sizes gamma (all >= 2), expanded over weak
/// compositions; zero parts contribute e_0 = 1 and are dropped from the
/// stored keys.
CompositionExpansion kchain_expansion(const std::vector<int>& gamma);

/// Clique-path-cycle P^b(K_a, C_c): the three-case coefficient c_K w_K (a-1)!.
CompositionExpansion kpc_expansion(int a, int b, int c);

/// Path-clique-path (path g, clique K_m, path h).
CompositionExpansion pkp_expansion(int g, int h, int m);

/// Clique-clique-path: K_c glued to K_(b+1), then a tail of length a.
CompositionExpansion kkp_expansion(int a, int b, int c);

// --- convenience chromatic symmetric functions ---

SymFunc path_csf(int n);            // n >= 0; the empty path counts as 1
SymFunc cycle_csf(int m);           // m >= 2
SymFunc lollipop_csf(int m, int l); // clique size m >= 1, tail l >= 0

/// 3-spider S(a, b, c) via products of path functions.
SymFunc spider3_csf(int a, int b, int c);

// --- reductions to node-graph functions ---

/// P^k(K_g, H) from the tails of H: (g-1)! sum (1-l) e_l X(H tail k+g-1-l).
SymFunc clique_conjoin_csf(int g, int k, const TailProvider& h_tails);

/// P^k(C_g, H): (g-1) X(H tail k+g-1) - sum of cycle products.
SymFunc cycle_conjoin_csf(int g, int k, const TailProvider& h_tails);

/// S^(g,h,j)(G, H, J) reduced to path-joined and tailed pieces; the
/// degenerate spider with a zero leg is evaluated through the cache.
SymFunc spider3_reduce(int g, int h, int j, const RootedGraph& G, const RootedGraph& H,
                       const RootedGraph& J, OracleCache& cache);

/// l-spider-conjoined graphs for l >= 4 reduced recursively; 1-, 2-, and
/// 3-spider bases evaluate through the cache. Requires tau[0], tau[1] >= 1
/// at each recursion step.
SymFunc spider_l_reduce(const std::vector<int>& tau, const std::vector<RootedGraph>& nodes,
                        OracleCache& cache);

/// S_j^(g,h)(G, H): two nodes plus a pendant path of length j; h >= 1.
SymFunc spider_two_node_csf(int g, int h, int j, const TailProvider& gh);

/// S^g_(h,j)(G): one node plus two pendant paths; h >= 1.
SymFunc spider_one_node_csf(int g, int h, int j, const TailProvider& g_tails);

/// sum_(l=0..a) (1-l) e_l X(P_(n-l)); equals a lollipop function divided by
/// a! for a < n and e_n for a = n. Verifies the identity before returning.
SymFunc clique_path_convolution(int a, int n);

/// S^(g,h,k)(G, H, K_m); m, h >= 1.
SymFunc spider_clique_csf(int g, int h, int k, int m, const TailProvider& gh);

/// S_h^(g,k)(G, K_m); m, h >= 1.
SymFunc spider_clique_one_node_csf(int g, int k, int h, int m, const TailProvider& g_tails);

/// Pineapple: clique K_m with pendant paths g and h at one vertex.
SymFunc pineapple_csf(int g, int h, int m);

/// S^(g,h,k)(G, H, C_m); m >= 2. When g = h = 0 the inner spider values come
/// from the provider's merged tails.
SymFunc spider_cycle_csf(int g, int h, int k, int m, const TailProvider& gh);

/// Chain G - K_m - H with link lengths g and h; m >= 2.
SymFunc clique_chain_csf(int g, int h, int m, const TailProvider& gh);

/// Chain G - K_m - K_1 with link lengths g and h; m >= 2.
SymFunc clique_chain_tail_csf(int g, int h, int m, const TailProvider& g_tails);

/// Chain G - C_m - H through an adjacent-rooted cycle; m >= 2.
SymFunc cycle_chain_csf(int g, int h, int m, const TailProvider& gh);

struct FWeights {
    long long f1 = 0;
    long long f2 = 0;
    long long f3 = 0;
};

/// f1 = (a-1) w(I), f2 = (a-2) i_(-1) w(I minus last), f3 = (i_(-1)-a+1)
/// w(I minus last). Satisfies f1 - f2 - f3 = a - 1 for one-part I, 0 otherwise.
FWeights f_weights(const Composition& I, long long a);

}  // namespace csf
