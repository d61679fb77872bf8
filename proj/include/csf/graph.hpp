#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace csf {

/// A simple undirected graph on vertices 0..n-1. No loops, no multi-edges.
class Graph {
public:
    explicit Graph(int n = 0);

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    /// Edges as normalized (a < b) pairs in ascending order.
    std::vector<std::pair<int, int>> edges() const {
        return {edges_.begin(), edges_.end()};
    }
    bool has_edge(int u, int v) const;
    std::vector<int> neighbors(int v) const;
    int degree(int v) const;

    /// Inserts an edge; throws on loops, out-of-range endpoints, or duplicates.
    void add_edge(int u, int v);

    /// This graph followed by a relabeled copy of other.
    Graph disjoint_union(const Graph& other) const;

    /// Stable serialization of the labeled graph, used as a cache key.
    std::string canonical_key() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::set<std::pair<int, int>> edges_;
};

struct RootedGraph {
    Graph graph;
    int root = 0;

    RootedGraph(Graph g, int r);
};

/// A graph with an ordered pair of distinct roots.
struct DoubleRootedGraph {
    Graph graph;
    int root_u = 0;
    int root_v = 0;

    DoubleRootedGraph(Graph g, int u, int v);
};

/// Merges vertex b into vertex a and relabels (vertices above b shift down).
/// Throws if a and b are adjacent (loop) or share a neighbor (multi-edge).
Graph merge_vertices(const Graph& g, int a, int b);

// Named base graphs with canonical labels 0..n-1. Paths run 0-1-...-(n-1)
// and are rooted at the ends; cycles are rooted at 0. cycle(2) is the single
// edge (the simple underlying graph of a doubled edge).
Graph clique(int n);
Graph path_graph(int n);
Graph cycle(int n);

RootedGraph rooted_clique(int n);
RootedGraph rooted_path(int n);      // rooted at vertex 0
RootedGraph rooted_cycle(int n);
/// Cycle with the adjacent root pair (0, n-1).
DoubleRootedGraph cycle_adjacent_roots(int n);

/// P^k(G, H): joins the roots of G and H by a path of length k >= 0.
/// k = 0 identifies the two roots. Vertices are numbered G first, then H,
/// then the k-1 internal path vertices.
Graph path_conjoin(const RootedGraph& g, const RootedGraph& h, int k);

/// G^k: attaches a path of length k at the root; the new root is the free
/// end of the tail.
RootedGraph tailed(const RootedGraph& g, int k);

/// S^tau(G_1, ..., G_l): spider with leg lengths tau (>= 0) whose i-th leaf
/// is identified with the root of nodes[i]. A zero-length leg identifies the
/// node root with the center. Vertices are numbered nodes first (in argument
/// order), then the center, then leg-internal vertices leg by leg.
Graph spider_conjoin(const std::vector<int>& tau, const std::vector<RootedGraph>& nodes);

/// spider_conjoin rooted at the spider center.
RootedGraph spider_conjoin_rooted(const std::vector<int>& tau,
                                  const std::vector<RootedGraph>& nodes);

/// C^tau(G_0, ..., G_l): chain joining consecutive node roots by paths of
/// lengths tau[i] (>= 0, 0 identifies). The end nodes are single-rooted; the
/// middle nodes use root_u on the left and root_v on the right.
Graph chain_conjoin(const std::vector<int>& tau, const RootedGraph& first,
                    const std::vector<DoubleRootedGraph>& middle, const RootedGraph& last);

/// K-chain: cliques K_(gamma_1), ..., K_(gamma_l) glued consecutively at
/// single vertices. All parts must be >= 2.
Graph kchain(const std::vector<int>& gamma);

Graph lollipop(int m, int l);  // clique K_m with a pendant path of length l
Graph tadpole(int m, int l);   // cycle C_m with a pendant path of length l

/// Spider S(I): paths of lengths I sharing one center endpoint.
Graph spider(const std::vector<int>& legs);

/// Clique K_m with two pendant paths of lengths g and h at one vertex.
Graph pineapple(int g, int h, int m);

/// Cycle C_m with adjacent roots carrying pendant paths of lengths g and h.
Graph hat(int g, int m, int h);

/// Chain of cycles with adjacent roots, linked by paths of lengths taus
/// (taus.size() == ms.size() + 1); the outer links end in single vertices.
Graph hat_chain(const std::vector<int>& ms, const std::vector<int>& taus);

/// Two cycles joined by a path of length k.
Graph kayak_paddle(int g, int h, int k);

/// Exact isomorphism test by permutation search; intended for small graphs
/// (<= 10 vertices or so).
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace csf
