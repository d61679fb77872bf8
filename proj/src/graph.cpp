#include "csf/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace csf {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative order");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range");
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return edges_.count({u, v}) > 0;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (const auto& [a, b] : edges_) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!edges_.insert({u, v}).second)
        throw std::invalid_argument("Graph: duplicate edge " + std::to_string(u) + "-" +
                                    std::to_string(v));
}

Graph Graph::disjoint_union(const Graph& other) const {
    Graph out(n_ + other.n_);
    for (const auto& [a, b] : edges_) out.add_edge(a, b);
    for (const auto& [a, b] : other.edges_) out.add_edge(a + n_, b + n_);
    return out;
}

std::string Graph::canonical_key() const {
    std::string s = std::to_string(n_) + ":";
    bool sep = false;
    for (const auto& [a, b] : edges_) {
        if (sep) s += ",";
        s += std::to_string(a) + "-" + std::to_string(b);
        sep = true;
    }
    return s;
}

RootedGraph::RootedGraph(Graph g, int r) : graph(std::move(g)), root(r) {
    if (r < 0 || r >= graph.order())
        throw std::out_of_range("RootedGraph: root out of range");
}

DoubleRootedGraph::DoubleRootedGraph(Graph g, int u, int v)
    : graph(std::move(g)), root_u(u), root_v(v) {
    if (u < 0 || u >= graph.order() || v < 0 || v >= graph.order())
        throw std::out_of_range("DoubleRootedGraph: root out of range");
    if (u == v) throw std::invalid_argument("DoubleRootedGraph: roots must be distinct");
}

Graph merge_vertices(const Graph& g, int a, int b) {
    if (a == b) throw std::invalid_argument("merge_vertices: identical vertices");
    if (g.has_edge(a, b))
        throw std::invalid_argument("merge_vertices: vertices are adjacent, merge creates a loop");
    auto na = g.neighbors(a);
    auto nb = g.neighbors(b);
    std::vector<int> common;
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                          std::back_inserter(common));
    if (!common.empty())
        throw std::invalid_argument(
            "merge_vertices: vertices share a neighbor, merge creates a multi-edge");
    Graph out(g.order() - 1);
    auto relabel = [&](int v) {
        if (v == b) v = a;
        return v > b ? v - 1 : v;
    };
    for (const auto& [u, v] : g.edges()) out.add_edge(relabel(u), relabel(v));
    return out;
}

namespace {

// Accumulates disjoint pieces, fresh vertices, edges, and pending vertex
// identifications; build() compacts to canonical labels in first-appearance
// order and checks the simple-graph invariant.
class GraphAssembly {
public:
    int add_vertex() {
        parent_.push_back(static_cast<int>(parent_.size()));
        return parent_.back();
    }

    int add_graph(const Graph& g) {
        int offset = static_cast<int>(parent_.size());
        for (int i = 0; i < g.order(); ++i) add_vertex();
        for (const auto& [a, b] : g.edges()) edges_.push_back({a + offset, b + offset});
        return offset;
    }

    void add_edge(int u, int v) { edges_.push_back({u, v}); }

    /// Connects u to v by a path of length k >= 0 (k = 0 identifies them).
    void add_path(int u, int v, int k) {
        if (k < 0) throw std::invalid_argument("conjoin: negative path length");
        if (k == 0) {
            identify(u, v);
            return;
        }
        int prev = u;
        for (int i = 0; i < k - 1; ++i) {
            int next = add_vertex();
            add_edge(prev, next);
            prev = next;
        }
        add_edge(prev, v);
    }

    void identify(int a, int b) { parent_[find(a)] = find(b); }

    Graph build() {
        compute_labels();
        Graph out(static_cast<int>(label_count_));
        for (const auto& [u, v] : edges_) {
            int a = labels_[find(u)];
            int b = labels_[find(v)];
            if (a == b)
                throw std::invalid_argument("conjoin: identification would create a loop");
            if (out.has_edge(a, b))
                throw std::invalid_argument("conjoin: identification would create a multi-edge");
            out.add_edge(a, b);
        }
        return out;
    }

    /// Final label of a provisional vertex (classes are labeled in order of
    /// their first provisional member).
    int final_label(int v) {
        compute_labels();
        return labels_[find(v)];
    }

private:
    void compute_labels() {
        labels_.assign(parent_.size(), -1);
        label_count_ = 0;
        for (size_t v = 0; v < parent_.size(); ++v) {
            int r = find(static_cast<int>(v));
            if (labels_[r] < 0) labels_[r] = label_count_++;
        }
    }

    int find(int v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    std::vector<int> parent_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> labels_;
    int label_count_ = 0;
};

}  // namespace

Graph clique(int n) {
    if (n < 1) throw std::invalid_argument("clique: order must be >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: order must be >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 2) throw std::invalid_argument("cycle: order must be >= 2");
    if (n == 2) return path_graph(2);
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

RootedGraph rooted_clique(int n) { return RootedGraph(clique(n), 0); }
RootedGraph rooted_path(int n) { return RootedGraph(path_graph(n), 0); }
RootedGraph rooted_cycle(int n) { return RootedGraph(cycle(n), 0); }

DoubleRootedGraph cycle_adjacent_roots(int n) {
    return DoubleRootedGraph(cycle(n), 0, n - 1);
}

Graph path_conjoin(const RootedGraph& g, const RootedGraph& h, int k) {
    GraphAssembly asmb;
    int og = asmb.add_graph(g.graph);
    int oh = asmb.add_graph(h.graph);
    asmb.add_path(og + g.root, oh + h.root, k);
    return asmb.build();
}

RootedGraph tailed(const RootedGraph& g, int k) {
    if (k == 0) return g;
    Graph t = path_conjoin(g, RootedGraph(Graph(1), 0), k);
    // The K_1 end of the tail sits right after g's vertices.
    return RootedGraph(std::move(t), g.graph.order());
}

namespace {

RootedGraph spider_conjoin_impl(const std::vector<int>& tau,
                                const std::vector<RootedGraph>& nodes) {
    if (tau.size() != nodes.size())
        throw std::invalid_argument("spider_conjoin: leg and node counts differ");
    if (nodes.empty()) throw std::invalid_argument("spider_conjoin: needs at least one node");
    GraphAssembly asmb;
    std::vector<int> roots;
    for (const auto& node : nodes) roots.push_back(asmb.add_graph(node.graph) + node.root);
    int center = asmb.add_vertex();
    for (size_t i = 0; i < tau.size(); ++i) asmb.add_path(roots[i], center, tau[i]);
    Graph g = asmb.build();
    int center_label = asmb.final_label(center);
    return RootedGraph(std::move(g), center_label);
}

}  // namespace

Graph spider_conjoin(const std::vector<int>& tau, const std::vector<RootedGraph>& nodes) {
    return spider_conjoin_impl(tau, nodes).graph;
}

RootedGraph spider_conjoin_rooted(const std::vector<int>& tau,
                                  const std::vector<RootedGraph>& nodes) {
    return spider_conjoin_impl(tau, nodes);
}

Graph chain_conjoin(const std::vector<int>& tau, const RootedGraph& first,
                    const std::vector<DoubleRootedGraph>& middle, const RootedGraph& last) {
    if (tau.size() != middle.size() + 1)
        throw std::invalid_argument("chain_conjoin: need one link length per adjacent node pair");
    GraphAssembly asmb;
    int ofirst = asmb.add_graph(first.graph);
    std::vector<int> omid;
    for (const auto& node : middle) omid.push_back(asmb.add_graph(node.graph));
    int olast = asmb.add_graph(last.graph);

    int right = ofirst + first.root;  // right root of the node just added
    for (size_t i = 0; i < middle.size(); ++i) {
        asmb.add_path(right, omid[i] + middle[i].root_u, tau[i]);
        right = omid[i] + middle[i].root_v;
    }
    asmb.add_path(right, olast + last.root, tau.back());
    return asmb.build();
}

Graph kchain(const std::vector<int>& gamma) {
    if (gamma.empty()) throw std::invalid_argument("kchain: empty clique list");
    for (int part : gamma)
        if (part < 2) throw std::invalid_argument("kchain: clique sizes must be >= 2");
    if (gamma.size() == 1) return clique(gamma[0]);
    std::vector<DoubleRootedGraph> middle;
    for (size_t i = 1; i + 1 < gamma.size(); ++i)
        middle.emplace_back(clique(gamma[i]), 0, gamma[i] - 1);
    std::vector<int> tau(gamma.size() - 1, 0);
    return chain_conjoin(tau, RootedGraph(clique(gamma.front()), gamma.front() - 1), middle,
                         rooted_clique(gamma.back()));
}

Graph lollipop(int m, int l) {
    if (m < 1 || l < 0) throw std::invalid_argument("lollipop: need m >= 1 and l >= 0");
    return tailed(rooted_clique(m), l).graph;
}

Graph tadpole(int m, int l) {
    if (m < 2 || l < 0) throw std::invalid_argument("tadpole: need m >= 2 and l >= 0");
    return tailed(rooted_cycle(m), l).graph;
}

Graph spider(const std::vector<int>& legs) {
    std::vector<RootedGraph> nodes(legs.size(), RootedGraph(Graph(1), 0));
    return spider_conjoin(legs, nodes);
}

Graph pineapple(int g, int h, int m) {
    if (g < 0 || h < 1 || m < 1)
        throw std::invalid_argument("pineapple: need g >= 0, h >= 1, m >= 1");
    return spider_conjoin({0, g, h},
                          {rooted_clique(m), RootedGraph(Graph(1), 0), RootedGraph(Graph(1), 0)});
}

Graph hat(int g, int m, int h) {
    if (g < 0 || h < 0 || m < 2)
        throw std::invalid_argument("hat: need g, h >= 0 and m >= 2");
    return chain_conjoin({g, h}, RootedGraph(Graph(1), 0), {cycle_adjacent_roots(m)},
                         RootedGraph(Graph(1), 0));
}

Graph hat_chain(const std::vector<int>& ms, const std::vector<int>& taus) {
    if (ms.empty()) throw std::invalid_argument("hat_chain: needs at least one cycle");
    if (taus.size() != ms.size() + 1)
        throw std::invalid_argument("hat_chain: need one link length per gap");
    for (int m : ms)
        if (m < 2) throw std::invalid_argument("hat_chain: cycle sizes must be >= 2");
    for (int t : taus)
        if (t < 0) throw std::invalid_argument("hat_chain: link lengths must be >= 0");
    std::vector<DoubleRootedGraph> middle;
    for (int m : ms) middle.push_back(cycle_adjacent_roots(m));
    return chain_conjoin(taus, RootedGraph(Graph(1), 0), middle, RootedGraph(Graph(1), 0));
}

Graph kayak_paddle(int g, int h, int k) {
    if (g < 3 || h < 3 || k < 1)
        throw std::invalid_argument("kayak_paddle: need cycle sizes >= 3 and path length >= 1");
    return path_conjoin(rooted_cycle(g), rooted_cycle(h), k);
}

namespace {

bool extend_isomorphism(const Graph& a, const Graph& b, std::vector<int>& map,
                        std::vector<bool>& used, int v) {
    int n = a.order();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used[w] || a.degree(v) != b.degree(w)) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (a.has_edge(u, v) != b.has_edge(map[u], w)) ok = false;
        if (!ok) continue;
        map[v] = w;
        used[w] = true;
        if (extend_isomorphism(a, b, map, used, v + 1)) return true;
        used[w] = false;
    }
    return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.order(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.order(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> map(a.order(), -1);
    std::vector<bool> used(a.order(), false);
    return extend_isomorphism(a, b, map, used, 0);
}

}  // namespace csf
