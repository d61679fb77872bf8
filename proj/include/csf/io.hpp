#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "csf/formulas.hpp"
#include "csf/graph.hpp"
#include "csf/oracle.hpp"
#include "csf/symfunc.hpp"

namespace csf {

using Json = nlohmann::ordered_json;

// {"basis":"e","degree":9,"terms":[{"partition":[4,2,2,1],"coeff":"18"}]}
// with terms in display order and coefficients as exact strings "p" or "p/q".
Json symfunc_to_json(const SymFunc& f);
SymFunc symfunc_from_json(const Json& j);

/// Raw composition-keyed terms: [{"composition":[1,4,2],"coeff":"24"}, ...].
Json expansion_terms_json(const CompositionExpansion& x);

// {"n":6,"edges":[[0,1],[1,2]],"roots":[0,5]}; roots optional.
Json graph_to_json(const Graph& g, const std::vector<int>& roots = {});
Graph graph_from_json(const Json& j, std::vector<int>* roots = nullptr);

Json identity_report_json(const IdentityReport& report, const Graph& graph);

/// A parsed family spec string such as "kpc:a=4,b=2,c=4",
/// "hatchain:ms=4,4;taus=0,1,0", or "kgh:m=3,a=k3,b=c4" (node-graph tokens
/// are k<n>, c<n>, p<n> for a rooted clique, cycle, or end-rooted path).
struct FamilySpec {
    std::string name;
    std::map<std::string, std::vector<std::string>> params;

    static FamilySpec parse(const std::string& text);
    std::string to_string() const;

    bool has(const std::string& key) const { return params.count(key) > 0; }
    long long scalar(const std::string& key) const;
    std::vector<int> list(const std::string& key) const;
    /// Node-graph parameter; falls back to K_1 when the key is absent.
    RootedGraph node(const std::string& key) const;
};

/// k<n>, c<n>, or p<n> to a rooted graph (cliques and cycles rooted at 0,
/// paths at an end).
RootedGraph parse_node_token(const std::string& token);

/// Builds the graph a family spec names; throws std::invalid_argument for
/// unknown names or out-of-range parameters.
Graph family_graph(const FamilySpec& spec);

/// True when the family has a closed-form engine.
bool family_has_formula(const std::string& name);

struct FormulaResult {
    SymFunc csf;
    std::optional<CompositionExpansion> terms;  // set for composition-keyed formulas
};

/// Evaluates the family's closed form. Reduction families consume node-graph
/// functions through the cache; the composition-keyed families ignore it.
/// Throws for families without a closed form.
FormulaResult family_formula(const FamilySpec& spec, OracleCache& cache);

/// Known family names, for usage messages.
std::vector<std::string> family_names();

struct GridRange {
    std::string key;
    long long lo = 0;
    long long hi = 0;
};

/// Parses "a=0..2,b=1..3,c=4" (a bare value is a one-point range).
std::vector<GridRange> parse_grid(const std::string& text);

/// Calls fn for every point of the grid in row-major order.
void for_each_grid_point(const std::vector<GridRange>& grid,
                         const std::function<void(const std::map<std::string, long long>&)>& fn);

/// Loads/saves an oracle cache as JSON lines "key<TAB>symfunc-json".
std::size_t load_cache_file(OracleCache& cache, const std::string& path);
void save_cache_file(const OracleCache& cache, const std::string& path);

}  // namespace csf
