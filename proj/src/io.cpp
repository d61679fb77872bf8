#include "csf/io.hpp"

#include <fstream>
#include <sstream>

namespace csf {

Json symfunc_to_json(const SymFunc& f) {
    Json j;
    j["basis"] = f.basis() == Basis::elementary ? "e" : "p";
    j["degree"] = f.degree();
    Json terms = Json::array();
    for (const auto& [lambda, c] : f.terms_display_order()) {
        Json t;
        t["partition"] = lambda.parts();
        t["coeff"] = c.to_string();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

SymFunc symfunc_from_json(const Json& j) {
    std::string basis_tag = j.at("basis").get<std::string>();
    if (basis_tag != "e" && basis_tag != "p")
        throw std::invalid_argument("symfunc_from_json: unknown basis \"" + basis_tag + "\"");
    SymFunc f(basis_tag == "e" ? Basis::elementary : Basis::power_sum, j.at("degree").get<int>());
    for (const auto& t : j.at("terms")) {
        Partition lambda(t.at("partition").get<std::vector<int>>());
        f.add_term(lambda, Rational::from_string(t.at("coeff").get<std::string>()));
    }
    return f;
}

Json expansion_terms_json(const CompositionExpansion& x) {
    Json terms = Json::array();
    for (const auto& [I, c] : x.terms()) {
        Json t;
        t["composition"] = I.parts();
        t["coeff"] = c.to_string();
        terms.push_back(std::move(t));
    }
    return terms;
}

Json graph_to_json(const Graph& g, const std::vector<int>& roots) {
    Json j;
    j["n"] = g.order();
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
    j["edges"] = std::move(edges);
    if (!roots.empty()) j["roots"] = roots;
    return j;
}

Graph graph_from_json(const Json& j, std::vector<int>* roots) {
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph_from_json: edges must be [u,v] pairs");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    if (roots) {
        roots->clear();
        if (j.contains("roots")) *roots = j.at("roots").get<std::vector<int>>();
        for (int r : *roots)
            if (r < 0 || r >= g.order())
                throw std::invalid_argument("graph_from_json: root out of range");
    }
    return g;
}

Json identity_report_json(const IdentityReport& report, const Graph& graph) {
    Json j;
    j["check"] = report.check;
    j["graph"] = graph_to_json(graph);
    j["detail"] = report.detail;
    j["pass"] = report.pass;
    Json residuals = Json::array();
    for (const auto& [label, residual] : report.residuals) {
        Json r;
        r["equation"] = label;
        r["residual"] = symfunc_to_json(residual);
        residuals.push_back(std::move(r));
    }
    j["residual_terms"] = std::move(residuals);
    return j;
}

namespace {

long long parse_integer(const std::string& text, const std::string& context) {
    try {
        size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(context + ": expected an integer, got \"" + text + "\"");
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) out.push_back(item);
    if (!text.empty() && text.back() == sep) out.push_back("");
    return out;
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
    auto colon = text.find(':');
    FamilySpec spec;
    spec.name = text.substr(0, colon);
    if (spec.name.empty()) throw std::invalid_argument("family spec: missing name in \"" + text + "\"");
    if (colon == std::string::npos) return spec;
    std::string rest = text.substr(colon + 1);
    // Chunks are ';'-separated; inside a chunk, ','-separated tokens either
    // open a new key=value pair or extend the previous pair's value list.
    std::vector<std::pair<std::string, std::vector<std::string>>> pairs;
    for (const std::string& chunk : split(rest, ';')) {
        bool pair_open = false;
        for (const std::string& token : split(chunk, ',')) {
            auto eq = token.find('=');
            if (eq != std::string::npos) {
                pairs.push_back({token.substr(0, eq), {token.substr(eq + 1)}});
                pair_open = true;
            } else if (pair_open) {
                pairs.back().second.push_back(token);
            } else {
                throw std::invalid_argument("family spec: stray token \"" + token + "\" in \"" +
                                            text + "\"");
            }
        }
    }
    for (auto& [key, values] : pairs) {
        if (key.empty()) throw std::invalid_argument("family spec: empty key in \"" + text + "\"");
        if (!spec.params.emplace(key, std::move(values)).second)
            throw std::invalid_argument("family spec: duplicate key \"" + key + "\"");
    }
    return spec;
}

std::string FamilySpec::to_string() const {
    std::string out = name;
    char sep = ':';
    for (const auto& [key, values] : params) {
        out += sep;
        // ',' separates pairs unless the previous value was a list, where it
        // would be swallowed into that list on re-parsing.
        sep = values.size() == 1 ? ',' : ';';
        out += key + "=";
        for (size_t i = 0; i < values.size(); ++i) {
            if (i) out += ",";
            out += values[i];
        }
    }
    return out;
}

long long FamilySpec::scalar(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end() || it->second.size() != 1)
        throw std::invalid_argument("family " + name + ": needs parameter " + key);
    return parse_integer(it->second.front(), "family " + name + ", parameter " + key);
}

std::vector<int> FamilySpec::list(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("family " + name + ": needs parameter " + key);
    std::vector<int> out;
    for (const std::string& v : it->second)
        out.push_back(static_cast<int>(parse_integer(v, "family " + name + ", parameter " + key)));
    return out;
}

RootedGraph FamilySpec::node(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) return RootedGraph(Graph(1), 0);
    if (it->second.size() != 1)
        throw std::invalid_argument("family " + name + ": parameter " + key +
                                    " must be a single node token");
    return parse_node_token(it->second.front());
}

RootedGraph parse_node_token(const std::string& token) {
    if (token.size() >= 2) {
        char kind = token.front();
        bool digits = true;
        for (size_t i = 1; i < token.size(); ++i) digits = digits && std::isdigit(token[i]);
        if (digits && (kind == 'k' || kind == 'c' || kind == 'p')) {
            int n = static_cast<int>(parse_integer(token.substr(1), "node token"));
            if (kind == 'k') return rooted_clique(n);
            if (kind == 'c') return rooted_cycle(n);
            return rooted_path(n);
        }
    }
    throw std::invalid_argument("node token \"" + token +
                                "\" is not of the form k<n>, c<n>, or p<n>");
}

namespace {

int scalar_int(const FamilySpec& spec, const std::string& key) {
    return static_cast<int>(spec.scalar(key));
}

std::vector<RootedGraph> node_list(const FamilySpec& spec, const std::string& key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end())
        throw std::invalid_argument("family " + spec.name + ": needs parameter " + key);
    std::vector<RootedGraph> out;
    for (const std::string& token : it->second) out.push_back(parse_node_token(token));
    return out;
}

}  // namespace

std::vector<std::string> family_names() {
    return {"path",        "clique",      "cycle",    "lollipop",    "tadpole",
            "spider",      "kchain",      "kpc",      "pkp",         "kkp",
            "pineapple",   "hat",         "hatchain", "kayak",       "kpg",
            "cpg",         "spider3",     "lspider",  "spidertail2", "spidertail1",
            "spiderclique", "spidergk",   "spidercycle", "kgh",      "pkpg",
            "gch"};
}

Graph family_graph(const FamilySpec& spec) {
    const std::string& f = spec.name;
    if (f == "path") return path_graph(scalar_int(spec, "n"));
    if (f == "clique") return clique(scalar_int(spec, "n"));
    if (f == "cycle") return cycle(scalar_int(spec, "n"));
    if (f == "lollipop") return lollipop(scalar_int(spec, "m"), scalar_int(spec, "l"));
    if (f == "tadpole") return tadpole(scalar_int(spec, "m"), scalar_int(spec, "l"));
    if (f == "spider") return spider(spec.list("legs"));
    if (f == "kchain") return kchain(spec.list("gamma"));
    if (f == "kpc") {
        int a = scalar_int(spec, "a"), b = scalar_int(spec, "b"), c = scalar_int(spec, "c");
        if (a < 1 || b < 0 || c < 2)
            throw std::invalid_argument("kpc: need a >= 1, b >= 0, c >= 2");
        return path_conjoin(rooted_clique(a), rooted_cycle(c), b);
    }
    if (f == "pkp") {
        int g = scalar_int(spec, "g"), h = scalar_int(spec, "h"), m = scalar_int(spec, "m");
        if (g < 0 || h < 0 || m < 2)
            throw std::invalid_argument("pkp: need g, h >= 0 and m >= 2");
        return chain_conjoin({g, h}, RootedGraph(Graph(1), 0),
                             {DoubleRootedGraph(clique(m), 0, m - 1)}, RootedGraph(Graph(1), 0));
    }
    if (f == "kkp") {
        int a = scalar_int(spec, "a"), b = scalar_int(spec, "b"), c = scalar_int(spec, "c");
        if (a < 0 || b < 1 || c < 1)
            throw std::invalid_argument("kkp: need a >= 0, b >= 1, c >= 1");
        return chain_conjoin({0, a}, rooted_clique(c), {DoubleRootedGraph(clique(b + 1), 0, b)},
                             RootedGraph(Graph(1), 0));
    }
    if (f == "pineapple")
        return pineapple(scalar_int(spec, "g"), scalar_int(spec, "h"), scalar_int(spec, "m"));
    if (f == "hat") return hat(scalar_int(spec, "g"), scalar_int(spec, "m"), scalar_int(spec, "h"));
    if (f == "hatchain") return hat_chain(spec.list("ms"), spec.list("taus"));
    if (f == "kayak")
        return kayak_paddle(scalar_int(spec, "g"), scalar_int(spec, "h"), scalar_int(spec, "k"));

    // Reduction families: node graphs arrive as tokens (default K_1).
    if (f == "kpg")
        return path_conjoin(rooted_clique(scalar_int(spec, "g")), spec.node("node"),
                            scalar_int(spec, "k"));
    if (f == "cpg")
        return path_conjoin(rooted_cycle(scalar_int(spec, "g")), spec.node("node"),
                            scalar_int(spec, "k"));
    if (f == "spider3")
        return spider_conjoin(
            {scalar_int(spec, "g"), scalar_int(spec, "h"), scalar_int(spec, "j")},
            {spec.node("a"), spec.node("b"), spec.node("c")});
    if (f == "lspider") return spider_conjoin(spec.list("taus"), node_list(spec, "nodes"));
    if (f == "spidertail2")
        return spider_conjoin(
            {scalar_int(spec, "g"), scalar_int(spec, "h"), scalar_int(spec, "j")},
            {spec.node("a"), spec.node("b"), RootedGraph(Graph(1), 0)});
    if (f == "spidertail1")
        return spider_conjoin(
            {scalar_int(spec, "g"), scalar_int(spec, "h"), scalar_int(spec, "j")},
            {spec.node("a"), RootedGraph(Graph(1), 0), RootedGraph(Graph(1), 0)});
    if (f == "spiderclique")
        return spider_conjoin(
            {scalar_int(spec, "g"), scalar_int(spec, "h"), scalar_int(spec, "k")},
            {spec.node("a"), spec.node("b"), rooted_clique(scalar_int(spec, "m"))});
    if (f == "spidergk")
        return spider_conjoin(
            {scalar_int(spec, "g"), scalar_int(spec, "k"), scalar_int(spec, "h")},
            {spec.node("a"), rooted_clique(scalar_int(spec, "m")), RootedGraph(Graph(1), 0)});
    if (f == "spidercycle")
        return spider_conjoin(
            {scalar_int(spec, "g"), scalar_int(spec, "h"), scalar_int(spec, "k")},
            {spec.node("a"), spec.node("b"), rooted_cycle(scalar_int(spec, "m"))});
    if (f == "kgh") {
        int m = scalar_int(spec, "m");
        if (m < 2) throw std::invalid_argument("kgh: need m >= 2");
        return chain_conjoin({scalar_int(spec, "g"), scalar_int(spec, "h")}, spec.node("a"),
                             {DoubleRootedGraph(clique(m), 0, m - 1)}, spec.node("b"));
    }
    if (f == "pkpg") {
        int m = scalar_int(spec, "m");
        if (m < 2) throw std::invalid_argument("pkpg: need m >= 2");
        return chain_conjoin({scalar_int(spec, "g"), scalar_int(spec, "h")}, spec.node("a"),
                             {DoubleRootedGraph(clique(m), 0, m - 1)}, RootedGraph(Graph(1), 0));
    }
    if (f == "gch") {
        int m = scalar_int(spec, "m");
        if (m < 2) throw std::invalid_argument("gch: need m >= 2");
        return chain_conjoin({scalar_int(spec, "g"), scalar_int(spec, "h")}, spec.node("a"),
                             {cycle_adjacent_roots(m)}, spec.node("b"));
    }
    std::string known;
    for (const auto& name : family_names()) known += (known.empty() ? "" : ", ") + name;
    throw std::invalid_argument("unknown family \"" + f + "\" (known: " + known + ")");
}

bool family_has_formula(const std::string& name) {
    for (const std::string& known : {"hatchain", "kayak"})
        if (name == known) return false;
    for (const std::string& known : family_names())
        if (name == known) return true;
    return false;
}

FormulaResult family_formula(const FamilySpec& spec, OracleCache& cache) {
    const std::string& f = spec.name;
    auto from_expansion = [](CompositionExpansion x) {
        SymFunc flat = x.flatten();
        return FormulaResult{std::move(flat), std::move(x)};
    };
    if (f == "path") return from_expansion(path_expansion(scalar_int(spec, "n")));
    if (f == "clique") {
        int n = scalar_int(spec, "n");
        return from_expansion(lollipop_expansion(n, n));
    }
    if (f == "cycle") {
        int n = scalar_int(spec, "n");
        if (n < 2) throw std::invalid_argument("cycle: order must be >= 2");
        return from_expansion(tadpole_expansion(n, 0));
    }
    if (f == "lollipop") {
        int m = scalar_int(spec, "m"), l = scalar_int(spec, "l");
        if (m < 1 || l < 0) throw std::invalid_argument("lollipop: need m >= 1 and l >= 0");
        return from_expansion(lollipop_expansion(m, m + l));
    }
    if (f == "tadpole") {
        int m = scalar_int(spec, "m"), l = scalar_int(spec, "l");
        if (m < 2 || l < 0) throw std::invalid_argument("tadpole: need m >= 2 and l >= 0");
        return from_expansion(tadpole_expansion(m + l, l));
    }
    if (f == "spider") {
        auto legs = spec.list("legs");
        if (legs.size() != 3)
            throw std::invalid_argument("spider: the closed form needs exactly 3 legs");
        return FormulaResult{spider3_csf(legs[0], legs[1], legs[2]), std::nullopt};
    }
    if (f == "kchain") return from_expansion(kchain_expansion(spec.list("gamma")));
    if (f == "kpc")
        return from_expansion(
            kpc_expansion(scalar_int(spec, "a"), scalar_int(spec, "b"), scalar_int(spec, "c")));
    if (f == "pkp")
        return from_expansion(
            pkp_expansion(scalar_int(spec, "g"), scalar_int(spec, "h"), scalar_int(spec, "m")));
    if (f == "kkp")
        return from_expansion(
            kkp_expansion(scalar_int(spec, "a"), scalar_int(spec, "b"), scalar_int(spec, "c")));
    if (f == "pineapple")
        return FormulaResult{
            pineapple_csf(scalar_int(spec, "g"), scalar_int(spec, "h"), scalar_int(spec, "m")),
            std::nullopt};
    if (f == "hat")
        return FormulaResult{cycle_chain_csf(scalar_int(spec, "g"), scalar_int(spec, "h"),
                                             scalar_int(spec, "m"), TailProvider::for_paths()),
                             std::nullopt};

    auto one = [&] { return TailProvider::for_node(spec.node(f == "kpg" || f == "cpg" ? "node" : "a"), cache); };
    auto two = [&] { return TailProvider::for_pair(spec.node("a"), spec.node("b"), cache); };
    if (f == "kpg")
        return FormulaResult{
            clique_conjoin_csf(scalar_int(spec, "g"), scalar_int(spec, "k"), one()),
            std::nullopt};
    if (f == "cpg")
        return FormulaResult{
            cycle_conjoin_csf(scalar_int(spec, "g"), scalar_int(spec, "k"), one()),
            std::nullopt};
    if (f == "spider3")
        return FormulaResult{spider3_reduce(scalar_int(spec, "g"), scalar_int(spec, "h"),
                                            scalar_int(spec, "j"), spec.node("a"), spec.node("b"),
                                            spec.node("c"), cache),
                             std::nullopt};
    if (f == "lspider")
        return FormulaResult{spider_l_reduce(spec.list("taus"), node_list(spec, "nodes"), cache),
                             std::nullopt};
    if (f == "spidertail2")
        return FormulaResult{spider_two_node_csf(scalar_int(spec, "g"), scalar_int(spec, "h"),
                                                 scalar_int(spec, "j"), two()),
                             std::nullopt};
    if (f == "spidertail1")
        return FormulaResult{spider_one_node_csf(scalar_int(spec, "g"), scalar_int(spec, "h"),
                                                 scalar_int(spec, "j"), one()),
                             std::nullopt};
    if (f == "spiderclique")
        return FormulaResult{
            spider_clique_csf(scalar_int(spec, "g"), scalar_int(spec, "h"),
                              scalar_int(spec, "k"), scalar_int(spec, "m"), two()),
            std::nullopt};
    if (f == "spidergk")
        return FormulaResult{
            spider_clique_one_node_csf(scalar_int(spec, "g"), scalar_int(spec, "k"),
                                       scalar_int(spec, "h"), scalar_int(spec, "m"), one()),
            std::nullopt};
    if (f == "spidercycle")
        return FormulaResult{
            spider_cycle_csf(scalar_int(spec, "g"), scalar_int(spec, "h"),
                             scalar_int(spec, "k"), scalar_int(spec, "m"), two()),
            std::nullopt};
    if (f == "kgh")
        return FormulaResult{clique_chain_csf(scalar_int(spec, "g"), scalar_int(spec, "h"),
                                              scalar_int(spec, "m"), two()),
                             std::nullopt};
    if (f == "pkpg")
        return FormulaResult{clique_chain_tail_csf(scalar_int(spec, "g"), scalar_int(spec, "h"),
                                                   scalar_int(spec, "m"), one()),
                             std::nullopt};
    if (f == "gch")
        return FormulaResult{cycle_chain_csf(scalar_int(spec, "g"), scalar_int(spec, "h"),
                                             scalar_int(spec, "m"), two()),
                             std::nullopt};
    throw std::invalid_argument("family \"" + f + "\" has no closed-form engine");
}

std::vector<GridRange> parse_grid(const std::string& text) {
    std::vector<GridRange> grid;
    for (const std::string& chunk : split(text, ',')) {
        if (chunk.empty()) continue;
        auto eq = chunk.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("grid: expected key=lo..hi in \"" + chunk + "\"");
        GridRange r;
        r.key = chunk.substr(0, eq);
        std::string range = chunk.substr(eq + 1);
        auto dots = range.find("..");
        if (dots == std::string::npos) {
            r.lo = r.hi = parse_integer(range, "grid");
        } else {
            r.lo = parse_integer(range.substr(0, dots), "grid");
            r.hi = parse_integer(range.substr(dots + 2), "grid");
        }
        if (r.lo > r.hi) throw std::invalid_argument("grid: empty range for " + r.key);
        grid.push_back(std::move(r));
    }
    if (grid.empty()) throw std::invalid_argument("grid: no ranges given");
    return grid;
}

void for_each_grid_point(const std::vector<GridRange>& grid,
                         const std::function<void(const std::map<std::string, long long>&)>& fn) {
    std::map<std::string, long long> point;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == grid.size()) {
            fn(point);
            return;
        }
        for (long long v = grid[i].lo; v <= grid[i].hi; ++v) {
            point[grid[i].key] = v;
            rec(i + 1);
        }
        point.erase(grid[i].key);
    };
    rec(0);
}

std::size_t load_cache_file(OracleCache& cache, const std::string& path) {
    std::ifstream in(path);
    if (!in) return 0;
    std::size_t loaded = 0;
    std::string line;
    while (std::getline(in, line)) {
        auto tab = line.find('\t');
        if (tab == std::string::npos) continue;
        cache.store(line.substr(0, tab), symfunc_from_json(Json::parse(line.substr(tab + 1))));
        ++loaded;
    }
    return loaded;
}

void save_cache_file(const OracleCache& cache, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + path);
    for (const auto& [key, f] : cache.snapshot())
        out << key << '\t' << symfunc_to_json(f).dump() << '\n';
}

}  // namespace csf
