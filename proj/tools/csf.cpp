// csf: compute, verify, and search chromatic symmetric functions of
// path-, spider-, and chain-conjoined graph families.

#include <CLI11.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include "csf/formulas.hpp"
#include "csf/io.hpp"
#include "csf/oracle.hpp"

using namespace csf;

namespace {

constexpr int kExitFailure = 1;   // verification mismatch or counterexample
constexpr int kExitUsage = 2;     // parse or parameter error
constexpr int kExitResource = 3;  // resource guard tripped

struct CacheDir {
    std::string path;  // empty = no persistence
    OracleCache cache;

    CacheDir(const std::string& dir, int workers) : cache([&] {
        OracleOptions opts;
        opts.workers = workers;
        return opts;
    }()) {
        if (!dir.empty()) {
            std::filesystem::create_directories(dir);
            path = dir + "/oracle-cache.jsonl";
            load_cache_file(cache, path);
        }
    }
    ~CacheDir() {
        if (!path.empty()) {
            try {
                save_cache_file(cache, path);
            } catch (...) {
            }
        }
    }
};

// Runs fn(i) for i in [0, n) on the requested number of threads; output
// ordering is up to the caller (index-addressed). The first exception thrown
// by any worker is rethrown here.
void parallel_indices(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
    workers = std::max(1, workers);
    if (workers == 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr err;
    auto drain = [&] {
        try {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        } catch (...) {
            std::scoped_lock lock(err_mu);
            if (!err) err = std::current_exception();
        }
    };
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(drain);
    for (auto& t : threads) t.join();
    if (err) std::rethrow_exception(err);
}

Graph load_graph_file(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open graph file " + file);
    Json j = Json::parse(in, nullptr, true);
    return graph_from_json(j);
}

std::string csv_partition(const Partition& lambda) {
    std::string s;
    for (size_t i = 0; i < lambda.parts().size(); ++i) {
        if (i) s += " ";
        s += std::to_string(lambda.parts()[i]);
    }
    return s;
}

int cmd_compute(const std::string& family, const std::string& graph_file,
                const std::string& engine, int workers, const std::string& cache_dir,
                const std::string& format) {
    CacheDir store(cache_dir, workers);
    std::optional<FormulaResult> formula;
    SymFunc result(Basis::elementary, 0);
    std::string label;

    if (!family.empty()) {
        FamilySpec spec = FamilySpec::parse(family);
        label = spec.to_string();
        bool use_formula = engine == "formula" ||
                           (engine == "auto" && family_has_formula(spec.name));
        if (use_formula) {
            formula = family_formula(spec, store.cache);
            result = formula->csf;
        } else {
            result = store.cache.csf(family_graph(spec));
        }
    } else {
        if (engine == "formula")
            throw std::invalid_argument("--engine formula needs --family");
        label = graph_file;
        result = store.cache.csf(load_graph_file(graph_file));
    }

    if (format == "csv") {
        std::cout << "partition,coeff\n";
        for (const auto& [lambda, c] : result.terms_display_order())
            std::cout << csv_partition(lambda) << "," << c.to_string() << "\n";
        return 0;
    }
    Json out = symfunc_to_json(result);
    out["spec"] = label;
    if (formula && formula->terms) out["composition_terms"] = expansion_terms_json(*formula->terms);
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_verify(const std::string& family, const std::string& grid_text, int trials, int order,
               unsigned seed, int workers, const std::string& cache_dir,
               const std::string& format) {
    CacheDir store(cache_dir, 1);
    OracleCache& cache = store.cache;
    int failed = 0, total = 0;
    bool csv = format == "csv";
    if (csv) std::cout << "spec,pass\n";
    auto emit = [&](const std::string& spec, bool pass, const Json& extra = Json::object()) {
        ++total;
        if (!pass) ++failed;
        if (csv) {
            std::cout << spec << "," << (pass ? "true" : "false") << "\n";
            return;
        }
        Json line = Json::object();
        line["check"] = "verify";
        line["spec"] = spec;
        line["pass"] = pass;
        for (const auto& [k, v] : extra.items()) line[k] = v;
        std::cout << line.dump() << "\n";
    };

    if (family == "triple-deletion" || family == "ap-add" || family == "ap-remove") {
        std::mt19937 rng(seed);
        for (int t = 0; t < trials; ++t) {
            IdentityReport report;
            Graph g(0);
            if (family == "triple-deletion") {
                std::array<int, 3> triple{};
                g = random_stable_triple_graph(rng, order, triple);
                report = check_triple_deletion(g, triple, &cache);
            } else {
                std::vector<int> tribe;
                int x = -1;
                ApMode mode = family == "ap-add" ? ApMode::add : ApMode::remove;
                g = random_tribe_graph(rng, order, mode, tribe, x);
                report = check_ap(g, tribe, x, mode, &cache);
            }
            Json extra = identity_report_json(report, g);
            extra.erase("pass");
            emit(family + "#" + std::to_string(t), report.pass, extra);
        }
    } else {
        FamilySpec base = FamilySpec::parse(family);
        if (!family_has_formula(base.name))
            throw std::invalid_argument("family \"" + base.name +
                                        "\" has no closed form to verify");
        auto grid = parse_grid(grid_text);
        std::vector<FamilySpec> points;
        for_each_grid_point(grid, [&](const std::map<std::string, long long>& point) {
            FamilySpec spec = base;
            for (const auto& [k, v] : point) spec.params[k] = {std::to_string(v)};
            points.push_back(std::move(spec));
        });
        std::vector<char> pass(points.size(), 0);
        parallel_indices(points.size(), workers, [&](std::size_t i) {
            FormulaResult formula = family_formula(points[i], cache);
            SymFunc truth = cache.csf(family_graph(points[i]));
            pass[i] = formula.csf == truth ? 1 : 0;
        });
        for (std::size_t i = 0; i < points.size(); ++i)
            emit(points[i].to_string(), pass[i] != 0);
    }

    if (!csv) {
        Json summary;
        summary["summary"] = true;
        summary["check"] = "verify";
        summary["family"] = family;
        summary["total"] = total;
        summary["failed"] = failed;
        std::cout << summary.dump() << "\n";
    }
    return failed == 0 ? 0 : kExitFailure;
}

int cmd_positivity(const std::string& family, const std::string& graph_file, int max_order,
                   int workers, const std::string& cache_dir, const std::string& format) {
    CacheDir store(cache_dir, 1);
    std::vector<NamedGraph> graphs;
    if (!graph_file.empty()) {
        graphs.push_back(NamedGraph{graph_file, load_graph_file(graph_file)});
    } else if (family == "hatchain") {
        graphs = hat_chain_family(max_order);
    } else if (family == "kayak") {
        graphs = kayak_paddle_family(max_order);
    } else {
        throw std::invalid_argument("positivity scans know families hatchain and kayak");
    }
    auto failures = positivity_scan(graphs, workers, &store.cache);
    bool csv = format == "csv";
    if (csv) {
        std::cout << "spec,witness,coeff\n";
        for (const auto& f : failures)
            std::cout << f.spec << "," << csv_partition(f.witness) << ","
                      << f.coefficient.to_string() << "\n";
    } else {
        for (const auto& f : failures) {
            Json line;
            line["counterexample"] = f.spec;
            line["witness"] = f.witness.parts();
            line["coeff"] = f.coefficient.to_string();
            std::cout << line.dump() << "\n";
        }
        Json summary;
        summary["summary"] = true;
        summary["check"] = "positivity";
        summary["scanned"] = graphs.size();
        summary["counterexamples"] = failures.size();
        std::cout << summary.dump() << "\n";
    }
    return failures.empty() ? 0 : kExitFailure;
}

int cmd_identity(const std::string& name, int max_n, int trials, int order, unsigned seed,
                 const std::string& cache_dir) {
    CacheDir store(cache_dir, 1);
    OracleCache& cache = store.cache;
    int failed = 0;
    auto emit = [&](const std::string& check, bool pass, int checked) {
        if (!pass) ++failed;
        Json line;
        line["check"] = check;
        line["pass"] = pass;
        line["instances"] = checked;
        std::cout << line.dump() << "\n";
    };
    bool all = name == "all";

    if (all || name == "f123") {
        bool ok = true;
        int count = 0;
        for (int n = 1; n <= max_n; ++n)
            for_each_composition(n, [&](const Composition& I) {
                for (long long a = 2; a <= max_n; ++a) {
                    FWeights f = f_weights(I, a);
                    long long expect = I.length() == 1 ? a - 1 : 0;
                    ok = ok && (f.f1 - f.f2 - f.f3 == expect);
                    ++count;
                }
            });
        emit("f123", ok, count);
    }
    if (all || name == "convolution") {
        bool ok = true;
        int count = 0;
        for (int n = 0; n <= 10; ++n)
            for (int a = 0; a <= n; ++a) {
                try {
                    clique_path_convolution(a, n);
                } catch (const std::logic_error&) {
                    ok = false;
                }
                ++count;
            }
        emit("convolution", ok, count);
    }
    if (all || name == "triple-deletion") {
        std::mt19937 rng(seed);
        bool ok = true;
        for (int t = 0; t < trials; ++t) {
            std::array<int, 3> triple{};
            Graph g = random_stable_triple_graph(rng, order, triple);
            ok = ok && check_triple_deletion(g, triple, &cache).pass;
        }
        emit("triple-deletion", ok, trials);
    }
    if (all || name == "ap-add" || name == "ap-remove") {
        std::mt19937 rng(seed + 1);
        for (ApMode mode : {ApMode::add, ApMode::remove}) {
            if (!all && ((mode == ApMode::add) != (name == "ap-add"))) continue;
            bool ok = true;
            for (int t = 0; t < trials; ++t) {
                std::vector<int> tribe;
                int x = -1;
                Graph g = random_tribe_graph(rng, order, mode, tribe, x);
                ok = ok && check_ap(g, tribe, x, mode, &cache).pass;
            }
            emit(mode == ApMode::add ? "ap-add" : "ap-remove", ok, trials);
        }
    }
    return failed == 0 ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chromatic symmetric functions of conjoined graph families"};
    app.require_subcommand(1);

    std::string family, graph_file, engine = "auto", cache_dir, format = "json", grid;
    std::string identity_name = "all";
    int workers = 1, max_order = 10, trials = 50, order = 7, max_n = 12;
    unsigned seed = 20240601;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--workers", workers, "worker threads");
        cmd->add_option("--cache-dir", cache_dir, "directory for the persistent oracle cache");
        cmd->add_option("--format", format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    CLI::App* compute = app.add_subcommand("compute", "e-basis expansion of one graph");
    compute->add_option("--family", family, "family spec, e.g. kpc:a=4,b=2,c=4");
    compute->add_option("--graph", graph_file, "graph JSON file");
    compute->add_option("--engine", engine, "formula, oracle, or auto")
        ->check(CLI::IsMember({"formula", "oracle", "auto"}));
    add_common(compute);

    CLI::App* verify = app.add_subcommand("verify", "formula-oracle equivalence over a grid");
    verify->add_option("--family", family, "family name or randomized identity family")
        ->required();
    verify->add_option("--grid", grid, "parameter grid, e.g. m=2..4,g=0..2,h=0..2");
    verify->add_option("--trials", trials, "randomized trials");
    verify->add_option("--order", order, "max graph order for randomized trials");
    verify->add_option("--seed", seed, "random seed");
    add_common(verify);

    CLI::App* positivity = app.add_subcommand("positivity", "e-positivity scan");
    positivity->add_option("--family", family, "hatchain or kayak");
    positivity->add_option("--graph", graph_file, "graph JSON file");
    positivity->add_option("--max-order", max_order, "largest graph order scanned");
    add_common(positivity);

    CLI::App* identity = app.add_subcommand("identity", "structural identity suites");
    identity->add_option("--name", identity_name,
                         "f123, convolution, triple-deletion, ap-add, ap-remove, or all");
    identity->add_option("--max-n", max_n, "composition size bound for f123");
    identity->add_option("--trials", trials, "randomized trials");
    identity->add_option("--order", order, "max graph order for randomized trials");
    identity->add_option("--seed", seed, "random seed");
    identity->add_option("--cache-dir", cache_dir, "directory for the persistent oracle cache");

    try {
        app.parse(argc, argv);
        if (compute->parsed()) {
            if (family.empty() == graph_file.empty())
                throw std::invalid_argument("compute needs exactly one of --family, --graph");
            return cmd_compute(family, graph_file, engine, workers, cache_dir, format);
        }
        if (verify->parsed()) {
            bool randomized = family == "triple-deletion" || family == "ap-add" ||
                              family == "ap-remove";
            if (!randomized && grid.empty())
                throw std::invalid_argument("verify needs --grid for family " + family);
            return cmd_verify(family, grid, trials, order, seed, workers, cache_dir, format);
        }
        if (positivity->parsed()) {
            if (family.empty() == graph_file.empty())
                throw std::invalid_argument("positivity needs exactly one of --family, --graph");
            return cmd_positivity(family, graph_file, max_order, workers, cache_dir, format);
        }
        if (identity->parsed())
            return cmd_identity(identity_name, max_n, trials, order, seed, cache_dir);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Json::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
}
