#include "cli.hpp"

#include "sqw/edge_list.hpp"
#include "sqw/error.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace sqw::cli {

namespace {

using Json = nlohmann::ordered_json;

/// 12 significant digits, so repeated runs serialize byte-identically.
std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double rounded(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

Json simplex_json(const Simplex& s) {
    Json arr = Json::array();
    for (VertexId v : s.vertices()) arr.push_back(v);
    return arr;
}

std::string simplex_field(const Simplex& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(s[i]);
    }
    return out;
}

std::string method_name(Estimator e) { return e == Estimator::finite ? "finite" : "spectral"; }
std::string threshold_name(Threshold t) { return t == Threshold::strict ? "strict" : "geq"; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_dim(const RunConfig& config, const SimplicialComplex& complex, int lowest) {
    if (!config.dim) throw InvalidParameter("--dim is required for this subcommand");
    if (*config.dim < lowest || *config.dim > complex.max_dim()) {
        throw InvalidParameter("--dim " + std::to_string(*config.dim) + " outside [" + std::to_string(lowest) +
                               ", " + std::to_string(complex.max_dim()) + "]");
    }
}

void validate_flags(const RunConfig& config) {
    if (config.input.empty()) throw InvalidParameter("an input edge list is required");
    if (config.max_dim < 1) throw InvalidParameter("--max-dim must be at least 1");
    if (config.time_steps < 1) throw InvalidParameter("--time-steps must be at least 1");
    if (!(config.tolerance > 0)) throw InvalidParameter("--tolerance must be positive");
    if (config.threads < 1) throw InvalidParameter("--threads must be at least 1");
    if (config.format == Format::dot && config.command != Command::detect) {
        throw InvalidParameter("dot output is only available for detect");
    }
    if (config.command == Command::walk && !config.source) throw InvalidParameter("walk needs --source");
    if (config.command == Command::modularity && !config.partition) {
        throw InvalidParameter("modularity needs --partition");
    }
}

// ---------------------------------------------------------------------------
// Subcommands

std::string run_build(const RunConfig& config, const SimplicialComplex& complex) {
    if (config.format == Format::csv) {
        std::string out = "dim,count\n";
        for (int n = 0; n <= complex.max_dim(); ++n) out += std::to_string(n) + "," + std::to_string(complex.count(n)) + "\n";
        return out;
    }
    Json counts = Json::object();
    for (int n = 0; n <= complex.max_dim(); ++n) counts["N_" + std::to_string(n)] = complex.count(n);
    Json j;
    j["max_dim"] = config.max_dim;
    j["counts"] = counts;
    return dump(j);
}

std::string run_spectrum(const RunConfig& config, const SimplicialComplex& complex) {
    require_dim(config, complex, 0);
    const auto report = laplacian_spectrum(complex, *config.dim, config.tolerance);
    if (config.format == Format::csv) {
        std::string out = "index,eigenvalue\n";
        for (std::size_t i = 0; i < report.eigenvalues.size(); ++i) {
            out += std::to_string(i) + "," + format_number(report.eigenvalues[i]) + "\n";
        }
        return out;
    }
    Json values = Json::array();
    for (double v : report.eigenvalues) values.push_back(rounded(v));
    Json j;
    j["dim"] = report.n;
    j["eigenvalues"] = values;
    j["betti"] = report.betti;
    return dump(j);
}

std::string run_walk(const RunConfig& config, const SimplicialComplex& complex) {
    require_dim(config, complex, 1);
    const Simplex source = parse_simplex(*config.source);
    if (source.dim() != *config.dim) {
        throw InvalidParameter("--source " + source.to_string() + " is not a " + std::to_string(*config.dim) + "-simplex");
    }
    const UnitaryWalk walk(WalkSpace::build(complex, *config.dim, config.ordering));
    const auto x = walk.space().simplex_index(source);

    TransitionTable table;
    if (config.method == Estimator::finite) {
        table = finite_time_average(walk, x, config.time_steps, config.threads);
    } else {
        if (walk.space().is_isolated(x)) throw IsolatedSimplex(source.to_string() + " has no lower-adjacent simplices");
        table = long_time_average(walk, spectral_decomposition(walk), x);
    }

    if (config.format == Format::csv) {
        std::string out = "target,q\n";
        for (std::size_t k = 0; k < table.targets.size(); ++k) {
            out += simplex_field(walk.space().simplex(table.targets[k])) + "," + format_number(table.values[k]) + "\n";
        }
        return out;
    }
    Json rows = Json::array();
    for (std::size_t k = 0; k < table.targets.size(); ++k) {
        Json row;
        row["target"] = simplex_json(walk.space().simplex(table.targets[k]));
        row["q"] = rounded(table.values[k]);
        rows.push_back(row);
    }
    Json j;
    j["dim"] = *config.dim;
    j["source"] = simplex_json(source);
    j["method"] = method_name(config.method);
    if (config.method == Estimator::finite) j["time_steps"] = config.time_steps;
    j["arc_count"] = walk.space().arc_count();
    j["table"] = rows;
    return dump(j);
}

std::string detect_dot(const SimplicialComplex& complex, const CommunityPartition& partition) {
    const int n = partition.n;
    const auto layer = complex.simplices(n);
    std::ostringstream out;
    out << "graph communities {\n  node [shape=circle];\n";
    for (const auto& v : complex.simplices(0)) out << "  " << v[0] << ";\n";

    // Community of each edge: its own label for n = 1, otherwise the label
    // shared by every n-simplex containing it (none when they disagree).
    const auto edges = complex.simplices(1);
    std::vector<std::optional<std::size_t>> colour(edges.size());
    std::vector<bool> mixed(edges.size(), false);
    for (std::size_t i = 0; i < layer.size(); ++i) {
        const auto label = partition.labels[i];
        for (const auto& e : (n == 1 ? std::vector<Simplex>{layer[i]} : faces(layer[i], 1))) {
            const auto j = complex.index_of(e);
            if (colour[j] && *colour[j] != label) mixed[j] = true;
            colour[j] = label;
        }
    }
    for (std::size_t j = 0; j < edges.size(); ++j) {
        out << "  " << edges[j][0] << " -- " << edges[j][1];
        if (colour[j] && !mixed[j]) {
            out << " [colorscheme=set312, color=" << (*colour[j] % 12) + 1 << ", community=" << *colour[j] << "]";
        } else {
            out << " [color=gray]";
        }
        out << ";\n";
    }
    out << "}\n";
    if (n >= 2) {
        for (std::size_t c = 0; c < partition.size(); ++c) {
            out << "// community " << c << ":";
            for (auto s : partition.communities[c]) out << ' ' << layer[s].to_string();
            out << "\n";
        }
    }
    return out.str();
}

std::string run_detect(const RunConfig& config, const SimplicialComplex& complex) {
    require_dim(config, complex, 1);
    DetectionOptions options;
    options.estimator = config.method;
    options.time_steps = config.time_steps;
    options.threshold = config.threshold;
    options.ordering = config.ordering;
    options.threads = config.threads;
    const auto partition = detect_communities(complex, *config.dim, options);
    const auto layer = complex.simplices(*config.dim);

    if (config.format == Format::dot) return detect_dot(complex, partition);
    if (config.format == Format::csv) {
        std::string out = "community,simplex\n";
        for (std::size_t c = 0; c < partition.size(); ++c) {
            for (auto s : partition.communities[c]) out += std::to_string(c) + "," + simplex_field(layer[s]) + "\n";
        }
        return out;
    }

    Json communities = Json::array();
    for (const auto& members : partition.communities) {
        Json list = Json::array();
        for (auto s : members) list.push_back(simplex_json(layer[s]));
        communities.push_back(list);
    }
    Json j;
    j["dim"] = *config.dim;
    j["method"] = method_name(config.method);
    if (config.method == Estimator::finite) j["time_steps"] = config.time_steps;
    j["threshold"] = threshold_name(config.threshold);
    j["communities"] = communities;
    try {
        j["modularity"] = rounded(simplicial_modularity(complex, *config.dim, partition).q);
    } catch (const NoAdjacency&) {
        j["modularity"] = nullptr;
    }
    return dump(j);
}

std::vector<std::vector<Simplex>> read_partition(const std::filesystem::path& path, std::optional<int>& dim) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    try {
        if (j.contains("dim")) {
            const int file_dim = j.at("dim").get<int>();
            if (dim && *dim != file_dim) throw InvalidParameter("--dim disagrees with the partition file");
            dim = file_dim;
        }
        std::vector<std::vector<Simplex>> out;
        for (const auto& community : j.at("communities")) {
            auto& group = out.emplace_back();
            for (const auto& simplex : community) group.push_back(canonical_simplex(simplex.get<std::vector<VertexId>>()));
        }
        return out;
    } catch (const Json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

std::string run_modularity(const RunConfig& config, const SimplicialComplex& complex) {
    RunConfig effective = config;
    const auto communities = read_partition(*config.partition, effective.dim);
    require_dim(effective, complex, 1);
    const int n = *effective.dim;
    const auto partition = partition_from_simplices(complex, n, communities);
    const auto report = simplicial_modularity(complex, n, partition);

    if (config.format == Format::csv) {
        std::string out = "community,contribution\n";
        for (std::size_t c = 0; c < report.contributions.size(); ++c) {
            out += std::to_string(c) + "," + format_number(report.contributions[c]) + "\n";
        }
        return out;
    }
    Json contributions = Json::array();
    for (double c : report.contributions) contributions.push_back(rounded(c));
    Json j;
    j["dim"] = n;
    j["m"] = report.m;
    j["modularity"] = rounded(report.q);
    j["contributions"] = contributions;
    return dump(j);
}

std::string run_verify(const RunConfig& config, const SimplicialComplex& complex) {
    std::vector<int> dims;
    if (config.dim) {
        require_dim(config, complex, 0);
        dims.push_back(*config.dim);
    } else {
        for (int n = 0; n <= complex.max_dim(); ++n) dims.push_back(n);
    }

    Json results = Json::array();
    std::string csv = "dim,check,passed\n";
    for (int n : dims) {
        const auto chain = verify_chain_identities(complex, n);
        const bool zeta = verify_symmetry(complex, n).holds;
        Json r;
        r["dim"] = n;
        r["boundary_of_boundary_zero"] = chain.boundary_of_boundary_zero;
        r["up_down_zero"] = chain.up_down_zero;
        r["down_up_zero"] = chain.down_up_zero;
        r["zeta_symmetry"] = zeta;
        r["passed"] = chain.all() && zeta;
        results.push_back(r);
        for (const char* key : {"boundary_of_boundary_zero", "up_down_zero", "down_up_zero", "zeta_symmetry"}) {
            csv += std::to_string(n) + "," + key + "," + (r[key].get<bool>() ? "true" : "false") + "\n";
        }
    }
    if (config.format == Format::csv) return csv;
    if (config.dim) return dump(results.front());
    Json j;
    j["results"] = results;
    return dump(j);
}

}  // namespace

Simplex parse_simplex(const std::string& text) {
    std::vector<VertexId> vertices;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(token, &used);
            if (used != token.size() || v <= 0) throw std::invalid_argument(token);
            vertices.push_back(static_cast<VertexId>(v));
        } catch (const std::logic_error&) {
            throw InvalidParameter("bad vertex '" + token + "' in simplex '" + text + "'");
        }
    }
    return canonical_simplex(vertices);
}

RunResult run(const RunConfig& config) {
    RunResult result;
    try {
        validate_flags(config);
        const auto complex = clique_complex(read_edge_list(config.input), config.max_dim);
        switch (config.command) {
            case Command::build: result.output = run_build(config, complex); break;
            case Command::spectrum: result.output = run_spectrum(config, complex); break;
            case Command::walk: result.output = run_walk(config, complex); break;
            case Command::detect: result.output = run_detect(config, complex); break;
            case Command::modularity: result.output = run_modularity(config, complex); break;
            case Command::verify: result.output = run_verify(config, complex); break;
        }
    } catch (const IoError& e) {
        result = {kExitIo, {}, e.what()};
    } catch (const NumericalError& e) {
        result = {kExitNumerical, {}, e.what()};
    } catch (const Error& e) {
        result = {kExitValidation, {}, e.what()};
    }
    return result;
}

int main_entry(int argc, char** argv) {
    CLI::App app{"Simplicial complexes, Hodge Laplacians and quantum-walk community detection"};
    app.require_subcommand(1);

    RunConfig config;
    std::string method = "finite", threshold = "geq", ordering = "face", format = "json";
    std::string output;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", config.input, "Edge list (one 'u v' pair per line)")->required();
        sub->add_option("--max-dim", config.max_dim, "Largest simplex dimension of the clique complex")
            ->capture_default_str();
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "dot"}));
        sub->add_option("-o,--output", output, "Write output to a file instead of stdout");
    };
    auto add_dim = [&](CLI::App* sub) { sub->add_option("--dim", config.dim, "Simplex dimension n"); };
    auto add_walk = [&](CLI::App* sub) {
        sub->add_option("--time-steps", config.time_steps, "Averaging window T")->capture_default_str();
        sub->add_option("--method", method, "Estimator")->check(CLI::IsMember({"finite", "spectral"}));
        sub->add_option("--coin-order", ordering, "Arc enumeration inside each coin block")
            ->check(CLI::IsMember({"face", "canonical"}));
        sub->add_option("--threads", config.threads, "Worker threads for the finite-time estimator");
    };

    auto* build = app.add_subcommand("build", "Clique complex simplex counts");
    add_common(build);
    auto* spectrum = app.add_subcommand("spectrum", "Hodge Laplacian spectrum and Betti number");
    add_common(spectrum);
    add_dim(spectrum);
    spectrum->add_option("--tolerance", config.tolerance, "Kernel eigenvalue tolerance");
    auto* walk = app.add_subcommand("walk", "Transition probabilities from one simplex");
    add_common(walk);
    add_dim(walk);
    add_walk(walk);
    walk->add_option("--source", config.source, "Source simplex, comma-joined vertices");
    auto* detect = app.add_subcommand("detect", "Quantum-walk simplicial community detection");
    add_common(detect);
    add_dim(detect);
    add_walk(detect);
    detect->add_option("--threshold", threshold, "Comparison against 1/m_n")
        ->check(CLI::IsMember({"strict", "geq"}));
    auto* modularity = app.add_subcommand("modularity", "Simplicial modularity of a partition file");
    add_common(modularity);
    add_dim(modularity);
    modularity->add_option("--partition", config.partition, "Partition JSON {dim, communities}");
    auto* verify = app.add_subcommand("verify", "Chain-complex identities and up/down symmetry");
    add_common(verify);
    add_dim(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitValidation;
    }

    const std::map<CLI::App*, Command> commands{
        {build, Command::build}, {spectrum, Command::spectrum}, {walk, Command::walk},
        {detect, Command::detect}, {modularity, Command::modularity}, {verify, Command::verify}};
    config.command = commands.at(app.get_subcommands().front());
    config.method = method == "spectral" ? Estimator::spectral : Estimator::finite;
    config.threshold = threshold == "strict" ? Threshold::strict : Threshold::at_least;
    config.ordering = ordering == "canonical" ? CoinOrdering::canonical : CoinOrdering::face_grouped;
    config.format = format == "csv" ? Format::csv : format == "dot" ? Format::dot : Format::json;
    if (!output.empty()) config.output = output;

    const auto result = run(config);
    if (result.exit_code != kExitOk) {
        std::cerr << "error: " << result.error << "\n";
        return result.exit_code;
    }
    if (config.output) {
        std::ofstream out(*config.output, std::ios::binary);
        if (!(out << result.output)) {
            std::cerr << "error: cannot write " << config.output->string() << "\n";
            return kExitIo;
        }
    } else {
        std::cout << result.output;
    }
    return kExitOk;
}

}  // namespace sqw::cli
