#include "drsrd/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "drsrd/discovery.hpp"
#include "drsrd/error.hpp"
#include "drsrd/experiment.hpp"
#include "drsrd/generator.hpp"

namespace drsrd {

namespace {

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot write output file '" + path + "'");
    out << content;
}

std::vector<Algorithm> parse_algorithms(const std::string& csv) {
    std::vector<Algorithm> algorithms;
    std::stringstream in(csv);
    std::string name;
    while (std::getline(in, name, ',')) {
        const auto algo = parse_algorithm(name);
        if (!algo)
            throw Error("unknown algorithm '" + name + "' (expected drsrd, classic or exact)");
        algorithms.push_back(*algo);
    }
    if (algorithms.empty())
        throw Error("at least one algorithm is required");
    return algorithms;
}

std::vector<std::uint32_t> parse_counts(const std::string& csv) {
    std::vector<std::uint32_t> counts;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            const unsigned long v = std::stoul(item);
            if (v == 0 || v > 1000000)
                throw Error("");
            counts.push_back(static_cast<std::uint32_t>(v));
        } catch (...) {
            throw Error("malformed resource count '" + item + "'");
        }
    }
    if (counts.empty())
        throw Error("at least one resource count is required");
    return counts;
}

// Record value syntax shared with the repository file: prop=value;prop=;...
ResourceRecord parse_record_argument(const std::string& id, const std::string& values, const Taxonomy& tax) {
    ResourceRecord record;
    record.id = id;
    std::size_t start = 0;
    while (start < values.size()) {
        auto end = values.find(';', start);
        if (end == std::string::npos)
            end = values.size();
        const std::string entry = values.substr(start, end - start);
        start = end + 1;
        if (entry.empty())
            continue;
        const auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw Error("property entry without '=': '" + entry + "'");
        const std::string name = entry.substr(0, eq);
        const std::string value_text = entry.substr(eq + 1);
        const auto& def = tax.property_named(name);
        record.values.emplace_back(name, value_text.empty() ? AttributeValue::null()
                                                            : parse_typed_value(def.value_type, value_text));
    }
    return record;
}

std::string results_csv(const std::vector<MatchResult>& results) {
    std::string out = "resource,degree,rank\n";
    for (const auto& r : results) {
        out += r.resource;
        out += ',';
        out += format_fixed(r.degree);
        out += ',';
        out += std::to_string(r.rank);
        out += '\n';
    }
    return out;
}

int run_parsed(CLI::App& app,
               CLI::App* match, CLI::App* register_cmd, CLI::App* deregister_cmd,
               CLI::App* simulate, CLI::App* bench,
               const std::string& taxonomy_path, const std::string& repo_path,
               const std::string& request_path, const std::string& algo_name,
               double threshold, const std::string& out_path,
               const std::string& record_id, const std::string& record_values,
               std::uint32_t resources, const std::string& certainty_text,
               std::uint32_t queries, std::uint64_t seed,
               const std::string& algos_csv, const std::string& resources_csv) {
    if (app.get_subcommands().empty()) {
        std::cerr << app.help() << '\n';
        return 2;
    }

    if (match->parsed()) {
        const Taxonomy tax = Taxonomy::load_file(taxonomy_path);
        const Repository repo = Repository::load(repo_path, tax);
        const ResourceRequest request = load_request(request_path, tax);
        const auto algo = parse_algorithm(algo_name);
        if (!algo)
            throw Error("unknown algorithm '" + algo_name + "' (expected drsrd, classic or exact)");
        const auto results = discover(tax, repo, request, *algo, threshold);
        write_output(out_path, results_csv(results));
        return 0;
    }
    if (register_cmd->parsed()) {
        const Taxonomy tax = Taxonomy::load_file(taxonomy_path);
        const Repository repo = std::filesystem::exists(repo_path) ? Repository::load(repo_path, tax)
                                                                   : Repository::empty_at(repo_path);
        repo.with_registered(parse_record_argument(record_id, record_values, tax), tax);
        return 0;
    }
    if (deregister_cmd->parsed()) {
        const Taxonomy tax = Taxonomy::load_file(taxonomy_path);
        Repository::load(repo_path, tax).with_deregistered(record_id);
        return 0;
    }
    if (simulate->parsed() || bench->parsed()) {
        GeneratorConfig config;
        config.resource_count = resources;
        config.certainty = Rational::parse_decimal(certainty_text);
        config.query_count = queries;
        config.seed = seed;
        config.threshold = threshold;
        std::optional<Taxonomy> loaded;
        if (!taxonomy_path.empty())
            loaded = Taxonomy::load_file(taxonomy_path);
        const Taxonomy& tax = loaded ? *loaded : default_taxonomy();
        const auto algorithms = parse_algorithms(algos_csv);
        if (simulate->parsed()) {
            const ExperimentResult result = run_precision_experiment(tax, config, algorithms);
            write_output(out_path, result.to_csv());
        } else {
            write_output(out_path, run_bench(tax, parse_counts(resources_csv), config, algorithms));
        }
        return 0;
    }
    std::cerr << app.help() << '\n';
    return 2;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run_cli(args);
}

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Dynamic rough set resource discovery"};
    app.require_subcommand(0, 1);

    std::string taxonomy_path;
    std::string repo_path;
    std::string request_path;
    std::string algo_name = "drsrd";
    double threshold = 0.8;
    std::string out_path = "-";
    std::string record_id;
    std::string record_values;
    std::uint32_t resources = 1000;
    std::string certainty_text = "1.0";
    std::uint32_t queries = 50;
    std::uint64_t seed = 1;
    std::string algos_csv = "drsrd,classic,exact";
    std::string resources_csv;

    CLI::App* match = app.add_subcommand("match", "Rank repository resources against a request");
    match->add_option("--taxonomy", taxonomy_path, "Taxonomy document")->required();
    match->add_option("--repo", repo_path, "Repository file")->required();
    match->add_option("--request", request_path, "Request document")->required();
    match->add_option("--algo", algo_name, "Algorithm: drsrd, classic or exact");
    match->add_option("--threshold", threshold, "Retrieval threshold in [0,1]");
    match->add_option("--out", out_path, "Output file ('-' for stdout)");

    CLI::App* register_cmd = app.add_subcommand("register", "Add one resource to a repository");
    register_cmd->add_option("--taxonomy", taxonomy_path, "Taxonomy document")->required();
    register_cmd->add_option("--repo", repo_path, "Repository file (created if missing)")->required();
    register_cmd->add_option("--id", record_id, "Resource id")->required();
    register_cmd->add_option("--values", record_values, "prop=value;prop=;... (empty value = Null)");

    CLI::App* deregister_cmd = app.add_subcommand("deregister", "Remove one resource from a repository");
    deregister_cmd->add_option("--taxonomy", taxonomy_path, "Taxonomy document")->required();
    deregister_cmd->add_option("--repo", repo_path, "Repository file")->required();
    deregister_cmd->add_option("--id", record_id, "Resource id")->required();

    CLI::App* simulate = app.add_subcommand("simulate", "Run one precision/timing experiment");
    simulate->add_option("--resources", resources, "Number of synthetic resources");
    simulate->add_option("--certainty", certainty_text, "Property certainty rate, e.g. 0.3");
    simulate->add_option("--queries", queries, "Number of synthetic queries");
    simulate->add_option("--seed", seed, "Experiment seed");
    simulate->add_option("--threshold", threshold, "Retrieval/relevance threshold");
    simulate->add_option("--algos", algos_csv, "Comma-separated algorithms");
    simulate->add_option("--taxonomy", taxonomy_path, "Taxonomy document (built-in default if omitted)");
    simulate->add_option("--out", out_path, "Output CSV file ('-' for stdout)");

    CLI::App* bench = app.add_subcommand("bench", "Timing sweep over repository sizes");
    bench->add_option("--resources", resources_csv, "Comma-separated resource counts")->required();
    bench->add_option("--certainty", certainty_text, "Property certainty rate");
    bench->add_option("--queries", queries, "Queries per size");
    bench->add_option("--seed", seed, "Experiment seed");
    bench->add_option("--threshold", threshold, "Retrieval/relevance threshold");
    bench->add_option("--algos", algos_csv, "Comma-separated algorithms");
    bench->add_option("--taxonomy", taxonomy_path, "Taxonomy document (built-in default if omitted)");
    bench->add_option("--out", out_path, "Output CSV file ('-' for stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            std::cout << app.help() << '\n';
            return 0;
        }
        std::cerr << e.what() << '\n' << app.help() << '\n';
        return 2;
    }

    try {
        return run_parsed(app, match, register_cmd, deregister_cmd, simulate, bench,
                          taxonomy_path, repo_path, request_path, algo_name, threshold, out_path,
                          record_id, record_values, resources, certainty_text, queries, seed,
                          algos_csv, resources_csv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace drsrd
