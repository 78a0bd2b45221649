#include "drsrd/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_set>

#include "drsrd/error.hpp"

namespace drsrd {

std::string format_fixed(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

const AlgorithmSummary& ExperimentResult::summary(Algorithm a) const {
    for (const auto& s : summaries)
        if (s.algorithm == a)
            return s;
    throw Error("no summary for algorithm");
}

std::string ExperimentResult::to_csv() const {
    std::string out = "algorithm,certainty,resources,query_id,retrieved,correct,precision,match_time_ns\n";
    const std::string certainty_text = format_fixed(certainty.as_double());
    const std::string resources_text = std::to_string(resource_count);
    for (const auto& t : trials) {
        out += algorithm_name(t.algorithm);
        out += ',';
        out += certainty_text;
        out += ',';
        out += resources_text;
        out += ',';
        out += std::to_string(t.query_id);
        out += ',';
        out += std::to_string(t.retrieved);
        out += ',';
        out += std::to_string(t.correct);
        out += ',';
        out += format_fixed(t.precision);
        out += ',';
        out += std::to_string(t.match_time_ns);
        out += '\n';
    }
    for (const auto& s : summaries) {
        out += algorithm_name(s.algorithm);
        out += ',';
        out += certainty_text;
        out += ',';
        out += resources_text;
        out += ",ALL,";
        out += std::to_string(s.retrieved_total);
        out += ',';
        out += std::to_string(s.correct_total);
        out += ',';
        out += format_fixed(s.mean_precision);
        out += ',';
        out += std::to_string(s.mean_match_time_ns);
        out += '\n';
    }
    return out;
}

ExperimentResult run_precision_experiment_with(const Taxonomy& tax, const Repository& ground_truth,
                                               const Repository& masked,
                                               const std::vector<ResourceRequest>& queries,
                                               double threshold, const std::vector<Algorithm>& algorithms,
                                               Rational certainty_label) {
    if (algorithms.empty())
        throw Error("at least one algorithm is required");
    if (ground_truth.size() != masked.size())
        throw Error("ground truth and masked repositories differ in size");

    ExperimentResult result;
    result.certainty = certainty_label;
    result.resource_count = static_cast<std::uint32_t>(masked.size());

    struct Accumulator {
        std::uint64_t time_sum = 0;
        std::uint32_t retrieved = 0;
        std::uint32_t correct = 0;
    };
    std::vector<Accumulator> acc(algorithms.size());

    for (std::uint32_t q = 0; q < queries.size(); ++q) {
        const auto relevant_indices = ground_truth_relevant(tax, ground_truth, queries[q], threshold);
        std::unordered_set<std::string_view> relevant;
        for (auto idx : relevant_indices)
            relevant.insert(ground_truth.records()[idx].id);

        for (std::size_t a = 0; a < algorithms.size(); ++a) {
            const DiscoveryOutcome outcome =
                discover_timed(tax, masked, queries[q], algorithms[a], threshold);
            TrialOutcome trial;
            trial.algorithm = algorithms[a];
            trial.query_id = q;
            trial.retrieved = static_cast<std::uint32_t>(outcome.results.size());
            for (const auto& r : outcome.results)
                if (relevant.count(r.resource))
                    ++trial.correct;
            trial.zero_retrieved = trial.retrieved == 0;
            trial.precision = trial.zero_retrieved
                                  ? 1.0
                                  : static_cast<double>(trial.correct) / static_cast<double>(trial.retrieved);
            trial.match_time_ns = outcome.matchmaking_ns;
            result.trials.push_back(trial);

            acc[a].time_sum += trial.match_time_ns;
            acc[a].retrieved += trial.retrieved;
            acc[a].correct += trial.correct;
        }
    }

    for (std::size_t a = 0; a < algorithms.size(); ++a) {
        AlgorithmSummary s;
        s.algorithm = algorithms[a];
        s.retrieved_total = acc[a].retrieved;
        s.correct_total = acc[a].correct;
        s.mean_precision = acc[a].retrieved == 0
                               ? 1.0
                               : static_cast<double>(acc[a].correct) / static_cast<double>(acc[a].retrieved);
        const auto n = queries.size();
        s.mean_match_time_ns = n == 0 ? 0 : acc[a].time_sum / n;
        result.summaries.push_back(s);
    }
    return result;
}

ExperimentResult run_precision_experiment(const Taxonomy& tax, const GeneratorConfig& config,
                                          const std::vector<Algorithm>& algorithms) {
    validate_config(config);
    const auto [truth, masked] = generate_resources(tax, config);
    const auto queries = generate_queries(tax, config);
    return run_precision_experiment_with(tax, truth, masked, queries, config.threshold, algorithms,
                                         config.certainty);
}

std::string run_bench(const Taxonomy& tax, const std::vector<std::uint32_t>& resource_counts,
                      GeneratorConfig base_config, const std::vector<Algorithm>& algorithms) {
    std::string out = "algorithm,certainty,resources,queries,mean_precision,mean_match_time_ns\n";
    for (auto n : resource_counts) {
        GeneratorConfig config = base_config;
        config.resource_count = n;
        const ExperimentResult result = run_precision_experiment(tax, config, algorithms);
        for (const auto& s : result.summaries) {
            out += algorithm_name(s.algorithm);
            out += ',';
            out += format_fixed(config.certainty.as_double());
            out += ',';
            out += std::to_string(n);
            out += ',';
            out += std::to_string(config.query_count);
            out += ',';
            out += format_fixed(s.mean_precision);
            out += ',';
            out += std::to_string(s.mean_match_time_ns);
            out += '\n';
        }
    }
    return out;
}

}  // namespace drsrd
