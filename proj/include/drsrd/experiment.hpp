#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drsrd/discovery.hpp"
#include "drsrd/generator.hpp"

namespace drsrd {

// One (query, algorithm) trial. When nothing is retrieved precision is
// reported as 1.0 with the zero-retrieved flag (visible in the CSV as
// retrieved=0).
struct TrialOutcome {
    Algorithm algorithm = Algorithm::Drsrd;
    std::uint32_t query_id = 0;
    std::uint32_t retrieved = 0;
    std::uint32_t correct = 0;
    double precision = 1.0;
    bool zero_retrieved = false;
    std::uint64_t match_time_ns = 0;
};

struct AlgorithmSummary {
    Algorithm algorithm = Algorithm::Drsrd;
    std::uint32_t retrieved_total = 0;
    std::uint32_t correct_total = 0;
    // Run-level precision: correct_total / retrieved_total, the ratio of
    // correct retrieved resources to all retrieved resources over the whole
    // run (1.0 with the zero-retrieved convention when nothing at all was
    // retrieved).
    double mean_precision = 1.0;
    std::uint64_t mean_match_time_ns = 0;
};

struct ExperimentResult {
    Rational certainty{1, 1};
    std::uint32_t resource_count = 0;
    std::vector<TrialOutcome> trials;         // ordered by (query, algorithm)
    std::vector<AlgorithmSummary> summaries;  // one per algorithm, input order

    const AlgorithmSummary& summary(Algorithm a) const;

    // Schema: algorithm,certainty,resources,query_id,retrieved,correct,precision,match_time_ns
    // Aggregate rows use query_id=ALL. Fixed 6-fraction-digit decimals; only
    // the timing column varies between reruns of one seed.
    std::string to_csv() const;
};

// For every query and algorithm, discovery runs on the masked repository and
// is judged against ground_truth_relevant on the unmasked one, both at
// config.threshold.
ExperimentResult run_precision_experiment(const Taxonomy& tax, const GeneratorConfig& config,
                                          const std::vector<Algorithm>& algorithms);

// Same evaluation over explicit repositories and queries (the generated and
// hand-built paths share everything past generation).
ExperimentResult run_precision_experiment_with(const Taxonomy& tax, const Repository& ground_truth,
                                               const Repository& masked,
                                               const std::vector<ResourceRequest>& queries,
                                               double threshold, const std::vector<Algorithm>& algorithms,
                                               Rational certainty_label);

// CSV with one row per (algorithm, resource count): mean precision and mean
// matching time at that scale.
std::string run_bench(const Taxonomy& tax, const std::vector<std::uint32_t>& resource_counts,
                      GeneratorConfig base_config, const std::vector<Algorithm>& algorithms);

std::string format_fixed(double v);  // 6 fraction digits

}  // namespace drsrd
