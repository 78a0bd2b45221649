#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drsrd/dynamic_rough.hpp"
#include "drsrd/information_table.hpp"
#include "drsrd/matchmaker.hpp"
#include "drsrd/repository.hpp"
#include "drsrd/taxonomy.hpp"

namespace drsrd {

// Request split at weight 0.5: the boundary itself goes to the high side.
struct WeightSplit {
    std::vector<RequestedProperty> high;  // w >= 0.5, drives inflation
    std::vector<RequestedProperty> low;   // w <  0.5, drives contraction

    std::vector<std::string> high_names() const;
    std::vector<std::string> low_names() const;
};

WeightSplit split_by_weight(const ResourceRequest& request);

// Mean weight of the high side; 1.0 (no inflation) when it is empty.
TransferStandard inward_standard(const WeightSplit& split);
// Mean weight of the low side; 1.0 (no contraction) when it is empty.
TransferStandard outward_standard(const WeightSplit& split);

// Resources covering the maximum number of requested properties with non-Null
// values; empty when nothing covers any of them.
ObjectSet initial_candidates(const InformationTable& table, std::span<const std::string> requested_names);

// Full provenance of one candidate optimization run.
struct CandidateReport {
    ObjectSet initial;
    WeightSplit split;
    TransferStandard d_plus;
    TransferStandard d_minus;
    ObjectSet inflated_main;
    ObjectSet contracted_main;
    ObjectSet two_direction;
    ObjectSet final;  // D-lower approximation of two_direction over all requested names
};

CandidateReport optimize_candidates(const InformationTable& table, const ResourceRequest& request);
// Same pipeline with an explicit initial candidate set (the initial-set policy
// is swappable; tests and callers may substitute their own X).
CandidateReport optimize_candidates(const InformationTable& table, const ResourceRequest& request,
                                    ObjectSet initial);

enum class Algorithm { Drsrd, Classic, Exact };

const char* algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

// Precomputed scoring context for one (request, advertised universe) pair:
// irrelevant advertised properties are marked up once and every
// relation/text-degree pair is resolved once. score() equals
// aggregate_match() over the record restricted to relevant properties, and is
// the path both retrieval and the relevance oracle share.
class RecordScorer {
public:
    RecordScorer(const Taxonomy& tax, const ResourceRequest& request,
                 std::span<const std::string> advertised_names);

    double score(const ResourceRecord& record) const;
    // exact-baseline retention: every requested property needs a non-Null
    // advertised witness with relation != NoMatch and, when numerically
    // comparable, value ratio <= 5.
    bool exact_retainable(const ResourceRecord& record) const;

    const std::vector<std::string>& relevant_advertised() const { return relevant_; }

private:
    struct Pair {
        double text_degree = 0.0;
        bool both_text = false;
        bool numeric_comparable = false;
        bool related = false;  // relation != NoMatch
    };

    std::vector<int> slots(const ResourceRecord& record) const;

    std::vector<std::string> relevant_;
    std::vector<std::pair<std::string, int>> slot_index_;  // sorted by name
    std::vector<RequestedProperty> requested_;
    std::vector<std::vector<Pair>> pairs_;  // [requested][relevant advertised]
};

// Advertised property-name universe of a repository, in first-advertisement
// order.
std::vector<std::string> advertised_names(const Repository& repo);

struct DiscoveryOutcome {
    std::vector<MatchResult> results;
    // Matchmaking component only: candidate filtering, scoring and ranking.
    // Candidate optimization and ontology pruning are not included.
    std::uint64_t matchmaking_ns = 0;
};

// Full pipeline over a repository snapshot: irrelevant-property markup,
// per-algorithm candidate selection, match-degree scoring of each candidate
// record, threshold cut, ranking.
//
//   drsrd   - candidates from optimize_candidates (transfer sets + D-lower)
//   classic - candidates from the classical lower approximation of the
//             initial candidate set over all requested names
//   exact   - no uncertainty tolerance: a resource survives only if every
//             requested property has a non-Null advertised witness with
//             relation != NoMatch (and value ratio <= 5 when numerically
//             comparable)
DiscoveryOutcome discover_timed(const Taxonomy& tax, const Repository& repo,
                                const ResourceRequest& request, Algorithm algorithm, double threshold);

std::vector<MatchResult> discover(const Taxonomy& tax, const Repository& repo,
                                  const ResourceRequest& request, Algorithm algorithm, double threshold);

}  // namespace drsrd
