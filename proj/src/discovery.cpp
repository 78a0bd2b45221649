#include "drsrd/discovery.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

#include "drsrd/error.hpp"

namespace drsrd {

namespace {

std::vector<std::string> names_of(const std::vector<RequestedProperty>& props) {
    std::vector<std::string> names;
    names.reserve(props.size());
    for (const auto& p : props)
        names.push_back(p.name);
    return names;
}

}  // namespace

std::vector<std::string> WeightSplit::high_names() const { return names_of(high); }
std::vector<std::string> WeightSplit::low_names() const { return names_of(low); }

WeightSplit split_by_weight(const ResourceRequest& request) {
    const Rational half(1, 2);
    WeightSplit split;
    for (const auto& p : request.properties) {
        if (p.weight >= half)
            split.high.push_back(p);
        else
            split.low.push_back(p);
    }
    return split;
}

namespace {

TransferStandard mean_standard(const std::vector<RequestedProperty>& side) {
    if (side.empty())
        return TransferStandard::no_transfer();
    std::vector<Rational> weights;
    weights.reserve(side.size());
    for (const auto& p : side)
        weights.push_back(p.weight);
    return TransferStandard(rational_mean(weights.data(), weights.size()));
}

}  // namespace

TransferStandard inward_standard(const WeightSplit& split) { return mean_standard(split.high); }
TransferStandard outward_standard(const WeightSplit& split) { return mean_standard(split.low); }

ObjectSet initial_candidates(const InformationTable& table, std::span<const std::string> requested_names) {
    const auto attrs = table.resolve_attributes(requested_names);
    std::size_t best = 0;
    std::vector<std::size_t> coverage(table.object_count(), 0);
    for (std::uint32_t x = 0; x < table.object_count(); ++x) {
        for (auto a : attrs)
            if (!table.value(x, a).is_null())
                ++coverage[x];
        best = std::max(best, coverage[x]);
    }
    ObjectSet out;
    if (best == 0)
        return out;
    for (std::uint32_t x = 0; x < table.object_count(); ++x)
        if (coverage[x] == best)
            out.push_back(x);
    return out;
}

CandidateReport optimize_candidates(const InformationTable& table, const ResourceRequest& request) {
    const auto names = request.property_names();
    return optimize_candidates(table, request, initial_candidates(table, names));
}

CandidateReport optimize_candidates(const InformationTable& table, const ResourceRequest& request,
                                    ObjectSet initial) {
    if (request.properties.empty())
        throw Error("request has no properties");
    const auto requested_names = request.property_names();
    table.resolve_attributes(requested_names);  // every requested property must be a table attribute
    table.validate_object_set(initial);

    CandidateReport report;
    report.initial = std::move(initial);
    report.split = split_by_weight(request);
    report.d_plus = inward_standard(report.split);
    report.d_minus = outward_standard(report.split);

    if (!report.split.high.empty())
        report.inflated_main = inflated_main_set(table, report.split.high_names(), report.initial, report.d_plus);
    if (!report.split.low.empty())
        report.contracted_main = contracted_main_set(table, report.split.low_names(), report.initial, report.d_minus);

    report.two_direction = set_union(set_difference(report.initial, report.contracted_main),
                                     report.inflated_main);
    report.final = d_lower_approx(table, requested_names, report.two_direction);
    return report;
}

const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Drsrd: return "drsrd";
        case Algorithm::Classic: return "classic";
        case Algorithm::Exact: return "exact";
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
    if (name == "drsrd") return Algorithm::Drsrd;
    if (name == "classic") return Algorithm::Classic;
    if (name == "exact") return Algorithm::Exact;
    return std::nullopt;
}

std::vector<std::string> advertised_names(const Repository& repo) {
    std::vector<std::string> names;
    std::unordered_set<std::string_view> seen;
    for (const auto& record : repo.records())
        for (const auto& [name, value] : record.values)
            if (seen.insert(name).second)
                names.push_back(name);
    return names;
}

RecordScorer::RecordScorer(const Taxonomy& tax, const ResourceRequest& request,
                           std::span<const std::string> advertised_names) {
    validate_request(tax, request);
    requested_ = request.properties;
    relevant_ = tax.prune_irrelevant(advertised_names, request.property_names());
    for (int i = 0; i < static_cast<int>(relevant_.size()); ++i)
        slot_index_.emplace_back(relevant_[static_cast<std::size_t>(i)], i);
    std::sort(slot_index_.begin(), slot_index_.end());

    pairs_.resize(requested_.size());
    for (std::size_t i = 0; i < requested_.size(); ++i) {
        const auto& req_def = tax.property_named(requested_[i].name);
        pairs_[i].resize(relevant_.size());
        for (std::size_t j = 0; j < relevant_.size(); ++j) {
            const auto& adv_def = tax.property_named(relevant_[j]);
            const MatchRelation rel = tax.relation_by_class(req_def.class_index, adv_def.class_index);
            Pair p;
            p.related = rel.kind != MatchRelation::Kind::NoMatch;
            p.both_text = req_def.value_type == ValueType::Text && adv_def.value_type == ValueType::Text;
            p.numeric_comparable =
                req_def.value_type != ValueType::Text && req_def.value_type == adv_def.value_type;
            if (p.both_text)
                p.text_degree = text_relation_degree(rel);
            pairs_[i][j] = p;
        }
    }
}

std::vector<int> RecordScorer::slots(const ResourceRecord& record) const {
    std::vector<int> out(record.values.size(), -1);
    for (std::size_t k = 0; k < record.values.size(); ++k) {
        const auto it = std::lower_bound(slot_index_.begin(), slot_index_.end(), record.values[k].first,
                                         [](const auto& entry, const std::string& name) { return entry.first < name; });
        if (it != slot_index_.end() && it->first == record.values[k].first)
            out[k] = it->second;
    }
    return out;
}

double RecordScorer::score(const ResourceRecord& record) const {
    const std::vector<int> slot = slots(record);
    double weighted = 0.0;
    double total_weight = 0.0;
    for (std::size_t i = 0; i < requested_.size(); ++i) {
        double best = 0.0;
        for (std::size_t k = 0; k < record.values.size(); ++k) {
            if (slot[k] < 0)
                continue;  // marked up as irrelevant
            const Pair& p = pairs_[i][static_cast<std::size_t>(slot[k])];
            const AttributeValue& value = record.values[k].second;
            double degree = 0.0;
            if (value.is_null())
                degree = 0.5;
            else if (p.both_text)
                degree = p.text_degree;
            else if (p.numeric_comparable)
                degree = numeric_ratio_degree(value.numeric(), *requested_[i].value);
            best = std::max(best, degree);
        }
        weighted += best * requested_[i].weight_as_double();
        total_weight += requested_[i].weight_as_double();
    }
    return weighted / total_weight;
}

bool RecordScorer::exact_retainable(const ResourceRecord& record) const {
    const std::vector<int> slot = slots(record);
    for (std::size_t i = 0; i < requested_.size(); ++i) {
        bool witnessed = false;
        for (std::size_t k = 0; k < record.values.size() && !witnessed; ++k) {
            if (slot[k] < 0 || record.values[k].second.is_null())
                continue;
            const Pair& p = pairs_[i][static_cast<std::size_t>(slot[k])];
            if (!p.related)
                continue;
            if (p.numeric_comparable &&
                record.values[k].second.numeric() / *requested_[i].value > 5.0)
                continue;
            witnessed = true;
        }
        if (!witnessed)
            return false;
    }
    return true;
}

DiscoveryOutcome discover_timed(const Taxonomy& tax, const Repository& repo,
                                const ResourceRequest& request, Algorithm algorithm, double threshold) {
    if (!(threshold >= 0.0 && threshold <= 1.0))
        throw Error("threshold must lie in [0,1]");
    validate_request(tax, request);

    const RecordScorer scorer(tax, request, advertised_names(repo));
    const auto requested_names = request.property_names();
    const InformationTable table = repo.to_information_table(requested_names);

    // Candidate selection precedes the timed matchmaking phase.
    ObjectSet candidates;
    switch (algorithm) {
        case Algorithm::Drsrd:
            candidates = optimize_candidates(table, request).final;
            break;
        case Algorithm::Classic:
            candidates = lower_approx(table, requested_names, initial_candidates(table, requested_names));
            break;
        case Algorithm::Exact:
            candidates = table.all_objects();
            break;
    }

    DiscoveryOutcome outcome;
    const auto started = std::chrono::steady_clock::now();
    std::vector<std::pair<std::string, double>> scored;
    for (auto idx : candidates) {
        const ResourceRecord& record = repo.records()[idx];
        if (algorithm == Algorithm::Exact && !scorer.exact_retainable(record))
            continue;
        const double degree = scorer.score(record);
        if (degree >= threshold)
            scored.emplace_back(record.id, degree);
    }
    outcome.results = rank_results(std::move(scored));
    outcome.matchmaking_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - started)
            .count());
    return outcome;
}

std::vector<MatchResult> discover(const Taxonomy& tax, const Repository& repo,
                                  const ResourceRequest& request, Algorithm algorithm, double threshold) {
    return discover_timed(tax, repo, request, algorithm, threshold).results;
}

}  // namespace drsrd
