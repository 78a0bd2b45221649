#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "drsrd/rational.hpp"
#include "drsrd/record.hpp"
#include "drsrd/taxonomy.hpp"

namespace drsrd {

// One requested property: name, priority weight in (0,1], and for non-text
// properties the requested value V(r).
struct RequestedProperty {
    std::string name;
    Rational weight;
    std::optional<double> value;

    double weight_as_double() const { return weight.as_double(); }
};

struct ResourceRequest {
    std::vector<RequestedProperty> properties;

    std::vector<std::string> property_names() const;
};

// Validates a request against a taxonomy: non-empty, unique known names,
// weights in (0,1], positive values present exactly where the property is
// numeric.
void validate_request(const Taxonomy& tax, const ResourceRequest& request);

// Request document: one line per property, `<property> weight <w> [value <v>]`.
ResourceRequest parse_request(const std::string& text, const Taxonomy& tax,
                              const std::string& source_name = "<request>");
ResourceRequest load_request(const std::filesystem::path& path, const Taxonomy& tax);

struct MatchResult {
    std::string resource;
    double degree = 0.0;
    std::uint32_t rank = 0;

    friend bool operator==(const MatchResult&, const MatchResult&) = default;
};

// Text-pair degree by relation: Exact and PlugIn(1) score 1.0, PlugIn(d<=5)
// scores 1-(d-1)/10, Subsume(d<=3) scores 0.8-(d-1)/10, deeper matches 0.5,
// NoMatch 0. Degrees on the tenths grid are built from integer tenths so all
// code paths produce bit-identical doubles.
double text_relation_degree(const MatchRelation& relation);

// Numeric-pair degree by value ratio: 1 - (V(q)/V(r))/10 when the ratio is at
// most 5, otherwise 0.5. Requires a positive requested value.
double numeric_ratio_degree(double advertised_value, double requested_value);

// Degree of one advertised (property, value) against one requested property:
//   advertised Null                      -> 0.5 regardless of relation
//   text vs text                         -> by relation and generation distance
//   numeric vs numeric of the same type  -> by the value ratio V(q)/V(r)
//   anything else                        -> 0.0
double property_match_degree(const Taxonomy& tax,
                             const std::string& advertised_property, const AttributeValue& advertised_value,
                             const RequestedProperty& requested);

// Weighted mean over requested properties of the best per-property degree
// among the record's properties. The record is expected to be pre-pruned to
// properties relevant to the request.
double aggregate_match(const Taxonomy& tax, const ResourceRequest& request, const ResourceRecord& record);

// Stable descending sort by degree, ties by resource id, ranks from 1.
std::vector<MatchResult> rank_results(std::vector<std::pair<std::string, double>> scored);

}  // namespace drsrd
