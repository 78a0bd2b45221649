#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "drsrd/matchmaker.hpp"
#include "drsrd/rational.hpp"
#include "drsrd/repository.hpp"
#include "drsrd/taxonomy.hpp"

namespace drsrd {

struct GeneratorConfig {
    std::uint32_t resource_count = 1000;
    Rational certainty{1, 1};  // probability that an advertised value survives masking
    std::uint32_t query_count = 50;
    std::uint64_t seed = 1;
    double threshold = 0.8;
};

void validate_config(const GeneratorConfig& config);

// The resource ontology used by the simulation harness when no taxonomy is
// supplied: computing-resource families under one root, family capacities
// typed per family, shared descriptive text properties at the root.
const Taxonomy& default_taxonomy();
// Same content as default_taxonomy(), as a loadable document.
const std::string& default_taxonomy_text();

// Ground truth plus its masked counterpart. Each resource instantiates a leaf
// class and advertises every property bound along its class's root path, all
// with non-Null values drawn from small per-type value pools (values stream).
// The masked copy independently replaces each value by Null with probability
// 1 - certainty (masking stream). Deterministic per seed.
std::pair<Repository, Repository> generate_resources(const Taxonomy& tax, const GeneratorConfig& config);

// Deterministic query sequence (queries stream): each query samples 2-6
// distinct properties with weights uniform over {0.1, ..., 1.0}; numeric
// properties get a requested value from the property's value pool.
std::vector<ResourceRequest> generate_queries(const Taxonomy& tax, const GeneratorConfig& config);

// Indices (into the repository's record order) of resources whose unmasked
// record scores at least `threshold` against the request.
std::vector<std::uint32_t> ground_truth_relevant(const Taxonomy& tax, const Repository& ground_truth,
                                                 const ResourceRequest& request, double threshold);

}  // namespace drsrd
