#include "drsrd/generator.hpp"

#include <algorithm>
#include <cstdio>

#include "drsrd/discovery.hpp"
#include "drsrd/error.hpp"
#include "drsrd/rng.hpp"

namespace drsrd {

void validate_config(const GeneratorConfig& config) {
    if (config.resource_count == 0)
        throw Error("resource count must be positive");
    if (config.certainty > Rational(1, 1))
        throw Error("certainty must lie in [0,1]");
    if (!(config.threshold >= 0.0 && config.threshold <= 1.0))
        throw Error("threshold must lie in [0,1]");
}

const std::string& default_taxonomy_text() {
    static const std::string text = R"(# Computing-resource ontology used by the simulation harness.
class ComputingResource
class ComputeCluster parent ComputingResource
class BeowulfCluster parent ComputeCluster
class GpuCluster parent ComputeCluster
class Workstation parent ComputingResource
class LinuxWorkstation parent Workstation
class WindowsWorkstation parent Workstation
class Mainframe parent ComputingResource
class StorageServer parent ComputingResource
class ParallelFileServer parent StorageServer

# Shared descriptive properties
property os type text class ComputingResource
property arch type text class ComputingResource
property vendor type text class ComputingResource

# Cluster family
property node_count type int class ComputeCluster
property scheduler type text class ComputeCluster
property interconnect type text class ComputeCluster
property queue_policy type text class BeowulfCluster
property gpu_count type int class GpuCluster
property gpu_arch type text class GpuCluster

# Workstation family
property cpu_speed type real class Workstation
property main_memory type real class Workstation
property disk_type type text class Workstation
property desktop_env type text class LinuxWorkstation
property gpu_model type text class WindowsWorkstation

# Mainframe family
property mips type long class Mainframe
property channel_arch type text class Mainframe
property console_type type text class Mainframe

# Storage family
property capacity type real class StorageServer
property fs_type type text class StorageServer
property raid_level type text class StorageServer
property lock_protocol type text class ParallelFileServer
)";
    return text;
}

const Taxonomy& default_taxonomy() {
    static const Taxonomy tax = Taxonomy::load_string(default_taxonomy_text(), "<default-taxonomy>");
    return tax;
}

namespace {

// Small discrete pools keep equivalence classes non-trivial and give the
// numeric ratio rule both in-range and capped cases.
const std::vector<std::int32_t>& int_pool() {
    static const std::vector<std::int32_t> pool{4, 8, 16, 32};
    return pool;
}
const std::vector<std::int64_t>& long_pool() {
    static const std::vector<std::int64_t> pool{1000, 2000, 5000, 10000};
    return pool;
}
const std::vector<double>& real_pool() {
    static const std::vector<double> pool{1.0, 2.0, 4.0, 8.0};
    return pool;
}
constexpr std::size_t kTextPoolSize = 4;

std::string text_pool_value(const std::string& property, std::uint64_t i) {
    return property + "_v" + std::to_string(i + 1);
}

AttributeValue draw_value(const PropertyDef& def, SplitMix64& rng) {
    switch (def.value_type) {
        case ValueType::Text:
            return AttributeValue::text(text_pool_value(def.name, rng.bounded(kTextPoolSize)));
        case ValueType::Int:
            return AttributeValue::integer(int_pool()[rng.bounded(int_pool().size())]);
        case ValueType::Long:
            return AttributeValue::long_integer(long_pool()[rng.bounded(long_pool().size())]);
        case ValueType::Real:
            return AttributeValue::real(real_pool()[rng.bounded(real_pool().size())]);
    }
    throw Error("unknown value type");
}

double draw_requested_value(const PropertyDef& def, SplitMix64& rng) {
    switch (def.value_type) {
        case ValueType::Int:
            return static_cast<double>(int_pool()[rng.bounded(int_pool().size())]);
        case ValueType::Long:
            return static_cast<double>(long_pool()[rng.bounded(long_pool().size())]);
        case ValueType::Real:
            return real_pool()[rng.bounded(real_pool().size())];
        case ValueType::Text:
            break;
    }
    throw Error("text property has no requested value");
}

std::vector<std::uint32_t> leaf_classes(const Taxonomy& tax) {
    std::vector<char> has_child(tax.classes().size(), 0);
    for (const auto& node : tax.classes())
        if (node.parent)
            has_child[*node.parent] = 1;
    std::vector<std::uint32_t> leaves;
    for (std::uint32_t i = 0; i < tax.classes().size(); ++i)
        if (!has_child[i])
            leaves.push_back(i);
    return leaves;
}

// Properties bound along the class's root path, in taxonomy declaration order.
std::vector<std::uint32_t> advertised_properties(const Taxonomy& tax, std::uint32_t class_index) {
    std::vector<std::uint32_t> props;
    for (std::uint32_t p = 0; p < tax.properties().size(); ++p)
        if (tax.generation_distance_by_index(tax.properties()[p].class_index, class_index))
            props.push_back(p);
    return props;
}

std::string resource_id(std::uint32_t i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "r%05u", i + 1);
    return buf;
}

}  // namespace

std::pair<Repository, Repository> generate_resources(const Taxonomy& tax, const GeneratorConfig& config) {
    validate_config(config);
    const auto leaves = leaf_classes(tax);
    if (leaves.empty())
        throw Error("taxonomy has no leaf classes");
    std::vector<std::vector<std::uint32_t>> leaf_props;
    leaf_props.reserve(leaves.size());
    for (auto leaf : leaves)
        leaf_props.push_back(advertised_properties(tax, leaf));

    SplitMix64 values = seeded_stream(config.seed, kValueStreamTag);
    SplitMix64 masking = seeded_stream(config.seed, kMaskStreamTag);

    std::vector<ResourceRecord> truth;
    std::vector<ResourceRecord> masked;
    truth.reserve(config.resource_count);
    masked.reserve(config.resource_count);

    const std::int64_t keep_num = config.certainty.numerator();
    const std::int64_t keep_den = config.certainty.denominator();

    for (std::uint32_t i = 0; i < config.resource_count; ++i) {
        const std::size_t leaf = values.bounded(leaves.size());
        ResourceRecord record;
        record.id = resource_id(i);
        for (auto p : leaf_props[leaf])
            record.values.emplace_back(tax.properties()[p].name, draw_value(tax.properties()[p], values));
        ResourceRecord shadow = record;
        for (auto& [name, value] : shadow.values)
            if (static_cast<std::int64_t>(masking.bounded(static_cast<std::uint64_t>(keep_den))) >= keep_num)
                value = AttributeValue::null();
        truth.push_back(std::move(record));
        masked.push_back(std::move(shadow));
    }
    return {Repository::in_memory(std::move(truth), tax), Repository::in_memory(std::move(masked), tax)};
}

std::vector<ResourceRequest> generate_queries(const Taxonomy& tax, const GeneratorConfig& config) {
    validate_config(config);
    const std::size_t property_count = tax.properties().size();
    if (property_count < 2)
        throw Error("taxonomy needs at least two properties for query generation");

    const auto leaves = leaf_classes(tax);
    std::vector<std::vector<std::uint32_t>> leaf_props;
    leaf_props.reserve(leaves.size());
    for (auto leaf : leaves)
        leaf_props.push_back(advertised_properties(tax, leaf));

    SplitMix64 rng = seeded_stream(config.seed, kQueryStreamTag);
    std::vector<ResourceRequest> queries;
    queries.reserve(config.query_count);

    for (std::uint32_t q = 0; q < config.query_count; ++q) {
        // Each query is anchored at one resource family and samples from the
        // properties its instances advertise; half the queries swap one
        // sampled property for a foreign one, which keeps advertisements and
        // requests from always agreeing on the property vocabulary.
        const auto& home = leaf_props[rng.bounded(leaves.size())];
        const std::size_t max_size = std::min<std::size_t>(6, home.size());
        const std::size_t min_size = std::min<std::size_t>(2, max_size);
        const std::size_t size = min_size + rng.bounded(max_size - min_size + 1);

        std::vector<std::uint32_t> order = home;
        std::vector<std::uint32_t> chosen;
        for (std::size_t k = 0; k < size; ++k) {
            const std::size_t pick = k + rng.bounded(order.size() - k);
            std::swap(order[k], order[pick]);
            chosen.push_back(order[k]);
        }
        if (rng.bounded(3) == 0) {
            std::vector<std::uint32_t> foreign;
            for (std::uint32_t p = 0; p < property_count; ++p)
                if (std::find(home.begin(), home.end(), p) == home.end())
                    foreign.push_back(p);
            if (!foreign.empty())
                chosen[rng.bounded(chosen.size())] = foreign[rng.bounded(foreign.size())];
        }

        ResourceRequest request;
        for (auto idx : chosen) {
            const PropertyDef& def = tax.properties()[idx];
            RequestedProperty prop;
            prop.name = def.name;
            prop.weight = Rational(1 + static_cast<std::int64_t>(rng.bounded(10)), 10);
            if (def.value_type != ValueType::Text)
                prop.value = draw_requested_value(def, rng);
            request.properties.push_back(std::move(prop));
        }
        queries.push_back(std::move(request));
    }
    return queries;
}

std::vector<std::uint32_t> ground_truth_relevant(const Taxonomy& tax, const Repository& ground_truth,
                                                 const ResourceRequest& request, double threshold) {
    if (!(threshold >= 0.0 && threshold <= 1.0))
        throw Error("threshold must lie in [0,1]");
    const RecordScorer scorer(tax, request, advertised_names(ground_truth));
    std::vector<std::uint32_t> relevant;
    for (std::uint32_t i = 0; i < ground_truth.records().size(); ++i)
        if (scorer.score(ground_truth.records()[i]) >= threshold)
            relevant.push_back(i);
    return relevant;
}

}  // namespace drsrd
