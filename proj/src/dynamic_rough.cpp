#include "drsrd/dynamic_rough.hpp"

#include <algorithm>

#include "drsrd/error.hpp"

namespace drsrd {

TransferStandard::TransferStandard(Rational v) : value(v) {
    if (v > Rational(1, 1))
        throw Error("transfer standard must lie in [0,1]");
}

namespace {

struct BlockCounts {
    Partition part;
    std::vector<std::uint32_t> in_x;  // per block: |block ∩ X|
};

BlockCounts block_counts(const InformationTable& table, std::span<const std::string> attrs,
                         const ObjectSet& x_set) {
    table.validate_object_set(x_set);
    BlockCounts bc{partition(table, attrs), {}};
    bc.in_x.assign(bc.part.blocks.size(), 0);
    for (auto i : x_set)
        ++bc.in_x[bc.part.block_of[i]];
    return bc;
}

}  // namespace

Rational outward_coefficient(const InformationTable& table, std::span<const std::string> attrs,
                             const ObjectSet& x_set, std::uint32_t x) {
    const BlockCounts bc = block_counts(table, attrs, x_set);
    if (!set_contains(x_set, x))
        throw Error("outward coefficient is defined only for members of X");
    const auto b = bc.part.block_of[x];
    const auto size = static_cast<std::int64_t>(bc.part.blocks[b].size());
    return Rational(size - bc.in_x[b], size);
}

Rational inward_coefficient(const InformationTable& table, std::span<const std::string> attrs,
                            const ObjectSet& x_set, std::uint32_t x) {
    const BlockCounts bc = block_counts(table, attrs, x_set);
    if (x >= table.object_count())
        throw Error("unknown object index " + std::to_string(x));
    if (set_contains(x_set, x))
        throw Error("inward coefficient is defined only outside X");
    const auto b = bc.part.block_of[x];
    return Rational(bc.in_x[b], static_cast<std::int64_t>(bc.part.blocks[b].size()));
}

ObjectSet inflated_main_set(const InformationTable& table, std::span<const std::string> attrs,
                            const ObjectSet& x_set, const TransferStandard& d_plus) {
    const BlockCounts bc = block_counts(table, attrs, x_set);
    ObjectSet out;
    for (std::uint32_t i = 0; i < table.object_count(); ++i) {
        if (set_contains(x_set, i))
            continue;
        const auto b = bc.part.block_of[i];
        const Rational rho(bc.in_x[b], static_cast<std::int64_t>(bc.part.blocks[b].size()));
        if (d_plus.value <= rho)  // rho < 1 holds since i itself lies outside X
            out.push_back(i);
    }
    return out;
}

ObjectSet inflated_assistant_set(const InformationTable& table, std::span<const std::string> attrs,
                                 const ObjectSet& x_set, const TransferStandard& d_plus) {
    return set_difference(table.complement(x_set), inflated_main_set(table, attrs, x_set, d_plus));
}

ObjectSet inflated_set(const InformationTable& table, std::span<const std::string> attrs,
                       const ObjectSet& x_set, const TransferStandard& d_plus) {
    return set_union(x_set, inflated_main_set(table, attrs, x_set, d_plus));
}

ObjectSet contracted_main_set(const InformationTable& table, std::span<const std::string> attrs,
                              const ObjectSet& x_set, const TransferStandard& d_minus) {
    const BlockCounts bc = block_counts(table, attrs, x_set);
    ObjectSet out;
    for (auto i : x_set) {
        const auto b = bc.part.block_of[i];
        const auto size = static_cast<std::int64_t>(bc.part.blocks[b].size());
        const Rational rho(size - bc.in_x[b], size);
        if (d_minus.value <= rho)  // rho < 1 holds since i itself lies in X
            out.push_back(i);
    }
    return out;
}

ObjectSet contracted_assistant_set(const InformationTable& table, std::span<const std::string> attrs,
                                   const ObjectSet& x_set, const TransferStandard& d_minus) {
    return set_difference(x_set, contracted_main_set(table, attrs, x_set, d_minus));
}

ObjectSet contracted_set(const InformationTable& table, std::span<const std::string> attrs,
                         const ObjectSet& x_set, const TransferStandard& d_minus) {
    return set_difference(x_set, contracted_main_set(table, attrs, x_set, d_minus));
}

ObjectSet two_direction_set(const InformationTable& table,
                            std::span<const std::string> attrs_expand, const TransferStandard& d_plus,
                            std::span<const std::string> attrs_contract, const TransferStandard& d_minus,
                            const ObjectSet& x_set) {
    if (attrs_expand.empty() || attrs_contract.empty())
        throw Error("two-direction set requires non-empty attribute sets");
    const ObjectSet contracted = contracted_set(table, attrs_contract, x_set, d_minus);
    const ObjectSet inflated = inflated_main_set(table, attrs_expand, x_set, d_plus);
    return set_union(contracted, inflated);
}

ObjectSet d_lower_approx(const InformationTable& table, std::span<const std::string> q_attrs,
                         const ObjectSet& x_star) {
    return lower_approx(table, q_attrs, x_star);
}

ObjectSet d_upper_approx(const InformationTable& table, std::span<const std::string> q_attrs,
                         const ObjectSet& x_star) {
    return upper_approx(table, q_attrs, x_star);
}

DynamicSetBundle dynamic_set_bundle(const InformationTable& table,
                                    std::span<const std::string> attrs_expand, const TransferStandard& d_plus,
                                    std::span<const std::string> attrs_contract, const TransferStandard& d_minus,
                                    std::span<const std::string> q_attrs, const ObjectSet& x_set) {
    DynamicSetBundle bundle;
    bundle.inflated_main = inflated_main_set(table, attrs_expand, x_set, d_plus);
    bundle.inflated_assistant = inflated_assistant_set(table, attrs_expand, x_set, d_plus);
    bundle.contracted_main = contracted_main_set(table, attrs_contract, x_set, d_minus);
    bundle.contracted_assistant = contracted_assistant_set(table, attrs_contract, x_set, d_minus);
    bundle.two_direction = set_union(set_difference(x_set, bundle.contracted_main), bundle.inflated_main);
    bundle.d_lower = d_lower_approx(table, q_attrs, bundle.two_direction);
    bundle.d_upper = d_upper_approx(table, q_attrs, bundle.two_direction);
    return bundle;
}

}  // namespace drsrd
