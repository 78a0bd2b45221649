#pragma once

#include <span>
#include <string>

#include "drsrd/information_table.hpp"
#include "drsrd/rational.hpp"

namespace drsrd {

// Threshold on a transfer coefficient, in [0,1]. Kept rational so threshold
// comparisons against block-size ratios are exact.
struct TransferStandard {
    Rational value;

    TransferStandard() : value(1, 1) {}
    explicit TransferStandard(Rational v);

    static TransferStandard no_transfer() { return TransferStandard(Rational(1, 1)); }
};

// |[x]_T \ X| / |[x]_T| for x in X; in [0,1).
Rational outward_coefficient(const InformationTable& table, std::span<const std::string> attrs,
                             const ObjectSet& x_set, std::uint32_t x);

// |[x]_T ∩ X| / |[x]_T| for x outside X; in [0,1).
Rational inward_coefficient(const InformationTable& table, std::span<const std::string> attrs,
                            const ObjectSet& x_set, std::uint32_t x);

// {x outside X : d_plus <= inward coefficient < 1}
ObjectSet inflated_main_set(const InformationTable& table, std::span<const std::string> attrs,
                            const ObjectSet& x_set, const TransferStandard& d_plus);

// {x outside X : inward coefficient < d_plus}; together with the main set this
// partitions the complement of X.
ObjectSet inflated_assistant_set(const InformationTable& table, std::span<const std::string> attrs,
                                 const ObjectSet& x_set, const TransferStandard& d_plus);

// X together with its inflated main set.
ObjectSet inflated_set(const InformationTable& table, std::span<const std::string> attrs,
                       const ObjectSet& x_set, const TransferStandard& d_plus);

// {x in X : d_minus <= outward coefficient < 1}
ObjectSet contracted_main_set(const InformationTable& table, std::span<const std::string> attrs,
                              const ObjectSet& x_set, const TransferStandard& d_minus);

// {x in X : outward coefficient < d_minus}; partitions X with the main set.
ObjectSet contracted_assistant_set(const InformationTable& table, std::span<const std::string> attrs,
                                   const ObjectSet& x_set, const TransferStandard& d_minus);

// X minus its contracted main set.
ObjectSet contracted_set(const InformationTable& table, std::span<const std::string> attrs,
                         const ObjectSet& x_set, const TransferStandard& d_minus);

// (X \ contracted_main over attrs_contract) ∪ (inflated_main over attrs_expand).
ObjectSet two_direction_set(const InformationTable& table,
                            std::span<const std::string> attrs_expand, const TransferStandard& d_plus,
                            std::span<const std::string> attrs_contract, const TransferStandard& d_minus,
                            const ObjectSet& x_set);

// Classical lower/upper approximations of an already-transferred set.
ObjectSet d_lower_approx(const InformationTable& table, std::span<const std::string> q_attrs,
                         const ObjectSet& x_star);
ObjectSet d_upper_approx(const InformationTable& table, std::span<const std::string> q_attrs,
                         const ObjectSet& x_star);

// All transfer sets of one (X, T, T', Q) configuration. The assistant sets are
// exposed for completeness; nothing downstream consumes them.
struct DynamicSetBundle {
    ObjectSet inflated_main;
    ObjectSet inflated_assistant;
    ObjectSet contracted_main;
    ObjectSet contracted_assistant;
    ObjectSet two_direction;
    ObjectSet d_lower;
    ObjectSet d_upper;
};

DynamicSetBundle dynamic_set_bundle(const InformationTable& table,
                                    std::span<const std::string> attrs_expand, const TransferStandard& d_plus,
                                    std::span<const std::string> attrs_contract, const TransferStandard& d_minus,
                                    std::span<const std::string> q_attrs, const ObjectSet& x_set);

}  // namespace drsrd
