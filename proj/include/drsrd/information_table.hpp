#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "drsrd/value.hpp"

namespace drsrd {

// Object sets are sorted, duplicate-free vectors of row indices. Row order is
// the table's insertion order, so sorted indices double as a deterministic
// enumeration order for every set-valued result.
using ObjectSet = std::vector<std::uint32_t>;

ObjectSet set_union(const ObjectSet& a, const ObjectSet& b);
ObjectSet set_intersection(const ObjectSet& a, const ObjectSet& b);
ObjectSet set_difference(const ObjectSet& a, const ObjectSet& b);
bool set_contains(const ObjectSet& s, std::uint32_t x);

// Immutable universe-by-attributes table. Every (object, attribute) pair has
// exactly one value, possibly Null. Object and attribute order is insertion
// order; all queries are pure and safe to run concurrently.
class InformationTable {
public:
    InformationTable(std::vector<std::string> objects,
                     std::vector<std::string> attributes,
                     std::vector<AttributeValue> cells);  // row-major, size = |objects|*|attributes|

    std::size_t object_count() const { return objects_.size(); }
    std::size_t attribute_count() const { return attributes_.size(); }
    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<std::string>& attributes() const { return attributes_; }

    std::optional<std::uint32_t> object_index(std::string_view id) const;
    std::optional<std::uint32_t> attribute_index(std::string_view name) const;

    const AttributeValue& value(std::uint32_t object, std::uint32_t attribute) const;

    // Name <-> index conversion; unknown names throw with the offending name.
    ObjectSet object_set(std::span<const std::string> ids) const;
    std::vector<std::string> object_ids(const ObjectSet& s) const;
    ObjectSet all_objects() const;
    ObjectSet complement(const ObjectSet& s) const;

    std::vector<std::uint32_t> resolve_attributes(std::span<const std::string> names) const;
    void validate_object_set(const ObjectSet& s) const;

private:
    std::vector<std::string> objects_;
    std::vector<std::string> attributes_;
    std::vector<AttributeValue> cells_;
};

// Partition of the universe into equivalence classes. Blocks are ordered by
// first occurrence; members ascend within a block.
struct Partition {
    std::vector<std::vector<std::uint32_t>> blocks;
    std::vector<std::uint32_t> block_of;  // object index -> block index

    bool same_block(std::uint32_t a, std::uint32_t b) const { return block_of[a] == block_of[b]; }
};

// Equivalence classes under value agreement on `attrs`; Null agrees only with
// Null. `attrs` must be a non-empty subset of the table's attributes.
Partition partition(const InformationTable& table, std::span<const std::string> attrs);

// {x : [x]_attrs subset of X}
ObjectSet lower_approx(const InformationTable& table, std::span<const std::string> attrs, const ObjectSet& x);
// {x : [x]_attrs meets X}
ObjectSet upper_approx(const InformationTable& table, std::span<const std::string> attrs, const ObjectSet& x);

// Union over D-blocks of their C-lower approximations.
ObjectSet positive_region(const InformationTable& table,
                          std::span<const std::string> c_attrs,
                          std::span<const std::string> d_attrs);

// |POS_C(D)| / |U|, in [0,1]; 1.0 iff D totally depends on C.
double dependency_degree(const InformationTable& table,
                         std::span<const std::string> c_attrs,
                         std::span<const std::string> d_attrs);

// Greedy dependent-attribute reduction. Visits attributes from last to first
// in table order and drops p when the remaining attributes fully determine it,
// so of two redundant attributes the later one is dropped. Returns survivors
// in table order.
std::vector<std::string> reduce_dependent_attributes(const InformationTable& table,
                                                     std::span<const std::string> attrs);

}  // namespace drsrd
