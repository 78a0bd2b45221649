#include "drsrd/information_table.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "drsrd/error.hpp"

namespace drsrd {

ObjectSet set_union(const ObjectSet& a, const ObjectSet& b) {
    ObjectSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ObjectSet set_intersection(const ObjectSet& a, const ObjectSet& b) {
    ObjectSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ObjectSet set_difference(const ObjectSet& a, const ObjectSet& b) {
    ObjectSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const ObjectSet& s, std::uint32_t x) {
    return std::binary_search(s.begin(), s.end(), x);
}

InformationTable::InformationTable(std::vector<std::string> objects,
                                   std::vector<std::string> attributes,
                                   std::vector<AttributeValue> cells)
    : objects_(std::move(objects)), attributes_(std::move(attributes)), cells_(std::move(cells)) {
    if (cells_.size() != objects_.size() * attributes_.size())
        throw Error("cell count does not match table shape");
    std::unordered_set<std::string> seen;
    for (const auto& id : objects_) {
        if (id.empty())
            throw Error("empty object id");
        if (!seen.insert(id).second)
            throw Error("duplicate object id '" + id + "'");
    }
    seen.clear();
    for (const auto& name : attributes_) {
        if (name.empty())
            throw Error("empty attribute name");
        if (!seen.insert(name).second)
            throw Error("duplicate attribute '" + name + "'");
    }
}

std::optional<std::uint32_t> InformationTable::object_index(std::string_view id) const {
    for (std::uint32_t i = 0; i < objects_.size(); ++i)
        if (objects_[i] == id)
            return i;
    return std::nullopt;
}

std::optional<std::uint32_t> InformationTable::attribute_index(std::string_view name) const {
    for (std::uint32_t i = 0; i < attributes_.size(); ++i)
        if (attributes_[i] == name)
            return i;
    return std::nullopt;
}

const AttributeValue& InformationTable::value(std::uint32_t object, std::uint32_t attribute) const {
    if (object >= objects_.size() || attribute >= attributes_.size())
        throw Error("cell index out of range");
    return cells_[static_cast<std::size_t>(object) * attributes_.size() + attribute];
}

ObjectSet InformationTable::object_set(std::span<const std::string> ids) const {
    ObjectSet out;
    out.reserve(ids.size());
    for (const auto& id : ids) {
        const auto idx = object_index(id);
        if (!idx)
            throw Error("unknown object '" + id + "'");
        out.push_back(*idx);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::string> InformationTable::object_ids(const ObjectSet& s) const {
    validate_object_set(s);
    std::vector<std::string> out;
    out.reserve(s.size());
    for (auto i : s)
        out.push_back(objects_[i]);
    return out;
}

ObjectSet InformationTable::all_objects() const {
    ObjectSet out(objects_.size());
    for (std::uint32_t i = 0; i < objects_.size(); ++i)
        out[i] = i;
    return out;
}

ObjectSet InformationTable::complement(const ObjectSet& s) const {
    validate_object_set(s);
    return set_difference(all_objects(), s);
}

std::vector<std::uint32_t> InformationTable::resolve_attributes(std::span<const std::string> names) const {
    std::vector<std::uint32_t> out;
    out.reserve(names.size());
    for (const auto& name : names) {
        const auto idx = attribute_index(name);
        if (!idx)
            throw Error("unknown attribute '" + name + "'");
        out.push_back(*idx);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void InformationTable::validate_object_set(const ObjectSet& s) const {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= objects_.size())
            throw Error("unknown object index " + std::to_string(s[i]));
        if (i > 0 && s[i - 1] >= s[i])
            throw Error("object set is not sorted and duplicate-free");
    }
}

namespace {

Partition partition_resolved(const InformationTable& table, const std::vector<std::uint32_t>& attrs) {
    if (attrs.empty())
        throw Error("attribute set must be non-empty");
    Partition part;
    part.block_of.resize(table.object_count());
    // std::map keyed on the projected row keeps block discovery order
    // independent of any hash function.
    std::map<std::vector<AttributeValue>, std::uint32_t> block_ids;
    std::vector<AttributeValue> key;
    for (std::uint32_t x = 0; x < table.object_count(); ++x) {
        key.clear();
        for (auto a : attrs)
            key.push_back(table.value(x, a));
        auto [it, inserted] = block_ids.try_emplace(key, static_cast<std::uint32_t>(part.blocks.size()));
        if (inserted)
            part.blocks.emplace_back();
        part.blocks[it->second].push_back(x);
        part.block_of[x] = it->second;
    }
    return part;
}

}  // namespace

Partition partition(const InformationTable& table, std::span<const std::string> attrs) {
    return partition_resolved(table, table.resolve_attributes(attrs));
}

ObjectSet lower_approx(const InformationTable& table, std::span<const std::string> attrs, const ObjectSet& x) {
    table.validate_object_set(x);
    const Partition part = partition(table, attrs);
    std::vector<char> in_x(table.object_count(), 0);
    for (auto i : x)
        in_x[i] = 1;
    std::vector<char> block_inside(part.blocks.size(), 0);
    for (std::size_t b = 0; b < part.blocks.size(); ++b)
        block_inside[b] = std::all_of(part.blocks[b].begin(), part.blocks[b].end(),
                                      [&](std::uint32_t m) { return in_x[m]; });
    ObjectSet out;
    for (std::uint32_t i = 0; i < table.object_count(); ++i)
        if (block_inside[part.block_of[i]])
            out.push_back(i);
    return out;
}

ObjectSet upper_approx(const InformationTable& table, std::span<const std::string> attrs, const ObjectSet& x) {
    table.validate_object_set(x);
    const Partition part = partition(table, attrs);
    std::vector<char> block_meets(part.blocks.size(), 0);
    for (auto i : x)
        block_meets[part.block_of[i]] = 1;
    ObjectSet out;
    for (std::uint32_t i = 0; i < table.object_count(); ++i)
        if (block_meets[part.block_of[i]])
            out.push_back(i);
    return out;
}

ObjectSet positive_region(const InformationTable& table,
                          std::span<const std::string> c_attrs,
                          std::span<const std::string> d_attrs) {
    if (c_attrs.empty() || d_attrs.empty())
        throw Error("positive region requires non-empty attribute sets");
    const Partition pc = partition(table, c_attrs);
    const Partition pd = partition(table, d_attrs);
    // x is in POS_C(D) iff its whole C-block lies in one D-block.
    std::vector<char> uniform(pc.blocks.size(), 1);
    for (std::size_t b = 0; b < pc.blocks.size(); ++b) {
        const auto& members = pc.blocks[b];
        for (std::size_t i = 1; i < members.size(); ++i)
            if (!pd.same_block(members[i], members[0])) {
                uniform[b] = 0;
                break;
            }
    }
    ObjectSet out;
    for (std::uint32_t i = 0; i < table.object_count(); ++i)
        if (uniform[pc.block_of[i]])
            out.push_back(i);
    return out;
}

double dependency_degree(const InformationTable& table,
                         std::span<const std::string> c_attrs,
                         std::span<const std::string> d_attrs) {
    if (table.object_count() == 0)
        throw Error("dependency degree undefined on an empty universe");
    return static_cast<double>(positive_region(table, c_attrs, d_attrs).size()) /
           static_cast<double>(table.object_count());
}

std::vector<std::string> reduce_dependent_attributes(const InformationTable& table,
                                                     std::span<const std::string> attrs) {
    const std::vector<std::uint32_t> resolved = table.resolve_attributes(attrs);
    if (resolved.size() < 2)
        throw Error("reduction requires at least two attributes");
    if (table.object_count() == 0)
        throw Error("reduction undefined on an empty universe");
    std::vector<std::string> surviving;
    for (auto idx : resolved)
        surviving.push_back(table.attributes()[idx]);
    // Visit from last to first so the later of two redundant attributes drops.
    for (std::size_t pos = surviving.size(); pos-- > 0;) {
        if (surviving.size() < 2)
            break;
        std::vector<std::string> rest;
        for (std::size_t i = 0; i < surviving.size(); ++i)
            if (i != pos)
                rest.push_back(surviving[i]);
        const std::vector<std::string> target{surviving[pos]};
        if (positive_region(table, rest, target).size() == table.object_count())
            surviving.erase(surviving.begin() + static_cast<std::ptrdiff_t>(pos));
    }
    return surviving;
}

}  // namespace drsrd
