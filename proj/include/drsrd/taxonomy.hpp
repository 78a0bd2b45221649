#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "drsrd/value.hpp"

namespace drsrd {

struct ClassNode {
    std::string name;
    std::optional<std::uint32_t> parent;  // absent only for the root
    std::uint32_t depth = 0;              // root = 0
};

struct PropertyDef {
    std::string name;
    ValueType value_type;
    std::uint32_t class_index;
};

// Subsumption relation between a requested property pR and an advertised
// property pA, through the classes they annotate.
struct MatchRelation {
    enum class Kind { Exact, PlugIn, Subsume, NoMatch };

    Kind kind = Kind::NoMatch;
    std::uint32_t distance = 0;  // generation distance; >= 1 for PlugIn/Subsume

    static MatchRelation exact() { return {Kind::Exact, 0}; }
    static MatchRelation plug_in(std::uint32_t d) { return {Kind::PlugIn, d}; }
    static MatchRelation subsume(std::uint32_t d) { return {Kind::Subsume, d}; }
    static MatchRelation no_match() { return {Kind::NoMatch, 0}; }

    friend bool operator==(const MatchRelation&, const MatchRelation&) = default;
};

// Rooted class tree with typed property definitions. Immutable after load;
// every query is pure.
class Taxonomy {
public:
    static Taxonomy load_file(const std::filesystem::path& path);
    static Taxonomy load(std::istream& in, const std::string& source_name = "<taxonomy>");
    static Taxonomy load_string(const std::string& text, const std::string& source_name = "<taxonomy>");

    const std::vector<ClassNode>& classes() const { return classes_; }
    const std::vector<PropertyDef>& properties() const { return properties_; }
    std::uint32_t root() const { return root_; }

    std::optional<std::uint32_t> class_index(std::string_view name) const;
    std::optional<std::uint32_t> property_index(std::string_view name) const;
    // Throwing lookups, used where an unknown name is a caller error.
    const ClassNode& class_named(std::string_view name) const;
    const PropertyDef& property_named(std::string_view name) const;

    // Parent-edge count from descendant up to ancestor; 0 for the same class,
    // absent when ancestor is not on the descendant's root path.
    std::optional<std::uint32_t> generation_distance(std::string_view ancestor,
                                                     std::string_view descendant) const;
    std::optional<std::uint32_t> generation_distance_by_index(std::uint32_t ancestor,
                                                              std::uint32_t descendant) const;

    // Exact when both properties annotate the same class; PlugIn(d) when the
    // advertised class is a proper ancestor of the requested class; Subsume(d)
    // in the opposite direction; NoMatch otherwise.
    MatchRelation relation(std::string_view requested_property,
                           std::string_view advertised_property) const;
    MatchRelation relation_by_class(std::uint32_t requested_class, std::uint32_t advertised_class) const;

    // Advertised properties that relate to at least one requested property;
    // the complement is the marked-up (irrelevant) set.
    std::vector<std::string> prune_irrelevant(std::span<const std::string> advertised,
                                              std::span<const std::string> requested) const;

private:
    Taxonomy() = default;

    std::vector<ClassNode> classes_;
    std::vector<PropertyDef> properties_;
    std::uint32_t root_ = 0;
};

}  // namespace drsrd
