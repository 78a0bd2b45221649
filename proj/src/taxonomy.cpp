#include "drsrd/taxonomy.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "drsrd/error.hpp"

namespace drsrd {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok)
        tokens.push_back(tok);
    return tokens;
}

[[noreturn]] void fail(const std::string& source, std::size_t line_no, const std::string& message) {
    throw Error(source + ":" + std::to_string(line_no) + ": " + message);
}

void check_name(const std::string& source, std::size_t line_no, const std::string& name) {
    for (char c : name)
        if (c == ';' || c == '=' || c == ',' || c == '#')
            fail(source, line_no, "name contains a reserved character: '" + name + "'");
}

}  // namespace

Taxonomy Taxonomy::load_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open taxonomy file '" + path.string() + "'");
    return load(in, path.string());
}

Taxonomy Taxonomy::load_string(const std::string& text, const std::string& source_name) {
    std::istringstream in(text);
    return load(in, source_name);
}

Taxonomy Taxonomy::load(std::istream& in, const std::string& source_name) {
    struct PendingClass {
        std::string name;
        std::string parent;  // empty = root candidate
        std::size_t line_no;
    };
    struct PendingProperty {
        std::string name;
        ValueType type;
        std::string class_name;
        std::size_t line_no;
    };

    std::vector<PendingClass> pending_classes;
    std::vector<PendingProperty> pending_properties;
    std::unordered_map<std::string, std::size_t> class_lines;
    std::unordered_map<std::string, std::size_t> property_lines;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const auto tokens = tokenize(line);
        if (tokens.empty())
            continue;
        if (tokens[0] == "class") {
            if (tokens.size() != 2 && !(tokens.size() == 4 && tokens[2] == "parent"))
                fail(source_name, line_no, "expected 'class <name>' or 'class <name> parent <name>'");
            check_name(source_name, line_no, tokens[1]);
            if (!class_lines.emplace(tokens[1], line_no).second)
                fail(source_name, line_no, "duplicate class '" + tokens[1] + "'");
            pending_classes.push_back({tokens[1], tokens.size() == 4 ? tokens[3] : "", line_no});
        } else if (tokens[0] == "property") {
            if (tokens.size() != 6 || tokens[2] != "type" || tokens[4] != "class")
                fail(source_name, line_no, "expected 'property <name> type <text|int|long|real> class <name>'");
            check_name(source_name, line_no, tokens[1]);
            const auto type = parse_value_type(tokens[3]);
            if (!type)
                fail(source_name, line_no, "unknown value type '" + tokens[3] + "'");
            if (!property_lines.emplace(tokens[1], line_no).second)
                fail(source_name, line_no, "duplicate property '" + tokens[1] + "'");
            pending_properties.push_back({tokens[1], *type, tokens[5], line_no});
        } else {
            fail(source_name, line_no, "unknown directive '" + tokens[0] + "'");
        }
    }

    Taxonomy tax;
    std::unordered_map<std::string, std::uint32_t> class_index;
    for (const auto& pc : pending_classes) {
        class_index.emplace(pc.name, static_cast<std::uint32_t>(tax.classes_.size()));
        tax.classes_.push_back({pc.name, std::nullopt, 0});
    }

    std::optional<std::uint32_t> root;
    for (std::size_t i = 0; i < pending_classes.size(); ++i) {
        const auto& pc = pending_classes[i];
        if (pc.parent.empty()) {
            if (root)
                fail(source_name, pc.line_no,
                     "multiple roots: '" + tax.classes_[*root].name + "' and '" + pc.name + "'");
            root = static_cast<std::uint32_t>(i);
        } else {
            const auto it = class_index.find(pc.parent);
            if (it == class_index.end())
                fail(source_name, pc.line_no, "unknown parent '" + pc.parent + "'");
            tax.classes_[i].parent = it->second;
        }
    }
    if (!root)
        throw Error(source_name + ": no root class");
    tax.root_ = *root;

    // Depth assignment doubles as cycle detection: a chain longer than the
    // class count must revisit a node.
    for (std::size_t i = 0; i < tax.classes_.size(); ++i) {
        std::uint32_t depth = 0;
        std::uint32_t cursor = static_cast<std::uint32_t>(i);
        while (tax.classes_[cursor].parent) {
            cursor = *tax.classes_[cursor].parent;
            if (++depth > tax.classes_.size())
                fail(source_name, pending_classes[i].line_no,
                     "parent cycle involving class '" + tax.classes_[i].name + "'");
        }
        if (cursor != tax.root_)
            fail(source_name, pending_classes[i].line_no,
                 "class '" + tax.classes_[i].name + "' is not connected to the root");
        tax.classes_[i].depth = depth;
    }

    for (const auto& pp : pending_properties) {
        const auto it = class_index.find(pp.class_name);
        if (it == class_index.end())
            fail(source_name, pp.line_no, "unknown class '" + pp.class_name + "'");
        tax.properties_.push_back({pp.name, pp.type, it->second});
    }
    return tax;
}

std::optional<std::uint32_t> Taxonomy::class_index(std::string_view name) const {
    for (std::uint32_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].name == name)
            return i;
    return std::nullopt;
}

std::optional<std::uint32_t> Taxonomy::property_index(std::string_view name) const {
    for (std::uint32_t i = 0; i < properties_.size(); ++i)
        if (properties_[i].name == name)
            return i;
    return std::nullopt;
}

const ClassNode& Taxonomy::class_named(std::string_view name) const {
    const auto idx = class_index(name);
    if (!idx)
        throw Error("unknown class '" + std::string(name) + "'");
    return classes_[*idx];
}

const PropertyDef& Taxonomy::property_named(std::string_view name) const {
    const auto idx = property_index(name);
    if (!idx)
        throw Error("unknown property '" + std::string(name) + "'");
    return properties_[*idx];
}

std::optional<std::uint32_t> Taxonomy::generation_distance_by_index(std::uint32_t ancestor,
                                                                    std::uint32_t descendant) const {
    if (ancestor >= classes_.size() || descendant >= classes_.size())
        throw Error("class index out of range");
    std::uint32_t d = 0;
    std::uint32_t cursor = descendant;
    while (true) {
        if (cursor == ancestor)
            return d;
        if (!classes_[cursor].parent)
            return std::nullopt;
        cursor = *classes_[cursor].parent;
        ++d;
    }
}

std::optional<std::uint32_t> Taxonomy::generation_distance(std::string_view ancestor,
                                                           std::string_view descendant) const {
    const auto a = class_index(ancestor);
    if (!a)
        throw Error("unknown class '" + std::string(ancestor) + "'");
    const auto d = class_index(descendant);
    if (!d)
        throw Error("unknown class '" + std::string(descendant) + "'");
    return generation_distance_by_index(*a, *d);
}

MatchRelation Taxonomy::relation_by_class(std::uint32_t requested_class,
                                          std::uint32_t advertised_class) const {
    if (requested_class == advertised_class)
        return MatchRelation::exact();
    if (const auto d = generation_distance_by_index(advertised_class, requested_class); d && *d > 0)
        return MatchRelation::plug_in(*d);
    if (const auto d = generation_distance_by_index(requested_class, advertised_class); d && *d > 0)
        return MatchRelation::subsume(*d);
    return MatchRelation::no_match();
}

MatchRelation Taxonomy::relation(std::string_view requested_property,
                                 std::string_view advertised_property) const {
    const auto& pr = property_named(requested_property);
    const auto& pa = property_named(advertised_property);
    return relation_by_class(pr.class_index, pa.class_index);
}

std::vector<std::string> Taxonomy::prune_irrelevant(std::span<const std::string> advertised,
                                                    std::span<const std::string> requested) const {
    std::vector<std::string> kept;
    for (const auto& adv : advertised) {
        for (const auto& req : requested) {
            if (relation(req, adv).kind != MatchRelation::Kind::NoMatch) {
                kept.push_back(adv);
                break;
            }
        }
    }
    return kept;
}

}  // namespace drsrd
