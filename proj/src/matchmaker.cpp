#include "drsrd/matchmaker.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "drsrd/error.hpp"

namespace drsrd {

std::vector<std::string> ResourceRequest::property_names() const {
    std::vector<std::string> names;
    names.reserve(properties.size());
    for (const auto& p : properties)
        names.push_back(p.name);
    return names;
}

void validate_request(const Taxonomy& tax, const ResourceRequest& request) {
    if (request.properties.empty())
        throw Error("request has no properties");
    std::unordered_set<std::string> seen;
    for (const auto& p : request.properties) {
        if (!seen.insert(p.name).second)
            throw Error("request repeats property '" + p.name + "'");
        const auto& def = tax.property_named(p.name);
        if (p.weight == Rational(0, 1) || p.weight > Rational(1, 1))
            throw Error("weight of '" + p.name + "' must lie in (0,1]");
        if (def.value_type == ValueType::Text) {
            if (p.value)
                throw Error("text property '" + p.name + "' takes no requested value");
        } else {
            if (!p.value)
                throw Error("numeric property '" + p.name + "' requires a requested value");
            if (!(*p.value > 0.0))
                throw Error("requested value of '" + p.name + "' must be positive");
        }
    }
}

ResourceRequest parse_request(const std::string& text, const Taxonomy& tax,
                              const std::string& source_name) {
    ResourceRequest request;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream tokens(line);
        std::string name, kw;
        if (!(tokens >> name))
            continue;
        RequestedProperty prop;
        prop.name = name;
        std::string weight_text;
        if (!(tokens >> kw >> weight_text) || kw != "weight")
            throw Error(source_name + ":" + std::to_string(line_no) +
                        ": expected '<property> weight <w> [value <v>]'");
        try {
            prop.weight = Rational::parse_decimal(weight_text);
        } catch (const Error&) {
            throw Error(source_name + ":" + std::to_string(line_no) + ": malformed weight '" + weight_text + "'");
        }
        std::string value_text;
        if (tokens >> kw) {
            if (kw != "value" || !(tokens >> value_text))
                throw Error(source_name + ":" + std::to_string(line_no) +
                            ": expected '<property> weight <w> [value <v>]'");
            char* end = nullptr;
            const double v = std::strtod(value_text.c_str(), &end);
            if (end != value_text.c_str() + value_text.size())
                throw Error(source_name + ":" + std::to_string(line_no) + ": malformed value '" + value_text + "'");
            prop.value = v;
            if (tokens >> kw)
                throw Error(source_name + ":" + std::to_string(line_no) + ": trailing tokens");
        }
        request.properties.push_back(std::move(prop));
    }
    validate_request(tax, request);
    return request;
}

ResourceRequest load_request(const std::filesystem::path& path, const Taxonomy& tax) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open request file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_request(buf.str(), tax, path.string());
}

namespace {

bool is_numeric(ValueType t) { return t != ValueType::Text; }

double tenths(int n) { return static_cast<double>(n) / 10.0; }

}  // namespace

double text_relation_degree(const MatchRelation& rel) {
    switch (rel.kind) {
        case MatchRelation::Kind::Exact:
            return 1.0;
        case MatchRelation::Kind::PlugIn: {
            const auto d = rel.distance;
            if (d <= 1) return 1.0;
            if (d <= 5) return tenths(10 - static_cast<int>(d - 1));
            return 0.5;
        }
        case MatchRelation::Kind::Subsume: {
            const auto d = rel.distance;
            if (d <= 3) return tenths(8 - static_cast<int>(d - 1));
            return 0.5;
        }
        case MatchRelation::Kind::NoMatch:
            return 0.0;
    }
    return 0.0;
}

double numeric_ratio_degree(double advertised_value, double requested_value) {
    if (!(requested_value > 0.0))
        throw Error("requested value must be positive");
    const double ratio = advertised_value / requested_value;
    if (ratio <= 5.0)
        return 1.0 - ratio * 0.1;
    return 0.5;
}

double property_match_degree(const Taxonomy& tax,
                             const std::string& advertised_property, const AttributeValue& advertised_value,
                             const RequestedProperty& requested) {
    const auto& adv_def = tax.property_named(advertised_property);
    const auto& req_def = tax.property_named(requested.name);

    if (advertised_value.is_null())
        return 0.5;
    if (advertised_value.type() != adv_def.value_type)
        throw Error("value of '" + advertised_property + "' does not match its declared type");

    if (adv_def.value_type == ValueType::Text && req_def.value_type == ValueType::Text)
        return text_relation_degree(tax.relation_by_class(req_def.class_index, adv_def.class_index));

    if (is_numeric(adv_def.value_type) && adv_def.value_type == req_def.value_type) {
        if (!requested.value)
            throw Error("numeric property '" + requested.name + "' has no requested value");
        return numeric_ratio_degree(advertised_value.numeric(), *requested.value);
    }

    return 0.0;  // incomparable declared types
}

double aggregate_match(const Taxonomy& tax, const ResourceRequest& request, const ResourceRecord& record) {
    if (request.properties.empty())
        throw Error("request has no properties");
    double weighted = 0.0;
    double total_weight = 0.0;
    for (const auto& req : request.properties) {
        double best = 0.0;
        for (const auto& [name, value] : record.values)
            best = std::max(best, property_match_degree(tax, name, value, req));
        weighted += best * req.weight_as_double();
        total_weight += req.weight_as_double();
    }
    return weighted / total_weight;
}

std::vector<MatchResult> rank_results(std::vector<std::pair<std::string, double>> scored) {
    std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second)
            return a.second > b.second;
        return a.first < b.first;
    });
    std::vector<MatchResult> out;
    out.reserve(scored.size());
    for (std::uint32_t i = 0; i < scored.size(); ++i)
        out.push_back({std::move(scored[i].first), scored[i].second, i + 1});
    return out;
}

}  // namespace drsrd
