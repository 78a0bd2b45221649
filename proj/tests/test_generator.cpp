#include <doctest.h>

#include <cmath>
#include <set>

#include "drsrd/error.hpp"
#include "drsrd/generator.hpp"
#include "support/test_support.hpp"

using namespace drsrd;

TEST_CASE("certainty 1.0 leaves the ground truth unmasked") {
    GeneratorConfig config;
    config.resource_count = 200;
    config.certainty = Rational(1, 1);
    config.seed = 3;
    const auto [truth, masked] = generate_resources(default_taxonomy(), config);
    CHECK(truth.serialize() == masked.serialize());
    for (const auto& record : truth.records())
        for (const auto& [name, value] : record.values)
            CHECK(!value.is_null());
}

TEST_CASE("certainty 0.0 masks every value") {
    GeneratorConfig config;
    config.resource_count = 50;
    config.certainty = Rational(0, 1);
    config.seed = 3;
    const auto [truth, masked] = generate_resources(default_taxonomy(), config);
    for (const auto& record : masked.records())
        for (const auto& [name, value] : record.values)
            CHECK(value.is_null());
}

TEST_CASE("masked Null fraction concentrates at 1 - certainty") {
    GeneratorConfig config;
    config.resource_count = 1000;
    config.certainty = Rational(1, 2);
    config.seed = 11;
    const auto [truth, masked] = generate_resources(default_taxonomy(), config);
    std::size_t cells = 0;
    std::size_t nulls = 0;
    for (const auto& record : masked.records())
        for (const auto& [name, value] : record.values) {
            ++cells;
            if (value.is_null())
                ++nulls;
        }
    const double fraction = static_cast<double>(nulls) / static_cast<double>(cells);
    CHECK(fraction > 0.45);
    CHECK(fraction < 0.55);

    // Tighter 3-sigma binomial bound at certainty 0.3.
    config.certainty = Rational(3, 10);
    const auto [t2, m2] = generate_resources(default_taxonomy(), config);
    cells = nulls = 0;
    for (const auto& record : m2.records())
        for (const auto& [name, value] : record.values) {
            ++cells;
            if (value.is_null())
                ++nulls;
        }
    const double p = 0.7;
    const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(cells));
    CHECK(std::abs(static_cast<double>(nulls) / static_cast<double>(cells) - p) < 3 * sigma);
}

TEST_CASE("ground truth and masking are independent streams") {
    GeneratorConfig a;
    a.resource_count = 100;
    a.certainty = Rational(3, 10);
    a.seed = 5;
    GeneratorConfig b = a;
    b.certainty = Rational(4, 5);
    // Same seed, different certainty: identical ground truth.
    CHECK(generate_resources(default_taxonomy(), a).first.serialize() ==
          generate_resources(default_taxonomy(), b).first.serialize());
}

TEST_CASE("resources advertise exactly their family's root-path properties") {
    GeneratorConfig config;
    config.resource_count = 300;
    config.certainty = Rational(1, 1);
    config.seed = 13;
    const Taxonomy& tax = default_taxonomy();
    const auto [truth, masked] = generate_resources(tax, config);
    std::set<std::set<std::string>> seen_families;
    for (const auto& record : truth.records()) {
        std::set<std::string> names;
        for (const auto& [name, value] : record.values)
            names.insert(name);
        // Root-bound descriptive properties are always advertised.
        CHECK(names.count("os"));
        CHECK(names.count("arch"));
        CHECK(names.count("vendor"));
        seen_families.insert(names);
    }
    CHECK(seen_families.size() == 6);  // one advertisement shape per leaf class
}

TEST_CASE("query generation is deterministic and well-formed") {
    const Taxonomy& tax = default_taxonomy();
    GeneratorConfig config;
    config.query_count = 40;
    config.seed = 17;

    const auto q1 = generate_queries(tax, config);
    const auto q2 = generate_queries(tax, config);
    REQUIRE(q1.size() == 40);
    for (std::size_t i = 0; i < q1.size(); ++i) {
        REQUIRE(q1[i].properties.size() == q2[i].properties.size());
        for (std::size_t k = 0; k < q1[i].properties.size(); ++k) {
            CHECK(q1[i].properties[k].name == q2[i].properties[k].name);
            CHECK(q1[i].properties[k].weight == q2[i].properties[k].weight);
            CHECK(q1[i].properties[k].value == q2[i].properties[k].value);
        }
    }

    for (const auto& query : q1) {
        CHECK(query.properties.size() >= 2);
        CHECK(query.properties.size() <= 6);
        validate_request(tax, query);  // unique names, weights in (0,1], values where numeric
        for (const auto& p : query.properties) {
            CHECK(Rational(1, 10) <= p.weight);
            CHECK(p.weight <= Rational(1, 1));
        }
    }

    config.query_count = 0;
    CHECK(generate_queries(tax, config).empty());
}

TEST_CASE("different seeds give different repositories") {
    GeneratorConfig a;
    a.resource_count = 50;
    a.seed = 1;
    GeneratorConfig b = a;
    b.seed = 2;
    CHECK(generate_resources(default_taxonomy(), a).first.serialize() !=
          generate_resources(default_taxonomy(), b).first.serialize());
}

TEST_CASE("config validation") {
    GeneratorConfig bad;
    bad.resource_count = 0;
    CHECK_THROWS_AS(validate_config(bad), Error);
    GeneratorConfig bad2;
    bad2.threshold = 1.5;
    CHECK_THROWS_AS(validate_config(bad2), Error);
}

TEST_CASE("default taxonomy text and object agree") {
    const Taxonomy parsed = Taxonomy::load_string(default_taxonomy_text());
    CHECK(parsed.classes().size() == default_taxonomy().classes().size());
    CHECK(parsed.properties().size() == default_taxonomy().properties().size());
    CHECK(default_taxonomy().properties().size() == 21);
}
