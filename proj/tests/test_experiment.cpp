#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "drsrd/error.hpp"
#include "drsrd/experiment.hpp"
#include "support/test_support.hpp"

using namespace drsrd;
using ts::iv;
using ts::nul;
using ts::rv;
using ts::txt;

namespace {

// Strips the trailing match_time_ns column from every CSV line.
std::string strip_timing(const std::string& csv) {
    std::string out;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        const auto comma = line.rfind(',');
        out += line.substr(0, comma);
        out += '\n';
    }
    return out;
}

const Taxonomy& mini_tax() {
    static const Taxonomy tax = Taxonomy::load_string(R"(
        class Root
        class A parent Root
        class B parent Root
        property os type text class Root
        property a_speed type real class A
        property b_size type int class B
    )");
    return tax;
}

ResourceRecord rec(const std::string& id,
                   std::vector<std::pair<std::string, AttributeValue>> values) {
    return ResourceRecord{id, std::move(values)};
}

}  // namespace

TEST_CASE("experiment CSV matches the hand-computed tiny instance") {
    const Taxonomy& tax = mini_tax();
    const Repository truth = Repository::in_memory(
        {rec("r1", {{"os", txt("unix")}, {"a_speed", rv(2.0)}}),
         rec("r2", {{"os", txt("unix")}, {"a_speed", rv(4.0)}}),
         rec("r3", {{"os", txt("win")}, {"a_speed", rv(16.0)}}),
         rec("r4", {{"os", txt("unix")}, {"b_size", iv(8)}}),
         rec("r5", {{"os", txt("win")}, {"b_size", iv(4)}}),
         rec("r6", {{"os", txt("unix")}, {"b_size", iv(16)}})},
        tax);
    const Repository masked = Repository::in_memory(
        {rec("r1", {{"os", txt("unix")}, {"a_speed", rv(2.0)}}),
         rec("r2", {{"os", txt("unix")}, {"a_speed", nul()}}),
         rec("r3", {{"os", txt("win")}, {"a_speed", rv(16.0)}}),
         rec("r4", {{"os", txt("unix")}, {"b_size", iv(8)}}),
         rec("r5", {{"os", nul()}, {"b_size", iv(4)}}),
         rec("r6", {{"os", txt("unix")}, {"b_size", nul()}})},
        tax);
    ResourceRequest request;
    RequestedProperty os_prop;
    os_prop.name = "os";
    os_prop.weight = Rational(1, 1);
    RequestedProperty speed;
    speed.name = "a_speed";
    speed.weight = Rational(2, 5);
    speed.value = 2.0;
    request.properties = {os_prop, speed};

    const auto result = run_precision_experiment_with(
        tax, truth, masked, {request}, 0.8,
        {Algorithm::Drsrd, Algorithm::Classic, Algorithm::Exact}, Rational(1, 2));

    // Relevant (unmasked >= 0.8): r1, r2, r3. drsrd and classic retrieve
    // {r1, r3} (2 correct of 2); exact also admits r2 (correct) and r6
    // (a Null-inflated false positive): 3 of 4.
    const std::string expected =
        "algorithm,certainty,resources,query_id,retrieved,correct,precision\n"
        "drsrd,0.500000,6,0,2,2,1.000000\n"
        "classic,0.500000,6,0,2,2,1.000000\n"
        "exact,0.500000,6,0,4,3,0.750000\n"
        "drsrd,0.500000,6,ALL,2,2,1.000000\n"
        "classic,0.500000,6,ALL,2,2,1.000000\n"
        "exact,0.500000,6,ALL,4,3,0.750000\n";
    CHECK(strip_timing(result.to_csv()) == expected);

    CHECK(result.summary(Algorithm::Drsrd).mean_precision == 1.0);
    CHECK(result.summary(Algorithm::Exact).mean_precision == 0.75);
    for (const auto& trial : result.trials)
        CHECK(!trial.zero_retrieved);
}

TEST_CASE("certainty 1.0 yields mean precision exactly 1.0 for drsrd and exact") {
    GeneratorConfig config;
    config.resource_count = 300;
    config.certainty = Rational(1, 1);
    config.query_count = 25;
    config.seed = 5;
    const auto result = run_precision_experiment(default_taxonomy(), config,
                                                 {Algorithm::Drsrd, Algorithm::Exact});
    CHECK(result.summary(Algorithm::Drsrd).mean_precision == 1.0);
    CHECK(result.summary(Algorithm::Exact).mean_precision == 1.0);
}

TEST_CASE("precision stays in range and zero-retrieved flags are consistent") {
    GeneratorConfig config;
    config.resource_count = 200;
    config.certainty = Rational(1, 2);
    config.query_count = 30;
    config.seed = 23;
    const auto result = run_precision_experiment(
        default_taxonomy(), config, {Algorithm::Drsrd, Algorithm::Classic, Algorithm::Exact});
    for (const auto& trial : result.trials) {
        CHECK(trial.precision >= 0.0);
        CHECK(trial.precision <= 1.0);
        CHECK(trial.correct <= trial.retrieved);
        CHECK(trial.zero_retrieved == (trial.retrieved == 0));
        if (trial.zero_retrieved)
            CHECK(trial.precision == 1.0);
    }
    // Rows come in (query, algorithm) order.
    for (std::size_t i = 0; i + 1 < result.trials.size(); ++i)
        CHECK(result.trials[i].query_id <= result.trials[i + 1].query_id);
}

TEST_CASE("experiment is deterministic per seed, timing aside") {
    GeneratorConfig config;
    config.resource_count = 150;
    config.certainty = Rational(3, 10);
    config.query_count = 15;
    config.seed = 8;
    const std::vector<Algorithm> algos{Algorithm::Drsrd, Algorithm::Classic, Algorithm::Exact};
    const auto a = run_precision_experiment(default_taxonomy(), config, algos);
    const auto b = run_precision_experiment(default_taxonomy(), config, algos);
    CHECK(strip_timing(a.to_csv()) == strip_timing(b.to_csv()));
    for (const auto& trial : a.trials)
        CHECK(trial.match_time_ns > 0);
}

TEST_CASE("experiment rejects an empty algorithm list") {
    GeneratorConfig config;
    CHECK_THROWS_AS(run_precision_experiment(default_taxonomy(), config, {}), Error);
}

TEST_CASE("bench emits one row per algorithm and size") {
    GeneratorConfig config;
    config.certainty = Rational(4, 5);
    config.query_count = 5;
    config.seed = 2;
    const auto csv = run_bench(default_taxonomy(), {50, 100}, config,
                               {Algorithm::Drsrd, Algorithm::Classic});
    std::istringstream in(csv);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line))
        lines.push_back(line);
    REQUIRE(lines.size() == 5);  // header + 2 sizes x 2 algorithms
    CHECK(lines[0] == "algorithm,certainty,resources,queries,mean_precision,mean_match_time_ns");
    CHECK(lines[1].rfind("drsrd,0.800000,50,5,", 0) == 0);
    CHECK(lines[4].rfind("classic,0.800000,100,5,", 0) == 0);
}

TEST_CASE("fixed decimal formatting") {
    CHECK(format_fixed(1.0) == "1.000000");
    CHECK(format_fixed(0.75) == "0.750000");
    CHECK(format_fixed(1.0 / 3.0) == "0.333333");
}
