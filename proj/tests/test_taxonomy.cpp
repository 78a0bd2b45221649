#include <doctest.h>

#include <algorithm>
#include <string>

#include "drsrd/error.hpp"
#include "drsrd/generator.hpp"
#include "drsrd/rng.hpp"
#include "drsrd/taxonomy.hpp"

using namespace drsrd;

namespace {

// Deep chain used to exercise large generation distances.
const std::string kChain = R"(
class ComputingResource
class Cluster parent ComputingResource
class Workstation parent ComputingResource
class Mainframe parent ComputingResource
class L2 parent Cluster
class L3 parent L2
class L4 parent L3
class L5 parent L4
class L6 parent L5

property root_tag type text class ComputingResource
property cluster_tag type text class Cluster
property ws_tag type text class Workstation
property l2_tag type text class L2
property l3_tag type text class L3
property l6_tag type text class L6
property node_count type int class Cluster
)";

bool fails_with(const std::string& doc, const std::string& needle) {
    try {
        Taxonomy::load_string(doc, "doc");
    } catch (const Error& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
}

}  // namespace

TEST_CASE("fixture taxonomy loads with resource families under one root") {
    const std::string doc = R"(
        class ComputingResource
        class Cluster parent ComputingResource
        class Workstation parent ComputingResource
        class Mainframe parent ComputingResource
    )";
    const Taxonomy tax = Taxonomy::load_string(doc);
    CHECK(tax.classes().size() == 4);
    CHECK(tax.classes()[tax.root()].name == "ComputingResource");
    CHECK(tax.class_named("Cluster").depth == 1);
}

TEST_CASE("single-class document") {
    const Taxonomy tax = Taxonomy::load_string("class Root\n");
    CHECK(tax.classes().size() == 1);
    CHECK(tax.classes()[tax.root()].name == "Root");
}

TEST_CASE("load rejections carry line numbers") {
    CHECK(fails_with("class A\nclass A parent A\n", "doc:2: duplicate class 'A'"));
    CHECK(fails_with("class A\nclass B parent Ghost\n", "doc:2: unknown parent 'Ghost'"));
    CHECK(fails_with("class A\nclass B\n", "multiple roots"));
    CHECK(fails_with("class A parent B\nclass B parent A\nclass R\n", "cycle"));
    CHECK(fails_with("class A\nproperty p type bogus class A\n", "doc:2: unknown value type 'bogus'"));
    CHECK(fails_with("class A\nproperty p type int class Ghost\n", "doc:2: unknown class 'Ghost'"));
    CHECK(fails_with("class A\nproperty p type int class A\nproperty p type int class A\n",
                     "doc:3: duplicate property 'p'"));
    CHECK(fails_with("widget A\n", "doc:1: unknown directive"));
    CHECK_THROWS_AS(Taxonomy::load_string(""), Error);  // no root class
}

TEST_CASE("forward parent references resolve") {
    const Taxonomy tax = Taxonomy::load_string("class B parent A\nclass A\n");
    CHECK(tax.class_named("B").depth == 1);
}

TEST_CASE("generation distance") {
    const Taxonomy tax = Taxonomy::load_string(kChain);
    CHECK(tax.generation_distance("Cluster", "L2") == 1);
    CHECK(tax.generation_distance("Cluster", "Cluster") == 0);
    CHECK(tax.generation_distance("Cluster", "Workstation") == std::nullopt);
    CHECK(tax.generation_distance("Workstation", "Cluster") == std::nullopt);
    CHECK(tax.generation_distance("ComputingResource", "L6") == 6);
    CHECK_THROWS_AS(tax.generation_distance("Cluster", "Ghost"), Error);
    // depth difference equals the distance wherever it is defined
    CHECK(*tax.generation_distance("L2", "L6") ==
          tax.class_named("L6").depth - tax.class_named("L2").depth);
}

TEST_CASE("relation classifies the four cases") {
    const Taxonomy tax = Taxonomy::load_string(kChain);
    CHECK(tax.relation("cluster_tag", "node_count") == MatchRelation::exact());
    CHECK(tax.relation("l2_tag", "root_tag") == MatchRelation::plug_in(2));
    CHECK(tax.relation("root_tag", "l3_tag") == MatchRelation::subsume(3));
    CHECK(tax.relation("cluster_tag", "ws_tag") == MatchRelation::no_match());
    CHECK_THROWS_AS(tax.relation("cluster_tag", "ghost"), Error);
}

TEST_CASE("relation antisymmetry between PlugIn and Subsume") {
    const Taxonomy& tax = default_taxonomy();
    SplitMix64 rng(5);
    const auto& props = tax.properties();
    for (int i = 0; i < 400; ++i) {
        const auto& a = props[rng.bounded(props.size())];
        const auto& b = props[rng.bounded(props.size())];
        const auto ab = tax.relation(a.name, b.name);
        const auto ba = tax.relation(b.name, a.name);
        if (ab.kind == MatchRelation::Kind::PlugIn)
            CHECK(ba == MatchRelation::subsume(ab.distance));
        if (ab.kind == MatchRelation::Kind::Subsume)
            CHECK(ba == MatchRelation::plug_in(ab.distance));
        if (ab.kind == MatchRelation::Kind::Exact)
            CHECK(ba.kind == MatchRelation::Kind::Exact);
        if (ab.kind == MatchRelation::Kind::NoMatch)
            CHECK(ba.kind == MatchRelation::Kind::NoMatch);
    }
}

TEST_CASE("irrelevant-property markup") {
    const Taxonomy tax = Taxonomy::load_string(kChain);

    const std::vector<std::string> requested{"cluster_tag", "node_count"};
    const std::vector<std::string> advertised_same = requested;
    CHECK(tax.prune_irrelevant(advertised_same, requested) == requested);

    // A property in a disjoint subtree drops out.
    const std::vector<std::string> mixed{"cluster_tag", "ws_tag", "l3_tag"};
    CHECK(tax.prune_irrelevant(mixed, requested) == std::vector<std::string>{"cluster_tag", "l3_tag"});

    // Brute-force all-pairs scan over the default taxonomy.
    const Taxonomy& def = default_taxonomy();
    std::vector<std::string> advertised;
    for (const auto& p : def.properties())
        advertised.push_back(p.name);
    const std::vector<std::string> req{"gpu_count", "cpu_speed"};
    const auto pruned = def.prune_irrelevant(advertised, req);
    for (const auto& adv : advertised) {
        bool related = false;
        for (const auto& r : req)
            related = related || def.relation(r, adv).kind != MatchRelation::Kind::NoMatch;
        const bool kept = std::find(pruned.begin(), pruned.end(), adv) != pruned.end();
        CHECK(kept == related);
    }
    // Output is a subset of the input and pruning is idempotent.
    CHECK(def.prune_irrelevant(pruned, req) == pruned);
}
