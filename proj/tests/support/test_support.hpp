#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "drsrd/information_table.hpp"
#include "drsrd/rational.hpp"
#include "drsrd/rng.hpp"
#include "drsrd/value.hpp"

namespace ts {

using drsrd::AttributeValue;
using drsrd::InformationTable;
using drsrd::ObjectSet;
using drsrd::Rational;

inline AttributeValue txt(const std::string& s) { return AttributeValue::text(s); }
inline AttributeValue iv(std::int32_t v) { return AttributeValue::integer(v); }
inline AttributeValue lv(std::int64_t v) { return AttributeValue::long_integer(v); }
inline AttributeValue rv(double v) { return AttributeValue::real(v); }
inline AttributeValue nul() { return AttributeValue::null(); }

struct Row {
    std::string id;
    std::vector<AttributeValue> cells;
};

inline InformationTable make_table(std::vector<std::string> attrs, std::vector<Row> rows) {
    std::vector<std::string> objects;
    std::vector<AttributeValue> cells;
    for (auto& row : rows) {
        objects.push_back(row.id);
        for (auto& c : row.cells)
            cells.push_back(std::move(c));
    }
    return InformationTable(std::move(objects), std::move(attrs), std::move(cells));
}

// The worked six-object example: a splits the universe into {u1,u2}, {u3,u4},
// {u5,u6}.
inline InformationTable six_object_table() {
    return make_table({"a"}, {{"u1", {iv(1)}},
                              {"u2", {iv(1)}},
                              {"u3", {iv(2)}},
                              {"u4", {iv(2)}},
                              {"u5", {iv(3)}},
                              {"u6", {iv(3)}}});
}

inline ObjectSet ids(const InformationTable& table, std::vector<std::string> names) {
    return table.object_set(names);
}

// ---------------------------------------------------------------------------
// Independent brute-force oracles: direct evaluation of the defining set
// comprehensions via pairwise value agreement. Nothing here touches Partition
// or the production set machinery.

namespace oracle {

inline bool agree(const InformationTable& t, std::uint32_t x, std::uint32_t y,
                  const std::vector<std::string>& attrs) {
    for (const auto& name : attrs) {
        const auto a = t.attribute_index(name);
        if (t.value(x, *a) != t.value(y, *a))
            return false;
    }
    return true;
}

inline ObjectSet equivalence_class(const InformationTable& t, std::uint32_t x,
                                   const std::vector<std::string>& attrs) {
    ObjectSet block;
    for (std::uint32_t y = 0; y < t.object_count(); ++y)
        if (agree(t, x, y, attrs))
            block.push_back(y);
    return block;
}

inline ObjectSet lower(const InformationTable& t, const std::vector<std::string>& attrs,
                       const ObjectSet& x_set) {
    ObjectSet out;
    for (std::uint32_t x = 0; x < t.object_count(); ++x) {
        bool subset = true;
        for (auto m : equivalence_class(t, x, attrs))
            if (!drsrd::set_contains(x_set, m)) {
                subset = false;
                break;
            }
        if (subset)
            out.push_back(x);
    }
    return out;
}

inline ObjectSet upper(const InformationTable& t, const std::vector<std::string>& attrs,
                       const ObjectSet& x_set) {
    ObjectSet out;
    for (std::uint32_t x = 0; x < t.object_count(); ++x) {
        for (auto m : equivalence_class(t, x, attrs))
            if (drsrd::set_contains(x_set, m)) {
                out.push_back(x);
                break;
            }
    }
    return out;
}

inline ObjectSet positive_region(const InformationTable& t, const std::vector<std::string>& c,
                                 const std::vector<std::string>& d) {
    // Union over D-classes of their C-lower approximations.
    ObjectSet out;
    for (std::uint32_t x = 0; x < t.object_count(); ++x) {
        const ObjectSet d_class = equivalence_class(t, x, d);
        for (auto m : lower(t, c, d_class))
            if (!drsrd::set_contains(out, m)) {
                out.push_back(m);
                std::sort(out.begin(), out.end());
            }
    }
    return out;
}

inline double dependency(const InformationTable& t, const std::vector<std::string>& c,
                         const std::vector<std::string>& d) {
    return static_cast<double>(positive_region(t, c, d).size()) / static_cast<double>(t.object_count());
}

inline Rational outward(const InformationTable& t, const std::vector<std::string>& attrs,
                        const ObjectSet& x_set, std::uint32_t x) {
    const ObjectSet block = equivalence_class(t, x, attrs);
    std::int64_t outside = 0;
    for (auto m : block)
        if (!drsrd::set_contains(x_set, m))
            ++outside;
    return Rational(outside, static_cast<std::int64_t>(block.size()));
}

inline Rational inward(const InformationTable& t, const std::vector<std::string>& attrs,
                       const ObjectSet& x_set, std::uint32_t x) {
    const ObjectSet block = equivalence_class(t, x, attrs);
    std::int64_t inside = 0;
    for (auto m : block)
        if (drsrd::set_contains(x_set, m))
            ++inside;
    return Rational(inside, static_cast<std::int64_t>(block.size()));
}

inline ObjectSet inflated_main(const InformationTable& t, const std::vector<std::string>& attrs,
                               const ObjectSet& x_set, const Rational& d_plus) {
    ObjectSet out;
    for (std::uint32_t x = 0; x < t.object_count(); ++x) {
        if (drsrd::set_contains(x_set, x))
            continue;
        const Rational rho = inward(t, attrs, x_set, x);
        if (d_plus <= rho && rho < Rational(1, 1))
            out.push_back(x);
    }
    return out;
}

inline ObjectSet inflated_assistant(const InformationTable& t, const std::vector<std::string>& attrs,
                                    const ObjectSet& x_set, const Rational& d_plus) {
    ObjectSet out;
    for (std::uint32_t x = 0; x < t.object_count(); ++x) {
        if (drsrd::set_contains(x_set, x))
            continue;
        const Rational rho = inward(t, attrs, x_set, x);
        if (Rational(0, 1) <= rho && rho < d_plus)
            out.push_back(x);
    }
    return out;
}

inline ObjectSet contracted_main(const InformationTable& t, const std::vector<std::string>& attrs,
                                 const ObjectSet& x_set, const Rational& d_minus) {
    ObjectSet out;
    for (auto x : x_set) {
        const Rational rho = outward(t, attrs, x_set, x);
        if (d_minus <= rho && rho < Rational(1, 1))
            out.push_back(x);
    }
    return out;
}

inline ObjectSet contracted_assistant(const InformationTable& t, const std::vector<std::string>& attrs,
                                      const ObjectSet& x_set, const Rational& d_minus) {
    ObjectSet out;
    for (auto x : x_set) {
        const Rational rho = outward(t, attrs, x_set, x);
        if (Rational(0, 1) <= rho && rho < d_minus)
            out.push_back(x);
    }
    return out;
}

inline ObjectSet two_direction(const InformationTable& t,
                               const std::vector<std::string>& expand, const Rational& d_plus,
                               const std::vector<std::string>& contract, const Rational& d_minus,
                               const ObjectSet& x_set) {
    ObjectSet out = drsrd::set_difference(x_set, contracted_main(t, contract, x_set, d_minus));
    return drsrd::set_union(out, inflated_main(t, expand, x_set, d_plus));
}

}  // namespace oracle

// ---------------------------------------------------------------------------
// Random-table generation for property/oracle-equivalence suites: up to 12
// objects, up to 4 attributes, value alphabet of 3 typed values plus Null.

struct RandomTableConfig {
    std::size_t max_objects = 12;
    std::size_t max_attributes = 4;
};

inline InformationTable random_table(drsrd::SplitMix64& rng, const RandomTableConfig& cfg = {}) {
    const std::size_t n = 1 + rng.bounded(cfg.max_objects);
    const std::size_t m = 1 + rng.bounded(cfg.max_attributes);
    std::vector<std::string> attrs;
    for (std::size_t j = 0; j < m; ++j)
        attrs.push_back("p" + std::to_string(j + 1));
    std::vector<Row> rows;
    for (std::size_t i = 0; i < n; ++i) {
        Row row;
        row.id = "u" + std::to_string(i + 1);
        for (std::size_t j = 0; j < m; ++j) {
            const auto pick = rng.bounded(4);  // {Null, 1, 2, 3}
            row.cells.push_back(pick == 0 ? nul() : iv(static_cast<std::int32_t>(pick)));
        }
        rows.push_back(std::move(row));
    }
    return make_table(std::move(attrs), std::move(rows));
}

inline ObjectSet random_subset(drsrd::SplitMix64& rng, std::size_t universe) {
    ObjectSet out;
    for (std::uint32_t i = 0; i < universe; ++i)
        if (rng.bounded(2) == 0)
            out.push_back(i);
    return out;
}

inline std::vector<std::string> random_attr_subset(drsrd::SplitMix64& rng,
                                                   const InformationTable& table) {
    std::vector<std::string> out;
    for (const auto& a : table.attributes())
        if (rng.bounded(2) == 0)
            out.push_back(a);
    if (out.empty())
        out.push_back(table.attributes()[rng.bounded(table.attribute_count())]);
    return out;
}

inline Rational random_standard(drsrd::SplitMix64& rng) {
    const std::int64_t den = 1 + static_cast<std::int64_t>(rng.bounded(12));
    const std::int64_t num = static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(den) + 1));
    return Rational(num, den);
}

}  // namespace ts
