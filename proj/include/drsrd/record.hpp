#pragma once

#include <string>
#include <utility>
#include <vector>

#include "drsrd/value.hpp"

namespace drsrd {

// One advertised resource: identifier plus ordered property -> value mapping.
// A Null value means the property is advertised with unknown value.
struct ResourceRecord {
    std::string id;
    std::vector<std::pair<std::string, AttributeValue>> values;

    const AttributeValue* find(std::string_view property) const {
        for (const auto& [name, value] : values)
            if (name == property)
                return &value;
        return nullptr;
    }
};

}  // namespace drsrd
