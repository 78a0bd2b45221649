#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace drsrd {

enum class ValueType { Text, Int, Long, Real };

const char* value_type_name(ValueType t);
std::optional<ValueType> parse_value_type(std::string_view name);

// One table cell. Null is a distinguished value (advertised but unknown),
// not absence of the attribute. Reals are finite by construction.
class AttributeValue {
public:
    AttributeValue() : v_(std::monostate{}) {}

    static AttributeValue null() { return AttributeValue(); }
    static AttributeValue text(std::string s);
    static AttributeValue integer(std::int32_t i) { return AttributeValue(Storage(i)); }
    static AttributeValue long_integer(std::int64_t i) { return AttributeValue(Storage(i)); }
    static AttributeValue real(double d);

    bool is_null() const { return std::holds_alternative<std::monostate>(v_); }
    // nullopt for Null.
    std::optional<ValueType> type() const;

    const std::string& as_text() const;
    std::int32_t as_int() const;
    std::int64_t as_long() const;
    double as_real() const;
    // Numeric payload widened to double; throws for Null/Text.
    double numeric() const;

    // Serialized form used by the record file format; "" for Null.
    std::string str() const;

    friend bool operator==(const AttributeValue& a, const AttributeValue& b) { return a.v_ == b.v_; }
    friend bool operator!=(const AttributeValue& a, const AttributeValue& b) { return !(a == b); }
    friend bool operator<(const AttributeValue& a, const AttributeValue& b) { return a.v_ < b.v_; }

private:
    using Storage = std::variant<std::monostate, std::string, std::int32_t, std::int64_t, double>;
    explicit AttributeValue(Storage v) : v_(std::move(v)) {}

    Storage v_;
};

// Parses `text` according to the declared type. Null is not handled here
// (the record grammar encodes it as an empty right-hand side).
AttributeValue parse_typed_value(ValueType type, std::string_view text);

}  // namespace drsrd
