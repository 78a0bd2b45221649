#include "drsrd/value.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "drsrd/error.hpp"

namespace drsrd {

const char* value_type_name(ValueType t) {
    switch (t) {
        case ValueType::Text: return "text";
        case ValueType::Int: return "int";
        case ValueType::Long: return "long";
        case ValueType::Real: return "real";
    }
    return "?";
}

std::optional<ValueType> parse_value_type(std::string_view name) {
    if (name == "text") return ValueType::Text;
    if (name == "int") return ValueType::Int;
    if (name == "long") return ValueType::Long;
    if (name == "real") return ValueType::Real;
    return std::nullopt;
}

AttributeValue AttributeValue::text(std::string s) {
    if (s.empty())
        throw Error("text value must be non-empty (empty denotes Null in the record format)");
    for (char c : s)
        if (c == ';' || c == '\t' || c == '\n' || c == '\r')
            throw Error("text value contains a reserved character: '" + s + "'");
    return AttributeValue(Storage(std::move(s)));
}

AttributeValue AttributeValue::real(double d) {
    if (!std::isfinite(d))
        throw Error("real value must be finite");
    return AttributeValue(Storage(d));
}

std::optional<ValueType> AttributeValue::type() const {
    switch (v_.index()) {
        case 1: return ValueType::Text;
        case 2: return ValueType::Int;
        case 3: return ValueType::Long;
        case 4: return ValueType::Real;
        default: return std::nullopt;
    }
}

const std::string& AttributeValue::as_text() const {
    if (const auto* s = std::get_if<std::string>(&v_)) return *s;
    throw Error("value is not text");
}

std::int32_t AttributeValue::as_int() const {
    if (const auto* i = std::get_if<std::int32_t>(&v_)) return *i;
    throw Error("value is not int");
}

std::int64_t AttributeValue::as_long() const {
    if (const auto* i = std::get_if<std::int64_t>(&v_)) return *i;
    throw Error("value is not long");
}

double AttributeValue::as_real() const {
    if (const auto* d = std::get_if<double>(&v_)) return *d;
    throw Error("value is not real");
}

double AttributeValue::numeric() const {
    switch (v_.index()) {
        case 2: return static_cast<double>(std::get<std::int32_t>(v_));
        case 3: return static_cast<double>(std::get<std::int64_t>(v_));
        case 4: return std::get<double>(v_);
        default: throw Error("value has no numeric payload");
    }
}

std::string AttributeValue::str() const {
    switch (v_.index()) {
        case 1: return std::get<std::string>(v_);
        case 2: return std::to_string(std::get<std::int32_t>(v_));
        case 3: return std::to_string(std::get<std::int64_t>(v_));
        case 4: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(v_));
            return buf;
        }
        default: return "";
    }
}

AttributeValue parse_typed_value(ValueType type, std::string_view text) {
    const std::string s(text);
    char* end = nullptr;
    errno = 0;
    switch (type) {
        case ValueType::Text:
            return AttributeValue::text(s);
        case ValueType::Int: {
            const long long v = std::strtoll(s.c_str(), &end, 10);
            if (errno != 0 || end != s.c_str() + s.size() || s.empty() || v < INT32_MIN || v > INT32_MAX)
                throw Error("malformed int value '" + s + "'");
            return AttributeValue::integer(static_cast<std::int32_t>(v));
        }
        case ValueType::Long: {
            const long long v = std::strtoll(s.c_str(), &end, 10);
            if (errno != 0 || end != s.c_str() + s.size() || s.empty())
                throw Error("malformed long value '" + s + "'");
            return AttributeValue::long_integer(v);
        }
        case ValueType::Real: {
            const double v = std::strtod(s.c_str(), &end);
            if (errno != 0 || end != s.c_str() + s.size() || s.empty() || !std::isfinite(v))
                throw Error("malformed real value '" + s + "'");
            return AttributeValue::real(v);
        }
    }
    throw Error("unknown value type");
}

}  // namespace drsrd
