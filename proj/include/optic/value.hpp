#pragma once

#include <string>

#include <json.hpp>

#include "optic/errors.hpp"

namespace optic {

// The document model all dynamic optics act on: null / bool / number /
// text / array / object with insertion-ordered unique keys.
using Value = nlohmann::ordered_json;

inline const Value& expect_object_field(const Value& v, const std::string& key) {
    if (!v.is_object()) throw DocTypeError("expected an object while reading field '" + key + "'");
    auto it = v.find(key);
    if (it == v.end()) throw DocTypeError("missing field '" + key + "'");
    return *it;
}

inline const Value& expect_array(const Value& v, const char* what) {
    if (!v.is_array()) throw DocTypeError(std::string("expected an array for ") + what);
    return v;
}

inline double expect_number(const Value& v, const char* what) {
    if (!v.is_number()) throw DocTypeError(std::string("expected a number for ") + what);
    return v.get<double>();
}

inline const std::string& expect_text(const Value& v, const char* what) {
    if (!v.is_string()) throw DocTypeError(std::string("expected text for ") + what);
    return v.get_ref<const std::string&>();
}

} // namespace optic
