// Copyright 2026 The gvrepair Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gvrepair/value.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gvrepair/printer.hpp"

namespace gvr {

Array& Value::mutable_array()
{
    auto& ptr = std::get<std::shared_ptr<Array>>(v_);
    if (ptr.use_count() > 1) {
        ptr = std::make_shared<Array>(*ptr);
    }
    return *ptr;
}

std::string Value::type_name() const
{
    switch (v_.index()) {
    case 0: return "void";
    case 1: return "int";
    case 2: return "bool";
    case 3: return "float";
    case 4: return "string";
    default: return "array";
    }
}

std::string Value::to_display() const
{
    switch (v_.index()) {
    case 0: return "void";
    case 1: return std::to_string(as_int());
    case 2: return as_bool() ? "true" : "false";
    case 3: return format_scalar(Scalar{as_float()});
    case 4: return as_string();
    default: {
        std::string out = "[";
        const auto& a = as_array();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i > 0) out += ", ";
            out += a[i].is_string() ? format_scalar(Scalar{a[i].as_string()}) : a[i].to_display();
        }
        return out + "]";
    }
    }
}

bool operator==(const Value& a, const Value& b)
{
    if (a.v_.index() != b.v_.index()) {
        return false;
    }
    if (a.is_array()) {
        return a.as_array() == b.as_array();
    }
    return a.v_ == b.v_;
}

bool values_match(const Value& expected, const Value& actual)
{
    if (expected.is_numeric() && actual.is_numeric()) {
        if (expected.is_int() && actual.is_int()) {
            return expected.as_int() == actual.as_int();
        }
        double x = expected.as_number();
        double y = actual.as_number();
        return std::fabs(x - y) <= 1e-9 * std::max({1.0, std::fabs(x), std::fabs(y)});
    }
    if (expected.is_array() && actual.is_array()) {
        const auto& xs = expected.as_array();
        const auto& ys = actual.as_array();
        if (xs.size() != ys.size()) {
            return false;
        }
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (!values_match(xs[i], ys[i])) {
                return false;
            }
        }
        return true;
    }
    return expected == actual;
}

Value value_from_json(const nlohmann::json& j)
{
    switch (j.type()) {
    case nlohmann::json::value_t::null: return Value{};
    case nlohmann::json::value_t::boolean: return Value(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
    case nlohmann::json::value_t::number_unsigned: return Value(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_float: return Value(j.get<double>());
    case nlohmann::json::value_t::string: return Value(j.get<std::string>());
    case nlohmann::json::value_t::array: {
        Array a;
        for (const auto& e : j) {
            a.push_back(value_from_json(e));
        }
        return Value(std::move(a));
    }
    default:
        throw std::invalid_argument("unsupported JSON value: " + j.dump());
    }
}

nlohmann::json value_to_json(const Value& v)
{
    switch (v.storage().index()) {
    case 0: return nullptr;
    case 1: return v.as_int();
    case 2: return v.as_bool();
    case 3: return v.as_float();
    case 4: return v.as_string();
    default: {
        auto out = nlohmann::json::array();
        for (const auto& e : v.as_array()) {
            out.push_back(value_to_json(e));
        }
        return out;
    }
    }
}

}  // namespace gvr
