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

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace gvr {

class Value;
using Array = std::vector<Value>;

/// Runtime value: void, int (64-bit), bool, float (binary64), string, or
/// array. Arrays have value semantics (copy-on-write).
class Value {
public:
    using Storage = std::variant<std::monostate, std::int64_t, bool, double, std::string, std::shared_ptr<Array>>;

    Value() = default;
    Value(std::int64_t v) : v_(v) {}
    Value(int v) : v_(std::int64_t{v}) {}
    Value(bool v) : v_(v) {}
    Value(double v) : v_(v) {}
    Value(std::string v) : v_(std::move(v)) {}
    Value(const char* v) : v_(std::string(v)) {}
    Value(Array v) : v_(std::make_shared<Array>(std::move(v))) {}

    bool is_void() const { return v_.index() == 0; }
    bool is_int() const { return v_.index() == 1; }
    bool is_bool() const { return v_.index() == 2; }
    bool is_float() const { return v_.index() == 3; }
    bool is_string() const { return v_.index() == 4; }
    bool is_array() const { return v_.index() == 5; }
    bool is_numeric() const { return is_int() || is_float(); }

    std::int64_t as_int() const { return std::get<std::int64_t>(v_); }
    bool as_bool() const { return std::get<bool>(v_); }
    double as_float() const { return std::get<double>(v_); }
    double as_number() const { return is_int() ? static_cast<double>(as_int()) : as_float(); }
    const std::string& as_string() const { return std::get<std::string>(v_); }
    const Array& as_array() const { return *std::get<std::shared_ptr<Array>>(v_); }
    /// Mutable access; detaches shared storage first.
    Array& mutable_array();

    const Storage& storage() const { return v_; }

    std::string type_name() const;
    std::string to_display() const;

    /// Exact structural equality (ints and floats never compare equal).
    friend bool operator==(const Value& a, const Value& b);

private:
    Storage v_;
};

/// Test-oracle equality: numbers compare numerically with a relative/absolute
/// tolerance of 1e-9 when a float is involved; everything else is exact.
bool values_match(const Value& expected, const Value& actual);

Value value_from_json(const nlohmann::json& j);
nlohmann::json value_to_json(const Value& v);

}  // namespace gvr
