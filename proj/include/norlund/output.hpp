/*
   Copyright 2026 The norlund authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "norlund/rational.hpp"

namespace norlund {

/// One scalar result destined for stdout. Tables emit one record per entry.
/// Machine formats are lossless: the rational travels as decimal-digit
/// strings, never floats.
struct OutputRecord {
    std::string quantity;
    std::vector<std::pair<std::string, long long>> indices;  // name -> value
    std::string method;
    Rational value;
};

/// Single-line JSON with fixed key order: quantity, indices, method, num, den.
inline std::string to_json_line(const OutputRecord& record) {
    nlohmann::ordered_json j;
    j["quantity"] = record.quantity;
    auto indices = nlohmann::ordered_json::array();
    for (const auto& [name, value] : record.indices) {
        indices.push_back(value);
    }
    j["indices"] = std::move(indices);
    j["method"] = record.method;
    j["num"] = numerator(record.value).str();
    j["den"] = denominator(record.value).str();
    return j.dump();
}

inline std::string csv_header(const OutputRecord& record) {
    std::string line = "quantity";
    for (const auto& [name, value] : record.indices) {
        line += "," + name;
    }
    line += ",method,value";
    return line;
}

inline std::string to_csv_row(const OutputRecord& record) {
    std::string line = record.quantity;
    for (const auto& [name, value] : record.indices) {
        line += "," + std::to_string(value);
    }
    line += "," + record.method + "," + to_string(record.value);
    return line;
}

enum class OutputFormat { plain, json, csv };

inline OutputFormat parse_output_format(const std::string& name) {
    if (name == "plain") return OutputFormat::plain;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw DomainError("unknown output format: " + name);
}

}  // namespace norlund
