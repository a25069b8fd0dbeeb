// Copyright 2026 The zpf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zpf/report_format.h"

#include <charconv>
#include <cmath>
#include <sstream>

namespace zpf {

namespace {

std::string to_chars_string(double v, std::chars_format fmt, int precision) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, fmt, precision);
    return std::string(buf, end);
}

// Drops trailing zeros (and a dangling '.') from the mantissa.
std::string trim_mantissa(const std::string &s) {
    size_t e = s.find('e');
    std::string mantissa = e == std::string::npos ? s : s.substr(0, e);
    std::string exponent = e == std::string::npos ? "" : s.substr(e);
    if (mantissa.find('.') != std::string::npos) {
        while (!mantissa.empty() && mantissa.back() == '0') {
            mantissa.pop_back();
        }
        if (!mantissa.empty() && mantissa.back() == '.') {
            mantissa.pop_back();
        }
    }
    return mantissa + exponent;
}

void emit_json(std::ostream &out, const nlohmann::ordered_json &node, int indent) {
    std::string pad(size_t(indent) * 2, ' ');
    std::string inner(size_t(indent + 1) * 2, ' ');
    switch (node.type()) {
        case nlohmann::json::value_t::object: {
            if (node.empty()) {
                out << "{}";
                return;
            }
            out << "{\n";
            bool first = true;
            for (const auto &[key, value] : node.items()) {
                if (!first) {
                    out << ",\n";
                }
                first = false;
                out << inner << nlohmann::json(key).dump() << ": ";
                emit_json(out, value, indent + 1);
            }
            out << "\n" << pad << "}";
            return;
        }
        case nlohmann::json::value_t::array: {
            if (node.empty()) {
                out << "[]";
                return;
            }
            bool scalars = true;
            for (const auto &v : node) {
                scalars &= v.is_primitive();
            }
            if (scalars) {
                out << "[";
                for (size_t k = 0; k < node.size(); k++) {
                    if (k) {
                        out << ", ";
                    }
                    emit_json(out, node[k], indent + 1);
                }
                out << "]";
                return;
            }
            out << "[\n";
            for (size_t k = 0; k < node.size(); k++) {
                if (k) {
                    out << ",\n";
                }
                out << inner;
                emit_json(out, node[k], indent + 1);
            }
            out << "\n" << pad << "]";
            return;
        }
        case nlohmann::json::value_t::number_float: {
            double v = node.get<double>();
            out << (std::isfinite(v) ? format_number(v) : "null");
            return;
        }
        default:
            out << node.dump();
            return;
    }
}

std::string scalar_text(const nlohmann::ordered_json &node) {
    if (node.is_number_float()) {
        return format_number(node.get<double>());
    }
    if (node.is_string()) {
        return node.get<std::string>();
    }
    return node.dump();
}

void flatten(std::ostream &out, const std::string &path, const nlohmann::ordered_json &node) {
    if (node.is_object()) {
        for (const auto &[key, value] : node.items()) {
            flatten(out, path.empty() ? key : path + "." + key, value);
        }
    } else if (node.is_array()) {
        for (size_t k = 0; k < node.size(); k++) {
            flatten(out, path + "." + std::to_string(k), node[k]);
        }
    } else {
        out << path << "," << scalar_text(node) << "\n";
    }
}

}  // namespace

std::string format_number(double v) {
    if (!std::isfinite(v)) {
        return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    }
    if (v == 0) {
        return "0";
    }
    double a = std::abs(v);
    if (a > 1e6) {
        return trim_mantissa(to_chars_string(v, std::chars_format::scientific, 11));
    }
    // %g semantics at 12 digits: fixed for exponents in [-4, 11], which covers
    // everything up to 1e6; below 1e-4 it switches to scientific on its own.
    return trim_mantissa(to_chars_string(v, std::chars_format::general, 12));
}

std::string dump_report_json(const nlohmann::ordered_json &doc) {
    std::ostringstream out;
    emit_json(out, doc, 0);
    out << "\n";
    return out.str();
}

std::string dump_report_csv(const nlohmann::ordered_json &doc) {
    std::ostringstream out;
    out << "field,value\n";
    flatten(out, "", doc);
    return out.str();
}

std::string table_to_csv(const Table &table) {
    std::ostringstream out;
    for (size_t c = 0; c < table.columns.size(); c++) {
        out << (c ? "," : "") << table.columns[c];
    }
    out << "\n";
    for (const auto &row : table.rows) {
        for (size_t c = 0; c < row.size(); c++) {
            out << (c ? "," : "") << format_number(row[c]);
        }
        out << "\n";
    }
    return out.str();
}

std::string table_to_json(const Table &table) {
    nlohmann::ordered_json doc;
    doc["columns"] = table.columns;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto &row : table.rows) {
        doc["rows"].push_back(row);
    }
    return dump_report_json(doc);
}

}  // namespace zpf
