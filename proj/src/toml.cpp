// Copyright 2026 The sargmax-lab Authors
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

#include "smx/toml.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace smx {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_string = !in_string;
    if (line[i] == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

TomlConfig::Value parse_scalar(const std::string& raw, int line_no) {
  if (raw.size() >= 2 && raw.front() == '"' && raw.back() == '"') {
    std::string out;
    for (std::size_t i = 1; i + 1 < raw.size(); ++i) {
      if (raw[i] == '\\' && i + 2 < raw.size()) {
        ++i;
        switch (raw[i]) {
          case 'n': out.push_back('\n'); break;
          case 't': out.push_back('\t'); break;
          case '"': out.push_back('"'); break;
          case '\\': out.push_back('\\'); break;
          default:
            throw std::invalid_argument("toml: bad escape at line " +
                                        std::to_string(line_no));
        }
      } else {
        out.push_back(raw[i]);
      }
    }
    return out;
  }
  if (raw == "true") return true;
  if (raw == "false") return false;
  const bool looks_float = raw.find('.') != std::string::npos ||
                           raw.find('e') != std::string::npos ||
                           raw.find('E') != std::string::npos ||
                           raw == "inf" || raw == "-inf" || raw == "nan";
  try {
    std::size_t pos = 0;
    if (!looks_float) {
      std::int64_t v = std::stoll(raw, &pos);
      if (pos == raw.size()) return v;
    }
    pos = 0;
    double v = std::stod(raw, &pos);
    if (pos == raw.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("toml: cannot parse value '" + raw + "' at line " +
                              std::to_string(line_no));
}

}  // namespace

TomlConfig TomlConfig::parse(const std::string& text) {
  TomlConfig config;
  std::istringstream in(text);
  std::string line, table;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::invalid_argument("toml: unterminated table header at line " +
                                    std::to_string(line_no));
      table = trim(line.substr(1, line.size() - 2));
      if (table.empty())
        throw std::invalid_argument("toml: empty table name at line " +
                                    std::to_string(line_no));
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("toml: expected key = value at line " +
                                  std::to_string(line_no));
    std::string key = trim(line.substr(0, eq));
    std::string raw = trim(line.substr(eq + 1));
    if (key.empty() || raw.empty())
      throw std::invalid_argument("toml: empty key or value at line " +
                                  std::to_string(line_no));
    std::string full = table.empty() ? key : table + "." + key;
    if (raw.front() == '[') {
      if (raw.back() != ']')
        throw std::invalid_argument("toml: arrays must close on the same line " +
                                    std::to_string(line_no));
      std::string body = trim(raw.substr(1, raw.size() - 2));
      std::vector<double> nums;
      std::vector<std::string> strs;
      bool is_string = false;
      if (!body.empty()) {
        std::size_t start = 0;
        while (start <= body.size()) {
          std::size_t comma = body.find(',', start);
          std::string item = trim(comma == std::string::npos
                                      ? body.substr(start)
                                      : body.substr(start, comma - start));
          if (!item.empty()) {
            Value v = parse_scalar(item, line_no);
            if (std::holds_alternative<std::string>(v)) {
              is_string = true;
              strs.push_back(std::get<std::string>(v));
            } else if (std::holds_alternative<double>(v)) {
              nums.push_back(std::get<double>(v));
            } else if (std::holds_alternative<std::int64_t>(v)) {
              nums.push_back(static_cast<double>(std::get<std::int64_t>(v)));
            } else {
              throw std::invalid_argument("toml: unsupported array element at line " +
                                          std::to_string(line_no));
            }
          }
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
      }
      if (is_string)
        config.values_[full] = strs;
      else
        config.values_[full] = nums;
    } else {
      config.values_[full] = parse_scalar(raw, line_no);
    }
  }
  return config;
}

double TomlConfig::get_double(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw std::invalid_argument("config: missing key " + key);
  if (const auto* d = std::get_if<double>(&it->second)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&it->second))
    return static_cast<double>(*i);
  throw std::invalid_argument("config: key " + key + " is not a number");
}

double TomlConfig::get_double(const std::string& key, double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

std::int64_t TomlConfig::get_int(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw std::invalid_argument("config: missing key " + key);
  if (const auto* i = std::get_if<std::int64_t>(&it->second)) return *i;
  throw std::invalid_argument("config: key " + key + " is not an integer");
}

std::int64_t TomlConfig::get_int(const std::string& key, std::int64_t fallback) const {
  return has(key) ? get_int(key) : fallback;
}

bool TomlConfig::get_bool(const std::string& key, bool fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  if (const auto* b = std::get_if<bool>(&it->second)) return *b;
  throw std::invalid_argument("config: key " + key + " is not a boolean");
}

std::string TomlConfig::get_string(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw std::invalid_argument("config: missing key " + key);
  if (const auto* s = std::get_if<std::string>(&it->second)) return *s;
  throw std::invalid_argument("config: key " + key + " is not a string");
}

std::string TomlConfig::get_string(const std::string& key,
                                   const std::string& fallback) const {
  return has(key) ? get_string(key) : fallback;
}

std::vector<double> TomlConfig::get_double_array(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw std::invalid_argument("config: missing key " + key);
  if (const auto* a = std::get_if<std::vector<double>>(&it->second)) return *a;
  throw std::invalid_argument("config: key " + key + " is not a numeric array");
}

}  // namespace smx
