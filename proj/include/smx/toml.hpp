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

#ifndef SMX_TOML_HPP_
#define SMX_TOML_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace smx {

/// Minimal TOML subset used by the experiment configs: `[table]` headers,
/// `key = value` lines, `#` comments, strings in double quotes, booleans,
/// integers, floats and single-line arrays of those scalars. Keys are stored
/// flattened as "table.key".
class TomlConfig {
 public:
  using Value = std::variant<bool, std::int64_t, double, std::string,
                             std::vector<double>, std::vector<std::string>>;

  static TomlConfig parse(const std::string& text);

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  std::int64_t get_int(const std::string& key) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  std::vector<double> get_double_array(const std::string& key) const;

  const std::map<std::string, Value>& values() const { return values_; }

 private:
  std::map<std::string, Value> values_;
};

}  // namespace smx

#endif  // SMX_TOML_HPP_
