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

#include <sstream>
#include <stdexcept>

#include "smx/io.hpp"

namespace smx {
namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(split(line, ','));
  }
  if (rows.empty()) throw std::invalid_argument("csv: empty input");
  return rows;
}

double parse_double(const std::string& s) {
  std::size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("csv: bad number '" + s + "'");
  return v;
}

}  // namespace

std::string dataset_to_csv(const Dataset& data) {
  std::string out = "y,z\n";
  for (std::size_t i = 0; i < data.size(); ++i) {
    out += format_double(data.y()[i]);
    out.push_back(',');
    out += format_double(data.z()[i]);
    out.push_back('\n');
  }
  return out;
}

Dataset dataset_from_csv(const std::string& text) {
  auto rows = parse_csv(text);
  if (rows[0] != std::vector<std::string>{"y", "z"})
    throw std::invalid_argument("csv: expected header 'y,z'");
  std::vector<double> y, z;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != 2) throw std::invalid_argument("csv: expected two columns");
    y.push_back(parse_double(rows[i][0]));
    z.push_back(parse_double(rows[i][1]));
  }
  return Dataset(std::move(y), std::move(z));
}

std::string survival_to_csv(const SurvivalDataset& data) {
  std::string out = "t,delta";
  for (std::size_t a = 0; a < data.p(); ++a) out += ",z1_" + std::to_string(a + 1);
  for (std::size_t b = 0; b < data.q(); ++b) out += ",z2_" + std::to_string(b + 1);
  out += ",z3\n";
  for (std::size_t i = 0; i < data.size(); ++i) {
    out += format_double(data.time()[i]);
    out.push_back(',');
    out += std::to_string(data.status()[i]);
    for (double v : data.z1()[i]) {
      out.push_back(',');
      out += format_double(v);
    }
    for (double v : data.z2()[i]) {
      out.push_back(',');
      out += format_double(v);
    }
    out.push_back(',');
    out += format_double(data.z3()[i]);
    out.push_back('\n');
  }
  return out;
}

SurvivalDataset survival_from_csv(const std::string& text) {
  auto rows = parse_csv(text);
  const auto& header = rows[0];
  if (header.size() < 3 || header[0] != "t" || header[1] != "delta" ||
      header.back() != "z3")
    throw std::invalid_argument("csv: expected header t,delta,z1_*,z2_*,z3");
  std::size_t p = 0, q = 0;
  for (std::size_t c = 2; c + 1 < header.size(); ++c) {
    if (header[c].rfind("z1_", 0) == 0)
      ++p;
    else if (header[c].rfind("z2_", 0) == 0)
      ++q;
    else
      throw std::invalid_argument("csv: unexpected column " + header[c]);
  }
  std::vector<double> time, z3;
  std::vector<int> status;
  std::vector<Vec> z1, z2;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.size() != header.size())
      throw std::invalid_argument("csv: ragged row " + std::to_string(i));
    time.push_back(parse_double(r[0]));
    status.push_back(static_cast<int>(parse_double(r[1])));
    Vec a, b;
    for (std::size_t c = 0; c < p; ++c) a.push_back(parse_double(r[2 + c]));
    for (std::size_t c = 0; c < q; ++c) b.push_back(parse_double(r[2 + p + c]));
    z1.push_back(std::move(a));
    z2.push_back(std::move(b));
    z3.push_back(parse_double(r.back()));
  }
  return SurvivalDataset(std::move(time), std::move(status), std::move(z1),
                         std::move(z2), std::move(z3));
}

std::string table_to_csv(const std::vector<std::string>& header,
                         const std::vector<std::vector<double>>& rows) {
  std::string out;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c) out.push_back(',');
    out += header[c];
  }
  out.push_back('\n');
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out.push_back(',');
      out += format_double(row[c]);
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace smx
