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

#include "smx/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace smx {
namespace {

void emit(const Json& j, int indent, int depth, std::string* out) {
  auto pad = [&](int d) {
    if (indent >= 0) {
      out->push_back('\n');
      out->append(static_cast<std::size_t>(indent * d), ' ');
    }
  };
  switch (j.type()) {
    case Json::value_t::object: {
      out->push_back('{');
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out->push_back(',');
        first = false;
        pad(depth + 1);
        *out += Json(it.key()).dump();
        out->push_back(':');
        if (indent >= 0) out->push_back(' ');
        emit(it.value(), indent, depth + 1, out);
      }
      if (!first) pad(depth);
      out->push_back('}');
      break;
    }
    case Json::value_t::array: {
      out->push_back('[');
      bool first = true;
      for (const auto& v : j) {
        if (!first) out->push_back(',');
        first = false;
        pad(depth + 1);
        emit(v, indent, depth + 1, out);
      }
      if (!first) pad(depth);
      out->push_back(']');
      break;
    }
    case Json::value_t::number_float:
      *out += format_double(j.get<double>());
      break;
    default:
      *out += j.dump();
  }
}

double get_number(const Json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field: ") + key);
  const Json& v = j.at(key);
  if (!v.is_number()) throw std::invalid_argument(std::string("not a number: ") + key);
  return v.get<double>();
}

std::vector<double> get_array(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw std::invalid_argument(std::string("missing array field: ") + key);
  std::vector<double> out;
  for (const auto& v : j.at(key)) out.push_back(v.get<double>());
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string dump_json(const Json& j, int indent) {
  std::string out;
  emit(j, indent, 0, &out);
  return out;
}

Json to_json(const Interval& v) { return Json{{"lo", v.lo}, {"hi", v.hi}}; }

Json to_json(const Rect& v) {
  Json axes = Json::array();
  for (const Interval& a : v.axes) axes.push_back(to_json(a));
  return Json{{"axes", axes}};
}

Json to_json(const StepFunction& v) {
  return Json{{"domain", to_json(v.domain())}, {"jumps", v.jumps()}, {"values", v.values()}};
}

Json to_json(const TimeWarp& v) {
  Json knots = Json::array();
  for (const auto& [s, y] : v.knots()) knots.push_back(Json::array({s, y}));
  return Json{{"domain", to_json(v.domain())}, {"knots", knots}};
}

Json to_json(const PureJumpFunction& v) {
  return Json{{"domain", to_json(v.domain())},
              {"jumps_neg", v.jumps_neg()},
              {"jumps_pos", v.jumps_pos()}};
}

Json to_json(const Section& v) {
  if (const auto* c = std::get_if<ConstSection>(&v))
    return Json{{"kind", "const"}, {"c", c->c}};
  if (const auto* q = std::get_if<QuadraticSection>(&v))
    return Json{{"kind", "quadratic"}, {"c", q->c}, {"w", q->w}, {"m", q->m}};
  const auto& g = std::get<GridSection>(v);
  return Json{{"kind", "grid"}, {"grids", g.grids}, {"values", g.values}};
}

Json to_json(const PiecewiseProcess& v) {
  Json sections = Json::array();
  for (const Section& s : v.sections()) sections.push_back(to_json(s));
  return Json{{"rect", to_json(v.rect())},
              {"jumps_neg", v.jumps_neg()},
              {"jumps_pos", v.jumps_pos()},
              {"sections", sections}};
}

Json to_json(const MaximizerReport& v) {
  Json flats = Json::array();
  for (const FlatMax& f : v.flats) {
    flats.push_back(Json{{"stretch_closed", to_json(f.stretch_closed)},
                         {"section_index", f.section_index},
                         {"sup_value", f.sup_value},
                         {"section_argmax", f.section_argmax}});
  }
  return Json{{"global_sup", v.global_sup},
              {"flats", flats},
              {"sargmax", v.sargmax_point},
              {"largmax", v.largmax_point},
              {"unique_flat", v.unique_flat}};
}

Json to_json(const ErrorLaw& v) {
  if (v.kind == ErrorLaw::Kind::kNormal) return Json{{"kind", "normal"}, {"sigma", v.sigma}};
  return Json{{"kind", "student_t"}, {"nu", v.nu}, {"scale", v.scale}};
}

Json to_json(const ZLaw& v) {
  if (v.kind == ZLaw::Kind::kUniform)
    return Json{{"kind", "uniform"}, {"lo", v.lo}, {"hi", v.hi}};
  return Json{{"kind", "truncated_normal"},
              {"mu", v.mu},
              {"sigma", v.sigma},
              {"lo", v.lo},
              {"hi", v.hi}};
}

Json to_json(const JumpLaw& v) {
  switch (v.kind) {
    case JumpLaw::Kind::kNormal:
      return Json{{"kind", "normal"}, {"mu", v.mu}, {"sigma", v.sigma}};
    case JumpLaw::Kind::kPointMass:
      return Json{{"kind", "point_mass"}, {"value", v.value}};
    case JumpLaw::Kind::kShifted:
      return Json{{"kind", "shifted"}, {"c", v.c}, {"s", v.s}, {"eps", to_json(v.eps)}};
  }
  return Json();
}

Json to_json(const CompoundPoissonSpec& v) {
  return Json{{"rate_pos", v.rate_pos},
              {"rate_neg", v.rate_neg},
              {"law_pos", to_json(v.law_pos)},
              {"law_neg", to_json(v.law_neg)}};
}

Interval interval_from_json(const Json& j) {
  return Interval(get_number(j, "lo"), get_number(j, "hi"));
}

Rect rect_from_json(const Json& j) {
  std::vector<Interval> axes;
  for (const auto& a : j.at("axes")) axes.push_back(interval_from_json(a));
  return Rect(std::move(axes));
}

StepFunction step_function_from_json(const Json& j) {
  return StepFunction(interval_from_json(j.at("domain")), get_array(j, "jumps"),
                      get_array(j, "values"));
}

TimeWarp time_warp_from_json(const Json& j) {
  std::vector<std::pair<double, double>> knots;
  for (const auto& k : j.at("knots"))
    knots.emplace_back(k.at(0).get<double>(), k.at(1).get<double>());
  return TimeWarp(interval_from_json(j.at("domain")), std::move(knots));
}

PureJumpFunction pure_jump_from_json(const Json& j) {
  return PureJumpFunction(interval_from_json(j.at("domain")), get_array(j, "jumps_neg"),
                          get_array(j, "jumps_pos"));
}

Section section_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "const") return ConstSection{get_number(j, "c")};
  if (kind == "quadratic") {
    QuadraticSection q;
    q.c = get_number(j, "c");
    q.w = get_array(j, "w");
    for (const auto& row : j.at("m")) q.m.push_back(row.get<std::vector<double>>());
    return q;
  }
  if (kind == "grid") {
    GridSection g;
    for (const auto& axis : j.at("grids")) g.grids.push_back(axis.get<std::vector<double>>());
    g.values = get_array(j, "values");
    return g;
  }
  throw std::invalid_argument("section: unknown kind " + kind);
}

PiecewiseProcess process_from_json(const Json& j) {
  std::vector<Section> sections;
  for (const auto& s : j.at("sections")) sections.push_back(section_from_json(s));
  return PiecewiseProcess(rect_from_json(j.at("rect")), get_array(j, "jumps_neg"),
                          get_array(j, "jumps_pos"), std::move(sections));
}

ErrorLaw error_law_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "normal") return ErrorLaw::normal(get_number(j, "sigma"));
  if (kind == "student_t")
    return ErrorLaw::student_t(get_number(j, "nu"), get_number(j, "scale"));
  throw std::invalid_argument("error law: unknown kind " + kind);
}

ZLaw z_law_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "uniform") return ZLaw::uniform(get_number(j, "lo"), get_number(j, "hi"));
  if (kind == "truncated_normal")
    return ZLaw::truncated_normal(get_number(j, "mu"), get_number(j, "sigma"),
                                  get_number(j, "lo"), get_number(j, "hi"));
  throw std::invalid_argument("z law: unknown kind " + kind);
}

JumpLaw jump_law_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "normal") return JumpLaw::normal(get_number(j, "mu"), get_number(j, "sigma"));
  if (kind == "point_mass") return JumpLaw::point_mass(get_number(j, "value"));
  if (kind == "shifted")
    return JumpLaw::shifted(get_number(j, "c"), get_number(j, "s"),
                            error_law_from_json(j.at("eps")));
  throw std::invalid_argument("jump law: unknown kind " + kind);
}

CompoundPoissonSpec compound_poisson_from_json(const Json& j) {
  return CompoundPoissonSpec(get_number(j, "rate_pos"), get_number(j, "rate_neg"),
                             jump_law_from_json(j.at("law_pos")),
                             jump_law_from_json(j.at("law_neg")));
}

namespace {

void validate_node(const Json& value, const Json& schema, const std::string& path) {
  if (schema.contains("type")) {
    const std::string type = schema.at("type").get<std::string>();
    bool ok = (type == "object" && value.is_object()) ||
              (type == "array" && value.is_array()) ||
              (type == "number" && value.is_number()) ||
              (type == "integer" && value.is_number_integer()) ||
              (type == "string" && value.is_string()) ||
              (type == "boolean" && value.is_boolean());
    if (!ok)
      throw std::invalid_argument("schema violation at " + path + ": expected " + type);
  }
  if (schema.contains("required"))
    for (const auto& name : schema.at("required"))
      if (!value.contains(name.get<std::string>()))
        throw std::invalid_argument("schema violation at " + path + ": missing " +
                                    name.get<std::string>());
  if (schema.contains("properties") && value.is_object()) {
    for (auto it = schema.at("properties").begin(); it != schema.at("properties").end();
         ++it) {
      if (value.contains(it.key()))
        validate_node(value.at(it.key()), it.value(), path + "/" + it.key());
    }
  }
  if (schema.contains("items") && value.is_array()) {
    std::size_t i = 0;
    for (const auto& v : value) {
      validate_node(v, schema.at("items"), path + "/" + std::to_string(i));
      ++i;
    }
  }
}

}  // namespace

void validate_against_schema(const Json& value, const Json& schema) {
  validate_node(value, schema, "");
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace smx
