#include <doctest.h>

#include <cstdio>

#include "smx/io.hpp"
#include "smx/toml.hpp"

using namespace smx;

TEST_CASE("double formatting survives a parse round trip") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-17, 123456789.123456789, 0.0, -0.0, 1e300}) {
    std::string s = format_double(v);
    CHECK(std::stod(s) == v);
  }
}

TEST_CASE("json round trips") {
  StepFunction f(Interval(-1.0, 1.0), {0.25}, {0.0, 1.0 / 3.0});
  StepFunction f2 = step_function_from_json(Json::parse(dump_json(to_json(f))));
  CHECK(f2.identical_to(f));

  TimeWarp w(Interval(0.0, 1.0), {{0.0, 0.0}, {0.4, 0.5}, {1.0, 1.0}});
  TimeWarp w2 = time_warp_from_json(Json::parse(dump_json(to_json(w))));
  CHECK(w2.knots() == w.knots());

  PureJumpFunction pj(Interval(-2.0, 2.0), {-0.5}, {0.3, 1.1});
  PureJumpFunction pj2 = pure_jump_from_json(Json::parse(dump_json(to_json(pj))));
  CHECK(pj2.jumps_neg() == pj.jumps_neg());
  CHECK(pj2.jumps_pos() == pj.jumps_pos());

  QuadraticSection q;
  q.c = 0.7;
  q.w = {0.1, -0.2};
  q.m = {{1.0, 0.1}, {0.1, 2.0}};
  GridSection g;
  g.grids = {{-1.0, 0.0, 1.0}, {-1.0, 1.0}};
  g.values = {0.0, 1.0, 2.0, 3.0, 4.0, 5.0};
  Rect rect({Interval(-1.0, 1.0), Interval(-1.0, 1.0), Interval(-1.0, 1.0)});
  PiecewiseProcess psi(rect, {-0.4}, {0.6},
                       {Section(ConstSection{1.0}), Section(q), Section(g)});
  PiecewiseProcess psi2 = process_from_json(Json::parse(dump_json(to_json(psi))));
  CHECK(psi2.all_jumps() == psi.all_jumps());
  CHECK(sections_identical(psi2.sections()[1], psi.sections()[1]));
  CHECK(sections_identical(psi2.sections()[2], psi.sections()[2]));

  CompoundPoissonSpec spec(1.5, 2.0, JumpLaw::normal(-1.0, 0.5),
                           JumpLaw::shifted(1.0, 2.0, ErrorLaw::student_t(3.0, 0.4)));
  CompoundPoissonSpec spec2 =
      compound_poisson_from_json(Json::parse(dump_json(to_json(spec))));
  CHECK(spec2.rate_pos == spec.rate_pos);
  CHECK(spec2.law_neg.kind == JumpLaw::Kind::kShifted);
  CHECK(spec2.law_neg.eps.nu == 3.0);
}

TEST_CASE("json dumps are byte-stable") {
  Json j{{"b", 1.0 / 3.0}, {"a", Json::array({1, 2.5})}, {"c", "text"}};
  std::string once = dump_json(j);
  std::string twice = dump_json(Json::parse(once));
  CHECK(once == twice);
  CHECK(once.find("0.33333333333333331") != std::string::npos);
}

TEST_CASE("schema validation") {
  Json schema = Json::parse(R"({
    "type": "object",
    "required": ["domain", "jumps", "values"],
    "properties": {
      "domain": {"type": "object", "required": ["lo", "hi"]},
      "jumps": {"type": "array", "items": {"type": "number"}},
      "values": {"type": "array", "items": {"type": "number"}}
    }
  })");
  StepFunction f(Interval(0.0, 1.0), {0.5}, {0.0, 1.0});
  CHECK_NOTHROW(validate_against_schema(to_json(f), schema));
  Json broken = to_json(f);
  broken.erase("values");
  CHECK_THROWS_AS(validate_against_schema(broken, schema), std::invalid_argument);
  Json wrong_type = to_json(f);
  wrong_type["jumps"] = Json::array({"zero"});
  CHECK_THROWS_AS(validate_against_schema(wrong_type, schema), std::invalid_argument);
}

TEST_CASE("csv round trips") {
  Dataset d({0.5, -1.25, 1.0 / 7.0}, {0.1, 0.9, 0.4});
  Dataset d2 = dataset_from_csv(dataset_to_csv(d));
  CHECK(d2.y() == d.y());
  CHECK(d2.z() == d.z());

  SurvivalDataset s({1.5, 0.7}, {1, 0}, {{0.3, 1.0}, {-0.7, 0.0}}, {{0.5}, {0.25}},
                    {0.2, 0.8});
  SurvivalDataset s2 = survival_from_csv(survival_to_csv(s));
  CHECK(s2.time() == s.time());
  CHECK(s2.status() == s.status());
  CHECK(s2.z1() == s.z1());
  CHECK(s2.z2() == s.z2());
  CHECK(s2.z3() == s.z3());

  std::string table = table_to_csv({"n", "value"}, {{1.0, 0.5}, {2.0, 1.0 / 3.0}});
  CHECK(table == "n,value\n1,0.5\n2,0.33333333333333331\n");
}

TEST_CASE("toml subset parsing") {
  TomlConfig cfg = TomlConfig::parse(R"(
# experiment configuration
title = "demo"   # inline comment

[experiment]
master_seed = 20260100
replications = 2000
ns = [250, 1000, 4000]
threads = 4
verbose = true

[model]
zeta0 = 0.5
sigma = 5e-1
z_law = "uniform"
)");
  CHECK(cfg.get_string("title") == "demo");
  CHECK(cfg.get_int("experiment.master_seed") == 20260100);
  CHECK(cfg.get_int("experiment.replications") == 2000);
  CHECK(cfg.get_double_array("experiment.ns") == std::vector<double>{250, 1000, 4000});
  CHECK(cfg.get_bool("experiment.verbose", false));
  CHECK(cfg.get_double("model.zeta0") == 0.5);
  CHECK(cfg.get_double("model.sigma") == 0.5);
  CHECK(cfg.get_string("model.z_law") == "uniform");
  CHECK(cfg.get_double("model.missing", 7.0) == 7.0);
  CHECK_THROWS_AS(cfg.get_double("model.absent"), std::invalid_argument);
  CHECK_THROWS_AS(TomlConfig::parse("key ="), std::invalid_argument);
  CHECK_THROWS_AS(TomlConfig::parse("[table\nk = 1"), std::invalid_argument);
}

TEST_CASE("atomic write and read back") {
  const std::string path = "smx_test_atomic.json";
  write_file_atomic(path, "{\"x\": 1}\n");
  CHECK(read_file(path) == "{\"x\": 1}\n");
  write_file_atomic(path, "{\"x\": 2}\n");
  CHECK(read_file(path) == "{\"x\": 2}\n");
  std::remove(path.c_str());
}
