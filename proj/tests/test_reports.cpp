#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "rshapiro/report_io.hpp"

using namespace rshapiro;
using nlohmann::json;

TEST_CASE("every report carries the schema version") {
  const json report = make_report("verify-t21", {{"k", 4}}, {{"zero_count", 7}}, true);
  CHECK(report["schema_version"] == kSchemaVersion);
  CHECK(report["tool"] == "rshapiro");
  CHECK(report["command"] == "verify-t21");
  CHECK(report["pass"] == true);
}

TEST_CASE("identical inputs serialize to identical bytes") {
  const auto make = [] {
    return make_report("moments", {{"k", 6}, {"q", 2.0}},
                       {{"estimate", 8.0}, {"ratio", 1.0000000001}}, true)
        .dump(2);
  };
  CHECK(make() == make());
}

TEST_CASE("csv form carries the version and flattens nested keys") {
  const json report = make_report("eval", {{"k", 3}}, {{"devs", {{"eq12", 1e-9}}}}, true);
  std::stringstream ss;
  write_csv_report(report, ss);
  const std::string text = ss.str();
  CHECK(text.find("# rshapiro schema 1.0") == 0);
  CHECK(text.find("results.devs.eq12,") != std::string::npos);
  CHECK(text.find("params.k,3") != std::string::npos);
}
