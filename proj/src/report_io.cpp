#include "rshapiro/report_io.hpp"

#include <ostream>

namespace rshapiro {

nlohmann::json make_report(std::string_view command, nlohmann::json params,
                           nlohmann::json results, bool pass) {
  nlohmann::json report;
  report["schema_version"] = kSchemaVersion;
  report["tool"] = "rshapiro";
  report["command"] = command;
  report["params"] = std::move(params);
  report["results"] = std::move(results);
  report["pass"] = pass;
  return report;
}

namespace {

void flatten(const nlohmann::json& node, const std::string& prefix, std::ostream& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items())
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i)
      flatten(node[i], prefix + "." + std::to_string(i), out);
  } else {
    out << prefix << ',' << node.dump() << '\n';
  }
}

}  // namespace

void write_csv_header(std::ostream& out, std::string_view columns) {
  out << "# rshapiro schema " << kSchemaVersion << '\n' << columns << '\n';
}

void write_csv_report(const nlohmann::json& report, std::ostream& out) {
  out << "# rshapiro schema " << kSchemaVersion << '\n' << "key,value\n";
  flatten(report, "", out);
}

}  // namespace rshapiro
