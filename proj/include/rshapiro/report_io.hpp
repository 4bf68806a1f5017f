#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

namespace rshapiro {

inline constexpr std::string_view kSchemaVersion = "1.0";

// Report envelope shared by every subcommand. Payloads are deterministic:
// identical config produces bit-identical files.
nlohmann::json make_report(std::string_view command, nlohmann::json params,
                           nlohmann::json results, bool pass);

// key,value rows; the schema version rides in a leading comment line.
void write_csv_report(const nlohmann::json& report, std::ostream& out);

void write_csv_header(std::ostream& out, std::string_view columns);

}  // namespace rshapiro
