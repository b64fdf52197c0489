#ifndef TWOPOINT_REPORT_HPP
#define TWOPOINT_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "twopoint/bounds.hpp"

namespace twopoint {

using Json = nlohmann::ordered_json;

/// {"bound", "n", "p", "nodes", "interval", "value", "remainder",
///  "satisfied", "tightness", "h_estimated"}, p spelled "inf" for infinity.
Json to_json(const BoundReport& r);
BoundReport bound_report_from_json(const Json& j);

/// Same columns as the JSON keys; nodes and interval as "y;x;z" and "a;b".
std::string csv_header();
std::string to_csv_row(const BoundReport& r);

/// Parses JSON text and emits it again with the same formatting as dump_json.
std::string reemit_json(const std::string& text);
std::string dump_json(const Json& j);

}  // namespace twopoint

#endif  // TWOPOINT_REPORT_HPP
