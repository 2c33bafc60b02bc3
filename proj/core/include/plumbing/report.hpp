#ifndef PLUMBING_REPORT_HPP
#define PLUMBING_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "plumbing/rational.hpp"

namespace plumbing {

inline constexpr const char* kReportSchemaVersion = "1";

/// Structured command output.  The JSON form is the versioned interface;
/// the text form renders the same numeric content for terminals.
struct Report {
  std::string command;
  nlohmann::json input_echo = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::vector<std::string> diagnostics;
  bool ok = true;  // false only on cross-route disagreement

  nlohmann::json to_json() const;
  void render_text(std::ostream& out) const;
};

/// Serialization helpers: rationals as "p/q" in lowest terms, big integers
/// as decimal strings (JSON numbers would silently lose precision).
std::string json_rational(const Rational& r);
std::string json_integer(const Integer& n);

}  // namespace plumbing

#endif
