#include "plumbing/report.hpp"

#include <ostream>

namespace plumbing {

using nlohmann::json;

std::string json_rational(const Rational& r) { return to_fraction_string(r); }
std::string json_integer(const Integer& n) { return n.str(); }

json Report::to_json() const {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = command;
  j["ok"] = ok;
  j["input_echo"] = input_echo;
  j["results"] = results;
  j["diagnostics"] = diagnostics;
  return j;
}

namespace {

bool scalar_array(const json& a) {
  for (const auto& v : a)
    if (v.is_structured()) return false;
  return true;
}

void render_value(std::ostream& out, const json& v, int indent);

void render_object(std::ostream& out, const json& obj, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : obj.items()) {
    if (value.is_object() || (value.is_array() && !scalar_array(value))) {
      out << pad << key << ":\n";
      render_value(out, value, indent + 2);
    } else {
      out << pad << key << ": ";
      render_value(out, value, 0);
      out << "\n";
    }
  }
}

void render_value(std::ostream& out, const json& v, int indent) {
  const std::string pad(indent, ' ');
  if (v.is_object()) {
    render_object(out, v, indent);
  } else if (v.is_array()) {
    if (scalar_array(v)) {
      out << "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        render_value(out, v[i], 0);
      }
      out << "]";
    } else {
      for (const auto& item : v) {
        out << pad << "-\n";
        render_value(out, item, indent + 2);
      }
    }
  } else if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.find('\n') != std::string::npos) {
      // Multiline payloads (e.g. graph text) indent as a block.
      out << "\n";
      std::size_t start = 0;
      while (start < s.size()) {
        std::size_t end = s.find('\n', start);
        if (end == std::string::npos) end = s.size();
        out << pad << "  " << s.substr(start, end - start) << "\n";
        start = end + 1;
      }
    } else {
      out << s;
    }
  } else {
    out << v.dump();
  }
}

}  // namespace

void Report::render_text(std::ostream& out) const {
  out << "command: " << command << "\n";
  if (!input_echo.empty()) {
    out << "inputs:\n";
    render_object(out, input_echo, 2);
  }
  out << "results:\n";
  render_object(out, results, 2);
  if (!diagnostics.empty()) {
    out << "diagnostics:\n";
    for (const auto& d : diagnostics) out << "  - " << d << "\n";
  }
  out << "status: " << (ok ? "ok" : "cross-check disagreement") << "\n";
}

}  // namespace plumbing
