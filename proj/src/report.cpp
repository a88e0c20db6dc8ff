#include "hpnet/report.hpp"

#include <sstream>

namespace hpnet {

void Verdicts::add(const std::string& check, const std::string& result,
                   Json details, Json witness) {
  Json item;
  item["check"] = check;
  item["result"] = result;
  if (!witness.is_null()) item["witness"] = std::move(witness);
  item["details"] = details.is_null() ? Json::object() : std::move(details);
  items.push_back(std::move(item));
}

bool Verdicts::all_pass() const {
  for (const auto& item : items)
    if (item.at("result") != "pass") return false;
  return true;
}

Json report_envelope(const std::string& command, const std::string& input,
                     const Verdicts& verdicts) {
  Json report;
  report["tool_version"] = kToolVersion;
  report["command"] = command;
  report["input"] = input;
  report["verdicts"] = verdicts.items;
  return report;
}

Json interval_to_json(const TimeInterval& w) {
  Json j;
  j["lo"] = w.lo;
  if (w.bounded())
    j["hi"] = w.hi;
  else
    j["hi"] = "inf";
  return j;
}

Json trace_to_json(const Trace& trace) {
  Json j = Json::array();
  for (const auto& step : trace) {
    Json s;
    s["transition"] = step.transition;
    if (step.time) s["time"] = *step.time;
    j.push_back(std::move(s));
  }
  return j;
}

Json violations_to_json(const std::vector<Violation>& violations) {
  Json j = Json::array();
  for (const auto& v : violations) {
    Json item;
    item["code"] = v.code;
    item["where"] = v.where;
    item["detail"] = v.detail;
    j.push_back(std::move(item));
  }
  return j;
}

Json timed_violations_to_json(const std::vector<TimedViolation>& violations) {
  Json j = Json::array();
  for (const auto& v : violations) {
    Json item;
    item["code"] = v.code;
    item["transition"] = v.transition;
    if (!v.place.empty()) item["place"] = v.place;
    item["detail"] = v.detail;
    item["witness"] = trace_to_json(v.witness);
    j.push_back(std::move(item));
  }
  return j;
}

namespace {

void render_value(std::ostream& os, const Json& v) {
  if (v.is_string())
    os << v.get<std::string>();
  else
    os << v.dump();
}

}  // namespace

std::string render_human(const Json& report) {
  std::ostringstream os;
  os << report.at("command").get<std::string>() << " "
     << report.at("input").get<std::string>() << "\n";
  for (const auto& item : report.at("verdicts")) {
    os << "  " << item.at("check").get<std::string>() << ": "
       << item.at("result").get<std::string>();
    const auto& details = item.at("details");
    if (details.is_object() && !details.empty()) {
      os << "  (";
      bool first = true;
      for (auto it = details.begin(); it != details.end(); ++it) {
        if (!first) os << ", ";
        first = false;
        os << it.key() << "=";
        render_value(os, it.value());
      }
      os << ")";
    }
    os << "\n";
    if (item.contains("witness") && !item.at("witness").empty())
      os << "    witness: " << item.at("witness").dump() << "\n";
  }
  return os.str();
}

}  // namespace hpnet
