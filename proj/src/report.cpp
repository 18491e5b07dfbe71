#include "lpa/report.hpp"

#include <json.hpp>

namespace lpa {

std::map<std::string, std::string> Report::echo(const RunConfig& c) {
  return {{"field", c.field.str()},
          {"bound", std::to_string(c.bound)},
          {"depth", std::to_string(c.depth)},
          {"trials", std::to_string(c.trials)},
          {"seed", std::to_string(c.seed)}};
}

std::string Report::text() const {
  std::string out = "== " + command;
  for (const auto& [k, v] : config) out += " " + k + "=" + v;
  out += " ==\n";
  std::size_t w = 4;
  for (const auto& r : records) w = std::max(w, r.name.size());
  for (const auto& r : records) {
    out += r.name + std::string(w - r.name.size() + 2, ' ') + (r.pass ? "pass" : "FAIL");
    if (!r.detail.empty()) out += "  " + r.detail;
    out += "\n";
  }
  if (!records.empty())
    out += "overall: " + std::string(pass() ? "pass" : "FAIL") + "\n";
  return out;
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["config"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : config) j["config"][k] = v;
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : records)
    j["records"].push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  j["overall"] = pass() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

Report Report::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  Report rep;
  rep.command = j.at("command").get<std::string>();
  for (const auto& [k, v] : j.at("config").items())
    rep.config[k] = v.get<std::string>();
  for (const auto& r : j.at("records"))
    rep.records.push_back({r.at("name").get<std::string>(), r.at("pass").get<bool>(),
                           r.at("detail").get<std::string>()});
  return rep;
}

}  // namespace lpa
