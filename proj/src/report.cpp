#include "nsymkit/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace nsymkit {

void Report::merge(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed || c.printed_erratum; });
}

bool Report::all_passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

std::size_t Report::failures(bool include_errata) const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [&](const Check& c) {
    return !c.passed && (include_errata || !c.printed_erratum);
  }));
}

std::string Report::to_text() const {
  // One line per (suite, identity), with the degrees it was checked at.
  struct Row {
    std::vector<int> ok, bad;
    bool erratum = false;
    std::string detail;
  };
  std::vector<std::pair<std::string, std::string>> order;
  std::map<std::pair<std::string, std::string>, Row> rows;
  for (const auto& c : checks_) {
    auto key = std::make_pair(c.suite, c.name);
    auto [it, fresh] = rows.try_emplace(key);
    if (fresh) order.push_back(key);
    (c.passed ? it->second.ok : it->second.bad).push_back(c.n);
    it->second.erratum = it->second.erratum || c.printed_erratum;
    if (!c.passed && it->second.detail.empty()) it->second.detail = "n=" + std::to_string(c.n) + ": " + c.detail;
  }
  auto degrees = [](const std::vector<int>& v) {
    std::string s;
    for (int n : v) s += (s.empty() ? "" : ",") + std::to_string(n);
    return s;
  };
  std::ostringstream out;
  for (const auto& key : order) {
    const Row& r = rows.at(key);
    const char* status = r.bad.empty() ? "PASS" : (r.erratum ? "MISPRINT" : "FAIL");
    out << status << "  [" << key.first << "] " << key.second;
    if (!r.ok.empty()) out << "  (n=" << degrees(r.ok) << ")";
    if (!r.bad.empty()) out << "  fails n=" << degrees(r.bad) << "; " << r.detail;
    out << '\n';
  }
  out << (passed() ? "all checks passed" : "verification FAILED") << ": " << checks_.size() << " checks, "
      << failures() << " failures, " << (failures(true) - failures()) << " reproduced misprints\n";
  return out.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["passed"] = passed();
  j["all_printed_forms_hold"] = all_passed();
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json e;
    e["suite"] = c.suite;
    e["identity"] = c.name;
    e["n"] = c.n;
    e["passed"] = c.passed;
    if (c.printed_erratum) e["printed_erratum"] = true;
    if (!c.detail.empty()) e["detail"] = c.detail;
    arr.push_back(std::move(e));
  }
  return j.dump(2);
}

}  // namespace nsymkit
