#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "octolab/roots.hpp"  // CheckStatus

namespace octolab {

using Json = nlohmann::json;

struct CheckDescriptor {
  std::string id;
  std::string paper_ref;  // equation/section tag, or the literal "plumbing"
  std::string module;
  CheckStatus status = CheckStatus::Fail;
  Json witness;
};

struct VerificationReport {
  std::vector<CheckDescriptor> checks;
  Json config_echo;

  std::map<std::string, int> summary() const {
    std::map<std::string, int> s{{"pass", 0}, {"fail", 0}, {"discrepancy", 0}, {"indeterminate", 0}};
    for (const auto& c : checks) ++s[status_name(c.status)];
    return s;
  }
  bool failed() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const auto& c) { return c.status == CheckStatus::Fail; });
  }

  Json to_json() const {
    Json out;
    out["schema"] = 1;
    out["config"] = config_echo;
    out["checks"] = Json::array();
    for (const auto& c : checks)
      out["checks"].push_back({{"check", c.id},
                               {"paper_ref", c.paper_ref},
                               {"module", c.module},
                               {"status", status_name(c.status)},
                               {"witness", c.witness}});
    out["summary"] = summary();
    return out;
  }

  std::string to_text() const {
    std::string out;
    for (const auto& c : checks)
      out += status_name(c.status) + " " + c.id + " " + c.paper_ref + "\n";
    auto s = summary();
    out += "summary: " + std::to_string(s["pass"]) + " pass, " + std::to_string(s["fail"]) +
           " fail, " + std::to_string(s["discrepancy"]) + " discrepancy, " +
           std::to_string(s["indeterminate"]) + " indeterminate\n";
    return out;
  }
};

/// Shell-style glob over check ids: '*' and '?' only.
inline bool glob_match(const std::string& pattern, const std::string& text) {
  std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

}  // namespace octolab
