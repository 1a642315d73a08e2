#pragma once

// JSON and text rendering of verification reports.
//
// JSON layout (field order is fixed):
//   { tool_version, command,
//     instances: [ { theorem, inputs: {role: graph6}, params: {name: int},
//                    status, predicted, observed, agree, witness? } ],
//     summary: { checked, skipped, failed,
//                by_theorem: { id: {checked, skipped, failed} },
//                digest, budget_exceeded, over_budget },
//     wall_time_ms }

#include <cstdio>
#include <ostream>
#include <string>

#include "dbal/corpus.hpp"
#include "json.hpp"

namespace dbal {

inline constexpr std::string_view kToolVersion = "0.1.0";

inline nlohmann::ordered_json instance_to_json(const InstanceResult& r) {
  nlohmann::ordered_json j;
  j["theorem"] = check_name(r.check);
  auto inputs = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  j["inputs"] = inputs;
  auto params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["status"] = r.skipped ? "skipped" : "checked";
  j["predicted"] = r.predicted ? nlohmann::ordered_json(*r.predicted) : nlohmann::ordered_json();
  j["observed"] = r.observed ? nlohmann::ordered_json(*r.observed) : nlohmann::ordered_json();
  j["agree"] = r.agree;
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

inline nlohmann::ordered_json report_to_json(const VerificationReport& rep, std::string_view command) {
  nlohmann::ordered_json j;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  auto instances = nlohmann::ordered_json::array();
  for (const auto& r : rep.instances) instances.push_back(instance_to_json(r));
  j["instances"] = std::move(instances);
  nlohmann::ordered_json summary;
  summary["checked"] = rep.checked;
  summary["skipped"] = rep.skipped;
  summary["failed"] = rep.failed;
  auto by = nlohmann::ordered_json::object();
  for (std::size_t c = 0; c < kCheckCount; ++c) {
    const auto& t = rep.by_check[c];
    if (t.checked + t.skipped == 0) continue;
    by[std::string(kCheckNames[c])] = {{"checked", t.checked}, {"skipped", t.skipped}, {"failed", t.failed}};
  }
  summary["by_theorem"] = std::move(by);
  summary["digest"] = hex64(rep.digest);
  summary["budget_exceeded"] = rep.budget_exceeded;
  summary["over_budget"] = rep.over_budget;
  j["summary"] = std::move(summary);
  j["wall_time_ms"] = static_cast<std::int64_t>(rep.wall_time_ms);
  return j;
}

/// A CLI line that replays one instance.
inline std::string replay_command(const InstanceResult& r) {
  std::string s = "dbal verify --check " + std::string(check_name(r.check));
  for (const auto& [k, v] : r.inputs) {
    if (k == "G" || k == "X")
      s += " --g '" + v + "'";
    else if (k == "H")
      s += " --h '" + v + "'";
  }
  for (const auto& [k, v] : r.params) {
    if (k == "l") s += " --l " + std::to_string(v);
    if (k == "n") s += " --g complete:" + std::to_string(v);
    if (k == "v") s += " --vertex " + std::to_string(v);
  }
  return s;
}

inline void write_instance_text(std::ostream& out, const InstanceResult& r) {
  out << check_name(r.check);
  for (const auto& [k, v] : r.inputs) out << ' ' << k << '=' << v;
  for (const auto& [k, v] : r.params) out << ' ' << k << '=' << v;
  if (r.skipped) {
    out << "  SKIPPED (" << r.witness << ")\n";
    return;
  }
  auto b = [](const std::optional<bool>& x) { return x ? (*x ? "true" : "false") : "n/a"; };
  out << "  predicted=" << b(r.predicted) << " observed=" << b(r.observed)
      << (r.agree ? "  AGREE" : "  DISAGREE") << '\n';
  if (!r.agree) {
    out << "    witness: " << r.witness << '\n';
    out << "    replay:  " << replay_command(r) << '\n';
  }
}

inline void write_report_text(std::ostream& out, const VerificationReport& rep) {
  for (const auto& r : rep.instances) write_instance_text(out, r);
  out << "theorem       checked   skipped    failed\n";
  for (std::size_t c = 0; c < kCheckCount; ++c) {
    const auto& t = rep.by_check[c];
    if (t.checked + t.skipped == 0) continue;
    char line[96];
    std::snprintf(line, sizeof line, "%-12s %8zu  %8zu  %8zu\n", kCheckNames[c].data(), t.checked,
                  t.skipped, t.failed);
    out << line;
  }
  out << "total: checked " << rep.checked << ", skipped " << rep.skipped << ", failed "
      << rep.failed << "\n";
  if (rep.budget_exceeded)
    out << "budget exceeded: " << rep.over_budget << " product(s) over the size limit"
        << " (partial results)\n";
  out << "digest " << hex64(rep.digest) << ", " << static_cast<long long>(rep.wall_time_ms)
      << " ms\n";
}

}  // namespace dbal
