#include "multideal/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#include <json.hpp>

namespace multideal {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Skip: return "SKIP";
  }
  return "?";
}

std::string expectation_name(Expectation e) {
  switch (e) {
    case Expectation::Containment: return "containment";
    case Expectation::NonContainment: return "non-containment";
    case Expectation::Equality: return "equality";
  }
  return "?";
}

std::size_t SuiteReport::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.verdict == v;
  return n;
}

std::string SuiteReport::to_json(const std::string& generated_at) const {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["format_version"] = kFormatVersion;
  doc["suite"] = suite;
  doc["config"] = {{"seed", config.seed},
                   {"count", config.count},
                   {"ring", config.ring.empty() ? "default" : config.ring},
                   {"n", config.n}};
  ordered_json results_json = ordered_json::array();
  for (const auto& r : results) {
    ordered_json instance = ordered_json::object();
    for (const auto& [k, v] : r.instance) instance[k] = v;
    ordered_json item;
    item["theorem_id"] = r.theorem_id;
    item["index"] = r.index;
    item["instance"] = instance;
    item["verdict"] = verdict_name(r.verdict);
    if (r.verdict == Verdict::Skip) item["reason"] = r.skip_reason;
    item["expectation"] = expectation_name(r.expectation);
    item["lhs"] = r.lhs;
    item["rhs"] = r.rhs;
    if (r.witness) item["witness"] = *r.witness;
    if (!r.note.empty()) item["note"] = r.note;
    item["millis"] = r.millis;
    results_json.push_back(std::move(item));
  }
  doc["results"] = std::move(results_json);
  doc["totals"] = {{"pass", count(Verdict::Pass)}, {"fail", count(Verdict::Fail)}, {"skip", count(Verdict::Skip)}};
  if (!generated_at.empty()) doc["generated_at"] = generated_at;
  return doc.dump(2) + "\n";
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << " (seed " << config.seed << ", count " << config.count << ")\n";
  for (const auto& r : results) {
    os << "[" << verdict_name(r.verdict) << "] " << r.theorem_id << " #" << r.index;
    for (const auto& [k, v] : r.instance) os << " " << k << "=" << v;
    os << "\n    expect " << expectation_name(r.expectation) << "\n    lhs " << r.lhs << "\n    rhs " << r.rhs << "\n";
    if (r.witness) os << "    witness " << *r.witness << "\n";
    if (r.verdict == Verdict::Skip) os << "    reason " << r.skip_reason << "\n";
    if (!r.note.empty()) os << "    note " << r.note << "\n";
  }
  os << "totals: pass " << count(Verdict::Pass) << ", fail " << count(Verdict::Fail) << ", skip "
     << count(Verdict::Skip) << "\n";
  return os.str();
}

std::string utc_timestamp() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace multideal
