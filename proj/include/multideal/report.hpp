#pragma once

// Outcome records for theorem checks and their JSON / text renderings.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace multideal {

enum class Verdict { Pass, Fail, Skip };

/// What the check expects of lhs versus rhs.
enum class Expectation { Containment, NonContainment, Equality };

std::string verdict_name(Verdict v);
std::string expectation_name(Expectation e);

struct VerificationReport {
  std::string theorem_id;
  std::size_t index = 0;
  /// Instance echo as ordered key/value pairs.
  std::vector<std::pair<std::string, std::string>> instance;
  Verdict verdict = Verdict::Skip;
  std::string skip_reason;
  Expectation expectation = Expectation::Containment;
  std::string lhs;
  std::string rhs;
  std::optional<std::string> witness;
  std::string note;
  std::int64_t millis = 0;

  bool passed() const { return verdict == Verdict::Pass; }
};

struct SuiteConfig {
  std::uint64_t seed = 1;
  int count = 100;
  /// Empty means each suite's default ring mix.
  std::string ring;
  int n = 2;
  bool timing = false;
  int threads = 0;  // 0: hardware concurrency
};

struct SuiteReport {
  static constexpr int kFormatVersion = 1;
  std::string suite;
  SuiteConfig config;
  std::vector<VerificationReport> results;

  std::size_t count(Verdict v) const;
  bool has_failures() const { return count(Verdict::Fail) > 0; }

  /// JSON document; `generated_at` is the only non-deterministic key and is omitted when empty.
  std::string to_json(const std::string& generated_at = "") const;
  std::string to_text() const;
};

/// Current UTC time as ISO-8601.
std::string utc_timestamp();

}  // namespace multideal
