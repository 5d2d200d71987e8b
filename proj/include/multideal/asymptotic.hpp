#pragma once

// Graded families a_• of monomial ideals and their asymptotic multiplier ideals.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "multideal/ideal.hpp"

namespace multideal {

class GradedFamily;
using Family = std::shared_ptr<const GradedFamily>;

class GradedFamily {
 public:
  enum class Rule { Powers, Symbolic, Sum };

  /// a_m = a^m.
  static Family powers(MonomialIdeal a);
  /// a_m = a^{(m)} for squarefree a.
  static Family symbolic(MonomialIdeal a);
  /// (f + g)_m = Σ_{k+l=m} f_k g_l.
  static Family sum(Family f, Family g);

  Rule rule() const { return rule_; }
  const Ring& ring() const { return ring_; }

  /// a_0 is the unit ideal. Memoized; safe to call concurrently.
  MonomialIdeal member(std::int64_t m) const;

  std::string describe() const;

  GradedFamily(Rule rule, Ring ring, std::optional<MonomialIdeal> base, Family left, Family right);

 private:
  MonomialIdeal compute(std::int64_t m) const;
  void check_product_law(std::int64_t m, const MonomialIdeal& value) const;

  Rule rule_;
  Ring ring_;
  std::optional<MonomialIdeal> base_;
  Family left_, right_;
  mutable std::mutex mutex_;
  mutable std::map<std::int64_t, MonomialIdeal> memo_;
};

MonomialIdeal family_member(const GradedFamily& f, std::int64_t m);

struct StabilizationCertificate {
  MonomialIdeal ideal;
  std::int64_t witness_m;
  std::vector<std::int64_t> checked_multiples;
  /// (m, J(a_m^{t/m})) for every schedule entry computed.
  std::vector<std::pair<std::int64_t, MonomialIdeal>> trail;
};

std::vector<std::int64_t> default_schedule();

/// Walks J(a_m^{t/m}) along a divisibility chain and certifies the first
/// repeat. Throws NotDivisibilityChain or NoStabilization.
StabilizationCertificate asymptotic_multiplier(const GradedFamily& f, const Rational& t,
                                               const std::vector<std::int64_t>& schedule = default_schedule());

/// Σ_{λ+μ=t} J(f_m^{λ/m} g_m^{μ/m}) stabilized along the schedule.
StabilizationCertificate asymptotic_summation_rhs(const GradedFamily& f, const GradedFamily& g, const Rational& t,
                                                  const std::vector<std::int64_t>& schedule = default_schedule());

/// J(a_m^{t/m}); a unit member gives the unit ideal.
MonomialIdeal member_multiplier(const GradedFamily& f, std::int64_t m, const Rational& t);

}  // namespace multideal
