#include "multideal/asymptotic.hpp"

#include "multideal/errors.hpp"
#include "multideal/multiplier.hpp"

namespace multideal {

GradedFamily::GradedFamily(Rule rule, Ring ring, std::optional<MonomialIdeal> base, Family left, Family right)
    : rule_(rule), ring_(std::move(ring)), base_(std::move(base)), left_(std::move(left)), right_(std::move(right)) {}

Family GradedFamily::powers(MonomialIdeal a) {
  Ring r = a.ring();
  return std::make_shared<const GradedFamily>(Rule::Powers, r, std::move(a), nullptr, nullptr);
}

Family GradedFamily::symbolic(MonomialIdeal a) {
  if (!is_squarefree(a)) throw Error(ErrorKind::NotSquarefree, a.to_string());
  Ring r = a.ring();
  return std::make_shared<const GradedFamily>(Rule::Symbolic, r, std::move(a), nullptr, nullptr);
}

Family GradedFamily::sum(Family f, Family g) {
  require_same_ring(*f->ring(), *g->ring());
  Ring r = f->ring();
  return std::make_shared<const GradedFamily>(Rule::Sum, r, std::nullopt, std::move(f), std::move(g));
}

std::string GradedFamily::describe() const {
  switch (rule_) {
    case Rule::Powers: return "powers" + base_->to_string();
    case Rule::Symbolic: return "symbolic" + base_->to_string();
    case Rule::Sum: return "sum(" + left_->describe() + ", " + right_->describe() + ")";
  }
  return "";
}

MonomialIdeal GradedFamily::compute(std::int64_t m) const {
  if (m == 0) return MonomialIdeal::unit(ring_);
  switch (rule_) {
    case Rule::Powers: return power(*base_, m);
    case Rule::Symbolic: return symbolic_power(*base_, m);
    case Rule::Sum: {
      MonomialIdeal total = product(left_->member(0), right_->member(m));
      for (std::int64_t k = 1; k <= m; ++k) total = multideal::sum(total, product(left_->member(k), right_->member(m - k)));
      return total;
    }
  }
  throw Error(ErrorKind::InvalidParameter, "unknown family rule");
}

void GradedFamily::check_product_law(std::int64_t m, const MonomialIdeal& value) const {
  std::map<std::int64_t, MonomialIdeal> snapshot;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    snapshot = memo_;
  }
  for (const auto& [k, ak] : snapshot) {
    if (k == 0) continue;
    if (auto l = snapshot.find(m - k); l != snapshot.end() && l->first > 0 && k <= l->first)
      if (!contains(value, product(ak, l->second)))
        throw Error(ErrorKind::InvariantViolation, "a_" + std::to_string(k) + " a_" + std::to_string(l->first) +
                                                       " not inside a_" + std::to_string(m));
    if (auto s = snapshot.find(m + k); s != snapshot.end())
      if (!contains(s->second, product(value, ak)))
        throw Error(ErrorKind::InvariantViolation, "a_" + std::to_string(m) + " a_" + std::to_string(k) +
                                                       " not inside a_" + std::to_string(m + k));
  }
}

MonomialIdeal GradedFamily::member(std::int64_t m) const {
  if (m < 0) throw Error(ErrorKind::NonpositivePower, "family member " + std::to_string(m));
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
  }
  MonomialIdeal value = compute(m);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = memo_.emplace(m, value);
    if (!inserted) return it->second;
  }
  check_product_law(m, value);
  return value;
}

MonomialIdeal family_member(const GradedFamily& f, std::int64_t m) { return f.member(m); }

std::vector<std::int64_t> default_schedule() { return {1, 2, 6, 24, 120}; }

MonomialIdeal member_multiplier(const GradedFamily& f, std::int64_t m, const Rational& t) {
  if (m < 1) throw Error(ErrorKind::InvalidParameter, "level must be positive");
  MonomialIdeal a = f.member(m);
  if (a.is_unit()) return a;
  return multiplier_ideal(a, t / Rational(Integer(static_cast<long>(m))));
}

namespace {

void check_schedule(const std::vector<std::int64_t>& schedule) {
  if (schedule.empty()) throw Error(ErrorKind::NotDivisibilityChain, "empty schedule");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] < 1) throw Error(ErrorKind::NotDivisibilityChain, "schedule entries must be positive");
    if (i > 0 && (schedule[i] <= schedule[i - 1] || schedule[i] % schedule[i - 1] != 0))
      throw Error(ErrorKind::NotDivisibilityChain,
                  std::to_string(schedule[i - 1]) + " does not properly divide " + std::to_string(schedule[i]));
  }
}

template <typename Level>
StabilizationCertificate stabilize(const std::vector<std::int64_t>& schedule, Level level, bool monotone) {
  check_schedule(schedule);
  std::vector<std::pair<std::int64_t, MonomialIdeal>> trail;
  for (auto m : schedule) {
    MonomialIdeal j = level(m);
    if (!trail.empty()) {
      const auto& [pm, prev] = trail.back();
      if (monotone && !contains(j, prev))
        throw Error(ErrorKind::InvariantViolation, "level " + std::to_string(pm) + " not inside level " + std::to_string(m));
      if (prev == j) {
        std::int64_t witness = pm;
        MonomialIdeal stable = prev;
        trail.emplace_back(m, std::move(j));
        return StabilizationCertificate{std::move(stable), witness, {m}, std::move(trail)};
      }
    }
    trail.emplace_back(m, std::move(j));
  }
  throw Error(ErrorKind::NoStabilization, "schedule exhausted at m = " + std::to_string(schedule.back()));
}

}  // namespace

StabilizationCertificate asymptotic_multiplier(const GradedFamily& f, const Rational& t,
                                               const std::vector<std::int64_t>& schedule) {
  if (t <= 0) throw Error(ErrorKind::NonpositiveExponent, t.get_str());
  return stabilize(schedule, [&](std::int64_t m) { return member_multiplier(f, m, t); }, true);
}

StabilizationCertificate asymptotic_summation_rhs(const GradedFamily& f, const GradedFamily& g, const Rational& t,
                                                  const std::vector<std::int64_t>& schedule) {
  if (t <= 0) throw Error(ErrorKind::NonpositiveExponent, t.get_str());
  require_same_ring(*f.ring(), *g.ring());
  return stabilize(
      schedule,
      [&](std::int64_t m) {
        return summation_rhs(f.member(m), g.member(m), t / Rational(Integer(static_cast<long>(m)))).ideal;
      },
      true);
}

}  // namespace multideal
