#include "multideal/frobenius.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <span>

#include "multideal/errors.hpp"
#include "multideal/multiplier.hpp"

namespace multideal {

namespace {

void require_polynomial(const MonomialIdeal& a) {
  if (a.ring()->kind() != RingKind::Polynomial) throw Error(ErrorKind::NotPolynomialAmbient, a.ring()->describe());
}

// Decides whether n generators of a (with repetition) fit under v: an integer
// program in one variable per generator. Branching is confined to the range of
// c_j for which the LP relaxation of the remaining suffix stays feasible; that
// relaxation is exactly "rem / count ∈ Newt(suffix)".
class PowerMembership {
 public:
  explicit PowerMembership(const MonomialIdeal& a) : ring_(a.ring()), gens_(a.generators()) {
    std::sort(gens_.begin(), gens_.end(),
              [](const ExponentVector& x, const ExponentVector& y) { return x.total_degree() > y.total_degree(); });
    for (std::size_t j = 0; j < gens_.size(); ++j) {
      std::vector<ExponentVector> suffix(gens_.begin() + static_cast<std::ptrdiff_t>(j), gens_.end());
      std::vector<Bound> bounds;
      NewtonPolyhedron hull = newton_polyhedron(std::span<const ExponentVector>(suffix), ring_->dual_cone_rays());
      for (const auto& f : hull.facets()) {
        // ⟨rem, n⟩ >= count·num/den  as  den·⟨rem, n⟩ >= count·num
        Integer den(f.offset.get_den());
        Bound b;
        for (const auto& c : f.normal) b.normal.push_back(to_int64(c * den));
        b.offset = to_int64(Integer(f.offset.get_num()));
        bounds.push_back(std::move(b));
      }
      suffix_bounds_.push_back(std::move(bounds));
    }
  }

  bool contains(std::int64_t n, const ExponentVector& v) const {
    if (!v.is_nonnegative()) return false;
    if (n == 0 || gens_.back().is_zero()) return true;
    std::vector<std::int64_t> rem = v.coords();
    return search(0, rem, n);
  }

 private:
  struct Bound {
    std::vector<std::int64_t> normal;
    std::int64_t offset;
  };

  static __int128 pair(const std::vector<std::int64_t>& n, const std::vector<std::int64_t>& x) {
    __int128 s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<__int128>(n[i]) * x[i];
    return s;
  }

  bool relaxed_feasible(std::size_t j, const std::vector<std::int64_t>& rem, std::int64_t count) const {
    for (const auto& b : suffix_bounds_[j])
      if (pair(b.normal, rem) < static_cast<__int128>(count) * b.offset) return false;
    return true;
  }

  bool search(std::size_t j, std::vector<std::int64_t>& rem, std::int64_t count) const {
    if (count == 0) return true;
    if (j == gens_.size()) return false;
    if (!relaxed_feasible(j, rem, count)) return false;
    const auto& g = gens_[j];
    std::int64_t hi = count, lo = 0;
    for (std::size_t i = 0; i < rem.size(); ++i)
      if (g[i] > 0) hi = std::min(hi, rem[i] / g[i]);
    if (j + 1 == gens_.size()) return hi >= count;
    // each suffix facet is linear in c: ⟨rem - c g, n⟩ >= (count - c)·off  <=>  c·(off - ⟨g,n⟩) >= count·off - ⟨rem,n⟩
    std::vector<std::int64_t> gv = g.coords();
    for (const auto& b : suffix_bounds_[j + 1]) {
      __int128 coef = static_cast<__int128>(b.offset) - pair(b.normal, gv);
      __int128 rhs = static_cast<__int128>(count) * b.offset - pair(b.normal, rem);
      if (coef > 0) {
        __int128 need = rhs <= 0 ? 0 : (rhs + coef - 1) / coef;
        if (need > lo) lo = need > hi ? hi + 1 : static_cast<std::int64_t>(need);
      } else if (coef < 0) {
        // c·(-coef) <= -rhs
        if (rhs > 0) return false;
        __int128 cap = (-rhs) / (-coef);
        if (cap < hi) hi = static_cast<std::int64_t>(cap);
      } else if (rhs > 0) {
        return false;
      }
      if (lo > hi) return false;
    }
    for (std::int64_t c = hi; c >= lo; --c) {
      for (std::size_t i = 0; i < rem.size(); ++i) rem[i] -= c * g[i];
      bool ok = search(j + 1, rem, count - c);
      for (std::size_t i = 0; i < rem.size(); ++i) rem[i] += c * g[i];
      if (ok) return true;
    }
    return false;
  }

  Ring ring_;
  std::vector<ExponentVector> gens_;
  std::vector<std::vector<Bound>> suffix_bounds_;
};

}  // namespace

bool power_contains(const MonomialIdeal& a, std::int64_t n, const ExponentVector& v) {
  require_polynomial(a);
  if (n < 0) throw Error(ErrorKind::NonpositivePower, std::to_string(n));
  return PowerMembership(a).contains(n, v);
}

MonomialIdeal frobenius_level_ideal(const MonomialIdeal& a, const Rational& t, std::int64_t q) {
  require_polynomial(a);
  if (q < 1) throw Error(ErrorKind::InvalidParameter, "q < 1");
  if (t <= 0) throw Error(ErrorKind::NonpositiveExponent, t.get_str());
  if (a.is_unit()) return a;
  const std::int64_t n = to_int64(ceil(t * Rational(Integer(static_cast<long>(q)))));
  const std::size_t d = a.ring()->dimension();
  PowerMembership membership(a);
  std::vector<std::int64_t> upper(d, 0);
  for (const auto& g : a.generators())
    for (std::size_t i = 0; i < d; ++i) upper[i] = std::max(upper[i], g[i]);
  for (auto& u : upper) u = to_int64(Integer(static_cast<long>(checked_mul(n, u))) / Integer(static_cast<long>(q))) + 1;

  std::vector<ExponentVector> found;
  ExponentVector w(d);
  while (true) {
    bool dominated = std::any_of(found.begin(), found.end(), [&](const ExponentVector& f) { return f.divides(w); });
    if (!dominated) {
      ExponentVector v(d);
      for (std::size_t i = 0; i < d; ++i) v[i] = checked_add(checked_mul(q, checked_add(w[i], 1)), -1);
      if (membership.contains(n, v)) found.push_back(w);
    }
    std::size_t i = d;
    bool done = false;
    while (true) {
      if (i == 0) {
        done = true;
        break;
      }
      --i;
      if (w[i] < upper[i]) {
        ++w[i];
        break;
      }
      w[i] = 0;
    }
    if (done) break;
  }
  if (found.empty()) throw Error(ErrorKind::InvariantViolation, "Frobenius level scan found nothing");
  return MonomialIdeal(a.ring(), std::move(found));
}

int multiplicative_order(std::int64_t p, std::int64_t m) {
  if (m <= 1) return 1;
  if (std::gcd(p, m) != 1) throw Error(ErrorKind::DenominatorDivisibleByP, "p shares a factor with " + std::to_string(m));
  std::int64_t x = p % m;
  int k = 1;
  while (x != 1) {
    x = static_cast<std::int64_t>((static_cast<__int128>(x) * p) % m);
    ++k;
  }
  return k;
}

ChainResult test_ideal_chain(const MonomialIdeal& a, const Rational& t, std::int64_t p, int e_max) {
  require_polynomial(a);
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  if (t <= 0) throw Error(ErrorKind::NonpositiveExponent, t.get_str());
  Integer den(t.get_den());
  if (den % p == 0) throw Error(ErrorKind::DenominatorDivisibleByP, "t = " + t.get_str() + ", p = " + std::to_string(p));
  // Every level sits inside J(a^t): a^N lies in the integral closure N·Newt(a),
  // and the shift by -1 makes the facet inequalities strict. The chain ascends,
  // so it has stabilized exactly when it reaches that ceiling.
  const MonomialIdeal ceiling = multiplier_ideal(a, t);
  std::vector<MonomialIdeal> levels;
  std::int64_t q = 1;
  for (int e = 0; e <= e_max; ++e) {
    if (e > 0) q = checked_mul(q, p);
    levels.push_back(frobenius_level_ideal(a, t, q));
    if (e > 0 && !contains(levels[e], levels[e - 1]))
      throw Error(ErrorKind::InvariantViolation, "Frobenius chain not ascending at e = " + std::to_string(e));
    if (!contains(ceiling, levels[e]))
      throw Error(ErrorKind::InvariantViolation, "Frobenius level escapes J(a^t) at e = " + std::to_string(e));
    if (levels[e] == ceiling) return ChainResult{levels[e], e, levels};
  }
  throw Error(ErrorKind::NonStabilized, "no stabilization up to e = " + std::to_string(e_max));
}

TightClosureResult tight_closure_membership(std::int64_t p, const ExponentVector& z, const MonomialIdeal& ideal,
                                            const MonomialIdeal& a, const Rational& t, int e_max, int degree_bound) {
  require_polynomial(ideal);
  require_same_ring(*ideal.ring(), *a.ring());
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  if (e_max < 1 || e_max > 8) throw Error(ErrorKind::InvalidParameter, "e_max must be in [1, 8]");
  if (degree_bound < 0) throw Error(ErrorKind::InvalidParameter, "negative degree bound");
  if (t <= 0) throw Error(ErrorKind::NonpositiveExponent, t.get_str());
  const std::size_t d = ideal.ring()->dimension();
  TightClosureResult result;
  if (member(ideal, z)) {
    result.member = true;
    result.multiplier = ExponentVector(d);
    return result;
  }

  constexpr std::size_t kBudget = 5000;
  std::vector<std::int64_t> qs;
  std::vector<std::vector<ExponentVector>> power_gens;
  std::vector<MonomialIdeal> brackets;
  std::int64_t q = 1;
  for (int e = 1; e <= e_max; ++e) {
    q = checked_mul(q, p);
    std::int64_t n = to_int64(ceil(t * Rational(Integer(static_cast<long>(q)))));
    // a^n grows like n^{d-1}·|a|; refuse before it gets out of hand
    if (!a.is_unit()) {
      double estimate = 1;
      for (std::size_t i = 1; i < std::min<std::size_t>(d, a.size()); ++i) estimate *= static_cast<double>(n + 1);
      if (estimate > static_cast<double>(kBudget))
        throw Error(ErrorKind::SearchBudgetExceeded, "a^" + std::to_string(n) + " too large at q = " + std::to_string(q));
    }
    MonomialIdeal an = power(a, n);
    if (an.size() > kBudget) throw Error(ErrorKind::SearchBudgetExceeded, "a^" + std::to_string(n) + " too large");
    qs.push_back(q);
    power_gens.push_back(an.generators());
    brackets.push_back(bracket_power(ideal, q));
  }
  result.q_max = q;

  // candidate multipliers c in order of degree
  std::vector<ExponentVector> candidates;
  std::vector<std::int64_t> c(d, 0);
  while (true) {
    std::int64_t deg = 0;
    for (auto x : c) deg += x;
    if (deg <= degree_bound) candidates.emplace_back(c);
    std::size_t i = 0;
    while (i < d && ++c[i] > degree_bound) c[i++] = 0;
    if (i == d) break;
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const ExponentVector& x, const ExponentVector& y) { return x.total_degree() < y.total_degree(); });

  for (const auto& cand : candidates) {
    bool ok = true;
    for (std::size_t k = 0; k < qs.size() && ok; ++k) {
      ExponentVector base = cand + z.scaled(qs[k]);
      for (const auto& u : power_gens[k])
        if (!member(brackets[k], base + u)) {
          ok = false;
          break;
        }
    }
    if (ok) {
      result.member = true;
      result.multiplier = cand;
      return result;
    }
  }
  return result;
}

}  // namespace multideal
