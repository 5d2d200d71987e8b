// Membership of a point in λP + (t-λ)Q as a function of λ.
//
// The set {(u, λ, x) : u ∈ λP, x - u ∈ (t-λ)Q, 0 <= λ <= t} is polyhedral;
// eliminating u by Fourier–Motzkin leaves linear inequalities in (λ, x), so
// for a fixed x the admissible λ form an interval read off row by row.

#include <algorithm>
#include <cstdint>

#include "multideal/errors.hpp"
#include "multideal/geometry.hpp"
#include "multideal/linalg.hpp"

namespace multideal {

namespace {

// Coefficients over [u_0..u_{d-1}, λ, x_0..x_{d-1}, 1]; the row means coeffs · v >= 0.
struct WorkRow {
  IntegerVector coeffs;
  std::vector<std::uint64_t> history;  // which input rows were combined

  std::size_t history_size() const {
    std::size_t n = 0;
    for (auto w : history) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
  }
};

void normalize(IntegerVector& v) {
  Integer g = 0;
  for (const auto& c : v) g = gcd(g, c);
  if (g > 1)
    for (auto& c : v) c /= g;
}

}  // namespace

bool SumMembershipSystem::Row::operator<(const Row& o) const {
  if (lambda != o.lambda) return lambda < o.lambda;
  if (x != o.x) return x < o.x;
  return constant < o.constant;
}

bool SumMembershipSystem::Row::operator==(const Row& o) const {
  return lambda == o.lambda && x == o.x && constant == o.constant;
}

SumMembershipSystem::SumMembershipSystem(const NewtonPolyhedron& p, const NewtonPolyhedron& q, const Rational& t)
    : dimension_(p.dimension()), t_(t) {
  if (q.dimension() != dimension_) throw Error(ErrorKind::DimensionMismatch, "summation polyhedra");
  if (p.recession_rays() != q.recession_rays()) throw Error(ErrorKind::RecessionMismatch, "summation polyhedra");
  if (t <= 0) throw Error(ErrorKind::NonpositiveScale, "summation weight " + t.get_str());
  const std::size_t d = dimension_;
  const std::size_t width = 2 * d + 2;
  const std::size_t lam = d, cst = 2 * d + 1;

  std::vector<IntegerVector> input;
  for (const auto& f : p.facets()) {
    // den·⟨u,n⟩ - num·λ >= 0
    IntegerVector row(width, Integer(0));
    Integer num(f.offset.get_num()), den(f.offset.get_den());
    for (std::size_t i = 0; i < d; ++i) row[i] = f.normal[i] * den;
    row[lam] = -num;
    input.push_back(std::move(row));
  }
  for (const auto& f : q.facets()) {
    // ⟨x,n⟩ - ⟨u,n⟩ + c·λ - t·c >= 0, cleared of denominators
    Rational tc = t * f.offset;
    Integer den = lcm(Integer(f.offset.get_den()), Integer(tc.get_den()));
    IntegerVector row(width, Integer(0));
    for (std::size_t i = 0; i < d; ++i) {
      row[i] = -f.normal[i] * den;
      row[d + 1 + i] = f.normal[i] * den;
    }
    row[lam] = Integer(f.offset.get_num() * (den / f.offset.get_den()));
    row[cst] = -Integer(tc.get_num() * (den / tc.get_den()));
    input.push_back(std::move(row));
  }
  {
    IntegerVector row(width, Integer(0));
    row[lam] = 1;
    input.push_back(std::move(row));
    IntegerVector upper(width, Integer(0));
    upper[lam] = -Integer(t.get_den());
    upper[cst] = Integer(t.get_num());
    input.push_back(std::move(upper));
  }

  const std::size_t words = (input.size() + 63) / 64;
  std::vector<WorkRow> rows;
  for (std::size_t i = 0; i < input.size(); ++i) {
    WorkRow r{input[i], std::vector<std::uint64_t>(words, 0)};
    normalize(r.coeffs);
    r.history[i / 64] |= std::uint64_t{1} << (i % 64);
    rows.push_back(std::move(r));
  }

  for (std::size_t var = 0; var < d; ++var) {
    std::vector<WorkRow> pos, neg, next;
    for (auto& r : rows) {
      int s = sgn(r.coeffs[var]);
      if (s > 0)
        pos.push_back(std::move(r));
      else if (s < 0)
        neg.push_back(std::move(r));
      else
        next.push_back(std::move(r));
    }
    for (const auto& a : pos)
      for (const auto& b : neg) {
        WorkRow c;
        c.history.resize(words);
        for (std::size_t w = 0; w < words; ++w) c.history[w] = a.history[w] | b.history[w];
        // Chernikov: a combination of more than (eliminated + 1) inputs is redundant
        if (c.history_size() > var + 2) continue;
        Integer fa = -b.coeffs[var], fb = a.coeffs[var];
        c.coeffs.resize(width);
        for (std::size_t k = 0; k < width; ++k) c.coeffs[k] = fa * a.coeffs[k] + fb * b.coeffs[k];
        normalize(c.coeffs);
        next.push_back(std::move(c));
      }
    // drop duplicates, keeping the smallest history
    std::sort(next.begin(), next.end(), [](const WorkRow& a, const WorkRow& b) {
      if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
      return a.history_size() < b.history_size();
    });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const WorkRow& a, const WorkRow& b) { return a.coeffs == b.coeffs; }),
               next.end());
    rows = std::move(next);
  }

  for (const auto& r : rows) {
    Row out;
    out.lambda = r.coeffs[lam];
    out.x.assign(r.coeffs.begin() + static_cast<std::ptrdiff_t>(d + 1), r.coeffs.begin() + static_cast<std::ptrdiff_t>(2 * d + 1));
    out.constant = r.coeffs[cst];
    bool trivial = out.lambda == 0 && std::all_of(out.x.begin(), out.x.end(), [](const Integer& c) { return c == 0; });
    if (trivial) {
      if (out.constant < 0) throw Error(ErrorKind::InvariantViolation, "infeasible summation system");
      continue;
    }
    rows_.push_back(std::move(out));
  }
  std::sort(rows_.begin(), rows_.end());
  rows_.erase(std::unique(rows_.begin(), rows_.end()), rows_.end());
}

RationalInterval SumMembershipSystem::interval(const RationalVector& x) const {
  if (x.size() != dimension_) throw Error(ErrorKind::DimensionMismatch, "summation point");
  RationalInterval out;
  Rational lo = 0, hi = t_;
  for (const auto& r : rows_) {
    Rational v = dot(r.x, x) + r.constant;  // r.lambda·λ + v >= 0
    if (r.lambda == 0) {
      if (v < 0) return out;
    } else if (r.lambda > 0) {
      lo = std::max(lo, Rational(-v / r.lambda));
    } else {
      hi = std::min(hi, Rational(-v / r.lambda));
    }
  }
  if (lo > hi) return out;
  out.empty = false;
  out.lo = lo;
  out.hi = hi;
  return out;
}

LambdaSet SumMembershipSystem::strict_set(const RationalVector& x) const {
  if (x.size() != dimension_) throw Error(ErrorKind::DimensionMismatch, "summation point");
  LambdaSet out;
  out.lo = 0;
  out.hi = t_;
  for (const auto& r : rows_) {
    bool strict = std::any_of(r.x.begin(), r.x.end(), [](const Integer& c) { return c != 0; });
    Rational v = dot(r.x, x) + r.constant;
    if (r.lambda == 0) {
      if (v < 0 || (strict && v == 0)) return LambdaSet{};
    } else if (r.lambda > 0) {
      Rational b = -v / r.lambda;
      if (b > out.lo) {
        out.lo = b;
        out.lo_closed = !strict;
      } else if (b == out.lo && strict) {
        out.lo_closed = false;
      }
    } else {
      Rational b = -v / r.lambda;
      if (b < out.hi) {
        out.hi = b;
        out.hi_closed = !strict;
      } else if (b == out.hi && strict) {
        out.hi_closed = false;
      }
    }
  }
  if (out.lo > out.hi || (out.lo == out.hi && !(out.lo_closed && out.hi_closed))) return LambdaSet{};
  out.empty = false;
  return out;
}

RationalInterval membership_interval(const NewtonPolyhedron& p, const NewtonPolyhedron& q, const Rational& t,
                                     const RationalVector& x) {
  return SumMembershipSystem(p, q, t).interval(x);
}

}  // namespace multideal
