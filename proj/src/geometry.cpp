#include "multideal/geometry.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "multideal/errors.hpp"
#include "multideal/linalg.hpp"

namespace multideal {

std::int64_t ExponentVector::total_degree() const {
  std::int64_t s = 0;
  for (auto c : coords_) s = checked_add(s, c);
  return s;
}

bool ExponentVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

bool ExponentVector::is_nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c >= 0; });
}

bool ExponentVector::divides(const ExponentVector& other) const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] > other.coords_[i]) return false;
  return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  if (other.dimension() != dimension()) throw Error(ErrorKind::DimensionMismatch, "exponent vector sum");
  ExponentVector r(dimension());
  for (std::size_t i = 0; i < coords_.size(); ++i) r[i] = checked_add(coords_[i], other.coords_[i]);
  return r;
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const {
  if (other.dimension() != dimension()) throw Error(ErrorKind::DimensionMismatch, "exponent vector difference");
  ExponentVector r(dimension());
  for (std::size_t i = 0; i < coords_.size(); ++i) r[i] = checked_add(coords_[i], -other.coords_[i]);
  return r;
}

ExponentVector ExponentVector::scaled(std::int64_t factor) const {
  ExponentVector r(dimension());
  for (std::size_t i = 0; i < coords_.size(); ++i) r[i] = checked_mul(coords_[i], factor);
  return r;
}

RationalVector ExponentVector::to_rational() const {
  RationalVector r;
  r.reserve(coords_.size());
  for (auto c : coords_) r.emplace_back(static_cast<long>(c));
  return r;
}

std::string ExponentVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

ExponentVector componentwise_max(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.dimension());
  for (std::size_t i = 0; i < a.dimension(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

std::vector<IntegerVector> orthant_rays(std::size_t dimension) {
  std::vector<IntegerVector> rays(dimension, IntegerVector(dimension, Integer(0)));
  for (std::size_t i = 0; i < dimension; ++i) rays[i][i] = 1;
  std::sort(rays.begin(), rays.end());
  return rays;
}

RationalVector NewtonPolyhedron::vertex_maxima() const {
  RationalVector m = vertices_.front();
  for (const auto& v : vertices_)
    for (std::size_t i = 0; i < dimension_; ++i) m[i] = std::max(m[i], v[i]);
  return m;
}

bool NewtonPolyhedron::operator==(const NewtonPolyhedron& other) const {
  return dimension_ == other.dimension_ && vertices_ == other.vertices_ && rays_ == other.rays_ &&
         facets_ == other.facets_;
}

std::string NewtonPolyhedron::to_string() const {
  std::ostringstream os;
  os << "vertices {";
  for (std::size_t i = 0; i < vertices_.size(); ++i) os << (i ? ", " : "") << multideal::to_string(vertices_[i]);
  os << "} facets {";
  for (std::size_t i = 0; i < facets_.size(); ++i)
    os << (i ? ", " : "") << multideal::to_string(facets_[i].normal) << ">=" << facets_[i].offset.get_str();
  os << "}";
  return os.str();
}

NewtonPolyhedron newton_polyhedron(std::span<const ExponentVector> generators, const std::vector<IntegerVector>& rays) {
  if (generators.empty()) throw Error(ErrorKind::EmptyGenerators, "Newton polyhedron of no generators");
  std::vector<RationalVector> points;
  points.reserve(generators.size());
  for (const auto& g : generators) points.push_back(g.to_rational());
  return NewtonPolyhedron::from_points(std::move(points), rays);
}

NewtonPolyhedron scale(const NewtonPolyhedron& p, const Rational& t) {
  if (t <= 0) throw Error(ErrorKind::NonpositiveScale, "scale factor " + t.get_str());
  NewtonPolyhedron r = p;
  for (auto& v : r.vertices_)
    for (auto& c : v) c *= t;
  for (auto& f : r.facets_) f.offset *= t;
  return r;
}

NewtonPolyhedron minkowski_sum(const NewtonPolyhedron& p, const NewtonPolyhedron& q) {
  if (p.dimension() != q.dimension()) throw Error(ErrorKind::DimensionMismatch, "Minkowski sum");
  if (p.recession_rays() != q.recession_rays()) throw Error(ErrorKind::RecessionMismatch, "Minkowski sum");
  std::vector<RationalVector> points;
  points.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) {
      RationalVector s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      points.push_back(std::move(s));
    }
  return NewtonPolyhedron::from_points(std::move(points), p.recession_rays());
}

bool contains(const NewtonPolyhedron& p, const RationalVector& x) {
  if (x.size() != p.dimension()) throw Error(ErrorKind::DimensionMismatch, "point dimension");
  for (const auto& f : p.facets())
    if (dot(f.normal, x) < f.offset) return false;
  return true;
}

bool contains_interior(const NewtonPolyhedron& p, const RationalVector& x) {
  if (x.size() != p.dimension()) throw Error(ErrorKind::DimensionMismatch, "point dimension");
  for (const auto& f : p.facets())
    if (dot(f.normal, x) <= f.offset) return false;
  return true;
}

Rational support_value(const NewtonPolyhedron& p, const RationalVector& n) {
  if (n.size() != p.dimension()) throw Error(ErrorKind::DimensionMismatch, "direction dimension");
  for (const auto& r : p.recession_rays())
    if (dot(r, n) < 0) throw Error(ErrorKind::UnboundedDirection, "direction " + to_string(n) + " leaves the dual cone");
  Rational best = dot(n, p.vertices().front());
  for (const auto& v : p.vertices()) best = std::min(best, dot(n, v));
  return best;
}

Rational support_value(const NewtonPolyhedron& p, const IntegerVector& n) {
  RationalVector r(n.begin(), n.end());
  return support_value(p, r);
}

std::vector<RationalVector> vertices_from_facets(const NewtonPolyhedron& p) {
  const std::size_t d = p.dimension();
  const auto& facets = p.facets();
  std::vector<RationalVector> out;
  std::vector<std::size_t> idx(d);
  // enumerate d-subsets of facets
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == d) {
      RationalMatrix a;
      RationalVector b;
      for (auto i : idx) {
        a.emplace_back(facets[i].normal.begin(), facets[i].normal.end());
        b.push_back(facets[i].offset);
      }
      auto x = solve(std::move(a), std::move(b));
      if (x && contains(p, *x)) out.push_back(std::move(*x));
      return;
    }
    for (std::size_t i = start; i < facets.size(); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

InteriorTester::InteriorTester(const NewtonPolyhedron& p, const RationalVector& shift)
    : polyhedron_(&p), shift_(shift) {
  if (shift.size() != p.dimension()) throw Error(ErrorKind::DimensionMismatch, "interior tester shift");
  fast_ = true;
  for (const auto& f : p.facets()) {
    // ⟨w + s, n⟩ > c  <=>  den·⟨w, n⟩ > num  where num/den = c - ⟨s, n⟩
    Rational rhs = f.offset - dot(f.normal, shift);
    Integer den(rhs.get_den());
    Integer num(rhs.get_num());
    std::vector<std::int64_t> sn;
    for (const auto& c : f.normal) {
      Integer v = c * den;
      if (!v.fits_slong_p()) {
        fast_ = false;
        break;
      }
      sn.push_back(v.get_si());
    }
    if (!fast_ || !num.fits_slong_p()) {
      fast_ = false;
      break;
    }
    scaled_normals_.push_back(std::move(sn));
    thresholds_.push_back(static_cast<__int128>(num.get_si()));
  }
}

bool InteriorTester::inside(const ExponentVector& w) const {
  if (!fast_) {
    RationalVector x = w.to_rational();
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += shift_[i];
    return contains_interior(*polyhedron_, x);
  }
  for (std::size_t f = 0; f < scaled_normals_.size(); ++f) {
    __int128 s = 0;
    const auto& n = scaled_normals_[f];
    for (std::size_t i = 0; i < n.size(); ++i) s += static_cast<__int128>(n[i]) * w[i];
    if (s <= thresholds_[f]) return false;
  }
  return true;
}

bool LambdaSet::contains(const Rational& x) const {
  if (empty) return false;
  if (x < lo || (x == lo && !lo_closed)) return false;
  if (x > hi || (x == hi && !hi_closed)) return false;
  return true;
}

Rational LambdaSet::sample() const {
  if (empty) throw Error(ErrorKind::InvalidParameter, "sample of empty set");
  if (lo == hi) return lo;
  return (lo + hi) / 2;
}

std::string RationalInterval::to_string() const {
  if (empty) return "empty";
  return "[" + lo.get_str() + ", " + hi.get_str() + "]";
}

NewtonPolyhedron weighted_sum(const NewtonPolyhedron& p, const NewtonPolyhedron& q, const Rational& t,
                              const Rational& lambda) {
  if (lambda < 0 || lambda > t) throw Error(ErrorKind::InvalidParameter, "lambda outside [0, t]");
  if (lambda == 0) return scale(q, t);
  if (lambda == t) return scale(p, t);
  return minkowski_sum(scale(p, lambda), scale(q, t - lambda));
}

std::string to_string(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

std::string to_string(const IntegerVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

}  // namespace multideal
