// Brute-force facet enumeration for conv(points) + cone(rays) in small dimension.
//
// Every facet of a full-dimensional pointed polyhedron is spanned by d
// affinely independent generators (at least one of them a point), so testing
// each d-subset of points and rays finds all of them. Large point sets are
// first cut down to a candidate set and then grown until no input point
// violates a candidate facet, which makes the result exact.

#include <algorithm>
#include <map>
#include <numeric>

#include "multideal/errors.hpp"
#include "multideal/geometry.hpp"
#include "multideal/linalg.hpp"

namespace multideal {

namespace {

constexpr std::size_t kBruteForceLimit = 20;

Integer idot(const IntegerVector& a, const IntegerVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_orthant(const std::vector<IntegerVector>& rays, std::size_t d) {
  return rays == orthant_rays(d);
}

// Facets of conv(points) + cone(rays), all data integral. Offsets are integral too.
std::map<IntegerVector, Integer> brute_force_facets(const std::vector<IntegerVector>& points,
                                                    const std::vector<IntegerVector>& rays, std::size_t d) {
  std::map<IntegerVector, Integer> found;
  const std::size_t n_points = points.size();
  const std::size_t n_items = n_points + rays.size();
  auto item = [&](std::size_t i) -> const IntegerVector& { return i < n_points ? points[i] : rays[i - n_points]; };

  std::vector<std::size_t> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  if (n_items < d) return found;
  while (true) {
    if (idx[0] < n_points) {
      const IntegerVector& p0 = points[idx[0]];
      RationalMatrix rows;
      for (std::size_t k = 1; k < d; ++k) {
        const IntegerVector& v = item(idx[k]);
        RationalVector r(d);
        for (std::size_t j = 0; j < d; ++j) r[j] = idx[k] < n_points ? Rational(v[j] - p0[j]) : Rational(v[j]);
        rows.push_back(std::move(r));
      }
      RationalVector normal = orthogonal_complement(rows, d);
      bool nonzero = std::any_of(normal.begin(), normal.end(), [](const Rational& x) { return x != 0; });
      if (nonzero) {
        IntegerVector n = primitive_integer(normal);
        Integer c = idot(n, p0);
        bool pos = false, neg = false;
        for (const auto& p : points) {
          int s = sgn(Integer(idot(n, p) - c));
          pos |= s > 0;
          neg |= s < 0;
          if (pos && neg) break;
        }
        for (const auto& r : rays) {
          if (pos && neg) break;
          int s = sgn(idot(n, r));
          pos |= s > 0;
          neg |= s < 0;
        }
        if (!(pos && neg)) {
          if (neg) {
            for (auto& x : n) x = -x;
            c = -c;
          }
          found.emplace(std::move(n), std::move(c));
        }
      }
    }
    // next combination
    std::size_t k = d;
    while (k > 0 && idx[k - 1] == n_items - d + (k - 1)) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return found;
}

// Lexicographically smallest point minimizing ⟨·, n⟩; such a point is a vertex
// of the face cut out by n.
std::size_t argmin_direction(const std::vector<IntegerVector>& points, const IntegerVector& n) {
  std::size_t best = 0;
  Integer best_val = idot(n, points[0]);
  for (std::size_t i = 1; i < points.size(); ++i) {
    Integer v = idot(n, points[i]);
    if (v < best_val || (v == best_val && points[i] < points[best])) {
      best = i;
      best_val = v;
    }
  }
  return best;
}

std::vector<std::size_t> seed_candidates(const std::vector<IntegerVector>& points, std::size_t d) {
  static const long weights[] = {1, 2, 3, 5, 8};
  std::vector<std::size_t> seeds;
  std::vector<std::size_t> digit(d, 0);
  while (true) {
    IntegerVector n(d);
    for (std::size_t j = 0; j < d; ++j) n[j] = weights[digit[j]];
    seeds.push_back(argmin_direction(points, n));
    std::size_t j = 0;
    while (j < d && ++digit[j] == std::size(weights)) digit[j++] = 0;
    if (j == d) break;
  }
  // axis-leaning directions reach the vertices on the coordinate walls
  for (std::size_t j = 0; j < d; ++j) {
    IntegerVector n(d, Integer(1));
    n[j] = 1000;
    seeds.push_back(argmin_direction(points, n));
    IntegerVector m(d, Integer(1000));
    m[j] = 1;
    seeds.push_back(argmin_direction(points, m));
  }
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  return seeds;
}

}  // namespace

NewtonPolyhedron NewtonPolyhedron::from_points(std::vector<RationalVector> points, std::vector<IntegerVector> rays) {
  if (points.empty()) throw Error(ErrorKind::EmptyGenerators, "polyhedron with no points");
  const std::size_t d = points.front().size();
  if (d == 0) throw Error(ErrorKind::DimensionMismatch, "zero-dimensional ambient");
  for (const auto& p : points)
    if (p.size() != d) throw Error(ErrorKind::DimensionMismatch, "mixed point dimensions");
  for (const auto& r : rays)
    if (r.size() != d) throw Error(ErrorKind::DimensionMismatch, "ray dimension");
  {
    RationalMatrix rm;
    for (const auto& r : rays) rm.emplace_back(r.begin(), r.end());
    if (rank(rm) < d) throw Error(ErrorKind::DegenerateCone, "recession cone is not full-dimensional");
  }
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

  // clear denominators so the enumeration runs over integers
  Integer scale_den = 1;
  for (const auto& p : points)
    for (const auto& c : p) scale_den = lcm(scale_den, Integer(c.get_den()));
  std::vector<IntegerVector> ipoints;
  ipoints.reserve(points.size());
  for (const auto& p : points) {
    IntegerVector v(d);
    for (std::size_t j = 0; j < d; ++j) v[j] = Integer(p[j].get_num() * (scale_den / p[j].get_den()));
    ipoints.push_back(std::move(v));
  }
  std::sort(ipoints.begin(), ipoints.end());
  ipoints.erase(std::unique(ipoints.begin(), ipoints.end()), ipoints.end());

  if (is_orthant(rays, d)) {
    // a point lying above another point cannot be a vertex
    std::vector<IntegerVector> kept;
    for (std::size_t i = 0; i < ipoints.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < ipoints.size() && !dominated; ++j) {
        if (i == j) continue;
        bool le = true;
        for (std::size_t k = 0; k < d && le; ++k) le = ipoints[j][k] <= ipoints[i][k];
        dominated = le;
      }
      if (!dominated) kept.push_back(ipoints[i]);
    }
    ipoints = std::move(kept);
  }

  std::vector<IntegerVector> candidates;
  if (ipoints.size() <= kBruteForceLimit || !is_orthant(rays, d)) {
    candidates = ipoints;
  } else {
    for (auto i : seed_candidates(ipoints, d)) candidates.push_back(ipoints[i]);
  }

  std::map<IntegerVector, Integer> facets;
  while (true) {
    facets = brute_force_facets(candidates, rays, d);
    bool grew = false;
    for (const auto& [n, c] : facets) {
      std::size_t i = argmin_direction(ipoints, n);
      if (idot(n, ipoints[i]) < c &&
          std::find(candidates.begin(), candidates.end(), ipoints[i]) == candidates.end()) {
        candidates.push_back(ipoints[i]);
        grew = true;
      }
    }
    if (!grew) break;
  }

  NewtonPolyhedron result;
  result.dimension_ = d;
  result.rays_ = rays;
  for (const auto& [n, c] : facets) result.facets_.push_back(Facet{n, make_rational(c, scale_den)});
  for (const auto& p : candidates) {
    RationalMatrix tight;
    for (const auto& [n, c] : facets)
      if (idot(n, p) == c) tight.emplace_back(n.begin(), n.end());
    if (rank(tight) == d) {
      RationalVector v(d);
      for (std::size_t j = 0; j < d; ++j) v[j] = make_rational(p[j], scale_den);
      result.vertices_.push_back(std::move(v));
    }
  }
  std::sort(result.vertices_.begin(), result.vertices_.end());
  result.vertices_.erase(std::unique(result.vertices_.begin(), result.vertices_.end()), result.vertices_.end());
  return result;
}

}  // namespace multideal
