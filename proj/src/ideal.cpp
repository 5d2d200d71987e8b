#include "multideal/ideal.hpp"

#include <algorithm>
#include <cctype>

#include "multideal/errors.hpp"
#include "multideal/linalg.hpp"

namespace multideal {

std::vector<ExponentVector> minimalize(std::vector<ExponentVector> points) {
  if (!points.empty() && points.front().dimension() == 2) {
    // staircase sweep: in lex order a point is minimal iff its y drops below every earlier y
    std::sort(points.begin(), points.end());
    std::vector<ExponentVector> kept;
    for (auto& p : points)
      if (kept.empty() || p[1] < kept.back()[1]) kept.push_back(std::move(p));
    return kept;
  }
  std::vector<std::pair<std::int64_t, ExponentVector>> keyed;
  keyed.reserve(points.size());
  for (auto& p : points) keyed.emplace_back(p.total_degree(), std::move(p));
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());
  std::vector<ExponentVector> kept;
  for (auto& [deg, p] : keyed) {
    bool dominated = false;
    for (const auto& k : kept)
      if (k.divides(p)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(std::move(p));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<ExponentVector> generators) : ring_(std::move(ring)) {
  if (!ring_) throw Error(ErrorKind::InvalidParameter, "ideal without a ring");
  if (generators.empty()) throw Error(ErrorKind::ZeroIdeal, "no generators");
  for (const auto& g : generators)
    if (!ring_->in_semigroup(g)) throw Error(ErrorKind::NotInSemigroup, g.to_string() + " in " + ring_->describe());
  generators_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::unit(Ring ring) {
  std::size_t d = ring->dimension();
  return MonomialIdeal(std::move(ring), {ExponentVector(d)});
}

MonomialIdeal MonomialIdeal::principal(Ring ring, ExponentVector generator) {
  return MonomialIdeal(std::move(ring), {std::move(generator)});
}

bool MonomialIdeal::is_unit() const { return generators_.size() == 1 && generators_.front().is_zero(); }

std::string MonomialIdeal::to_string() const {
  std::vector<std::pair<std::vector<std::int64_t>, std::string>> terms;
  for (const auto& g : generators_) terms.emplace_back(ring_->normal_form(g), ring_->format_monomial(g));
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::string s = "(";
  for (std::size_t i = 0; i < terms.size(); ++i) s += (i ? ", " : "") + terms[i].second;
  return s + ")";
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
  return *ring_ == *other.ring_ && generators_ == other.generators_;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(*a.ring(), *b.ring());
  std::vector<ExponentVector> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ring(), std::move(g));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(*a.ring(), *b.ring());
  std::vector<ExponentVector> g;
  g.reserve(a.size() * b.size());
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) g.push_back(u + v);
  return MonomialIdeal(a.ring(), std::move(g));
}

MonomialIdeal power(const MonomialIdeal& a, std::int64_t n) {
  if (n < 0) throw Error(ErrorKind::NonpositivePower, "power " + std::to_string(n));
  MonomialIdeal result = MonomialIdeal::unit(a.ring());
  MonomialIdeal base = a;
  while (n > 0) {
    if (n & 1) result = product(result, base);
    n >>= 1;
    if (n > 0) base = product(base, base);
  }
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(*a.ring(), *b.ring());
  std::vector<ExponentVector> g;
  for (const auto& u : a.generators())
    for (const auto& v : b.generators())
      for (auto& w : a.ring()->lift(componentwise_max(u, v))) g.push_back(std::move(w));
  return MonomialIdeal(a.ring(), std::move(g));
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(*a.ring(), *b.ring());
  MonomialIdeal result = MonomialIdeal::unit(a.ring());
  for (const auto& h : b.generators()) {
    std::vector<ExponentVector> g;
    for (const auto& u : a.generators())
      for (auto& w : a.ring()->lift(u - h)) g.push_back(std::move(w));
    result = intersect(result, MonomialIdeal(a.ring(), std::move(g)));
  }
  return result;
}

bool member(const MonomialIdeal& a, const ExponentVector& v) {
  if (!a.ring()->in_semigroup(v)) throw Error(ErrorKind::NotInSemigroup, v.to_string());
  return std::any_of(a.generators().begin(), a.generators().end(), [&](const ExponentVector& g) { return g.divides(v); });
}

std::optional<ExponentVector> containment_witness(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(*a.ring(), *b.ring());
  for (const auto& g : b.generators())
    if (!member(a, g)) return g;
  return std::nullopt;
}

bool contains(const MonomialIdeal& a, const MonomialIdeal& b) { return !containment_witness(a, b).has_value(); }

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(*a.ring(), *b.ring());
  return a.generators() == b.generators();
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FrobeniusLevel FrobeniusLevel::make(std::int64_t p, int e) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  if (e < 0) throw Error(ErrorKind::InvalidParameter, "negative Frobenius exponent");
  std::int64_t q = 1;
  for (int i = 0; i < e; ++i) q = checked_mul(q, p);
  return FrobeniusLevel{p, e, q};
}

MonomialIdeal bracket_power(const MonomialIdeal& a, std::int64_t q) {
  if (q < 1) throw Error(ErrorKind::InvalidParameter, "Frobenius power q < 1");
  std::vector<ExponentVector> g;
  for (const auto& v : a.generators()) g.push_back(v.scaled(q));
  return MonomialIdeal(a.ring(), std::move(g));
}

MonomialIdeal bracket_root(const MonomialIdeal& a, std::int64_t q) {
  if (a.ring()->kind() != RingKind::Polynomial) throw Error(ErrorKind::NotPolynomialAmbient, a.ring()->describe());
  if (q < 1) throw Error(ErrorKind::InvalidParameter, "Frobenius root q < 1");
  std::vector<ExponentVector> g;
  for (const auto& v : a.generators()) {
    ExponentVector r(v.dimension());
    for (std::size_t i = 0; i < v.dimension(); ++i) r[i] = v[i] / q;
    g.push_back(std::move(r));
  }
  return MonomialIdeal(a.ring(), std::move(g));
}

bool is_squarefree(const MonomialIdeal& a) {
  if (a.ring()->kind() != RingKind::Polynomial) return false;
  for (const auto& g : a.generators())
    for (std::size_t i = 0; i < g.dimension(); ++i)
      if (g[i] > 1) return false;
  return true;
}

namespace {

void require_squarefree(const MonomialIdeal& a) {
  if (a.ring()->kind() != RingKind::Polynomial) throw Error(ErrorKind::NotPolynomialAmbient, a.ring()->describe());
  if (!is_squarefree(a)) throw Error(ErrorKind::NotSquarefree, a.to_string());
}

// Dimension of the fiber cone: 1 + the largest dimension of a compact face of
// the Newton polyhedron. Compact faces are the argmin sets of strictly positive
// weights, i.e. intersections of facets whose normals sum to a positive vector;
// by Caratheodory at most d facets are needed.
int spread_of(const std::vector<ExponentVector>& gens) {
  const std::size_t d = gens.front().dimension();
  NewtonPolyhedron p = newton_polyhedron(std::span<const ExponentVector>(gens), orthant_rays(d));
  const auto& facets = p.facets();
  const auto& vertices = p.vertices();
  std::vector<std::vector<bool>> tight(facets.size(), std::vector<bool>(vertices.size()));
  for (std::size_t f = 0; f < facets.size(); ++f)
    for (std::size_t v = 0; v < vertices.size(); ++v) tight[f][v] = dot(facets[f].normal, vertices[v]) == facets[f].offset;

  int best = 0;
  std::vector<std::size_t> chosen;
  auto visit = [&](auto&& self, std::size_t from) -> void {
    if (!chosen.empty()) {
      IntegerVector total(d, 0);
      for (auto f : chosen)
        for (std::size_t i = 0; i < d; ++i) total[i] += facets[f].normal[i];
      if (std::all_of(total.begin(), total.end(), [](const Integer& x) { return x > 0; })) {
        std::vector<std::size_t> face;
        for (std::size_t v = 0; v < vertices.size(); ++v)
          if (std::all_of(chosen.begin(), chosen.end(), [&](std::size_t f) { return tight[f][v]; })) face.push_back(v);
        if (!face.empty()) {
          RationalMatrix diffs;
          for (std::size_t k = 1; k < face.size(); ++k) {
            RationalVector row(d);
            for (std::size_t i = 0; i < d; ++i) row[i] = vertices[face[k]][i] - vertices[face[0]][i];
            diffs.push_back(std::move(row));
          }
          best = std::max(best, static_cast<int>(diffs.empty() ? 0 : rank(std::move(diffs))) + 1);
        }
      }
    }
    if (chosen.size() == d) return;
    for (std::size_t f = from; f < facets.size(); ++f) {
      chosen.push_back(f);
      self(self, f + 1);
      chosen.pop_back();
    }
  };
  visit(visit, 0);
  return best;
}

}  // namespace

std::vector<std::vector<std::size_t>> minimal_primes(const MonomialIdeal& a) {
  require_squarefree(a);
  const std::size_t d = a.ring()->dimension();
  if (d > 24) throw Error(ErrorKind::InvalidParameter, "too many variables for cover enumeration");
  std::vector<std::uint32_t> supports;
  for (const auto& g : a.generators()) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < d; ++i)
      if (g[i]) s |= 1u << i;
    supports.push_back(s);
  }
  std::vector<std::uint32_t> covers;
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    bool cover = std::all_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & mask) != 0; });
    if (cover) covers.push_back(mask);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto c : covers) {
    bool minimal = std::none_of(covers.begin(), covers.end(), [&](std::uint32_t o) { return o != c && (o & c) == o; });
    if (!minimal) continue;
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < d; ++i)
      if (c & (1u << i)) vars.push_back(i);
    out.push_back(std::move(vars));
  }
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal prime_ideal(const Ring& ring, const std::vector<std::size_t>& variables) {
  if (ring->kind() != RingKind::Polynomial) throw Error(ErrorKind::NotPolynomialAmbient, ring->describe());
  if (variables.empty()) throw Error(ErrorKind::ZeroIdeal, "prime on no variables");
  std::vector<ExponentVector> g;
  for (auto i : variables) {
    if (i >= ring->dimension()) throw Error(ErrorKind::InvalidParameter, "variable index out of range");
    ExponentVector e(ring->dimension());
    e[i] = 1;
    g.push_back(e);
  }
  return MonomialIdeal(ring, std::move(g));
}

MonomialIdeal symbolic_power(const MonomialIdeal& a, std::int64_t n) {
  require_squarefree(a);
  if (n < 0) throw Error(ErrorKind::NonpositivePower, "symbolic power " + std::to_string(n));
  auto primes = minimal_primes(a);
  if (n == 0 || primes.empty()) return MonomialIdeal::unit(a.ring());
  // w ∈ a^{(n)} iff Σ_{i∈P} w_i >= n for every minimal prime P; minimal such w lie in [0,n]^d
  const std::size_t d = a.ring()->dimension();
  auto ok = [&](const std::vector<std::int64_t>& w) {
    for (const auto& p : primes) {
      std::int64_t s = 0;
      for (auto i : p) s += w[i];
      if (s < n) return false;
    }
    return true;
  };
  std::vector<bool> used(d, false);
  for (const auto& p : primes)
    for (auto i : p) used[i] = true;
  std::vector<ExponentVector> gens;
  std::vector<std::int64_t> w(d, 0);
  while (true) {
    if (ok(w)) {
      bool minimal = true;
      for (std::size_t i = 0; i < d && minimal; ++i) {
        if (w[i] == 0) continue;
        --w[i];
        minimal = !ok(w);
        ++w[i];
      }
      if (minimal) gens.emplace_back(w);
    }
    std::size_t i = 0;
    while (i < d) {
      if (used[i] && w[i] < n) {
        ++w[i];
        break;
      }
      w[i] = 0;
      ++i;
    }
    if (i == d) break;
  }
  return MonomialIdeal(a.ring(), std::move(gens));
}

int analytic_spread(const MonomialIdeal& a) {
  if (a.ring()->kind() != RingKind::Polynomial) throw Error(ErrorKind::NotPolynomialAmbient, a.ring()->describe());
  return spread_of(a.generators());
}

int spread_bound_h(const MonomialIdeal& a) {
  int h = 0;
  for (const auto& p : minimal_primes(a)) {
    std::vector<ExponentVector> local;
    for (const auto& g : a.generators()) {
      ExponentVector v(p.size());
      for (std::size_t j = 0; j < p.size(); ++j) v[j] = g[p[j]];
      local.push_back(std::move(v));
    }
    h = std::max(h, spread_of(minimalize(std::move(local))));
  }
  return h;
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& a) {
  return newton_polyhedron(std::span<const ExponentVector>(a.generators()), a.ring()->dual_cone_rays());
}

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::int64_t parse_exponent(const std::string& s, std::string_view context) {
  if (s.empty() || s.size() > 12 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw Error(ErrorKind::ParseError, "bad exponent '" + s + "' in '" + std::string(context) + "'");
  return std::stoll(s);
}

std::vector<std::int64_t> parse_term(const AmbientRing& ring, const std::string& term, std::string_view context) {
  const auto& vars = ring.variables();
  std::vector<std::int64_t> e(vars.size(), 0);
  if (term == "1") return e;
  std::size_t start = 0;
  while (start <= term.size()) {
    std::size_t end = term.find('*', start);
    if (end == std::string::npos) end = term.size();
    std::string factor = term.substr(start, end - start);
    if (factor.empty()) throw Error(ErrorKind::ParseError, "empty factor in '" + std::string(context) + "'");
    std::string name = factor;
    std::int64_t exp = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      name = factor.substr(0, caret);
      exp = parse_exponent(factor.substr(caret + 1), context);
    }
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw Error(ErrorKind::ParseError, "undeclared variable '" + name + "' in '" + std::string(context) + "'");
    auto& slot = e[static_cast<std::size_t>(it - vars.begin())];
    slot = checked_add(slot, exp);
    start = end + 1;
  }
  return e;
}

}  // namespace

ExponentVector parse_monomial(const AmbientRing& ring, std::string_view text) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty monomial");
  return ring.evaluate(parse_term(ring, s, text));
}

MonomialIdeal parse_ideal(const Ring& ring, std::string_view text) {
  std::string s = strip_spaces(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw Error(ErrorKind::ParseError, "ideal must be parenthesized: '" + std::string(text) + "'");
  s = s.substr(1, s.size() - 2);
  if (s.empty()) throw Error(ErrorKind::ZeroIdeal, "empty generator list");
  std::vector<ExponentVector> gens;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    std::string term = s.substr(start, end - start);
    if (term.empty()) throw Error(ErrorKind::ParseError, "empty term in '" + std::string(text) + "'");
    gens.push_back(ring->evaluate(parse_term(*ring, term, text)));
    start = end + 1;
  }
  return MonomialIdeal(ring, std::move(gens));
}

}  // namespace multideal
