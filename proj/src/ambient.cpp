#include "multideal/ambient.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "multideal/errors.hpp"
#include "multideal/linalg.hpp"

namespace multideal {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

bool valid_variable_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

bool AmbientRing::in_lattice(const ExponentVector& v) const {
  if (v.dimension() != dimension_) throw Error(ErrorKind::DimensionMismatch, "exponent vector for " + describe());
  for (const auto& c : congruences_) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < dimension_; ++i) s = floor_mod(s + floor_mod(c.coeffs[i], c.modulus) * floor_mod(v[i], c.modulus), c.modulus);
    if (s != 0) return false;
  }
  return true;
}

bool AmbientRing::in_semigroup(const ExponentVector& v) const { return v.is_nonnegative() && in_lattice(v); }

std::vector<ExponentVector> AmbientRing::lift(const ExponentVector& lower) const {
  if (lower.dimension() != dimension_) throw Error(ErrorKind::DimensionMismatch, "lift in " + describe());
  ExponentVector base(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i) base[i] = std::max<std::int64_t>(lower[i], 0);
  if (congruences_.empty()) return {base};
  std::vector<ExponentVector> found;
  std::vector<std::int64_t> off(dimension_, 0);
  while (true) {
    ExponentVector p(dimension_);
    for (std::size_t i = 0; i < dimension_; ++i) p[i] = checked_add(base[i], off[i]);
    if (in_lattice(p)) found.push_back(p);
    std::size_t i = 0;
    while (i < dimension_ && ++off[i] == period_) off[i++] = 0;
    if (i == dimension_) break;
  }
  std::vector<ExponentVector> minimal;
  for (const auto& p : found) {
    bool dominated = std::any_of(found.begin(), found.end(), [&](const ExponentVector& q) { return q != p && q.divides(p); });
    if (!dominated) minimal.push_back(p);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

std::vector<std::int64_t> AmbientRing::normal_form(const ExponentVector& v) const {
  if (!in_semigroup(v)) throw Error(ErrorKind::NotInSemigroup, v.to_string() + " in " + describe());
  if (kind_ == RingKind::Polynomial) return v.coords();
  // A_{2n}: v = i·(k,0) + j·(0,k) + r·(1,1) with 0 <= r < k
  const std::int64_t k = 2 * a2n_ + 1;
  std::int64_t r = floor_mod(v[0], k);
  return {(v[0] - r) / k, (v[1] - r) / k, r};
}

ExponentVector AmbientRing::evaluate(const std::vector<std::int64_t>& e) const {
  if (e.size() != presentation_.size()) throw Error(ErrorKind::DimensionMismatch, "presentation exponents");
  ExponentVector v(dimension_);
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] < 0) throw Error(ErrorKind::NotInSemigroup, "negative exponent");
    v = v + presentation_[j].scaled(e[j]);
  }
  return v;
}

std::string AmbientRing::format_monomial(const ExponentVector& v) const {
  auto e = normal_form(v);
  std::string out;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += variables_[j];
    if (e[j] != 1) out += "^" + std::to_string(e[j]);
  }
  return out.empty() ? "1" : out;
}

std::string AmbientRing::describe() const {
  if (kind_ == RingKind::Toric) return "A2n n=" + std::to_string(a2n_);
  std::string s = "poly ";
  for (std::size_t i = 0; i < variables_.size(); ++i) s += (i ? "," : "") + variables_[i];
  return s;
}

bool AmbientRing::operator==(const AmbientRing& other) const {
  return kind_ == other.kind_ && variables_ == other.variables_ && a2n_ == other.a2n_ &&
         dimension_ == other.dimension_;
}

void AmbientRing::validate() const {
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (dot(rays_[i], m_sigma_) != 1)
      throw Error(ErrorKind::InvariantViolation, "Gorenstein vector does not pair to 1 with ray " + to_string(rays_[i]));
  for (const auto& p : presentation_)
    if (!in_semigroup(p)) throw Error(ErrorKind::InvariantViolation, "presentation image outside the semigroup");
  if (relation_ && evaluate(relation_->lhs) != evaluate(relation_->rhs))
    throw Error(ErrorKind::InvariantViolation, "presentation relation fails in the lattice");
}

Ring make_polynomial_ring(const std::vector<std::string>& variables) {
  if (variables.empty()) throw Error(ErrorKind::InvalidParameter, "polynomial ring needs a variable");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (!valid_variable_name(v)) throw Error(ErrorKind::ParseError, "bad variable name '" + v + "'");
    if (!seen.insert(v).second) throw Error(ErrorKind::DuplicateVariableName, v);
  }
  std::shared_ptr<AmbientRing> r(new AmbientRing());
  const std::size_t d = variables.size();
  r->kind_ = RingKind::Polynomial;
  r->dimension_ = d;
  r->variables_ = variables;
  for (std::size_t i = 0; i < d; ++i) {
    ExponentVector e(d);
    e[i] = 1;
    r->presentation_.push_back(e);
    IntegerVector ray(d, Integer(0));
    ray[i] = 1;
    r->rays_.push_back(ray);
  }
  r->dual_rays_ = orthant_rays(d);
  r->m_sigma_.assign(d, Rational(1));
  r->validate();
  return r;
}

Ring make_A2n(int n) {
  if (n <= 0) throw Error(ErrorKind::InvalidParameter, "A2n needs n >= 1, got " + std::to_string(n));
  if (n > 1000) throw Error(ErrorKind::InvalidParameter, "A2n parameter too large");
  const std::int64_t k = 2 * static_cast<std::int64_t>(n) + 1;
  std::shared_ptr<AmbientRing> r(new AmbientRing());
  r->kind_ = RingKind::Toric;
  r->dimension_ = 2;
  r->a2n_ = n;
  r->variables_ = {"x", "y", "z"};
  r->presentation_ = {ExponentVector{k, 0}, ExponentVector{0, k}, ExponentVector{1, 1}};
  r->relation_ = BinomialRelation{{1, 1, 0}, {0, 0, k}};
  r->congruences_ = {Congruence{{1, -1}, k}};
  r->period_ = k;
  // (1,1) ∈ M, so e_1 and e_2 are already primitive in the dual lattice
  r->rays_ = {IntegerVector{Integer(1), Integer(0)}, IntegerVector{Integer(0), Integer(1)}};
  r->dual_rays_ = orthant_rays(2);
  r->m_sigma_ = {Rational(1), Rational(1)};
  r->validate();
  return r;
}

Ring parse_ring(std::string_view text) {
  std::string s = trim(text);
  if (s.rfind("ring ", 0) == 0) s = trim(std::string_view(s).substr(5));
  std::istringstream in(s);
  std::string kind;
  in >> kind;
  std::string rest;
  std::getline(in, rest);
  rest = trim(rest);
  if (kind == "poly") {
    std::vector<std::string> vars;
    std::string cur;
    for (char c : rest + ",") {
      if (c == ',') {
        std::string v = trim(cur);
        if (v.empty()) throw Error(ErrorKind::ParseError, "empty variable name in '" + std::string(text) + "'");
        vars.push_back(v);
        cur.clear();
      } else {
        cur += c;
      }
    }
    return make_polynomial_ring(vars);
  }
  if (kind == "A2n") {
    std::string digits = rest;
    if (digits.rfind("n=", 0) == 0) digits = trim(std::string_view(digits).substr(2));
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        digits.size() > 6)
      throw Error(ErrorKind::ParseError, "expected 'A2n n=<int>', got '" + std::string(text) + "'");
    return make_A2n(std::stoi(digits));
  }
  throw Error(ErrorKind::ParseError, "unknown ring '" + std::string(text) + "'");
}

void require_same_ring(const AmbientRing& a, const AmbientRing& b) {
  if (&a != &b && !(a == b)) throw Error(ErrorKind::AmbientMismatch, a.describe() + " vs " + b.describe());
}

}  // namespace multideal
