#pragma once

// One theorem check per function. Each returns a report with both sides in
// canonical text form; a FAIL always names a witness monomial.

#include <vector>

#include "multideal/asymptotic.hpp"
#include "multideal/ideal.hpp"
#include "multideal/report.hpp"

namespace multideal {

/// 𝔍 · J(a^t b^s) ⊆ J(a^t) · J(b^s).
VerificationReport check_subadditivity(const MonomialIdeal& a, const Rational& t, const MonomialIdeal& b,
                                       const Rational& s);

/// J((a+b)^t) = Σ_{λ+μ=t} J(a^λ b^μ), plus 𝔍 · J((a+b)^t) ⊆ Σ_λ J(a^λ) J(b^{t-λ}) over the schedule.
VerificationReport check_summation(const MonomialIdeal& a, const MonomialIdeal& b, const Rational& t);

/// J(a^l b^t) = a · J(a^{l-1} b^t) with l the number of generators of a (a m-primary).
/// A mismatch is reported as SKIP flagged for reduction-number reinspection.
VerificationReport check_skoda(const MonomialIdeal& a, const MonomialIdeal& b, const Rational& t);

/// a^{(hn+mn)} ⊆ (a^{(m+1)})^n for squarefree a in a polynomial ring, h = spread_bound_h(a).
VerificationReport check_symbolic_growth(const MonomialIdeal& a, int m, int n);

/// 𝔍^n P^{(hn+mn)} ⊆ (P^{(m+1)})^n for the height-one prime P of a torus-invariant divisor (h = 1).
VerificationReport check_divisorial_growth(const Ring& ring, std::size_t ray, int m, int n);

/// Frobenius-root chain equals the multiplier ideal for every listed prime coprime to denom(t).
VerificationReport check_tau_equals_multiplier(const MonomialIdeal& a, const Rational& t,
                                               const std::vector<std::int64_t>& primes);

/// Asymptotic J((f+g)^t) against the stabilized breakpoint-exact right-hand side.
/// `mutate` removes a generator from the right-hand side and expects the left-hand
/// side to escape it (harness self-test).
VerificationReport check_asymptotic_summation(const Family& f, const Family& g, const Rational& t,
                                              const std::vector<std::int64_t>& schedule = default_schedule(),
                                              bool mutate = false);

/// f_k · J(f^l) ⊆ J(f^{k+l}) for integer exponents.
VerificationReport check_asymptotic_lemma(const Family& f, int k, int l,
                                          const std::vector<std::int64_t>& schedule = default_schedule());

/// 𝔍 · J(f^{t(k+l)}) ⊆ J(f^{tk}) · J(f^{tl}).
VerificationReport check_asymptotic_subadditivity(const Family& f, const Rational& t, int k, int l,
                                                  const std::vector<std::int64_t>& schedule = default_schedule());

/// (x,y,z) · J(a) ⊄ J(a^{1/2})^2 on the A_{2n} example, witnessed by xz.
VerificationReport check_radical_probe(int n);

/// The four facts of the A_{2n} example; n = 1 gives a single SKIP.
std::vector<VerificationReport> run_paper_example(int n);

/// The ideal (x, y^{2n}, y^{2n-1} z, ..., z^{2n}) on A_{2n}.
MonomialIdeal paper_example_ideal(const Ring& ring);

}  // namespace multideal
