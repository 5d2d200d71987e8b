#include "multideal/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "multideal/asymptotic.hpp"
#include "multideal/checks.hpp"
#include "multideal/errors.hpp"
#include "multideal/instances.hpp"
#include "multideal/multiplier.hpp"
#include "multideal/toric.hpp"

namespace multideal {

namespace {

using Task = std::function<std::vector<VerificationReport>()>;

std::uint64_t salt(const std::string& name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : name) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

std::vector<VerificationReport> run_tasks(const std::vector<Task>& tasks, const SuiteConfig& config) {
  std::vector<std::vector<VerificationReport>> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      auto start = std::chrono::steady_clock::now();
      try {
        out[i] = tasks[i]();
      } catch (const Error& e) {
        VerificationReport r;
        r.theorem_id = "error";
        r.verdict = Verdict::Skip;
        r.skip_reason = e.what();
        out[i] = {r};
      }
      if (config.timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        for (auto& r : out[i]) r.millis = ms;
      }
    }
  };
  unsigned threads = config.threads > 0 ? static_cast<unsigned>(config.threads) : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, std::max<std::size_t>(tasks.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<VerificationReport> flat;
  for (auto& v : out)
    for (auto& r : v) {
      r.index = flat.size();
      flat.push_back(std::move(r));
    }
  return flat;
}

Ring chosen_ring(const SuiteConfig& config, bool polynomial_only, const std::string& suite) {
  if (config.ring.empty()) return nullptr;
  Ring ring = parse_ring(config.ring);
  if (polynomial_only && ring->kind() != RingKind::Polynomial)
    throw Error(ErrorKind::InvalidSpec, "suite " + suite + " needs a polynomial ring");
  return ring;
}

// Default corpus ring: 2 or 3 variables, picked by the instance seed.
Ring corpus_ring(const Ring& fixed, std::uint64_t seed) {
  return fixed ? fixed : standard_polynomial_ring(2 + static_cast<int>((seed >> 17) % 2));
}

std::vector<Task> subadditivity_tasks(const SuiteConfig& c) {
  Ring fixed = chosen_ring(c, false, "subadditivity");
  std::vector<Task> tasks;
  for (int i = 0; i < c.count; ++i) {
    std::uint64_t seed = instance_seed(c.seed ^ salt("subadditivity"), i);
    tasks.push_back([=] {
      InstanceSpec spec{seed, corpus_ring(fixed, seed)};
      spec.allow_unit_b = true;
      Instance in = generate_instance(spec);
      return std::vector{check_subadditivity(in.a, in.t, in.b, in.s)};
    });
  }
  if (!fixed) {
    for (int i = 0; i < std::max(1, c.count / 10); ++i) {
      std::uint64_t seed = instance_seed(c.seed ^ salt("subadditivity-toric"), i);
      tasks.push_back([=] {
        InstanceSpec spec{seed, make_A2n(i % 2 == 0 ? 2 : 3)};
        spec.max_generators = 3;
        spec.max_exponent = 4;
        spec.max_denominator = 6;
        Instance in = generate_instance(spec);
        return std::vector{check_subadditivity(in.a, in.t, in.b, in.s)};
      });
    }
    tasks.push_back([] {
      Ring ring = make_A2n(2);
      MonomialIdeal a = paper_example_ideal(ring);
      return std::vector{check_subadditivity(a, make_rational(1, 2), a, make_rational(1, 2)), check_radical_probe(2),
                         check_radical_probe(3)};
    });
  }
  return tasks;
}

std::vector<Task> summation_tasks(const SuiteConfig& c) {
  Ring fixed = chosen_ring(c, false, "summation");
  std::vector<Task> tasks;
  for (int i = 0; i < c.count; ++i) {
    std::uint64_t seed = instance_seed(c.seed ^ salt("summation"), i);
    tasks.push_back([=] {
      InstanceSpec spec{seed, corpus_ring(fixed, seed)};
      Instance in = generate_instance(spec);
      return std::vector{check_summation(in.a, in.b, in.t)};
    });
  }
  if (!fixed) {
    tasks.push_back([] {
      Ring ring = standard_polynomial_ring(2);
      return std::vector{check_summation(parse_ideal(ring, "(x^2)"), parse_ideal(ring, "(y^3)"), Rational(1))};
    });
  }
  return tasks;
}

std::vector<Task> skoda_tasks(const SuiteConfig& c) {
  Ring fixed = chosen_ring(c, true, "skoda");
  Ring ring = fixed ? fixed : standard_polynomial_ring(2);
  std::vector<Task> tasks;
  for (int i = 0; i < c.count; ++i) {
    std::uint64_t seed = instance_seed(c.seed ^ salt("skoda"), i);
    tasks.push_back([=] {
      InstanceSpec spec{seed, ring};
      spec.shape = IdealShape::MPrimary;
      spec.max_generators = 3;
      spec.allow_unit_b = true;
      std::mt19937_64 rng(seed);
      MonomialIdeal a = random_ideal(rng, spec);
      spec.shape = IdealShape::General;
      MonomialIdeal b = rng() % 4 == 0 ? MonomialIdeal::unit(ring) : random_ideal(rng, spec);
      Rational t = random_exponent(rng, spec.max_denominator);
      return std::vector{check_skoda(a, b, t)};
    });
  }
  if (!fixed) {
    tasks.push_back([ring] {
      return std::vector{check_skoda(parse_ideal(ring, "(x^2, y^3)"), MonomialIdeal::unit(ring), Rational(1))};
    });
  }
  return tasks;
}

std::vector<Task> symbolic_tasks(const SuiteConfig& c) {
  Ring fixed = chosen_ring(c, true, "symbolic");
  std::vector<Task> tasks;
  for (int i = 0; i < c.count; ++i) {
    std::uint64_t seed = instance_seed(c.seed ^ salt("symbolic"), i);
    tasks.push_back([=] {
      InstanceSpec spec{seed, fixed ? fixed : standard_polynomial_ring(1 + static_cast<int>((seed >> 17) % 3))};
      spec.shape = IdealShape::Squarefree;
      std::mt19937_64 rng(seed);
      MonomialIdeal a = random_ideal(rng, spec);
      std::vector<VerificationReport> out;
      for (int m = 0; m <= 2; ++m)
        for (int n = 1; n <= 3; ++n) out.push_back(check_symbolic_growth(a, m, n));
      return out;
    });
  }
  if (!fixed) {
    tasks.push_back([] {
      Ring ring = standard_polynomial_ring(3);
      MonomialIdeal a = parse_ideal(ring, "(x*y, y*z, z*x)");
      std::vector<VerificationReport> out{check_symbolic_growth(a, 0, 2), check_symbolic_growth(a, 0, 1)};
      // xyz separates a^(2) from a^2
      VerificationReport probe;
      probe.theorem_id = "symbolic-gap";
      probe.instance = {{"ring", ring->describe()}, {"a", a.to_string()}, {"probe", "a^(2) vs a^2"}};
      probe.expectation = Expectation::NonContainment;
      MonomialIdeal sym = symbolic_power(a, 2), sq = power(a, 2);
      probe.lhs = sym.to_string();
      probe.rhs = sq.to_string();
      ExponentVector xyz = parse_monomial(*ring, "x*y*z");
      probe.verdict = member(sym, xyz) && !member(sq, xyz) ? Verdict::Pass : Verdict::Fail;
      probe.witness = ring->format_monomial(xyz);
      out.push_back(std::move(probe));
      return out;
    });
    tasks.push_back([] {
      Ring ring = make_A2n(2);
      std::vector<VerificationReport> out;
      for (std::size_t ray = 0; ray < ring->rays().size(); ++ray)
        for (int m = 0; m <= 2; ++m)
          for (int n = 1; n <= 3; ++n) out.push_back(check_divisorial_growth(ring, ray, m, n));
      return out;
    });
  }
  return tasks;
}

std::vector<Task> asymptotic_tasks(const SuiteConfig& c) {
  Ring fixed = chosen_ring(c, false, "asymptotic");
  const std::vector<std::int64_t> schedule{1, 2, 4, 8};
  std::vector<Task> tasks;
  for (int i = 0; i < c.count; ++i) {
    std::uint64_t seed = instance_seed(c.seed ^ salt("asymptotic"), i);
    tasks.push_back([=] {
      Ring ring = fixed ? fixed : standard_polynomial_ring(2);
      InstanceSpec spec{seed, ring};
      spec.max_generators = 3;
      spec.max_exponent = ring->kind() == RingKind::Polynomial ? 4 : 3;
      spec.max_denominator = 4;
      Instance in = generate_instance(spec);
      Family f = GradedFamily::powers(in.a), g = GradedFamily::powers(in.b);
      std::vector<VerificationReport> out{check_asymptotic_summation(f, g, in.t, schedule),
                                          check_asymptotic_lemma(f, 1, 1, schedule),
                                          check_asymptotic_subadditivity(f, in.t, 1, 2, schedule)};
      if (i % 10 == 0) out.push_back(check_asymptotic_summation(f, g, in.t, schedule, true));
      if (ring->kind() == RingKind::Polynomial) {
        std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
        InstanceSpec sq = spec;
        sq.shape = IdealShape::Squarefree;
        Family s = GradedFamily::symbolic(random_ideal(rng, sq));
        out.push_back(check_asymptotic_lemma(s, 1, 1, schedule));
        out.push_back(check_asymptotic_subadditivity(s, in.t, 1, 1, schedule));
      }
      return out;
    });
  }
  return tasks;
}

std::vector<Task> tau_tasks(const SuiteConfig& c) {
  Ring fixed = chosen_ring(c, false, "tau-vs-j");
  if (fixed && fixed->kind() != RingKind::Polynomial) throw Error(ErrorKind::InvalidSpec, "tau-vs-j needs a polynomial ring");
  static const std::vector<Rational> exponents{make_rational(1, 2), make_rational(2, 3), Rational(1), make_rational(3, 2)};
  std::vector<Task> tasks;
  for (int i = 0; i < c.count; ++i) {
    std::uint64_t seed = instance_seed(c.seed ^ salt("tau-vs-j"), i);
    tasks.push_back([=] {
      InstanceSpec spec{seed, fixed ? fixed : standard_polynomial_ring(1 + static_cast<int>((seed >> 17) % 3))};
      std::mt19937_64 rng(seed);
      MonomialIdeal a = random_ideal(rng, spec);
      return std::vector{check_tau_equals_multiplier(a, exponents[rng() % exponents.size()], {2, 3, 5, 7})};
    });
  }
  return tasks;
}

std::vector<Task> paper_tasks(const SuiteConfig& c) {
  return {[n = c.n] { return run_paper_example(n); }};
}

std::vector<Task> tasks_for(const std::string& name, const SuiteConfig& c) {
  if (name == "subadditivity") return subadditivity_tasks(c);
  if (name == "summation") return summation_tasks(c);
  if (name == "skoda") return skoda_tasks(c);
  if (name == "symbolic") return symbolic_tasks(c);
  if (name == "asymptotic") return asymptotic_tasks(c);
  if (name == "tau-vs-j") return tau_tasks(c);
  if (name == "paper-example") return paper_tasks(c);
  throw Error(ErrorKind::InvalidSpec, "unknown suite: " + name);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"subadditivity", "summation", "skoda",        "symbolic",
                                              "asymptotic",    "tau-vs-j",  "paper-example", "all"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
  if (config.count < 0) throw Error(ErrorKind::InvalidSpec, "count must be non-negative");
  SuiteReport report{name, config, {}};
  if (name == "all") {
    for (const auto& part : suite_names()) {
      if (part == "all") continue;
      for (auto& r : run_suite(part, config).results) report.results.push_back(std::move(r));
    }
    return report;
  }
  report.results = run_tasks(tasks_for(name, config), config);
  return report;
}

}  // namespace multideal
