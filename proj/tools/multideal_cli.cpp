// multideal: command-line front end for the verification suites.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "multideal/errors.hpp"
#include "multideal/multiplier.hpp"
#include "multideal/suites.hpp"

namespace {

const char* kGrammar =
    "usage:\n"
    "  multideal verify <suite> [--seed S] [--count N] [--ring R] [--n N] [--out FILE]\n"
    "                           [--format json|text] [--timing] [--threads T]\n"
    "  multideal multiplier --ring R --ideal I --t T\n"
    "suites: subadditivity | summation | skoda | symbolic | asymptotic | tau-vs-j | paper-example | all\n"
    "rings:  \"poly x,y,z\" (1-3 variables) | \"A2n n=K\" (K >= 1)\n"
    "ideals: \"(x^2, x*y, y^3)\"\n"
    "exit:   0 no FAIL, 2 some FAIL, 1 usage or configuration error\n";

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n" << kGrammar;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monomial multiplier ideal toolkit"};
  app.require_subcommand(1);

  multideal::SuiteConfig config;
  std::string suite, out_path, format = "json";
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")->required();
  verify->add_option("--seed", config.seed, "corpus seed");
  verify->add_option("--count", config.count, "instances per corpus")->check(CLI::NonNegativeNumber);
  verify->add_option("--ring", config.ring, "ambient ring for the corpus");
  verify->add_option("--n", config.n, "A2n parameter for paper-example");
  verify->add_option("--out", out_path, "write the report here instead of stdout");
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_flag("--timing", config.timing, "record per-instance milliseconds");
  verify->add_option("--threads", config.threads, "worker threads (0: all cores)");

  std::string ring_text, ideal_text, t_text;
  auto* mult = app.add_subcommand("multiplier", "print J(a^t)");
  mult->add_option("--ring", ring_text)->required();
  mult->add_option("--ideal", ideal_text)->required();
  mult->add_option("--t", t_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help() << kGrammar;
    return 0;
  } catch (const CLI::ParseError& e) {
    return usage_error(e.what());
  }

  try {
    if (*mult) {
      auto ring = multideal::parse_ring(ring_text);
      auto a = multideal::parse_ideal(ring, ideal_text);
      std::cout << multideal::multiplier_ideal(a, multideal::parse_rational(t_text)).to_string() << "\n";
      return 0;
    }

    if (!multideal::is_suite(suite)) return usage_error("unknown suite '" + suite + "'");
    multideal::SuiteReport report = multideal::run_suite(suite, config);
    std::string body = format == "json" ? report.to_json(multideal::utc_timestamp()) : report.to_text();
    if (out_path.empty()) {
      std::cout << body;
    } else {
      std::ofstream f(out_path);
      if (!f) return usage_error("cannot write " + out_path);
      f << body;
      std::cerr << "pass " << report.count(multideal::Verdict::Pass) << ", fail " << report.count(multideal::Verdict::Fail)
                << ", skip " << report.count(multideal::Verdict::Skip) << "\n";
    }
    return report.has_failures() ? 2 : 0;
  } catch (const multideal::Error& e) {
    return usage_error(e.what());
  }
}
