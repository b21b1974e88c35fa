// g2kit command-line front end.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "g2kit/acceptance.hpp"
#include "g2kit/io.hpp"
#include "g2kit/report.hpp"

namespace {

using namespace g2kit;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2 };

struct Output {
  std::string format = "text";
  std::string report_path;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational rational_arg(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

std::vector<int> placement_arg(const std::string& text) {
  std::vector<int> out;
  for (char c : text) {
    if (c == ',' || c == ' ') continue;
    if (c < '1' || c > '7') throw UsageError("--placement: expected a permutation of 1..7, got '" + text + "'");
    out.push_back(c - '0');
  }
  std::vector<int> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::vector<int>{1, 2, 3, 4, 5, 6, 7}) throw UsageError("--placement: expected a permutation of 1..7, got '" + text + "'");
  return out;
}

int emit(const Output& out, Report r, const std::string& text = "") {
  r.body["pass"] = r.pass;
  const std::string json = r.body.dump(2) + "\n";
  if (out.format == "json")
    std::cout << json;
  else
    std::cout << (text.empty() ? render_text(r.body) : text);
  if (!out.report_path.empty()) {
    std::ofstream f(out.report_path);
    if (!f) throw UsageError("cannot write report to " + out.report_path);
    f << json;
  }
  return r.pass ? kOk : kFailed;
}

struct ChartArgs {
  num::ChartConfig cfg;
  std::vector<double> domain{1.0, 2.0};

  void attach(CLI::App* sub) {
    sub->add_option("--a", cfg.a, "Kahler parameter a")->capture_default_str();
    sub->add_option("--domain", domain, "x-interval x0 x1 of the chart")->expected(2)->capture_default_str();
    sub->add_option("--u0", cfg.u0, "u(x0)")->capture_default_str();
    sub->add_option("--u1", cfg.u1, "u(x1)")->capture_default_str();
    sub->add_option("--grid", cfg.grid, "Liouville grid intervals")->check(CLI::Range(4, 1000000))->capture_default_str();
    sub->add_option("--points", cfg.points, "random sample points")->check(CLI::Range(1, 100000))->capture_default_str();
    sub->add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
    sub->add_option("--half-width", cfg.half_width, "half-width of the y, z, t (and s) ranges")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--fd-step", cfg.h, "finite-difference step")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--fd-outer", cfg.h_outer, "step for derivatives of connection forms")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--tol", cfg.tol, "residual tolerance")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--norm-tol", cfg.norm_tol, "tolerance for |T|^2")->check(CLI::PositiveNumber)->capture_default_str();
  }

  num::ChartConfig resolve() {
    cfg.x0 = domain[0];
    cfg.x1 = domain[1];
    if (!(cfg.x0 > 0) || !(cfg.x1 > cfg.x0)) throw UsageError("--domain: need 0 < x0 < x1");
    return cfg;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numerical checks for cocalibrated G2-structures with Ricci-flat characteristic connection"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML/INI file with option values");
  Output out;
  app.add_option("--format", out.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--report", out.report_path, "also write the JSON report to this path");

  std::string form_file;
  auto* decompose = app.add_subcommand("decompose", "split a 3-form into its G2 components");
  decompose->add_option("form-file", form_file, "form file")->required();

  std::string m1, m2, m3, mu = "7";
  auto* lemma = app.add_subcommand("lemma", "solve for the torsion family with eigenvalues m1, m2, m3 (multiples of mu)");
  lemma->add_option("--m1", m1, "eigenvalue on theta_1 psi0, as a multiple of mu")->required();
  lemma->add_option("--m2", m2, "eigenvalue on theta_2 psi0, as a multiple of mu")->required();
  lemma->add_option("--m3", m3, "eigenvalue on theta_3 psi0, as a multiple of mu")->required();
  lemma->add_option("--mu", mu, "mu")->capture_default_str();

  auto* values = app.add_subcommand("values", "possible values of T(theta_1, theta_2, theta_3)");
  values->add_option("--mu", mu, "mu")->capture_default_str();

  auto* kernels = app.add_subcommand("kernels", "dimensions of Lambda^3_27 forms killing leading spinors");

  std::string b;
  auto* dete2 = app.add_subcommand("det-e2", "determinant of theta_3 -| T on the theta_3-complement");
  dete2->add_option("--b", b, "b")->required();
  dete2->add_option("--mu", mu, "mu")->capture_default_str();

  std::string algebra_file, placement = "5612347";
  auto* group = app.add_subcommand("group-report", "G2 pipeline on a 7-dimensional Lie algebra");
  group->add_option("algebra-file", algebra_file, "algebra file")->required();
  group->add_option("--placement", placement, "algebra index in each omega3 slot")->capture_default_str();

  ChartArgs kahler_args, theorem_args;
  auto* kahler = app.add_subcommand("kahler", "Kahler metric from the Liouville equation");
  kahler_args.attach(kahler);
  auto* theorem1 = app.add_subcommand("theorem1", "circle bundle over the Kahler example");
  theorem_args.attach(theorem1);
  std::optional<double> omega_a;
  theorem1->add_option("--omega-a", omega_a, "use Omega = 2 omega_a f^1 ^ f^2 (default: a)");

  std::vector<int> criteria;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  selftest->add_option("--criteria", criteria, "subset of criteria")->check(CLI::Range(1, kCriteria));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*decompose) {
      const Form a = read_form_file(form_file);
      if (a.dim() != 7 || a.degree() != 3) throw UsageError("decompose needs a 3-form on R^7");
      return emit(out, decompose_report(a));
    }
    if (*lemma) {
      const EigenTriple m{rational_arg("m1", m1), rational_arg("m2", m2), rational_arg("m3", m3)};
      return emit(out, lemma_report(m, rational_arg("mu", mu)));
    }
    if (*values) {
      const Rational q = rational_arg("mu", mu);
      if (sgn(q) == 0) throw UsageError("--mu must be nonzero");
      return emit(out, values_report(q));
    }
    if (*kernels) return emit(out, kernels_report());
    if (*dete2) return emit(out, det_e2_report(rational_arg("b", b), rational_arg("mu", mu)));
    if (*group) {
      const LieAlgebra g = read_algebra_file(algebra_file);
      if (g.dim() != 7) throw UsageError("group-report needs a 7-dimensional algebra");
      return emit(out, group_report(run_pipeline(g, placement_arg(placement))));
    }
    if (*kahler) {
      const auto cfg = kahler_args.resolve();
      return emit(out, kahler_report(cfg, num::run_kahler(cfg)));
    }
    if (*theorem1) {
      const auto cfg = theorem_args.resolve();
      try {
        return emit(out, theorem1_report(cfg, num::run_theorem1(cfg, omega_a.value_or(cfg.a))));
      } catch (const num::HypothesisError& e) {
        Report r;
        r.pass = false;
        r.body["command"] = "theorem1";
        r.body["failed_hypothesis"] = e.condition();
        r.body["error"] = e.what();
        return emit(out, r);
      }
    }
    if (*selftest) {
      if (criteria.empty())
        for (int i = 1; i <= kCriteria; ++i) criteria.push_back(i);
      std::vector<CriterionResult> results;
      for (int id : criteria) results.push_back(run_criterion(id));
      Report r;
      r.body["command"] = "selftest";
      r.body["criteria"] = Json::array();
      for (const auto& c : results)
        r.body["criteria"].push_back({{"id", c.id},
                                      {"title", c.title},
                                      {"pass", c.pass},
                                      {"documented_deviation", c.documented_deviation},
                                      {"detail", c.detail}});
      r.pass = acceptable(results);
      std::string text;
      for (const auto& c : results) text += format_line(c) + "\n";
      return emit(out, r, text);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const num::NewtonFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
