// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
//
// Command line front end: evaluate metric operators on sampled set-valued
// functions, render interpolant figures, and run the verification suites.
//
// Exit codes: 0 success, 2 input error, 3 domain error, 4 verification
// failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "msvf/analysis.hpp"
#include "msvf/document.hpp"
#include "msvf/errors.hpp"
#include "msvf/figure.hpp"
#include "msvf/format.hpp"
#include "msvf/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerify = 4;

struct EvalOptions {
  std::string input;
  std::string op = "pl";
  std::size_t m = 2;
  std::size_t n = 0;  // reserved for operators needing an explicit N
  std::optional<double> x;
  std::size_t grid = 0;
  std::string output;
  double tie_eps = 1e-9;
};

msvf::OperatorSpec make_spec(const std::string& name, std::size_t m) {
  if (name == "bernstein") return msvf::bernstein_operator();
  if (name == "schoenberg") return msvf::schoenberg_operator(m);
  if (name == "lagrange") return msvf::lagrange_operator();
  throw msvf::ParseError("unknown operator: " + name +
                         " (expected bernstein|schoenberg|lagrange|pl|artstein|decasteljau)");
}

int run_eval(const EvalOptions& opt) {
  msvf::Tolerance tol;
  tol.tie_eps = opt.tie_eps;
  const msvf::SampledSVF f = msvf::SVFDocument::from_file(opt.input).to_svf();
  if (opt.n != 0 && opt.n != f.partition.interval_count())
    throw msvf::ParseError("--n disagrees with the document partition (" +
                           std::to_string(f.partition.interval_count()) + " intervals)");

  std::function<msvf::CompactSet(double)> apply;
  msvf::Interval domain(f.partition.a(), f.partition.b());
  if (opt.op == "pl") {
    apply = [&](double x) { return msvf::eval_metric_pl(f, x, tol); };
  } else if (opt.op == "artstein") {
    apply = [&](double x) { return msvf::eval_artstein_pl(f, x, tol); };
  } else if (opt.op == "decasteljau") {
    apply = [&](double x) { return msvf::decasteljau_ma_bernstein(f, x, tol); };
    domain = msvf::Interval(0.0, 1.0);
  } else {
    const msvf::OperatorSpec spec = make_spec(opt.op, opt.m);
    domain = spec.domain(f.partition);
    apply = [&f, spec, tol](double x) { return msvf::apply_metric_operator(spec, f, x, tol); };
  }

  std::vector<double> xs;
  if (opt.x) {
    xs.push_back(*opt.x);
  } else {
    const std::size_t grid = opt.grid >= 2 ? opt.grid : 33;
    for (std::size_t k = 0; k < grid; ++k) {
      const double t = static_cast<double>(k) / static_cast<double>(grid - 1);
      xs.push_back(domain.lo * (1.0 - t) + domain.hi * t);
    }
  }
  std::vector<std::pair<double, msvf::CompactSet>> results;
  results.reserve(xs.size());
  for (double x : xs) results.emplace_back(x, apply(x));
  const std::string csv = msvf::eval_csv(results);
  if (opt.output.empty())
    std::cout << csv;
  else
    msvf::write_text_file(opt.output, csv);
  return kExitOk;
}

int run_figure(const std::string& name, const std::string& input, const std::string& op_name,
               std::size_t m, const msvf::FigureSpec& spec, const std::string& output) {
  msvf::SampledSVF f = name == "custom" ? msvf::SVFDocument::from_file(input).to_svf()
                                        : msvf::builtin_figure_data(name);
  const msvf::OperatorSpec op = make_spec(op_name, m);
  msvf::write_text_file(output, msvf::render_figure_svg(f, op, spec));
  return kExitOk;
}

int run_verify(const std::string& suite, std::uint64_t seed) {
  const auto reports = msvf::run_verify(suite, seed);
  std::cout << msvf::verify_report_text(reports, seed);
  for (const msvf::SuiteReport& r : reports)
    if (!r.pass()) return kExitVerify;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metric linear combinations of compact sets and metric analogues of classical "
               "approximation operators for set-valued functions"};
  app.require_subcommand(1);

  EvalOptions eval_opt;
  CLI::App* eval = app.add_subcommand("eval", "evaluate an operator on a sampled SVF document");
  eval->add_option("--input", eval_opt.input, "SVF document (JSON)")->required();
  eval->add_option("--operator", eval_opt.op,
                   "bernstein|schoenberg|lagrange|pl|artstein|decasteljau");
  eval->add_option("--m", eval_opt.m, "schoenberg spline order");
  eval->add_option("--n", eval_opt.n, "expected interval count; checked against the document");
  double eval_x = 0;
  CLI::Option* xopt = eval->add_option("--x", eval_x, "single evaluation point");
  eval->add_option("--grid", eval_opt.grid, "evaluation grid size over the validity domain");
  eval->add_option("--output", eval_opt.output, "CSV output path (stdout when omitted)");
  eval->add_option("--tol", eval_opt.tie_eps, "projection tie tolerance");

  std::string fig_name = "parabolic-1";
  std::string fig_input;
  std::string fig_output = "figure.svg";
  std::string fig_op = "lagrange";
  std::size_t fig_m = 2;
  msvf::FigureSpec fig_spec;
  CLI::App* figure = app.add_subcommand("figure", "render a set-valued interpolant figure");
  figure->add_option("--name", fig_name, "parabolic-1|parabolic-2|custom");
  figure->add_option("--input", fig_input, "SVF document for --name custom");
  figure->add_option("--operator", fig_op, "coefficient family for the curves");
  figure->add_option("--m", fig_m, "schoenberg spline order");
  figure->add_option("--grid", fig_spec.grid, "x samples per curve");
  figure->add_option("--per-segment", fig_spec.per_segment, "parameter samples per chain segment");
  figure->add_option("--output", fig_output, "SVG output path");

  std::string suite = "all";
  std::uint64_t seed = 20260810;
  bool seed_given = false;
  CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", suite, "metric-props|pl|operators|bounds|convexification|all");
  verify->add_option("--seed", seed, "RNG seed for randomized suites")
      ->each([&](const std::string&) { seed_given = true; });

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) {
      if (xopt->count() > 0) eval_opt.x = eval_x;
      return run_eval(eval_opt);
    }
    if (figure->parsed()) {
      if (fig_name == "custom" && fig_input.empty())
        throw msvf::ParseError("--name custom requires --input");
      return run_figure(fig_name, fig_input, fig_op, fig_m, fig_spec, fig_output);
    }
    if (verify->parsed()) {
      if (!seed_given) {
        if (const char* env = std::getenv("METRIC_SVF_SEED")) seed = std::strtoull(env, nullptr, 10);
      }
      return run_verify(suite, seed);
    }
  } catch (const msvf::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const msvf::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const msvf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
