// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "msvf/svf.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "msvf/errors.hpp"

namespace msvf {

Partition Partition::of(std::vector<double> knots) {
  if (knots.size() < 2) throw Error("partition requires at least two knots");
  for (std::size_t i = 1; i < knots.size(); ++i)
    if (!(knots[i - 1] < knots[i])) throw Error("partition knots must be strictly increasing");
  Partition p;
  p.knots_ = std::move(knots);
  return p;
}

Partition Partition::uniform(double a, double b, std::size_t n) {
  if (n == 0) throw Error("uniform partition requires n >= 1");
  std::vector<double> knots(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n);
    knots[i] = a * (1.0 - t) + b * t;
  }
  knots[0] = a;
  knots[n] = b;
  return of(std::move(knots));
}

double Partition::delta_max() const {
  double m = 0;
  for (std::size_t i = 0; i + 1 < knots_.size(); ++i) m = std::max(m, delta(i));
  return m;
}

double Partition::delta_min() const {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < knots_.size(); ++i) m = std::min(m, delta(i));
  return m;
}

bool Partition::is_uniform(double eps) const {
  return delta_max() - delta_min() <= eps;
}

std::size_t Partition::bracket(double x) const {
  if (x < knots_.front() || x > knots_.back())
    throw DomainError("evaluation point outside the partition span");
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
  const auto idx = static_cast<std::size_t>(it - knots_.begin());
  if (idx == 0) return 0;
  return std::min(idx - 1, knots_.size() - 2);
}

SampledSVF SampledSVF::of(Partition partition, std::vector<CompactSet> values) {
  if (values.size() != partition.knots().size())
    throw LengthMismatch("one sample per knot required");
  require_same_kind(values);
  return SampledSVF{std::move(partition), std::move(values)};
}

SampledSVF SVFOracle::sample(const Partition& partition) const {
  std::vector<CompactSet> values;
  values.reserve(partition.knots().size());
  for (double x : partition.knots()) values.push_back(eval(x));
  return SampledSVF::of(partition, std::move(values));
}

double hat_weight(const Partition& partition, std::size_t i, double x) {
  return (partition.knots()[i + 1] - x) / partition.delta(i);
}

std::vector<double> pl_coefficients(const Partition& partition, double x) {
  const std::size_t i = partition.bracket(x);
  std::vector<double> c(partition.knots().size(), 0.0);
  const double lam = hat_weight(partition, i, x);
  c[i] = lam;
  c[i + 1] = 1.0 - lam;
  return c;
}

CompactSet eval_metric_pl(const SampledSVF& f, double x, const Tolerance& tol) {
  return metric_linear_combination(pl_coefficients(f.partition, x), f.values, tol);
}

CompactSet eval_artstein_pl(const SampledSVF& f, double x, const Tolerance& tol) {
  const std::size_t i = f.partition.bracket(x);
  return metric_average(f.values[i], f.values[i + 1], hat_weight(f.partition, i, x), tol);
}

MetricPLEvaluator::MetricPLEvaluator(SampledSVF f, Tolerance tol)
    : f_(std::move(f)), tol_(tol), chains_(metric_chains(f_.values, tol_)) {}

CompactSet MetricPLEvaluator::operator()(double x) const {
  return combination_from_chains(chains_, pl_coefficients(f_.partition, x), tol_);
}

Point Selection::at(double x) const {
  const std::size_t i = partition.bracket(x);
  const double lam = hat_weight(partition, i, x);
  Point out(values[i].size());
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = lam * values[i][k] + (1.0 - lam) * values[i + 1][k];
  return out;
}

double Selection::scalar_at(double x) const {
  const Point p = at(x);
  if (p.size() != 1) throw DimensionMismatch("scalar selection requires 1D values");
  return p[0];
}

std::vector<Selection> SelectionSet::finite() const {
  if (chains.exact) throw Error("exact-mode selections form a continuum; use sample()");
  std::vector<Selection> out;
  out.reserve(chains.chains.size());
  for (const MetricChain& ch : chains.chains) out.push_back({partition, ch.points});
  return out;
}

std::vector<Selection> SelectionSet::sample(std::size_t per_segment) const {
  if (!chains.exact) return finite();
  std::vector<Selection> out;
  for (const ChainFamily& fam : chains.families) {
    std::vector<double> taus{fam.tau_lo};
    if (!fam.degenerate()) {
      for (std::size_t k = 1; k < per_segment; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(per_segment);
        taus.push_back(fam.tau_lo * (1.0 - t) + fam.tau_hi * t);
      }
      taus.push_back(fam.tau_hi);
    }
    for (double tau : taus) {
      Selection s;
      s.partition = partition;
      for (double v : fam.chain_at(tau)) s.values.push_back({v});
      out.push_back(std::move(s));
    }
  }
  return out;
}

SelectionSet selections(const SampledSVF& f, const Tolerance& tol) {
  return SelectionSet{f.partition, metric_chains(f.values, tol)};
}

ModulusTable::ModulusTable(std::vector<double> xs, std::vector<CompactSet> values)
    : xs_(std::move(xs)) {
  const std::size_t n = xs_.size();
  haus_.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      haus_[i][j] = haus_[j][i] = hausdorff(values[i], values[j]);
}

double ModulusTable::omega(double delta) const {
  if (!(delta > 0)) throw DomainError("modulus needs delta > 0");
  double worst = 0;
  for (std::size_t i = 0; i < xs_.size(); ++i)
    for (std::size_t j = i + 1; j < xs_.size(); ++j) {
      if (xs_[j] - xs_[i] > delta) break;  // xs ascending
      worst = std::max(worst, haus_[i][j]);
    }
  return worst;
}

ModulusTable probe_modulus(const SVFOracle& g, std::size_t probe_count) {
  if (probe_count < 2) throw Error("probe_count must be >= 2");
  std::vector<double> xs(probe_count);
  std::vector<CompactSet> values;
  values.reserve(probe_count);
  for (std::size_t i = 0; i < probe_count; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(probe_count - 1);
    xs[i] = g.a * (1.0 - t) + g.b * t;
    values.push_back(g.eval(xs[i]));
  }
  return ModulusTable(std::move(xs), std::move(values));
}

ModulusTable probe_modulus(const SampledSVF& f) {
  return ModulusTable(f.partition.knots(), f.values);
}

double modulus_of_continuity(const SVFOracle& g, double delta, std::size_t probe_count) {
  return probe_modulus(g, probe_count).omega(delta);
}

double modulus_of_continuity(const SampledSVF& f, double delta) {
  return probe_modulus(f).omega(delta);
}

VariationProfile::VariationProfile(std::vector<double> xs, std::vector<double> v)
    : xs_(std::move(xs)), v_(std::move(v)) {
  if (xs_.size() != v_.size() || xs_.size() < 2) throw Error("malformed variation profile");
}

double VariationProfile::at(double x) const {
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  if (it == xs_.begin()) return v_.front();
  if (it == xs_.end()) return v_.back();
  const auto i = static_cast<std::size_t>(it - xs_.begin());
  const double t = (x - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
  return v_[i - 1] * (1.0 - t) + v_[i] * t;
}

double VariationProfile::omega(double delta) const {
  if (!(delta > 0)) throw DomainError("modulus needs delta > 0");
  double worst = 0;
  for (std::size_t i = 0; i < xs_.size(); ++i)
    worst = std::max(worst, at(std::min(xs_[i] + delta, xs_.back())) - v_[i]);
  return worst;
}

VariationProfile total_variation(const SVFOracle& g, std::size_t refinement) {
  if (refinement < 1) throw Error("refinement must have at least one interval");
  std::vector<double> xs(refinement + 1);
  std::vector<double> v(refinement + 1, 0.0);
  CompactSet prev = g.eval(g.a);
  xs[0] = g.a;
  for (std::size_t i = 1; i <= refinement; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(refinement);
    xs[i] = g.a * (1.0 - t) + g.b * t;
    CompactSet cur = g.eval(xs[i]);
    v[i] = v[i - 1] + hausdorff(prev, cur);
    prev = std::move(cur);
  }
  return VariationProfile(std::move(xs), std::move(v));
}

VariationProfile total_variation(const SampledSVF& f) {
  const auto& xs = f.partition.knots();
  std::vector<double> v(xs.size(), 0.0);
  for (std::size_t i = 1; i < xs.size(); ++i)
    v[i] = v[i - 1] + hausdorff(f.values[i - 1], f.values[i]);
  return VariationProfile(xs, std::move(v));
}

SVFOracle pl_oracle(const SampledSVF& f, const Tolerance& tol) {
  SVFOracle g;
  g.a = f.partition.a();
  g.b = f.partition.b();
  g.name = "metric-pl";
  auto data = std::make_shared<SampledSVF>(f);
  g.eval = [data, tol](double x) { return eval_artstein_pl(*data, x, tol); };
  return g;
}

}  // namespace msvf
