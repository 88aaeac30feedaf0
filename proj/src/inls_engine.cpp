#include "inse/inls/engine.hpp"

#include <algorithm>
#include <cmath>

namespace inse::inls {

Trapezoid::Trapezoid(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
  if (!(a <= b && b <= c && c <= d)) throw error("trapezoid needs a <= b <= c <= d");
}

double Trapezoid::eval(double x) const {
  if (x < a || x > d) return 0.0;
  if (x < b) return (x - a) / (b - a);  // b > a whenever a <= x < b holds
  if (x <= c) return 1.0;
  if (x < d) return (d - x) / (d - c);
  return 0.0;  // x == d on a proper down-ramp
}

UnitInterval MembershipFn::eval(double x) const {
  double lo = lower.eval(x), hi = upper.eval(x);
  if (lo > hi) throw error("lower membership surface exceeds upper surface");
  return UnitInterval(lo, hi);
}

InsTriple LinguisticTriple::eval(double x) const {
  return InsTriple(truth.eval(x), indet.eval(x), falsity.eval(x));
}

int RuleBase::input_index(const std::string& name) const {
  for (std::size_t k = 0; k < inputs.size(); ++k)
    if (inputs[k].name == name) return static_cast<int>(k);
  return -1;
}

InsTriple neutrosophize(const InputValue& input, const LinguisticTriple& antecedent,
                        const VarDecl& var, int x_samples) {
  if (input.crisp) {
    if (input.value < var.lo || input.value > var.hi)
      throw error("input for '" + var.name + "' outside declared range");
    return antecedent.eval(input.value);
  }
  // Set-valued input: per-variable sup of min for T, sup of max for I and
  // inf of max for F, sampled on the input grid.
  if (x_samples < 2) throw error("input grid needs at least two samples");
  const double dx = (var.hi - var.lo) / (x_samples - 1);
  UnitInterval t(0.0, 0.0), i(0.0, 0.0), f(1.0, 1.0);
  for (int k = 0; k < x_samples; ++k) {
    const double x = var.lo + k * dx;
    InsTriple in = input.set.eval(x);
    InsTriple an = antecedent.eval(x);
    t = iv_max(t, iv_min(in.t, an.t));
    i = iv_max(i, iv_max(in.i, an.i));
    f = iv_min(f, iv_max(in.f, an.f));
  }
  return {t, i, f};
}

InsTriple antecedent_combine(const std::vector<InsTriple>& per_variable) {
  if (per_variable.empty()) throw error("rule has no antecedents");
  InsTriple acc = per_variable.front();
  for (std::size_t k = 1; k < per_variable.size(); ++k) {
    const InsTriple& g = per_variable[k];
    acc = InsTriple{iv_min(acc.t, g.t), iv_max(acc.i, g.i), iv_max(acc.f, g.f)};
  }
  return acc;
}

SampledInsSet rule_fire(const InsTriple& firing, const LinguisticTriple& consequent,
                        const VarDecl& out, int y_samples) {
  if (y_samples < 2) throw error("output grid needs at least two samples");
  const double dy = (out.hi - out.lo) / (y_samples - 1);
  std::vector<InsTriple> nodes(static_cast<std::size_t>(y_samples));
  for (int k = 0; k < y_samples; ++k) {
    InsTriple c = consequent.eval(out.lo + k * dy);
    nodes[static_cast<std::size_t>(k)] =
        InsTriple{iv_min(firing.t, c.t), iv_max(firing.i, c.i), iv_max(firing.f, c.f)};
  }
  return SampledInsSet(out.lo, dy, std::move(nodes));
}

namespace {

InsTriple aggregate_node(const std::vector<SampledInsSet>& fired, std::size_t k) {
  InsTriple acc = fired.front().grades[k];
  for (std::size_t r = 1; r < fired.size(); ++r) {
    const InsTriple& g = fired[r].grades[k];
    acc = InsTriple{iv_max(acc.t, g.t), iv_min(acc.i, g.i), iv_min(acc.f, g.f)};
  }
  return acc;
}

void check_same_grid(const std::vector<SampledInsSet>& fired) {
  if (fired.empty()) throw error("nothing to aggregate");
  for (const auto& s : fired)
    if (s.size() != fired.front().size() || s.x0 != fired.front().x0 || s.dx != fired.front().dx)
      throw error("aggregation requires one shared output grid");
}

} // namespace

SampledInsSet aggregate_serial(const std::vector<SampledInsSet>& fired) {
  check_same_grid(fired);
  const std::size_t n = fired.front().size();
  std::vector<InsTriple> nodes(n);
  for (std::size_t k = 0; k < n; ++k) nodes[k] = aggregate_node(fired, k);
  return SampledInsSet(fired.front().x0, fired.front().dx, std::move(nodes));
}

SampledInsSet aggregate(const std::vector<SampledInsSet>& fired) {
  check_same_grid(fired);
  const std::size_t n = fired.front().size();
  std::vector<InsTriple> nodes(n);
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long k = 0; k < count; ++k)
    nodes[static_cast<std::size_t>(k)] = aggregate_node(fired, static_cast<std::size_t>(k));
  return SampledInsSet(fired.front().x0, fired.front().dx, std::move(nodes));
}

ScalarCurves type_reduce(const SampledInsSet& b) {
  ScalarCurves out;
  out.t.reserve(b.size());
  out.i.reserve(b.size());
  out.f.reserve(b.size());
  for (const auto& g : b.grades) {
    out.t.push_back((g.t.lo + g.t.hi) / 2.0);
    out.i.push_back((g.i.lo + g.i.hi) / 2.0);
    out.f.push_back((g.f.lo + g.f.hi) / 2.0);
  }
  return out;
}

std::vector<double> synthesize(const ScalarCurves& curves, const SynthWeights& w) {
  const double sum = w.truth + w.not_false + w.indet + w.not_indet;
  if (std::fabs(sum - 1.0) > 1e-9) throw error("synthesization weights must sum to 1");
  if (w.truth < 0 || w.not_false < 0 || w.indet < 0 || w.not_indet < 0 || w.truth > 1 ||
      w.not_false > 1 || w.indet > 1 || w.not_indet > 1)
    throw error("synthesization weights must lie in [0,1]");
  std::vector<double> out(curves.t.size());
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = w.truth * curves.t[k] + w.not_false * (1.0 - curves.f[k]) +
             w.indet * curves.i[k] / 2.0 + w.not_indet * (1.0 - curves.i[k] / 2.0);
  return out;
}

double centroid(const std::vector<double>& curve, double y0, double dy) {
  if (curve.size() < 2) throw error("centroid needs at least two samples");
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k + 1 < curve.size(); ++k) {
    const double ya = y0 + k * dy, yb = ya + dy;
    num += (curve[k] * ya + curve[k + 1] * yb) / 2.0 * dy;
    den += (curve[k] + curve[k + 1]) / 2.0 * dy;
  }
  if (den <= 0.0) throw error("no-output: the synthesized curve integrates to zero");
  return num / den;
}

namespace {

InferenceResult run_impl(const RuleBase& rb, const Inputs& inputs, const EngineConfig& cfg,
                         bool parallel) {
  if (rb.rules.empty()) throw error("rule base is empty");
  for (const auto& v : rb.inputs)
    if (!inputs.count(v.name)) throw error("missing input for variable '" + v.name + "'");

  InferenceResult res;
  std::vector<SampledInsSet> fired;
  for (const auto& rule : rb.rules) {
    RuleTrace rt;
    if (rule.antecedents.size() != rb.inputs.size())
      throw error("rule antecedent count does not match engine arity");
    for (std::size_t k = 0; k < rb.inputs.size(); ++k)
      rt.neutrosophized.push_back(neutrosophize(inputs.at(rb.inputs[k].name),
                                                rule.antecedents[k], rb.inputs[k],
                                                cfg.x_samples));
    rt.firing = antecedent_combine(rt.neutrosophized);
    rt.fired = rt.firing.t.hi > 0.0;
    if (rt.fired) {
      rt.clipped = rule_fire(rt.firing, rule.consequent, rb.output, cfg.y_samples);
      fired.push_back(rt.clipped);
    }
    res.trace.rules.push_back(std::move(rt));
  }
  if (fired.empty()) throw error("no rule fired");

  res.trace.aggregated = parallel ? aggregate(fired) : aggregate_serial(fired);
  res.trace.reduced = type_reduce(res.trace.aggregated);
  res.trace.synthesized = synthesize(res.trace.reduced, cfg.weights);
  res.trace.output =
      centroid(res.trace.synthesized, res.trace.aggregated.x0, res.trace.aggregated.dx);
  res.output = res.trace.output;
  return res;
}

} // namespace

InferenceResult run_inference(const RuleBase& rb, const Inputs& inputs, const EngineConfig& cfg) {
  return run_impl(rb, inputs, cfg, cfg.policy == exec_policy::parallel);
}

InferenceResult run_inference_serial(const RuleBase& rb, const Inputs& inputs,
                                     const EngineConfig& cfg) {
  return run_impl(rb, inputs, cfg, false);
}

} // namespace inse::inls
