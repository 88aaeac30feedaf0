#pragma once

#include "inse/exec.hpp"
#include "inse/ins_set.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace inse::inls {

// Trapezoidal membership curve over a real range: 0 outside [a,d], linear
// ramps on [a,b] and [c,d], 1 on the plateau [b,c].
struct Trapezoid {
  double a{0}, b{0}, c{0}, d{0};

  Trapezoid() = default;
  Trapezoid(double a_, double b_, double c_, double d_);
  double eval(double x) const;
};

// Lower/upper trapezoid pair realizing an interval-valued degree.
struct MembershipFn {
  Trapezoid lower, upper;

  MembershipFn() = default;
  MembershipFn(Trapezoid lo, Trapezoid up) : lower(lo), upper(up) {}
  static MembershipFn crisp(Trapezoid t) { return {t, t}; }
  UnitInterval eval(double x) const;
};

// One linguistic value: truth/indeterminacy/falsity membership surfaces over
// a shared variable range.
struct LinguisticTriple {
  MembershipFn truth, indet, falsity;
  InsTriple eval(double x) const;
};

struct VarDecl {
  std::string name;
  double lo{0}, hi{1};
};

struct Rule {
  std::vector<LinguisticTriple> antecedents;  // aligned with RuleBase::inputs
  LinguisticTriple consequent;
};

struct RuleBase {
  std::vector<VarDecl> inputs;
  VarDecl output;
  std::vector<Rule> rules;
  std::map<std::string, std::map<std::string, LinguisticTriple>> terms;  // var -> term -> value

  int input_index(const std::string& name) const;
};

struct SynthWeights {
  double truth{0.5};
  double not_false{0.35};
  double indet{0.1};
  double not_indet{0.05};
};

struct EngineConfig {
  SynthWeights weights{};
  int y_samples{1001};
  int x_samples{1001};  // sampling resolution for set-valued inputs
  exec_policy policy{exec_policy::parallel};
};

// Inputs are crisp reals or sampled input sets per variable.
struct InputValue {
  bool crisp{true};
  double value{0};
  LinguisticTriple set;

  static InputValue of(double v) { return {true, v, {}}; }
  static InputValue of_set(LinguisticTriple s) { return {false, 0, std::move(s)}; }
};

using Inputs = std::map<std::string, InputValue>;

// Pipeline stages. The per-stage functions are exposed so each one can be
// checked against its own oracle.
InsTriple neutrosophize(const InputValue& input, const LinguisticTriple& antecedent,
                        const VarDecl& var, int x_samples);
InsTriple antecedent_combine(const std::vector<InsTriple>& per_variable);
SampledInsSet rule_fire(const InsTriple& firing, const LinguisticTriple& consequent,
                        const VarDecl& out, int y_samples);
SampledInsSet aggregate(const std::vector<SampledInsSet>& fired);
SampledInsSet aggregate_serial(const std::vector<SampledInsSet>& fired);

struct ScalarCurves {
  std::vector<double> t, i, f;
};

ScalarCurves type_reduce(const SampledInsSet& b);
std::vector<double> synthesize(const ScalarCurves& curves, const SynthWeights& w);
double centroid(const std::vector<double>& curve, double y0, double dy);

struct RuleTrace {
  std::vector<InsTriple> neutrosophized;
  InsTriple firing;
  bool fired{false};
  SampledInsSet clipped;
};

struct InferenceTrace {
  std::vector<RuleTrace> rules;
  SampledInsSet aggregated;
  ScalarCurves reduced;
  std::vector<double> synthesized;
  double output{0};
};

struct InferenceResult {
  double output{0};
  InferenceTrace trace;
};

// Full pipeline: neutrosophication, antecedent combination, rule firing,
// aggregation over fired rules, type reduction, synthesization and centroid.
// Errors when no rule fires (aggregate truth identically zero).
InferenceResult run_inference(const RuleBase& rb, const Inputs& inputs, const EngineConfig& cfg);
InferenceResult run_inference_serial(const RuleBase& rb, const Inputs& inputs,
                                     const EngineConfig& cfg);

} // namespace inse::inls
