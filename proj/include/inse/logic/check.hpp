#pragma once

#include "inse/logic/eval.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace inse::logic {

// Falsification-based verdicts: the checkers never claim validity, only that
// no counterexample turned up in the sample budget.
struct TautologyVerdict {
  bool falsified{false};
  Interpretation counterexample;
  InsTriple value;  // value at the counterexample
  DesignatedConvention convention;
  int samples_run{0};
};

struct EquivalenceVerdict {
  bool falsified{false};
  Interpretation counterexample;
  InsTriple lhs_value, rhs_value;
  int samples_run{0};
};

// Sweeps the degenerate corner interpretations (every variable at each of
// <1,0,0>, <0,1,1>, <0.5,0.5,0.5>) before seeded random sampling. Random
// samples are degenerate triples as well; see the sampler note in the
// implementation. Equivalence sampling uses full interval-valued triples.
TautologyVerdict check_tautology(const PropPtr& f, const DesignatedConvention& conv,
                                 int samples, std::uint64_t seed);

EquivalenceVerdict check_equivalence(const PropPtr& f, const PropPtr& g, int samples,
                                     std::uint64_t seed);

// Catalog of the first-order schemes whose validity the theory asserts.
// Biconditional schemes are checked as value identities (both sides evaluate
// to the same triple in every sampled model); implicational schemes are
// checked as designated-valued under the convention in force. Ids run 1..22.
struct SchemaInfo {
  int id{0};
  std::string text;
  bool biconditional{false};
};

struct SchemaReport {
  SchemaInfo info;
  bool holds{false};
  std::string counterexample;  // model dump when holds == false
  int trials_run{0};
};

int schema_count();
SchemaInfo schema_info(int id);
SchemaReport check_schema_identity(int id, int trials, std::uint64_t seed,
                                   const DesignatedConvention& conv = pred_convention());

// Seeded generators shared by the property suites: grades are drawn from the
// dyadic grid m/256 so that min/max/1-x/clamped-sum algebra is exact in
// double precision.
class GradeGen {
public:
  explicit GradeGen(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  double grade();                 // dyadic in [0,1]
  UnitInterval interval();        // dyadic, lo <= hi
  InsTriple triple();
  InsTriple degenerate_triple();
  std::uint64_t next();

private:
  std::uint64_t state_;
};

FiniteModel random_model(GradeGen& gen, const std::vector<std::pair<std::string, int>>& preds,
                         int max_domain = 3);

} // namespace inse::logic
