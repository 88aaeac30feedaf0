#pragma once

#include "inse/exec.hpp"
#include "inse/nrdm/algebra.hpp"

#include <optional>

namespace inse::nrdm {

// All fuzzy completions of a consistent relation with grades restricted to
// the grid {0, 1/k, ..., 1}: per tuple the grade ranges over
// [belief, 1 - doubt] intersected with the grid.
struct RepsLimits {
  std::size_t max_tuples{8};
  std::size_t max_relations{4u << 20};
};

std::vector<FuzzyRelation> reps_enum(const NeutroRelation& r, int grid_k,
                                     const RepsLimits& limits = {});

// Operators whose strong-generalization property the checker exercises.
struct StrongGenOp {
  enum class Kind { Union, Complement, Join, Project, Select } kind;
  std::vector<std::string> attrs;  // Project
  GuardPtr guard;                  // Select

  static StrongGenOp union_op() { return {Kind::Union, {}, nullptr}; }
  static StrongGenOp complement_op() { return {Kind::Complement, {}, nullptr}; }
  static StrongGenOp join_op() { return {Kind::Join, {}, nullptr}; }
  static StrongGenOp project_op(std::vector<std::string> attrs) {
    return {Kind::Project, std::move(attrs), nullptr};
  }
  static StrongGenOp select_op(GuardPtr g) { return {Kind::Select, {}, std::move(g)}; }
  const char* name() const;
};

struct StrongGenVerdict {
  bool equal{false};
  std::size_t lhs_count{0};
  std::size_t rhs_count{0};
  std::string witness;  // a completion in the symmetric difference
};

// Checks reps(Psi(R[,S])) == S(Theta)(reps R[, reps S]) as finite sets on the
// grid. The image-set enumeration is the parallel kernel; the serial variant
// is the reference.
StrongGenVerdict strong_gen_check(const StrongGenOp& op, const NeutroRelation& r,
                                  const NeutroRelation* s, int grid_k,
                                  exec_policy policy = exec_policy::parallel,
                                  const RepsLimits& limits = {});

} // namespace inse::nrdm
