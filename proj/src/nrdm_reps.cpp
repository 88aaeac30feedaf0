#include "inse/nrdm/reps.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace inse::nrdm {

namespace {

int grid_floor(double v, int k) { return static_cast<int>(std::floor(v * k + 1e-9)); }
int grid_ceil(double v, int k) { return static_cast<int>(std::ceil(v * k - 1e-9)); }

using GridVector = std::vector<int>;  // grades as grid indices 0..k

GridVector quantize(const FuzzyRelation& f, int k) {
  GridVector out(f.grades.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    int j = static_cast<int>(std::lround(f.grades[i] * k));
    if (std::fabs(f.grades[i] * k - j) > 1e-6)
      throw error("fuzzy grade " + fmt_grade(f.grades[i]) + " is off the 1/" +
                  std::to_string(k) + " grid");
    out[i] = j;
  }
  return out;
}

FuzzyRelation dequantize(const Scheme& s, const GridVector& g, int k) {
  FuzzyRelation out(s);
  for (std::size_t i = 0; i < g.size(); ++i)
    out.grades[i] = static_cast<double>(g[i]) / k;
  return out;
}

std::string grid_text(const Scheme& s, const GridVector& g, int k) {
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) out += " ";
    out += tuple_text(s, tuple_at(s, i)) + "=" + fmt_grade(static_cast<double>(g[i]) / k);
  }
  return out;
}

} // namespace

std::vector<FuzzyRelation> reps_enum(const NeutroRelation& r, int grid_k,
                                     const RepsLimits& limits) {
  if (grid_k < 1) throw error("grid step must be 1/k with k >= 1");
  for (const auto& [t, p] : r.rows())
    if (sum_exceeds_one(p)) throw error("reps is defined only for consistent relations");
  const std::size_t n = r.scheme().tuple_count();
  if (n > limits.max_tuples)
    throw error("tuple space too large for completion enumeration (" + std::to_string(n) + " > " +
                std::to_string(limits.max_tuples) + ")");

  std::vector<int> lo(n), hi(n);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    ConfidencePair p = r.at(tuple_at(r.scheme(), i));
    lo[i] = grid_ceil(p.belief, grid_k);
    hi[i] = grid_floor(1.0 - p.doubt, grid_k);
    if (hi[i] < lo[i]) return {};  // no grid-valued completion
    total *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
    if (total > limits.max_relations)
      throw error("completion set exceeds the size guard");
  }

  std::vector<FuzzyRelation> out;
  out.reserve(total);
  GridVector cur(lo);
  while (true) {
    out.push_back(dequantize(r.scheme(), cur, grid_k));
    std::size_t i = 0;
    while (i < n && ++cur[i] > hi[i]) {
      cur[i] = lo[i];
      ++i;
    }
    if (i == n) break;
  }
  return out;
}

const char* StrongGenOp::name() const {
  switch (kind) {
    case Kind::Union: return "union";
    case Kind::Complement: return "complement";
    case Kind::Join: return "join";
    case Kind::Project: return "project";
    case Kind::Select: return "select";
  }
  return "?";
}

namespace {

NeutroRelation apply_neutro(const StrongGenOp& op, const NeutroRelation& r,
                            const NeutroRelation* s) {
  switch (op.kind) {
    case StrongGenOp::Kind::Union:
      if (!s) throw error("union needs two arguments");
      return n_union(r, *s);
    case StrongGenOp::Kind::Complement: return n_complement(r);
    case StrongGenOp::Kind::Join:
      if (!s) throw error("join needs two arguments");
      return n_join(r, *s);
    case StrongGenOp::Kind::Project: return n_project(r, op.attrs);
    case StrongGenOp::Kind::Select: return n_select_guard(r, op.guard);
  }
  throw error("unknown operator");
}

FuzzyRelation apply_fuzzy(const StrongGenOp& op, const FuzzyRelation& r, const FuzzyRelation* s) {
  switch (op.kind) {
    case StrongGenOp::Kind::Union: return f_union(r, *s);
    case StrongGenOp::Kind::Complement: return f_complement(r);
    case StrongGenOp::Kind::Join: return f_join(r, *s);
    case StrongGenOp::Kind::Project: return f_project(r, op.attrs);
    case StrongGenOp::Kind::Select: return f_select(r, op.guard);
  }
  throw error("unknown operator");
}

std::vector<GridVector> sorted_unique(std::vector<GridVector> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Image of the fuzzy operator over all completion pairs, serial reference.
std::vector<GridVector> image_serial(const StrongGenOp& op,
                                     const std::vector<FuzzyRelation>& lhs,
                                     const std::vector<FuzzyRelation>* rhs, int k) {
  std::vector<GridVector> out;
  if (!rhs) {
    for (const auto& q : lhs) out.push_back(quantize(apply_fuzzy(op, q, nullptr), k));
  } else {
    for (const auto& a : lhs)
      for (const auto& b : *rhs) out.push_back(quantize(apply_fuzzy(op, a, &b), k));
  }
  return sorted_unique(std::move(out));
}

std::vector<GridVector> image_parallel(const StrongGenOp& op,
                                       const std::vector<FuzzyRelation>& lhs,
                                       const std::vector<FuzzyRelation>* rhs, int k) {
  const long long n = static_cast<long long>(lhs.size());
  std::vector<std::vector<GridVector>> buckets;
#ifdef _OPENMP
  buckets.resize(static_cast<std::size_t>(omp_get_max_threads()));
#else
  buckets.resize(1);
#endif
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) {
#ifdef _OPENMP
    auto& bucket = buckets[static_cast<std::size_t>(omp_get_thread_num())];
#else
    auto& bucket = buckets[0];
#endif
    const auto& a = lhs[static_cast<std::size_t>(i)];
    if (!rhs) {
      bucket.push_back(quantize(apply_fuzzy(op, a, nullptr), k));
    } else {
      for (const auto& b : *rhs) bucket.push_back(quantize(apply_fuzzy(op, a, &b), k));
    }
  }
  std::vector<GridVector> out;
  for (auto& b : buckets)
    out.insert(out.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
  return sorted_unique(std::move(out));
}

} // namespace

StrongGenVerdict strong_gen_check(const StrongGenOp& op, const NeutroRelation& r,
                                  const NeutroRelation* s, int grid_k, exec_policy policy,
                                  const RepsLimits& limits) {
  NeutroRelation result = apply_neutro(op, r, s);
  std::vector<FuzzyRelation> lhs_reps = reps_enum(result, grid_k, limits);
  std::vector<GridVector> lhs;
  lhs.reserve(lhs_reps.size());
  for (const auto& q : lhs_reps) lhs.push_back(quantize(q, grid_k));
  lhs = sorted_unique(std::move(lhs));

  std::vector<FuzzyRelation> r_reps = reps_enum(r, grid_k, limits);
  std::vector<FuzzyRelation> s_reps;
  const bool binary = op.kind == StrongGenOp::Kind::Union || op.kind == StrongGenOp::Kind::Join;
  if (binary) {
    if (!s) throw error("binary operator needs a second relation");
    s_reps = reps_enum(*s, grid_k, limits);
  }
  std::vector<GridVector> rhs = policy == exec_policy::parallel
                                    ? image_parallel(op, r_reps, binary ? &s_reps : nullptr, grid_k)
                                    : image_serial(op, r_reps, binary ? &s_reps : nullptr, grid_k);

  StrongGenVerdict v;
  v.lhs_count = lhs.size();
  v.rhs_count = rhs.size();
  v.equal = lhs == rhs;
  if (!v.equal) {
    std::vector<GridVector> diff;
    std::set_symmetric_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                                  std::back_inserter(diff));
    if (!diff.empty()) v.witness = grid_text(result.scheme(), diff.front(), grid_k);
  }
  return v;
}

} // namespace inse::nrdm
