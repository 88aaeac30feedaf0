#pragma once

#include "inse/exec.hpp"
#include "inse/triple.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace inse {

// Finite-universe interval neutrosophic set: an ordered universe of element
// identifiers with one grade triple per element.
class InsSet {
public:
  InsSet() = default;
  InsSet(std::vector<std::string> universe, std::vector<InsTriple> grades);

  const std::vector<std::string>& universe() const { return universe_; }
  std::size_t size() const { return universe_.size(); }

  const InsTriple& at(std::size_t idx) const { return grades_.at(idx); }
  const InsTriple& at(const std::string& elem) const;
  InsTriple& at(std::size_t idx) { return grades_.at(idx); }

  bool same_universe(const InsSet& o) const { return universe_ == o.universe_; }
  bool operator==(const InsSet& o) const {
    return universe_ == o.universe_ && grades_ == o.grades_;
  }

private:
  std::vector<std::string> universe_;
  std::vector<InsTriple> grades_;
};

bool ins_contains(const InsSet& a, const InsSet& b);  // a subset of b
bool ins_equal(const InsSet& a, const InsSet& b);
InsSet ins_complement(const InsSet& a);
InsSet ins_intersect(const InsSet& a, const InsSet& b);
InsSet ins_union(const InsSet& a, const InsSet& b);
InsSet ins_difference(const InsSet& a, const InsSet& b);
InsSet ins_add(const InsSet& a, const InsSet& b);
InsSet ins_cartesian_product(const InsSet& a, const InsSet& b);
InsSet ins_scalar_mul(const InsSet& a, double k);
InsSet ins_scalar_div(const InsSet& a, double k);
InsSet ins_truth_favorite(const InsSet& a);
InsSet ins_false_favorite(const InsSet& a);
bool ins_is_empty(const InsSet& a);  // every grade equals ins_bottom()

// Constant sets over a universe.
InsSet ins_constant(const std::vector<std::string>& universe, const InsTriple& g);

// Text format, one line per element: "elem : <[t1,t2],[i1,i2],[f1,f2]>".
std::string to_text(const InsSet& a);
InsSet parse_ins_set(std::istream& in);
InsSet load_ins_set(const std::string& path);

// Grade relation over a pair of finite universes, stored total and row-major.
class InsRelation {
public:
  InsRelation() = default;
  InsRelation(std::vector<std::string> xs, std::vector<std::string> ys,
              std::vector<InsTriple> grades);

  const std::vector<std::string>& xs() const { return xs_; }
  const std::vector<std::string>& ys() const { return ys_; }
  const InsTriple& at(std::size_t x, std::size_t y) const { return grades_[x * ys_.size() + y]; }
  InsTriple& at(std::size_t x, std::size_t y) { return grades_[x * ys_.size() + y]; }
  bool operator==(const InsRelation& o) const {
    return xs_ == o.xs_ && ys_ == o.ys_ && grades_ == o.grades_;
  }

private:
  std::vector<std::string> xs_, ys_;
  std::vector<InsTriple> grades_;
};

// Sup-star composition of r on X*Y with s on Y*Z: truth and indeterminacy by
// sup of min over the shared domain, falsity by inf of max; sup/inf over a
// finite family of intervals is the endpoint-wise max/min.
InsRelation ins_compose(const InsRelation& r, const InsRelation& s,
                        exec_policy policy = exec_policy::parallel);
InsRelation ins_compose_serial(const InsRelation& r, const InsRelation& s);

// One-dimensional sampled set on a uniform grid, the membership-curve view
// used for convexity checking.
struct SampledInsSet {
  double x0{0.0};
  double dx{1.0};
  std::vector<InsTriple> grades;

  SampledInsSet() = default;
  SampledInsSet(double x0_, double dx_, std::vector<InsTriple> g);
  std::size_t size() const { return grades.size(); }
};

SampledInsSet sampled_intersect(const SampledInsSet& a, const SampledInsSet& b);

// Convexity on the sampled grid: lambda is restricted to the grid-aligned
// values, so every checked combination point lands on a grid node. The strict
// variant requires strict inequalities for distinct points and interior lambda.
bool ins_is_convex(const SampledInsSet& a, bool strict);

} // namespace inse
