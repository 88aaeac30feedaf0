#pragma once

#include "inse/ins_set.hpp"
#include "inse/logic/check.hpp"
#include "inse/nrdm/core.hpp"

#include <vector>

namespace testutil {

using inse::InsSet;
using inse::InsTriple;
using inse::UnitInterval;

inline UnitInterval iv(double lo, double hi) { return UnitInterval(lo, hi); }
inline InsTriple tri(double t1, double t2, double i1, double i2, double f1, double f2) {
  return InsTriple(iv(t1, t2), iv(i1, i2), iv(f1, f2));
}

// The three-element running-example sets used throughout the chapter-one
// worked examples.
inline InsSet example_set_a() {
  return InsSet({"x1", "x2", "x3"},
                {tri(0.2, 0.4, 0.3, 0.5, 0.3, 0.5), tri(0.5, 0.7, 0.0, 0.2, 0.2, 0.3),
                 tri(0.6, 0.8, 0.2, 0.3, 0.2, 0.3)});
}

inline InsSet example_set_b() {
  return InsSet({"x1", "x2", "x3"},
                {tri(0.5, 0.7, 0.1, 0.3, 0.1, 0.3), tri(0.2, 0.3, 0.2, 0.4, 0.5, 0.8),
                 tri(0.4, 0.6, 0.0, 0.1, 0.3, 0.4)});
}

inline std::vector<std::string> universe5() { return {"a", "b", "c", "d", "e"}; }

inline InsSet random_set(inse::logic::GradeGen& gen,
                         const std::vector<std::string>& universe) {
  std::vector<InsTriple> g;
  g.reserve(universe.size());
  for (std::size_t k = 0; k < universe.size(); ++k) g.push_back(gen.triple());
  return InsSet(universe, std::move(g));
}

inline bool sets_close(const InsSet& a, const InsSet& b, double tol) {
  if (!a.same_universe(b)) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!tri_close(a.at(k), b.at(k), tol)) return false;
  return true;
}

// Dyadic belief/doubt pairs; consistent variant keeps b+d <= 1.
inline inse::nrdm::ConfidencePair random_pair(inse::logic::GradeGen& gen) {
  return {gen.grade(), gen.grade()};
}

inline inse::nrdm::ConfidencePair random_consistent_pair(inse::logic::GradeGen& gen) {
  double b = gen.grade(), d = gen.grade();
  if (b + d > 1.0) {
    b = 1.0 - b;
    d = 1.0 - d;
  }
  return {b, d};
}

// On-grid consistent pair for completion-set tests: belief and doubt are
// multiples of 1/k with belief + doubt <= 1.
inline inse::nrdm::ConfidencePair grid_consistent_pair(inse::logic::GradeGen& gen, int k) {
  int b = static_cast<int>(gen.next() % static_cast<std::uint64_t>(k + 1));
  int d = static_cast<int>(gen.next() % static_cast<std::uint64_t>(k + 1 - b));
  return {static_cast<double>(b) / k, static_cast<double>(d) / k};
}

} // namespace testutil
