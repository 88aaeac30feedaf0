#pragma once

#include "inse/interval.hpp"

namespace inse {

// Truth / indeterminacy / falsity grade triple. The three components are
// independent: no constraint links t, i and f.
struct InsTriple {
  UnitInterval t, i, f;

  InsTriple() = default;
  InsTriple(UnitInterval t_, UnitInterval i_, UnitInterval f_) : t(t_), i(i_), f(f_) {}
  InsTriple(double t_, double i_, double f_)
      : t(UnitInterval::point(t_)), i(UnitInterval::point(i_)), f(UnitInterval::point(f_)) {}

  bool operator==(const InsTriple& o) const { return t == o.t && i == o.i && f == o.f; }
  bool operator!=(const InsTriple& o) const { return !(*this == o); }
};

// <0,1,1> and <1,0,0>, the bottom and top of the grade order.
inline InsTriple ins_bottom() { return InsTriple(0.0, 1.0, 1.0); }
inline InsTriple ins_top() { return InsTriple(1.0, 0.0, 0.0); }

// Grade order: more true, less indeterminate, less false.
inline bool tri_leq(const InsTriple& a, const InsTriple& b) {
  return iv_leq(a.t, b.t) && iv_leq(b.i, a.i) && iv_leq(b.f, a.f);
}

// Intersection / conjunction combinator: <min t, max i, max f>.
inline InsTriple tri_meet(const InsTriple& a, const InsTriple& b) {
  return {iv_min(a.t, b.t), iv_max(a.i, b.i), iv_max(a.f, b.f)};
}

// Union / disjunction combinator: <max t, min i, min f>.
inline InsTriple tri_join(const InsTriple& a, const InsTriple& b) {
  return {iv_max(a.t, b.t), iv_min(a.i, b.i), iv_min(a.f, b.f)};
}

// Complement / negation: swaps t and f, reflects i.
inline InsTriple tri_neg(const InsTriple& a) {
  return {a.f, iv_one_minus(a.i), a.t};
}

inline InsTriple tri_add(const InsTriple& a, const InsTriple& b) {
  return {iv_add(a.t, b.t), iv_add(a.i, b.i), iv_add(a.f, b.f)};
}

// Set difference on grades: t = min(t_a, f_b); i spans max against the
// reflected i_b; f = max(f_a, t_b).
inline InsTriple tri_difference(const InsTriple& a, const InsTriple& b) {
  return {iv_min(a.t, b.f), iv_max(a.i, iv_one_minus(b.i)), iv_max(a.f, b.t)};
}

// Product combinator: probabilistic sum on t, endpoint products on i and f.
// The three-term sum can drift a rounding step outside [0,1], so it is
// clamped back before the interval is formed.
inline InsTriple tri_product(const InsTriple& a, const InsTriple& b) {
  auto prob_sum = [](double p, double q) {
    return std::min(1.0, std::max(0.0, p + q - p * q));
  };
  double tlo = prob_sum(a.t.lo, b.t.lo), thi = prob_sum(a.t.hi, b.t.hi);
  UnitInterval t{tlo, std::max(thi, tlo)};
  UnitInterval i{a.i.lo * b.i.lo, a.i.hi * b.i.hi};
  UnitInterval f{a.f.lo * b.f.lo, a.f.hi * b.f.hi};
  return {t, i, f};
}

inline InsTriple tri_scale(const InsTriple& a, double k) {
  return {iv_scale(a.t, k), iv_scale(a.i, k), iv_scale(a.f, k)};
}

inline InsTriple tri_div(const InsTriple& a, double k) {
  return {iv_div(a.t, k), iv_div(a.i, k), iv_div(a.f, k)};
}

// Folds indeterminacy into truth and zeroes it.
inline InsTriple tri_truth_favorite(const InsTriple& a) {
  return {iv_add(a.t, a.i), UnitInterval::point(0.0), a.f};
}

// Folds indeterminacy into falsity and zeroes it.
inline InsTriple tri_false_favorite(const InsTriple& a) {
  return {a.t, UnitInterval::point(0.0), iv_add(a.f, a.i)};
}

inline bool tri_close(const InsTriple& a, const InsTriple& b, double tol) {
  return iv_close(a.t, b.t, tol) && iv_close(a.i, b.i, tol) && iv_close(a.f, b.f, tol);
}

std::string to_string(const InsTriple& a);

// Parses "<[t1,t2],[i1,i2],[f1,f2]>"; each component may be a bare decimal.
InsTriple parse_triple(const std::string& text);

} // namespace inse
