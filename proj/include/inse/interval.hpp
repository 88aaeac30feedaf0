#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace inse {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Closed subinterval [lo, hi] of the unit interval. The atom of every grade
// computation: truth/indeterminacy/falsity degrees are values of this type,
// with degenerate intervals [v,v] playing the role of scalar grades.
struct UnitInterval {
  double lo{0.0};
  double hi{0.0};

  UnitInterval() = default;

  UnitInterval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
      throw error("interval endpoints must be finite");
    if (lo < 0.0 || hi > 1.0)
      throw error("interval endpoints must lie in [0,1]");
    if (lo > hi)
      throw error("interval lower endpoint exceeds upper endpoint");
  }

  static UnitInterval point(double v) { return UnitInterval(v, v); }

  bool operator==(const UnitInterval& o) const { return lo == o.lo && hi == o.hi; }
  bool operator!=(const UnitInterval& o) const { return !(*this == o); }
};

// Endpoint-wise order: a <= b iff both endpoints are <=.
inline bool iv_leq(const UnitInterval& a, const UnitInterval& b) {
  return a.lo <= b.lo && a.hi <= b.hi;
}

inline UnitInterval iv_min(const UnitInterval& a, const UnitInterval& b) {
  return {std::min(a.lo, b.lo), std::min(a.hi, b.hi)};
}

inline UnitInterval iv_max(const UnitInterval& a, const UnitInterval& b) {
  return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

// Endpoint-wise sum clamped at 1. The clamp preserves endpoint order, so the
// result is always a valid interval.
inline UnitInterval iv_add(const UnitInterval& a, const UnitInterval& b) {
  return {std::min(a.lo + b.lo, 1.0), std::min(a.hi + b.hi, 1.0)};
}

// [a.lo - b.hi, a.hi - b.lo] clamped at 0 endpoint-wise.
inline UnitInterval iv_sub(const UnitInterval& a, const UnitInterval& b) {
  return {std::max(a.lo - b.hi, 0.0), std::max(a.hi - b.lo, 0.0)};
}

// 1 - a = [1 - a.hi, 1 - a.lo]; an involution and order anti-isomorphism.
inline UnitInterval iv_one_minus(const UnitInterval& a) {
  return {1.0 - a.hi, 1.0 - a.lo};
}

inline UnitInterval iv_scale(const UnitInterval& a, double k) {
  if (!(k > 0.0) || !std::isfinite(k))
    throw error("scale factor must be a positive finite real");
  return {std::min(a.lo * k, 1.0), std::min(a.hi * k, 1.0)};
}

inline UnitInterval iv_div(const UnitInterval& a, double k) {
  if (!(k > 0.0) || !std::isfinite(k))
    throw error("divisor must be a positive finite real");
  return iv_scale(a, 1.0 / k);
}

inline bool iv_close(const UnitInterval& a, const UnitInterval& b, double tol) {
  return std::fabs(a.lo - b.lo) <= tol && std::fabs(a.hi - b.hi) <= tol;
}

std::string fmt_grade(double v);
std::string to_string(const UnitInterval& a);

// Parses "[a,b]"; a bare decimal v parses as [v,v].
UnitInterval parse_interval(const std::string& text);

} // namespace inse
