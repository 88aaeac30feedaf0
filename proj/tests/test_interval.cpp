#include "inse/interval.hpp"

#include <doctest.h>

#include "helpers.hpp"

using namespace inse;
using testutil::iv;

TEST_CASE("constructor rejects invalid endpoints") {
  CHECK_THROWS_AS(UnitInterval(0.5, 0.4), error);
  CHECK_THROWS_AS(UnitInterval(-0.1, 0.4), error);
  CHECK_THROWS_AS(UnitInterval(0.1, 1.4), error);
  CHECK_THROWS_AS(UnitInterval(0.0, std::numeric_limits<double>::quiet_NaN()), error);
  CHECK_THROWS_AS(UnitInterval(std::numeric_limits<double>::infinity(), 1.0), error);
  CHECK(UnitInterval(0.0, 1.0) == iv(0, 1));
}

TEST_CASE("interval addition clamps at one") {
  CHECK(iv_close(iv_add(iv(0.2, 0.4), iv(0.5, 0.7)), iv(0.7, 1.0), 1e-9));
  CHECK(iv_add(iv(0, 0), iv(0.3, 0.9)) == iv(0.3, 0.9));
  CHECK(iv_add(iv(0.6, 0.9), iv(0.7, 0.8)) == iv(1.0, 1.0));
}

TEST_CASE("interval subtraction clamps at zero") {
  CHECK(iv_close(iv_sub(iv(0.7, 0.7), iv(0.4, 0.4)), iv(0.3, 0.3), 1e-9));
  CHECK(iv_sub(iv(0.2, 0.3), iv(0.5, 0.9)) == iv(0, 0));
  CHECK(iv_close(iv_sub(iv(0.3, 0.6), iv(0.1, 0.2)), iv(0.1, 0.5), 1e-9));
}

TEST_CASE("one minus reflects the interval") {
  CHECK(iv_close(iv_one_minus(iv(0.3, 0.5)), iv(0.5, 0.7), 1e-9));
  CHECK(iv_one_minus(iv(0, 1)) == iv(0, 1));
  UnitInterval a(0.25, 0.875);  // dyadic, so the involution is exact
  CHECK(iv_one_minus(iv_one_minus(a)) == a);
}

TEST_CASE("min and max work endpoint-wise") {
  CHECK(iv_min(iv(0.2, 0.4), iv(0.5, 0.7)) == iv(0.2, 0.4));
  UnitInterval a(0.1, 0.6);
  CHECK(iv_max(a, a) == a);
  // The result need not be one of the operands.
  CHECK(iv_min(iv(0.2, 0.7), iv(0.4, 0.5)) == iv(0.2, 0.5));
}

TEST_CASE("scaling clamps and validates the factor") {
  CHECK(iv_close(iv_scale(iv(0.3, 0.5), 2.0), iv(0.6, 1.0), 1e-9));
  CHECK(iv_scale(iv(0.4, 0.8), 1.0) == iv(0.4, 0.8));
  CHECK(iv_close(iv_div(iv(0.4, 0.8), 2.0), iv(0.2, 0.4), 1e-9));
  CHECK_THROWS_AS(iv_scale(iv(0.4, 0.8), 0.0), error);
  CHECK_THROWS_AS(iv_scale(iv(0.4, 0.8), -2.0), error);
  CHECK_THROWS_AS(iv_div(iv(0.4, 0.8), 0.0), error);
}

TEST_CASE("lattice laws hold exactly on dyadic samples") {
  logic::GradeGen gen(7);
  for (int trial = 0; trial < 300; ++trial) {
    UnitInterval a = gen.interval(), b = gen.interval(), c = gen.interval();
    CHECK(iv_min(a, a) == a);
    CHECK(iv_max(a, a) == a);
    CHECK(iv_min(a, b) == iv_min(b, a));
    CHECK(iv_max(a, b) == iv_max(b, a));
    CHECK(iv_min(a, iv_min(b, c)) == iv_min(iv_min(a, b), c));
    CHECK(iv_max(a, iv_max(b, c)) == iv_max(iv_max(a, b), c));
    CHECK(iv_min(a, iv_max(b, c)) == iv_max(iv_min(a, b), iv_min(a, c)));
    CHECK(iv_max(a, iv_min(b, c)) == iv_min(iv_max(a, b), iv_max(a, c)));
    // Involution and antitone reflection.
    CHECK(iv_one_minus(iv_one_minus(a)) == a);
    if (iv_leq(a, b)) CHECK(iv_leq(iv_one_minus(b), iv_one_minus(a)));
    // Monotonicity of the clamped sum and difference.
    UnitInterval lo = iv_min(a, b), hi = iv_max(a, b);
    CHECK(iv_leq(iv_add(lo, c), iv_add(hi, c)));
    CHECK(iv_leq(iv_sub(lo, c), iv_sub(hi, c)));
    CHECK(iv_leq(iv_sub(c, hi), iv_sub(c, lo)));
    // Clamps preserve endpoint order, so results are valid without swaps.
    UnitInterval sum = iv_add(a, b);
    CHECK(sum.lo <= sum.hi);
    UnitInterval diff = iv_sub(a, b);
    CHECK(diff.lo <= diff.hi);
  }
}

TEST_CASE("text form round-trips") {
  CHECK(to_string(iv(0.2, 0.4)) == "[0.2,0.4]");
  CHECK(parse_interval("[0.2,0.4]") == iv(0.2, 0.4));
  CHECK(parse_interval("0.7") == iv(0.7, 0.7));
  CHECK(parse_interval(" [ 0 , 1 ] ") == iv(0, 1));
  CHECK_THROWS_AS(parse_interval("[0.5,0.2]"), error);
  CHECK_THROWS_AS(parse_interval("[0.5"), error);
  CHECK_THROWS_AS(parse_interval("[0.5,0.7] junk"), error);
}

TEST_CASE("triple text form round-trips") {
  InsTriple t = testutil::tri(0.2, 0.4, 0.3, 0.5, 0.3, 0.5);
  CHECK(parse_triple(to_string(t)) == t);
  CHECK(parse_triple("<0.5,0.4,0.7>") == InsTriple(0.5, 0.4, 0.7));
}

TEST_CASE("printing and reparsing random grades is exact") {
  logic::GradeGen gen(123);
  for (int trial = 0; trial < 300; ++trial) {
    UnitInterval a = gen.interval();
    CHECK(parse_interval(to_string(a)) == a);
    InsTriple t = gen.triple();
    CHECK(parse_triple(to_string(t)) == t);
  }
}
