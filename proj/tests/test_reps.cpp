#include "inse/nrdm/reps.hpp"

#include <doctest.h>

#include "helpers.hpp"

using namespace inse;
using namespace inse::nrdm;
using testutil::grid_consistent_pair;

namespace {

DomainPtr d2() {
  static DomainPtr d = std::make_shared<Domain>(Domain{"d2", {"a", "b"}});
  return d;
}

NeutroRelation grid_relation(logic::GradeGen& gen, const Scheme& s, int k) {
  NeutroRelation r(s);
  for (std::size_t rank = 0; rank < s.tuple_count(); ++rank)
    r.set(tuple_at(s, rank), grid_consistent_pair(gen, k));
  return r;
}

} // namespace

TEST_CASE("completion enumeration") {
  Scheme s({{"A", d2()}});
  // Total relation: a single completion, the belief function itself.
  NeutroRelation total(s);
  total.set({0}, {0.5, 0.5});
  total.set({1}, {1.0, 0.0});
  auto reps = reps_enum(total, 2);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].at({0}) == 0.5);
  CHECK(reps[0].at({1}) == 1.0);

  // Unknown tuple: the gap spans the whole grid.
  Scheme one({{"A", std::make_shared<Domain>(Domain{"d1", {"t"}})}});
  NeutroRelation unknown(one);
  auto all = reps_enum(unknown, 2);
  REQUIRE(all.size() == 3);
  CHECK(all[0].at({0}) == 0.0);
  CHECK(all[1].at({0}) == 0.5);
  CHECK(all[2].at({0}) == 1.0);

  // Pinched gap.
  NeutroRelation pinched(one);
  pinched.set({0}, {0.5, 0.5});
  auto just = reps_enum(pinched, 2);
  REQUIRE(just.size() == 1);
  CHECK(just[0].at({0}) == 0.5);

  NeutroRelation bad(one);
  bad.set({0}, {1.0, 1.0});
  CHECK_THROWS_AS(reps_enum(bad, 2), error);

  Scheme wide({{"A", d2()}, {"B", d2()}, {"C", d2()}, {"D", d2()}});
  CHECK_THROWS_AS(reps_enum(NeutroRelation(wide), 2), error);  // 16 tuples > guard
}

TEST_CASE("strong generalization of the set operators") {
  logic::GradeGen gen(71);
  Scheme s({{"A", d2()}, {"B", d2()}});
  for (int grid : {2, 4}) {
    for (int trial = 0; trial < 25; ++trial) {
      NeutroRelation r = grid_relation(gen, s, grid);
      NeutroRelation q = grid_relation(gen, s, grid);
      auto u = strong_gen_check(StrongGenOp::union_op(), r, &q, grid);
      CHECK_MESSAGE(u.equal, "union witness: ", u.witness);
      auto c = strong_gen_check(StrongGenOp::complement_op(), r, nullptr, grid);
      CHECK_MESSAGE(c.equal, "complement witness: ", c.witness);
    }
  }
}

TEST_CASE("strong generalization of projection and selection") {
  logic::GradeGen gen(73);
  Scheme sx({{"X", d2()}, {"Y", d2()}});
  GuardPtr guard = guard_cmp(CmpOp::Ne, GuardOperand::attr("X"), GuardOperand::attr("Y"));
  for (int grid : {2, 4}) {
    for (int trial = 0; trial < 10; ++trial) {
      NeutroRelation r = grid_relation(gen, sx, grid);
      auto p = strong_gen_check(StrongGenOp::project_op({"X"}), r, nullptr, grid);
      CHECK_MESSAGE(p.equal, "project witness: ", p.witness);
      auto sel = strong_gen_check(StrongGenOp::select_op(guard), r, nullptr, grid);
      CHECK_MESSAGE(sel.equal, "select witness: ", sel.witness);
    }
  }
}

TEST_CASE("join: the completion image is contained in, but can be strictly "
          "inside, the completion box") {
  logic::GradeGen gen(73);
  Scheme sx({{"X", d2()}, {"Y", d2()}});
  Scheme sy({{"Y", d2()}, {"Z", d2()}});
  // Containment direction: every join of completions is a completion of the
  // joined relation. This is the half of the equality that actually holds.
  for (int grid : {2, 4}) {
    for (int trial = 0; trial < 10; ++trial) {
      NeutroRelation r = grid_relation(gen, sx, grid);
      NeutroRelation q = grid_relation(gen, sy, grid);
      NeutroRelation joined = n_join(r, q);
      const Scheme& js = joined.scheme();
      auto r_reps = reps_enum(r, grid);
      auto q_reps = reps_enum(q, grid);
      for (const auto& a : r_reps)
        for (const auto& b : q_reps) {
          FuzzyRelation image = f_join(a, b);
          for (std::size_t rank = 0; rank < js.tuple_count(); ++rank) {
            ConfidencePair bounds = joined.at(tuple_at(js, rank));
            CHECK(image.grades[rank] >= bounds.belief - 1e-12);
            CHECK(image.grades[rank] <= 1.0 - bounds.doubt + 1e-12);
          }
        }
    }
  }
  // Totality collapses both sides to singletons; there the equality holds.
  NeutroRelation rt(sx), qt(sy);
  for (std::size_t rank = 0; rank < sx.tuple_count(); ++rank)
    rt.set(tuple_at(sx, rank), gen.next() % 2 ? ConfidencePair(1.0, 0.0)
                                              : ConfidencePair(0.5, 0.5));
  for (std::size_t rank = 0; rank < sy.tuple_count(); ++rank)
    qt.set(tuple_at(sy, rank), gen.next() % 2 ? ConfidencePair(0.0, 1.0)
                                              : ConfidencePair(0.5, 0.5));
  auto total_verdict = strong_gen_check(StrongGenOp::join_op(), rt, &qt, 2);
  CHECK(total_verdict.equal);
  CHECK(total_verdict.lhs_count == 1);

  // Strictness: a two-tuple-per-side instance where a box completion is not
  // a join image. With R(x1) in [0,1/2], R(x2) in [1/2,1], S(z1) in [0,1/2]
  // and S(z2) pinned at 1, the vector (1/2, 0, *, *) needs q_s(z1) = 1/2 and
  // q_r(x2) = 0 < 1/2 at once.
  Scheme ux({{"X", d2()}});
  Scheme uz({{"Z", d2()}});
  NeutroRelation r(ux), s(uz);
  r.set({0}, {0.0, 0.5});
  r.set({1}, {0.5, 0.0});
  s.set({0}, {0.0, 0.5});
  s.set({1}, {1.0, 0.0});
  auto verdict = strong_gen_check(StrongGenOp::join_op(), r, &s, 2);
  CHECK(!verdict.equal);
  CHECK(verdict.rhs_count < verdict.lhs_count);
  CHECK(!verdict.witness.empty());
}

TEST_CASE("serial and parallel image enumeration agree") {
  logic::GradeGen gen(79);
  Scheme sx({{"X", d2()}, {"Y", d2()}});
  Scheme sy({{"Y", d2()}, {"Z", d2()}});
  for (int trial = 0; trial < 5; ++trial) {
    NeutroRelation r = grid_relation(gen, sx, 4);
    NeutroRelation q = grid_relation(gen, sy, 4);
    auto a = strong_gen_check(StrongGenOp::join_op(), r, &q, 4, exec_policy::parallel);
    auto b = strong_gen_check(StrongGenOp::join_op(), r, &q, 4, exec_policy::serial);
    CHECK(a.equal == b.equal);
    CHECK(a.lhs_count == b.lhs_count);
    CHECK(a.rhs_count == b.rhs_count);
  }
}

TEST_CASE("union and intersection completions differ where the gaps differ") {
  Scheme s({{"A", d2()}});
  NeutroRelation r(s);
  r.set({0}, {0.0, 0.5});
  r.set({1}, {0.5, 0.0});
  NeutroRelation q(s);
  q.set({0}, {0.5, 0.5});
  q.set({1}, {0.0, 1.0});
  auto union_reps = reps_enum(n_union(r, q), 2);
  auto inter_reps = reps_enum(n_intersect(r, q), 2);
  std::vector<std::vector<double>> us, is;
  for (const auto& f : union_reps) us.push_back(f.grades);
  for (const auto& f : inter_reps) is.push_back(f.grades);
  std::sort(us.begin(), us.end());
  std::sort(is.begin(), is.end());
  CHECK(us != is);
  auto verdict = strong_gen_check(StrongGenOp::union_op(), r, &q, 2);
  CHECK(verdict.equal);
}

TEST_CASE("reps rejects inconsistent and oversized input") {
  Scheme s({{"A", d2()}});
  NeutroRelation inc(s);
  inc.set({0}, {0.9, 0.9});
  CHECK_THROWS_AS(reps_enum(inc, 4), error);
  RepsLimits tight;
  tight.max_relations = 2;
  NeutroRelation open(s);
  CHECK_THROWS_AS(reps_enum(open, 4, tight), error);
}
