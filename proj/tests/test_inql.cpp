#include "inse/inql/repl.hpp"

#include <doctest.h>

#include <sstream>

#include "helpers.hpp"

using namespace inse;
using namespace inse::inql;
using nrdm::ConfidencePair;
using nrdm::Tuple;

namespace {

Database eval_db() {
  Database db;
  std::istringstream cat(
      "domain Item: I1, I2\n"
      "domain Cat: q1, q2, q3\n"
      "domain Num: 1, 2, 5\n");
  db.catalog = nrdm::parse_domains(cat);
  std::istringstream rel(
      "scheme: I:Item, Q:Cat\n"
      "I1,q1,0.9,0.2\n"
      "I1,q2,1.0,0.0\n"
      "I1,q3,0.1,0.8\n"
      "I2,q1,1.0,1.0\n"
      "I2,q3,0.8,0.3\n");
  db.relations["EVAL"] = nrdm::parse_relation(rel, db.catalog);
  return db;
}

Session eval_session() {
  Session s;
  s.db = eval_db();
  return s;
}

Tuple key(const NeutroRelation& r, std::initializer_list<const char*> members) {
  std::vector<std::string> ms;
  for (const char* m : members) ms.emplace_back(m);
  return nrdm::parse_tuple(r.scheme(), ms);
}

} // namespace

TEST_CASE("parser round-trips a grammar-covering corpus") {
  const char* corpus[] = {
      "select I from EVAL where not ((I, Q) in (select I, Q from EVAL where 1 = 1))",
      "select A from R where exists (select A from R where A = 'a')",
      "select * from R where 1 = 1",
      "select A, B from R, S where R.A = S.B",
      "select A from R where A = 'x' and B = 'y' or not C = 'z'",
      "select A from R where not not A != B",
      "select A from R where 3 > any (select N from S where N < 5)",
      "select A from R where 2 <= all (select N from S where 1 = 1)",
      "select A from R where (A, B) in T",
      "select A from R where A in (select A from T where A != 'q')",
      "select A from R where exists (select B from S where B = R.A)",
      "select A from R where (A = 'x' or B = 'y') and C = 'z'",
      "select I from EVAL where not ((I, Q) in EVAL)",
      "select I, Q from EVAL where Q = 'q1' union select I, Q from EVAL where Q = 'q3'",
      "select A from R where A >= B",
      "select A from R where A < 'm' and not (B > 'n' or A = B)",
      "select R.A, S.A from R, S where R.A != S.A",
      "select A from R where not exists (select A from T where A = 'a')",
      "select A from R where A in T",
      "select A from R where 1 != 2",
      "select A from R where 'lit' = A",
      "select A from R where B = 5.5",
      "select A from R where x1 <= x2 and x2 <= x1",
      "select A from R where (A, 'c') in (select A, B from S where A = B)",
      "select A from R where 0 > all (select N from S where N != 2)",
      "select A from R where not (A = B and B = C) or A != C",
      "select A from R, S, T where A = B and B = C",
      "select A from R where A = 'a' union select A from S where A = 'b' union "
      "select A from T where A = 'c'",
      "select A from R where exists (select B from S where exists (select C from T where C = "
      "S.B))",
      "select A from R where ((A = 'x'))",
  };
  int count = 0;
  for (const char* text : corpus) {
    ++count;
    Query q1 = parse_query(text);
    std::string printed = print_query(q1);
    Query q2 = parse_query(printed);
    CHECK_MESSAGE(q1 == q2, "round trip failed for: ", text, " -> ", printed);
    CHECK(print_query(q2) == printed);
  }
  CHECK(count == 30);
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_query("select I from EVAL where not ((I, Q) in (select I from EVAL where 1 = 1)");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.diagnostic.line == 1);
    CHECK(e.diagnostic.column > 1);
  }
  CHECK_THROWS_AS(parse_query("select from EVAL where 1 = 1"), parse_error);
  CHECK_THROWS_AS(parse_query("I from EVAL"), parse_error);
  try {
    parse_query("select I\nfrom EVAL\nwhere not");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.diagnostic.line == 3);
  }
}

TEST_CASE("condition evaluation golden values") {
  Database db = eval_db();
  SessionConfig cfg;

  auto in_cond = [&](const char* text) {
    Query q = parse_query(std::string("select I from EVAL where ") + text);
    return q.selects[0]->where;
  };
  // Membership of a stored tuple.
  CHECK(eval_condition(in_cond("('I1','q3') in EVAL"), {}, db, cfg) == ConfidencePair(0.1, 0.8));
  // Negated membership.
  CHECK(eval_condition(in_cond("not (('I1','q1') in EVAL)"), {}, db, cfg) ==
        ConfidencePair(0.2, 0.9));
  // Absent tuple.
  CHECK(eval_condition(in_cond("('I2','q2') in EVAL"), {}, db, cfg) == ConfidencePair(0.0, 0.0));
  // Bare identifiers resolve as constants when no attribute matches.
  CHECK(eval_condition(in_cond("(I1, q3) in EVAL"), {}, db, cfg) == ConfidencePair(0.1, 0.8));
}

TEST_CASE("any and all conditions") {
  Database db = eval_db();
  SessionConfig cfg;
  std::istringstream rel(
      "scheme: N:Num\n"
      "1,1.0,0.0\n"
      "5,0.6,0.2\n");
  db.relations["NUMS"] = nrdm::parse_relation(rel, db.catalog);

  auto cond = [&](const char* text) {
    Query q = parse_query(std::string("select N from NUMS where ") + text);
    return q.selects[0]->where;
  };
  CHECK(eval_condition(cond("3 > any (select N from NUMS where 1 = 1)"), {}, db, cfg) ==
        ConfidencePair(1.0, 0.0));
  // No member below zero: the any-condition falls to <0,1>.
  CHECK(eval_condition(cond("0 > any (select N from NUMS where 1 = 1)"), {}, db, cfg) ==
        ConfidencePair(0.0, 1.0));
  // 9 exceeds every stored member: the all-condition holds vacuously... the
  // violator set is empty, so <1,0>.
  CHECK(eval_condition(cond("9 > all (select N from NUMS where 1 = 1)"), {}, db, cfg) ==
        ConfidencePair(1.0, 0.0));
  // 3 > all fails on the stored 5 with belief 0.6/doubt 0.2.
  CHECK(eval_condition(cond("3 > all (select N from NUMS where 1 = 1)"), {}, db, cfg) ==
        ConfidencePair(0.2, 0.6));
  // any/all over an inconsistent row adjust the doubt to 1 - belief.
  std::istringstream rel2(
      "scheme: N:Num\n"
      "1,1.0,1.0\n");
  db.relations["ODD"] = nrdm::parse_relation(rel2, db.catalog);
  CHECK(eval_condition(cond("3 > any (select N from ODD where 1 = 1)"), {}, db, cfg) ==
        ConfidencePair(1.0, 0.0));
  // Multi-attribute subqueries are rejected.
  Query bad = parse_query("select I from EVAL where 3 > any (select I, Q from EVAL where 1 = 1)");
  CHECK_THROWS_AS(eval_condition(bad.selects[0]->where, {}, db, cfg), error);
}

TEST_CASE("the contradictory-evaluation SELECT") {
  Database db = eval_db();
  SessionConfig cfg;
  cfg.explain = true;
  EvalTrace trace;
  Query q = parse_query("select I from EVAL where not ((I, Q) in EVAL)");
  NeutroRelation result = eval_query(q, db, cfg, &trace);

  REQUIRE(result.rows().size() == 2);
  CHECK(result.at(key(result, {"I1"})) == ConfidencePair(0.2, 0.8));
  CHECK(result.at(key(result, {"I2"})) == ConfidencePair(1.0, 0.8));
  REQUIRE(trace.sections.size() == 2);
  // The sigma table carries the worked intermediate rows (with the two
  // documented misprints corrected: (I1,q2) is <0,1>, not <0,0.1>).
  CHECK(trace.sections[0].find("(I1,q1) <0.2,0.9>") != std::string::npos);
  CHECK(trace.sections[0].find("(I1,q2) <0,1>") != std::string::npos);
  CHECK(trace.sections[0].find("(I1,q3) <0.1,0.8>") != std::string::npos);
  CHECK(trace.sections[0].find("(I2,q1) <1,1>") != std::string::npos);
  CHECK(trace.sections[0].find("(I2,q3) <0.3,0.8>") != std::string::npos);

  // Under the full declared range the projection sees the absent (I2,q2)
  // extension and its zero doubt, reproducing the reference result table.
  SessionConfig full = cfg;
  full.range = QuantifierRange::full;
  NeutroRelation paper = eval_query(q, db, full, nullptr);
  CHECK(paper.at(key(paper, {"I2"})) == ConfidencePair(1.0, 0.0));

  // Subquery form of the same query.
  Query q2 = parse_query(
      "select I from EVAL where not ((I, Q) in (select I, Q from EVAL where 1 = 1))");
  CHECK(eval_query(q2, db, cfg, nullptr) == result);
}

TEST_CASE("select star and neutral conditions") {
  Database db = eval_db();
  SessionConfig cfg;
  Query q = parse_query("select * from EVAL where 1 = 1");
  NeutroRelation r = eval_query(q, db, cfg);
  CHECK(r == db.relations.at("EVAL"));
}

TEST_CASE("union queries") {
  Database db = eval_db();
  SessionConfig cfg;
  Query dup = parse_query(
      "select I from EVAL where Q = 'q1' union select I from EVAL where Q = 'q1'");
  Query once = parse_query("select I from EVAL where Q = 'q1'");
  CHECK(eval_query(dup, db, cfg) == eval_query(once, db, cfg));

  // Disjoint supports: the absent side contributes belief 0 and doubt 0, so
  // the union zeroes the doubt of one-sided rows.
  std::istringstream rel_a("scheme: I:Item\nI1,0.7,0.2\n");
  std::istringstream rel_b("scheme: I:Item\nI2,0.4,0.5\n");
  db.relations["A"] = nrdm::parse_relation(rel_a, db.catalog);
  db.relations["B"] = nrdm::parse_relation(rel_b, db.catalog);
  Query disjoint = parse_query(
      "select I from A where 1 = 1 union select I from B where 1 = 1");
  NeutroRelation u = eval_query(disjoint, db, cfg);
  CHECK(u.at(key(u, {"I1"})) == ConfidencePair(0.7, 0.0));
  CHECK(u.at(key(u, {"I2"})) == ConfidencePair(0.4, 0.0));

  Query sym = parse_query(
      "select I from B where 1 = 1 union select I from A where 1 = 1");
  CHECK(eval_query(sym, db, cfg) == u);

  Query bad = parse_query("select I from EVAL where 1 = 1 union select Q from EVAL where 1 = 1");
  CHECK_THROWS_AS(eval_query(bad, db, cfg), error);
}

TEST_CASE("correlated subqueries and products") {
  Database db = eval_db();
  std::istringstream rel(
      "scheme: J:Item\n"
      "I1,1.0,0.0\n");
  db.relations["PICK"] = nrdm::parse_relation(rel, db.catalog);
  SessionConfig cfg;
  Query q = parse_query(
      "select I from EVAL where exists (select J from PICK where J = EVAL.I)");
  NeutroRelation r = eval_query(q, db, cfg);
  CHECK(r.at(key(r, {"I1"})) == ConfidencePair(1.0, 0.0));
  CHECK(r.at(key(r, {"I2"})) == ConfidencePair(0.0, 1.0));

  // Two-relation product with qualified attributes; the (I1,q2) candidate
  // carries <1,0> into the projected group.
  Query prod = parse_query("select I, J from EVAL, PICK where EVAL.I = PICK.J");
  NeutroRelation pr = eval_query(prod, db, cfg);
  CHECK(pr.at(key(pr, {"I1", "I1"})) == ConfidencePair(1.0, 0.0));

  // Ambiguous unqualified references are diagnosed.
  std::istringstream rel2(
      "scheme: I:Item\n"
      "I2,0.5,0.5\n");
  db.relations["OTHER"] = nrdm::parse_relation(rel2, db.catalog);
  Query amb = parse_query("select I from EVAL, OTHER where 1 = 1");
  CHECK_THROWS_AS(eval_query(amb, db, cfg), error);
}

TEST_CASE("repl executes queries, algebra and meta commands") {
  Session s = eval_session();

  auto r1 = repl_execute("\\classify EVAL", s);
  CHECK(!r1.is_error);
  CHECK(r1.output.find("inconsistent") != std::string::npos);

  auto r2 = repl_execute("select I from EVAL where not ((I, Q) in EVAL)", s);
  CHECK(!r2.is_error);
  CHECK(r2.output.find("(I1) <0.2,0.8>") != std::string::npos);
  CHECK(r2.output.find("(I2) <1,0.8>") != std::string::npos);

  auto r3 = repl_execute("let C = complement(EVAL)", s);
  CHECK(!r3.is_error);
  CHECK(s.db.relations.count("C") == 1);

  auto r4 = repl_execute("{ d of (I:Item) | exists t of (I:Item, Q:Cat) . "
                         "(t.I = d.I and t in EVAL and not (t in EVAL)) }",
                         s);
  CHECK(!r4.is_error);
  CHECK(r4.output.find("(I1) <0.2,0.8>") != std::string::npos);

  auto r5 = repl_execute("let M = split(EVAL)", s);
  CHECK(!r5.is_error);
  auto r6 = repl_execute("combine(M)", s);
  CHECK(!r6.is_error);
  CHECK(r6.output.find("(I2,q1) <1,1>") != std::string::npos);

  auto r7 = repl_execute("select_guard(combine(M), Q != 'q1')", s);
  CHECK(!r7.is_error);
  CHECK(r7.output.find("(I1,q1) <0,1>") != std::string::npos);
  CHECK(r7.output.find("(I2,q3) <0.8,0.3>") != std::string::npos);
  // Join on raw inconsistent relations is refused; the split form works.
  auto r8 = repl_execute("join(EVAL, EVAL)", s);
  CHECK(r8.is_error);
  auto r9 = repl_execute("combine(join(split(EVAL), split(EVAL)))", s);
  CHECK(!r9.is_error);
  CHECK(r9.output.find("(I2,q1) <1,1>") != std::string::npos);

  auto bad = repl_execute("frobnicate(EVAL)", s);
  CHECK(bad.is_error);
  auto unknown_meta = repl_execute("\\bogus", s);
  CHECK(unknown_meta.is_error);
  CHECK(unknown_meta.output.find("\\help") != std::string::npos);

  auto grid = repl_execute("\\set grid 4", s);
  CHECK(!grid.is_error);
  CHECK(s.cfg.grid_k == 4);
  auto range = repl_execute("\\set quantifier-range full", s);
  CHECK(!range.is_error);
  CHECK(s.cfg.range == QuantifierRange::full);
  auto fmt = repl_execute("\\set format csv", s);
  CHECK(!fmt.is_error);
  auto csv = repl_execute("select I from EVAL where Q = 'q2'", s);
  CHECK(csv.output.find("I,belief,doubt") != std::string::npos);
}

TEST_CASE("repl completion-set commands") {
  Session s = eval_session();
  auto setg = repl_execute("\\set grid 10", s);
  CHECK(!setg.is_error);
  auto mk = repl_execute("let K = select I, Q from EVAL where Q = q3 and I = I1", s);
  CHECK(!mk.is_error);
  auto reps = repl_execute("\\reps K", s);
  CHECK(!reps.is_error);
  CHECK(reps.output.find("22 completion(s)") != std::string::npos);
  auto sg = repl_execute("\\stronggen union K K", s);
  CHECK(!sg.is_error);
  CHECK(sg.output.find("equal") == 0);
  auto pj = repl_execute("\\stronggen project:I K", s);
  CHECK(!pj.is_error);
  CHECK(pj.output.find("equal") == 0);
  // reps of an inconsistent relation is refused with a diagnostic.
  auto bad = repl_execute("\\reps EVAL", s);
  CHECK(bad.is_error);
  auto usage = repl_execute("\\stronggen frobnicate K", s);
  CHECK(usage.is_error);
}

TEST_CASE("repl load and save round-trip") {
  Session s = eval_session();
  auto saved = repl_execute("\\save EVAL /tmp/inse_eval_rt.rel", s);
  CHECK(!saved.is_error);
  auto loaded = repl_execute("\\load /tmp/inse_eval_rt.rel COPY", s);
  CHECK(!loaded.is_error);
  CHECK(s.db.relations.at("COPY") == s.db.relations.at("EVAL"));
  auto missing = repl_execute("\\load /tmp/does_not_exist.rel", s);
  CHECK(missing.is_error);
}

TEST_CASE("query evaluation and traces are deterministic") {
  Session s = eval_session();
  s.cfg.explain = true;
  Query q = parse_query("select I from EVAL where not ((I, Q) in EVAL)");
  EvalTrace t1, t2;
  NeutroRelation r1 = eval_query(q, s.db, s.cfg, &t1);
  NeutroRelation r2 = eval_query(q, s.db, s.cfg, &t2);
  CHECK(r1 == r2);
  CHECK(t1.sections == t2.sections);
}

TEST_CASE("csv and json rendering") {
  Session s = eval_session();
  const NeutroRelation& eval = s.db.relations.at("EVAL");
  std::string csv = render_relation(eval, OutputFormat::csv);
  CHECK(csv.find("I,Q,belief,doubt\n") == 0);
  CHECK(csv.find("I1,q1,0.9,0.2\n") != std::string::npos);
  std::string json = render_relation(eval, OutputFormat::json);
  CHECK(json.find("\"belief\": 0.9") != std::string::npos);
}
