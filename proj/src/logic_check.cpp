#include "inse/logic/check.hpp"

#include <algorithm>
#include <cmath>

namespace inse::logic {

std::uint64_t GradeGen::next() {
  // splitmix64
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double GradeGen::grade() { return static_cast<double>(next() % 257) / 256.0; }

UnitInterval GradeGen::interval() {
  double a = grade(), b = grade();
  if (a > b) std::swap(a, b);
  return UnitInterval(a, b);
}

InsTriple GradeGen::triple() { return InsTriple(interval(), interval(), interval()); }

InsTriple GradeGen::degenerate_triple() {
  return InsTriple(grade(), grade(), grade());
}

namespace {

const InsTriple kCorners[3] = {InsTriple(1.0, 0.0, 0.0), InsTriple(0.0, 1.0, 1.0),
                               InsTriple(0.5, 0.5, 0.5)};

// Enumerates every assignment of the three corner triples to the variables
// (capped to keep the sweep bounded for wide formulas).
template <typename Fn>
bool corner_sweep(const std::vector<std::string>& vars, Fn visit) {
  const std::size_t n = vars.size();
  if (n == 0) {
    Interpretation m;
    return visit(m);
  }
  if (n > 10) {
    for (const auto& corner : kCorners) {
      Interpretation m;
      for (const auto& v : vars) m[v] = corner;
      if (!visit(m)) return false;
    }
    return true;
  }
  std::vector<int> idx(n, 0);
  while (true) {
    Interpretation m;
    for (std::size_t k = 0; k < n; ++k) m[vars[k]] = kCorners[idx[k]];
    if (!visit(m)) return false;
    std::size_t k = 0;
    while (k < n && ++idx[k] == 3) idx[k++] = 0;
    if (k == n) return true;
  }
}

// Tautology sampling draws degenerate (scalar) triples: with proper
// intervals the implication's t - t slack keeps even p -> p off the
// designated value, so designatedness is judged on scalar grades.
Interpretation random_degenerate(const std::vector<std::string>& vars, GradeGen& gen) {
  Interpretation m;
  for (const auto& v : vars) m[v] = gen.degenerate_triple();
  return m;
}

Interpretation random_interpretation(const std::vector<std::string>& vars, GradeGen& gen) {
  Interpretation m;
  for (const auto& v : vars) m[v] = gen.triple();
  return m;
}

} // namespace

TautologyVerdict check_tautology(const PropPtr& f, const DesignatedConvention& conv, int samples,
                                 std::uint64_t seed) {
  if (samples < 1) throw error("sample count must be at least 1");
  TautologyVerdict verdict;
  verdict.convention = conv;
  const auto vars = prop_variables(f);

  auto test = [&](const Interpretation& m) {
    ++verdict.samples_run;
    InsTriple v = eval_prop(f, m, conv);
    if (v != conv.truth) {
      verdict.falsified = true;
      verdict.counterexample = m;
      verdict.value = v;
      return false;
    }
    return true;
  };

  if (!corner_sweep(vars, test)) return verdict;
  GradeGen gen(seed);
  for (int s = 0; s < samples; ++s)
    if (!test(random_degenerate(vars, gen))) return verdict;
  return verdict;
}

EquivalenceVerdict check_equivalence(const PropPtr& f, const PropPtr& g, int samples,
                                     std::uint64_t seed) {
  if (samples < 1) throw error("sample count must be at least 1");
  EquivalenceVerdict verdict;
  auto vars = prop_variables(f);
  for (const auto& v : prop_variables(g))
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());

  auto test = [&](const Interpretation& m) {
    ++verdict.samples_run;
    InsTriple a = eval_prop(f, m);
    InsTriple b = eval_prop(g, m);
    if (a != b) {
      verdict.falsified = true;
      verdict.counterexample = m;
      verdict.lhs_value = a;
      verdict.rhs_value = b;
      return false;
    }
    return true;
  };

  if (!corner_sweep(vars, test)) return verdict;
  GradeGen gen(seed);
  for (int s = 0; s < samples; ++s)
    if (!test(random_interpretation(vars, gen))) return verdict;
  return verdict;
}

namespace {

struct Schema {
  std::string text;
  bool biconditional;
  PredPtr formula;                      // whole scheme, for implicational checks
  PredPtr lhs, rhs;                     // sides, for identity checks
  std::vector<std::pair<std::string, int>> preds;  // symbol -> arity
};

Term vx() { return Term::var("x"); }
Term vy() { return Term::var("y"); }

Schema make_schema(int id) {
  auto p1 = [](Term t) { return atom("p", {std::move(t)}); };
  auto q1 = [](Term t) { return atom("q", {std::move(t)}); };
  auto p2 = [](Term a, Term b) { return atom("p", {std::move(a), std::move(b)}); };
  PredPtr r0 = atom("r");
  PredPtr p0 = atom("p");

  switch (id) {
    case 1:
      return {"(forall x r) <-> r", true, nullptr, forall("x", r0), r0, {{"r", 0}}};
    case 2:
      return {"(exists x r) <-> r", true, nullptr, exists("x", r0), r0, {{"r", 0}}};
    case 3:
      return {"(forall x (forall y p(x,y))) <-> (forall y (forall x p(x,y)))", true, nullptr,
              forall("x", forall("y", p2(vx(), vy()))), forall("y", forall("x", p2(vx(), vy()))),
              {{"p", 2}}};
    case 4:
      return {"(exists x (exists y p(x,y))) <-> (exists y (exists x p(x,y)))", true, nullptr,
              exists("x", exists("y", p2(vx(), vy()))), exists("y", exists("x", p2(vx(), vy()))),
              {{"p", 2}}};
    case 5: {
      PredPtr lhs = forall("x", forall("y", p2(vx(), vy())));
      PredPtr rhs = forall("x", p2(vx(), vx()));
      return {"(forall x (forall y p(x,y))) -> (forall x p(x,x))", false, qimplies(lhs, rhs),
              lhs, rhs, {{"p", 2}}};
    }
    case 6: {
      PredPtr lhs = exists("x", p2(vx(), vx()));
      PredPtr rhs = exists("x", exists("y", p2(vx(), vy())));
      return {"(exists x p(x,x)) -> (exists x (exists y p(x,y)))", false, qimplies(lhs, rhs),
              lhs, rhs, {{"p", 2}}};
    }
    case 7: {
      PredPtr lhs = forall("x", p1(vx()));
      PredPtr rhs = exists("x", p1(vx()));
      return {"(forall x p(x)) -> (exists x p(x))", false, qimplies(lhs, rhs), lhs, rhs,
              {{"p", 1}}};
    }
    case 8: {
      PredPtr lhs = exists("x", forall("y", p2(vx(), vy())));
      PredPtr rhs = forall("y", exists("x", p2(vx(), vy())));
      return {"(exists x (forall y p(x,y))) -> (forall y (exists x p(x,y)))", false,
              qimplies(lhs, rhs), lhs, rhs, {{"p", 2}}};
    }
    case 9:
      return {"(forall x (p(x) and q(x))) <-> ((forall x p(x)) and (forall x q(x)))", true,
              nullptr, forall("x", qand(p1(vx()), q1(vx()))),
              qand(forall("x", p1(vx())), forall("x", q1(vx()))), {{"p", 1}, {"q", 1}}};
    case 10:
      return {"(exists x (p(x) or q(x))) <-> ((exists x p(x)) or (exists x q(x)))", true,
              nullptr, exists("x", qor(p1(vx()), q1(vx()))),
              qor(exists("x", p1(vx())), exists("x", q1(vx()))), {{"p", 1}, {"q", 1}}};
    case 11:
      return {"(p and (forall x q(x))) <-> (forall x (p and q(x)))", true, nullptr,
              qand(p0, forall("x", q1(vx()))), forall("x", qand(p0, q1(vx()))),
              {{"p", 0}, {"q", 1}}};
    case 12:
      return {"(p or (forall x q(x))) <-> (forall x (p or q(x)))", true, nullptr,
              qor(p0, forall("x", q1(vx()))), forall("x", qor(p0, q1(vx()))),
              {{"p", 0}, {"q", 1}}};
    case 13:
      return {"(p and (exists x q(x))) <-> (exists x (p and q(x)))", true, nullptr,
              qand(p0, exists("x", q1(vx()))), exists("x", qand(p0, q1(vx()))),
              {{"p", 0}, {"q", 1}}};
    case 14:
      return {"(p or (exists x q(x))) <-> (exists x (p or q(x)))", true, nullptr,
              qor(p0, exists("x", q1(vx()))), exists("x", qor(p0, q1(vx()))),
              {{"p", 0}, {"q", 1}}};
    case 15: {
      PredPtr lhs = forall("x", qimplies(p1(vx()), q1(vx())));
      PredPtr rhs = qimplies(forall("x", p1(vx())), forall("x", q1(vx())));
      return {"(forall x (p(x) -> q(x))) -> ((forall x p(x)) -> (forall x q(x)))", false,
              qimplies(lhs, rhs), lhs, rhs, {{"p", 1}, {"q", 1}}};
    }
    case 16: {
      PredPtr lhs = forall("x", qimplies(p1(vx()), q1(vx())));
      PredPtr rhs = qimplies(exists("x", p1(vx())), exists("x", q1(vx())));
      return {"(forall x (p(x) -> q(x))) -> ((exists x p(x)) -> (exists x q(x)))", false,
              qimplies(lhs, rhs), lhs, rhs, {{"p", 1}, {"q", 1}}};
    }
    case 17: {
      PredPtr lhs = exists("x", qand(p1(vx()), q1(vx())));
      PredPtr rhs = qand(exists("x", p1(vx())), exists("x", q1(vx())));
      return {"(exists x (p(x) and q(x))) -> ((exists x p(x)) and (exists x q(x)))", false,
              qimplies(lhs, rhs), lhs, rhs, {{"p", 1}, {"q", 1}}};
    }
    case 18: {
      PredPtr lhs = qor(forall("x", p1(vx())), forall("x", q1(vx())));
      PredPtr rhs = forall("x", qor(p1(vx()), q1(vx())));
      return {"((forall x p(x)) or (forall x q(x))) -> (forall x (p(x) or q(x)))", false,
              qimplies(lhs, rhs), lhs, rhs, {{"p", 1}, {"q", 1}}};
    }
    case 19:
      return {"(not (exists x (not p(x)))) <-> (forall x p(x))", true, nullptr,
              qnot(exists("x", qnot(p1(vx())))), forall("x", p1(vx())), {{"p", 1}}};
    case 20:
      return {"(not (forall x (not p(x)))) <-> (exists x p(x))", true, nullptr,
              qnot(forall("x", qnot(p1(vx())))), exists("x", p1(vx())), {{"p", 1}}};
    case 21:
      return {"(not (exists x p(x))) <-> (forall x (not p(x)))", true, nullptr,
              qnot(exists("x", p1(vx()))), forall("x", qnot(p1(vx()))), {{"p", 1}}};
    case 22:
      return {"(exists x (not p(x))) <-> (not (forall x p(x)))", true, nullptr,
              exists("x", qnot(p1(vx()))), qnot(forall("x", p1(vx()))), {{"p", 1}}};
    default:
      throw error("unknown schema id " + std::to_string(id));
  }
}

std::string model_dump(const FiniteModel& m) {
  std::string s = "domain size " + std::to_string(m.domain.size()) + ";";
  for (const auto& [name, table] : m.predicates) {
    s += " " + name + ":";
    for (const auto& [args, v] : table.rows) {
      s += " (";
      for (std::size_t k = 0; k < args.size(); ++k)
        s += (k ? "," : "") + m.domain[static_cast<std::size_t>(args[k])];
      s += ")=" + to_string(v);
    }
  }
  return s;
}

} // namespace

int schema_count() { return 22; }

SchemaInfo schema_info(int id) {
  Schema s = make_schema(id);
  return {id, s.text, s.biconditional};
}

FiniteModel random_model(GradeGen& gen, const std::vector<std::pair<std::string, int>>& preds,
                         int max_domain) {
  FiniteModel m;
  const int n = 1 + static_cast<int>(gen.next() % static_cast<std::uint64_t>(max_domain));
  for (int d = 0; d < n; ++d) m.domain.push_back(std::to_string(d + 1));
  for (const auto& [name, arity] : preds) {
    PredTable table;
    table.arity = arity;
    std::vector<int> args(static_cast<std::size_t>(arity), 0);
    while (true) {
      table.rows[args] = gen.triple();
      int k = 0;
      while (k < arity && ++args[static_cast<std::size_t>(k)] == n)
        args[static_cast<std::size_t>(k++)] = 0;
      if (k == arity) break;
    }
    m.predicates[name] = std::move(table);
  }
  return m;
}

SchemaReport check_schema_identity(int id, int trials, std::uint64_t seed,
                                   const DesignatedConvention& conv) {
  Schema s = make_schema(id);
  SchemaReport report;
  report.info = {id, s.text, s.biconditional};
  GradeGen gen(seed ^ static_cast<std::uint64_t>(id) * 0x100000001b3ULL);
  for (int t = 0; t < trials; ++t) {
    FiniteModel m = random_model(gen, s.preds);
    ++report.trials_run;
    if (s.biconditional) {
      InsTriple a = eval_pred(s.lhs, m, {}, conv);
      InsTriple b = eval_pred(s.rhs, m, {}, conv);
      if (a != b) {
        report.holds = false;
        report.counterexample =
            model_dump(m) + " lhs=" + to_string(a) + " rhs=" + to_string(b);
        return report;
      }
    } else {
      InsTriple v = eval_pred(s.formula, m, {}, conv);
      if (v != conv.truth) {
        report.holds = false;
        report.counterexample = model_dump(m) + " value=" + to_string(v);
        return report;
      }
    }
  }
  report.holds = true;
  return report;
}

} // namespace inse::logic
