#include "inse/logic/eval.hpp"

#include <algorithm>
#include <set>

namespace inse::logic {

PropPtr pvar(std::string name) {
  return std::make_shared<PropFormula>(PropFormula{PropFormula::Kind::Var, std::move(name)});
}
PropPtr ptruth() { return std::make_shared<PropFormula>(PropFormula{PropFormula::Kind::Truth}); }
PropPtr pfalsity() { return std::make_shared<PropFormula>(PropFormula{PropFormula::Kind::Falsity}); }
PropPtr pnot(PropPtr f) {
  PropFormula n{PropFormula::Kind::Not};
  n.lhs = std::move(f);
  return std::make_shared<PropFormula>(std::move(n));
}
PropPtr pbin(Conn c, PropPtr a, PropPtr b) {
  PropFormula n{PropFormula::Kind::Binary};
  n.conn = c;
  n.lhs = std::move(a);
  n.rhs = std::move(b);
  return std::make_shared<PropFormula>(std::move(n));
}

static void collect_prop_vars(const PropPtr& f, std::set<std::string>& out) {
  switch (f->kind) {
    case PropFormula::Kind::Var: out.insert(f->name); break;
    case PropFormula::Kind::Not: collect_prop_vars(f->lhs, out); break;
    case PropFormula::Kind::Binary:
      collect_prop_vars(f->lhs, out);
      collect_prop_vars(f->rhs, out);
      break;
    default: break;
  }
}

std::vector<std::string> prop_variables(const PropPtr& f) {
  std::set<std::string> s;
  collect_prop_vars(f, s);
  return {s.begin(), s.end()};
}

static const char* conn_name(Conn c) {
  switch (c) {
    case Conn::And: return "and";
    case Conn::Or: return "or";
    case Conn::Implies: return "implies";
    case Conn::Iff: return "iff";
  }
  return "?";
}

std::string to_text(const PropPtr& f) {
  switch (f->kind) {
    case PropFormula::Kind::Var: return f->name;
    case PropFormula::Kind::Truth: return "true";
    case PropFormula::Kind::Falsity: return "false";
    case PropFormula::Kind::Not: return "(not " + to_text(f->lhs) + ")";
    case PropFormula::Kind::Binary:
      return "(" + std::string(conn_name(f->conn)) + " " + to_text(f->lhs) + " " +
             to_text(f->rhs) + ")";
  }
  return "?";
}

namespace {

InsTriple implication(const InsTriple& p, const InsTriple& q) {
  return {iv_add(iv_one_minus(p.t), q.t), iv_sub(q.i, p.i), iv_sub(q.f, p.f)};
}

InsTriple combine(Conn c, const InsTriple& a, const InsTriple& b) {
  switch (c) {
    case Conn::And: return tri_meet(a, b);
    case Conn::Or: return tri_join(a, b);
    case Conn::Implies: return implication(a, b);
    case Conn::Iff: return tri_meet(implication(a, b), implication(b, a));
  }
  throw error("unknown connective");
}

} // namespace

InsTriple eval_prop(const PropPtr& f, const Interpretation& m, const DesignatedConvention& conv) {
  switch (f->kind) {
    case PropFormula::Kind::Var: {
      auto it = m.find(f->name);
      if (it == m.end()) throw error("unbound propositional variable '" + f->name + "'");
      return it->second;
    }
    case PropFormula::Kind::Truth: return conv.truth;
    case PropFormula::Kind::Falsity: return conv.falsity;
    case PropFormula::Kind::Not: return tri_neg(eval_prop(f->lhs, m, conv));
    case PropFormula::Kind::Binary:
      return combine(f->conn, eval_prop(f->lhs, m, conv), eval_prop(f->rhs, m, conv));
  }
  throw error("malformed propositional formula");
}

PredPtr atom(std::string pred, std::vector<Term> terms) {
  PredFormula n{PredFormula::Kind::Atom};
  n.name = std::move(pred);
  n.terms = std::move(terms);
  return std::make_shared<PredFormula>(std::move(n));
}
PredPtr qtruth() { return std::make_shared<PredFormula>(PredFormula{PredFormula::Kind::Truth}); }
PredPtr qfalsity() { return std::make_shared<PredFormula>(PredFormula{PredFormula::Kind::Falsity}); }
PredPtr qnot(PredPtr f) {
  PredFormula n{PredFormula::Kind::Not};
  n.lhs = std::move(f);
  return std::make_shared<PredFormula>(std::move(n));
}
PredPtr qbin(Conn c, PredPtr a, PredPtr b) {
  PredFormula n{PredFormula::Kind::Binary};
  n.conn = c;
  n.lhs = std::move(a);
  n.rhs = std::move(b);
  return std::make_shared<PredFormula>(std::move(n));
}
PredPtr forall(std::string var, PredPtr body) {
  PredFormula n{PredFormula::Kind::Forall};
  n.name = std::move(var);
  n.lhs = std::move(body);
  return std::make_shared<PredFormula>(std::move(n));
}
PredPtr exists(std::string var, PredPtr body) {
  PredFormula n{PredFormula::Kind::Exists};
  n.name = std::move(var);
  n.lhs = std::move(body);
  return std::make_shared<PredFormula>(std::move(n));
}

static std::string term_text(const Term& t) {
  if (t.kind != Term::Kind::Func) return t.name;
  std::string s = "(" + t.name;
  for (const auto& a : t.args) s += " " + term_text(a);
  return s + ")";
}

std::string to_text(const PredPtr& f) {
  switch (f->kind) {
    case PredFormula::Kind::Atom: {
      if (f->terms.empty()) return f->name;
      std::string s = "(" + f->name;
      for (const auto& t : f->terms) s += " " + term_text(t);
      return s + ")";
    }
    case PredFormula::Kind::Truth: return "true";
    case PredFormula::Kind::Falsity: return "false";
    case PredFormula::Kind::Not: return "(not " + to_text(f->lhs) + ")";
    case PredFormula::Kind::Binary:
      return "(" + std::string(conn_name(f->conn)) + " " + to_text(f->lhs) + " " +
             to_text(f->rhs) + ")";
    case PredFormula::Kind::Forall: return "(forall " + f->name + " " + to_text(f->lhs) + ")";
    case PredFormula::Kind::Exists: return "(exists " + f->name + " " + to_text(f->lhs) + ")";
  }
  return "?";
}

int FiniteModel::element_index(const std::string& name) const {
  auto it = std::find(domain.begin(), domain.end(), name);
  if (it == domain.end()) return -1;
  return static_cast<int>(it - domain.begin());
}

namespace {

int eval_term(const Term& t, const FiniteModel& m, const Env& env) {
  switch (t.kind) {
    case Term::Kind::Var: {
      auto it = env.find(t.name);
      if (it == env.end()) throw error("unbound variable '" + t.name + "'");
      return it->second;
    }
    case Term::Kind::Const: {
      auto it = m.constants.find(t.name);
      if (it != m.constants.end()) return it->second;
      int idx = m.element_index(t.name);
      if (idx < 0) throw error("unbound constant '" + t.name + "'");
      return idx;
    }
    case Term::Kind::Func: {
      auto it = m.functions.find(t.name);
      if (it == m.functions.end()) throw error("unknown function symbol '" + t.name + "'");
      if (static_cast<int>(t.args.size()) != it->second.arity)
        throw error("arity mismatch for function '" + t.name + "'");
      std::vector<int> args;
      args.reserve(t.args.size());
      for (const auto& a : t.args) args.push_back(eval_term(a, m, env));
      auto row = it->second.rows.find(args);
      if (row == it->second.rows.end())
        throw error("function table for '" + t.name + "' is not total");
      return row->second;
    }
  }
  throw error("malformed term");
}

} // namespace

InsTriple eval_pred(const PredPtr& f, const FiniteModel& m, const Env& env,
                    const DesignatedConvention& conv) {
  switch (f->kind) {
    case PredFormula::Kind::Atom: {
      auto it = m.predicates.find(f->name);
      if (it == m.predicates.end()) throw error("unknown predicate '" + f->name + "'");
      if (static_cast<int>(f->terms.size()) != it->second.arity)
        throw error("arity mismatch for predicate '" + f->name + "'");
      std::vector<int> args;
      args.reserve(f->terms.size());
      for (const auto& t : f->terms) args.push_back(eval_term(t, m, env));
      auto row = it->second.rows.find(args);
      if (row == it->second.rows.end())
        throw error("predicate table for '" + f->name + "' is not total");
      return row->second;
    }
    case PredFormula::Kind::Truth: return conv.truth;
    case PredFormula::Kind::Falsity: return conv.falsity;
    case PredFormula::Kind::Not: return tri_neg(eval_pred(f->lhs, m, env, conv));
    case PredFormula::Kind::Binary:
      return combine(f->conn, eval_pred(f->lhs, m, env, conv), eval_pred(f->rhs, m, env, conv));
    case PredFormula::Kind::Forall:
    case PredFormula::Kind::Exists: {
      if (m.domain.empty()) throw error("quantification over an empty domain");
      const bool is_forall = f->kind == PredFormula::Kind::Forall;
      Env inner = env;
      InsTriple acc;
      for (int d = 0; d < static_cast<int>(m.domain.size()); ++d) {
        inner[f->name] = d;
        InsTriple v = eval_pred(f->lhs, m, inner, conv);
        if (d == 0) {
          acc = v;
        } else if (is_forall) {
          acc = InsTriple{iv_min(acc.t, v.t), iv_min(acc.i, v.i), iv_max(acc.f, v.f)};
        } else {
          acc = InsTriple{iv_max(acc.t, v.t), iv_max(acc.i, v.i), iv_min(acc.f, v.f)};
        }
      }
      return acc;
    }
  }
  throw error("malformed predicate formula");
}

} // namespace inse::logic
