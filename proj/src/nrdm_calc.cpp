#include "inse/nrdm/calc.hpp"

#include <algorithm>
#include <set>

namespace inse::nrdm {

CalcPtr calc_membership(std::string var, std::string relation) {
  CalcFormula f{CalcFormula::Kind::Membership};
  f.var = std::move(var);
  f.relation = std::move(relation);
  return std::make_shared<CalcFormula>(std::move(f));
}
CalcPtr calc_compare(CmpOp op, CalcOperand l, CalcOperand r) {
  CalcFormula f{CalcFormula::Kind::Compare};
  f.op = op;
  f.lhs_op = std::move(l);
  f.rhs_op = std::move(r);
  return std::make_shared<CalcFormula>(std::move(f));
}
CalcPtr calc_not(CalcPtr inner) {
  CalcFormula f{CalcFormula::Kind::Not};
  f.lhs = std::move(inner);
  return std::make_shared<CalcFormula>(std::move(f));
}
CalcPtr calc_and(CalcPtr a, CalcPtr b) {
  CalcFormula f{CalcFormula::Kind::And};
  f.lhs = std::move(a);
  f.rhs = std::move(b);
  return std::make_shared<CalcFormula>(std::move(f));
}
CalcPtr calc_or(CalcPtr a, CalcPtr b) {
  CalcFormula f{CalcFormula::Kind::Or};
  f.lhs = std::move(a);
  f.rhs = std::move(b);
  return std::make_shared<CalcFormula>(std::move(f));
}
CalcPtr calc_exists(std::string var, Scheme s, CalcPtr body) {
  CalcFormula f{CalcFormula::Kind::Exists};
  f.var = std::move(var);
  f.scheme = std::move(s);
  f.lhs = std::move(body);
  return std::make_shared<CalcFormula>(std::move(f));
}
CalcPtr calc_forall(std::string var, Scheme s, CalcPtr body) {
  CalcFormula f{CalcFormula::Kind::Forall};
  f.var = std::move(var);
  f.scheme = std::move(s);
  f.lhs = std::move(body);
  return std::make_shared<CalcFormula>(std::move(f));
}

namespace {

std::string operand_value(const CalcOperand& o, const CalcEnv& env) {
  if (!o.is_attr) return o.text;
  auto it = env.bound.find(o.var);
  if (it == env.bound.end()) throw error("unbound tuple variable '" + o.var + "'");
  const Scheme& s = *it->second.first;
  int idx = s.index_of(o.text);
  if (idx < 0)
    throw error("variable '" + o.var + "' has no attribute '" + o.text + "'");
  return s.attrs[static_cast<std::size_t>(idx)]
      .domain->members[static_cast<std::size_t>(it->second.second[static_cast<std::size_t>(idx)])];
}

// Candidate tuples a quantifier ranges over: stored tuples of the relations
// on the bound variable's scheme (active) or the whole declared tuple space.
std::vector<Tuple> quantifier_range(const Scheme& s, const CalcDatabase& db,
                                    const CalcConfig& cfg) {
  if (cfg.range == QuantifierRange::active) {
    std::set<Tuple> stored;
    for (const auto& [name, rel] : db.relations)
      if (rel.scheme().compatible_with(s))
        for (const auto& [t, p] : rel.rows()) stored.insert(t);
    return {stored.begin(), stored.end()};
  }
  const std::size_t n = s.tuple_count();
  if (n > cfg.max_tuples) throw error("tuple space too large for full-range quantification");
  std::vector<Tuple> out;
  out.reserve(n);
  for (std::size_t rank = 0; rank < n; ++rank) out.push_back(tuple_at(s, rank));
  return out;
}

} // namespace

ConfidencePair tc_eval(const CalcPtr& f, const CalcDatabase& db, const CalcEnv& env,
                       const CalcConfig& cfg) {
  switch (f->kind) {
    case CalcFormula::Kind::Membership: {
      auto rit = db.relations.find(f->relation);
      if (rit == db.relations.end()) throw error("unknown relation '" + f->relation + "'");
      auto vit = env.bound.find(f->var);
      if (vit == env.bound.end()) throw error("unbound tuple variable '" + f->var + "'");
      if (!rit->second.scheme().compatible_with(*vit->second.first))
        throw error("variable '" + f->var + "' and relation '" + f->relation +
                    "' have different schemes");
      return rit->second.at(vit->second.second);
    }
    case CalcFormula::Kind::Compare: {
      bool sat = compare_values(f->op, operand_value(f->lhs_op, env), operand_value(f->rhs_op, env));
      return sat ? ConfidencePair(1.0, 0.0) : ConfidencePair(0.0, 1.0);
    }
    case CalcFormula::Kind::Not: return cp_not(tc_eval(f->lhs, db, env, cfg));
    case CalcFormula::Kind::And:
      return cp_and(tc_eval(f->lhs, db, env, cfg), tc_eval(f->rhs, db, env, cfg));
    case CalcFormula::Kind::Or:
      return cp_or(tc_eval(f->lhs, db, env, cfg), tc_eval(f->rhs, db, env, cfg));
    case CalcFormula::Kind::Exists:
    case CalcFormula::Kind::Forall: {
      const bool is_exists = f->kind == CalcFormula::Kind::Exists;
      // Lattice identities of max/min: exists over the empty range is <0,1>,
      // forall is <1,0>.
      ConfidencePair acc = is_exists ? ConfidencePair(0.0, 1.0) : ConfidencePair(1.0, 0.0);
      CalcEnv inner = env;
      for (const Tuple& t : quantifier_range(f->scheme, db, cfg)) {
        inner.bound[f->var] = {&f->scheme, t};
        ConfidencePair v = tc_eval(f->lhs, db, inner, cfg);
        if (is_exists)
          acc = ConfidencePair(std::max(acc.belief, v.belief), std::min(acc.doubt, v.doubt));
        else
          acc = ConfidencePair(std::min(acc.belief, v.belief), std::max(acc.doubt, v.doubt));
      }
      return acc;
    }
  }
  throw error("malformed tuple-calculus formula");
}

NeutroRelation tc_query(const std::string& var, const Scheme& scheme, const CalcPtr& body,
                        const CalcDatabase& db, const CalcConfig& cfg) {
  const std::size_t n = scheme.tuple_count();
  if (n > cfg.max_tuples) throw error("tuple space too large to materialize");
  NeutroRelation out(scheme);
  CalcEnv env;
  for (std::size_t rank = 0; rank < n; ++rank) {
    Tuple t = tuple_at(scheme, rank);
    env.bound[var] = {&scheme, t};
    out.set(t, tc_eval(body, db, env, cfg));
  }
  return out;
}

namespace {

struct CalcLexer {
  const std::string& text;
  std::size_t pos{0};

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip();
    return pos >= text.size();
  }
  char peek() {
    skip();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      throw error(std::string("expected '") + c + "' at offset " + std::to_string(pos) +
                  " in tuple-calculus query");
  }
  std::string word() {
    skip();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (start == pos) throw error("expected an identifier at offset " + std::to_string(start));
    return text.substr(start, pos - start);
  }
  bool accept_word(const std::string& w) {
    skip();
    std::size_t save = pos;
    if (pos + w.size() > text.size()) return false;
    for (std::size_t k = 0; k < w.size(); ++k)
      if (std::tolower(static_cast<unsigned char>(text[pos + k])) != w[k]) return false;
    std::size_t end = pos + w.size();
    if (end < text.size() &&
        (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_')) {
      pos = save;
      return false;
    }
    pos = end;
    return true;
  }
};

Scheme parse_scheme(CalcLexer& lex, const DomainCatalog& catalog) {
  lex.expect('(');
  std::vector<Attribute> attrs;
  while (true) {
    std::string attr = lex.word();
    lex.expect(':');
    std::string dom = lex.word();
    auto it = catalog.domains.find(dom);
    if (it == catalog.domains.end()) throw error("unknown domain '" + dom + "'");
    attrs.push_back({attr, it->second});
    if (!lex.accept(',')) break;
  }
  lex.expect(')');
  return Scheme(std::move(attrs));
}

CmpOp parse_cmp(CalcLexer& lex) {
  lex.skip();
  auto starts = [&](const char* s) {
    std::size_t n = std::string(s).size();
    return lex.text.compare(lex.pos, n, s) == 0;
  };
  if (starts("!=")) { lex.pos += 2; return CmpOp::Ne; }
  if (starts("<=")) { lex.pos += 2; return CmpOp::Le; }
  if (starts(">=")) { lex.pos += 2; return CmpOp::Ge; }
  if (starts("=")) { lex.pos += 1; return CmpOp::Eq; }
  if (starts("<")) { lex.pos += 1; return CmpOp::Lt; }
  if (starts(">")) { lex.pos += 1; return CmpOp::Gt; }
  throw error("expected a comparator at offset " + std::to_string(lex.pos));
}

struct CalcParser {
  CalcLexer lex;
  const DomainCatalog& catalog;
  std::map<std::string, Scheme> vars;

  CalcOperand parse_operand() {
    if (lex.peek() == '\'') {
      lex.expect('\'');
      std::size_t start = lex.pos;
      while (lex.pos < lex.text.size() && lex.text[lex.pos] != '\'') ++lex.pos;
      if (lex.pos >= lex.text.size()) throw error("unterminated string literal");
      std::string value = lex.text.substr(start, lex.pos - start);
      ++lex.pos;
      return CalcOperand::constant(value);
    }
    std::string w = lex.word();
    if (vars.count(w) && lex.accept('.')) return CalcOperand::attr(w, lex.word());
    return CalcOperand::constant(w);
  }

  CalcPtr parse_primary() {
    if (lex.accept('(')) {
      CalcPtr inner = parse_or();
      lex.expect(')');
      return inner;
    }
    if (lex.accept_word("not")) return calc_not(parse_primary());
    if (lex.accept_word("exists")) return parse_quantifier(true);
    if (lex.accept_word("forall")) return parse_quantifier(false);
    // Either "var in REL" or a comparison.
    CalcOperand left = parse_operand();
    if (!left.is_attr && vars.count(left.text) && lex.accept_word("in"))
      return calc_membership(left.text, lex.word());
    CmpOp op = parse_cmp(lex);
    CalcOperand right = parse_operand();
    return calc_compare(op, std::move(left), std::move(right));
  }

  CalcPtr parse_quantifier(bool is_exists) {
    std::string var = lex.word();
    if (!lex.accept_word("of")) throw error("expected 'of' after quantified variable");
    Scheme s = parse_scheme(lex, catalog);
    lex.expect('.');
    auto prev = vars.find(var);
    bool had = prev != vars.end();
    Scheme saved = had ? prev->second : Scheme{};
    vars[var] = s;
    CalcPtr body = parse_primary();
    if (had)
      vars[var] = saved;
    else
      vars.erase(var);
    return is_exists ? calc_exists(var, s, body) : calc_forall(var, s, body);
  }

  CalcPtr parse_and() {
    CalcPtr acc = parse_primary();
    while (lex.accept_word("and")) acc = calc_and(acc, parse_primary());
    return acc;
  }

  CalcPtr parse_or() {
    CalcPtr acc = parse_and();
    while (lex.accept_word("or")) acc = calc_or(acc, parse_and());
    return acc;
  }
};

} // namespace

CalcQuery parse_calc_query(const std::string& text, const DomainCatalog& catalog) {
  CalcParser p{CalcLexer{text}, catalog, {}};
  p.lex.expect('{');
  CalcQuery q;
  q.var = p.lex.word();
  if (!p.lex.accept_word("of")) throw error("expected 'of' after tuple variable");
  q.scheme = parse_scheme(p.lex, catalog);
  p.lex.expect('|');
  p.vars[q.var] = q.scheme;
  q.body = p.parse_or();
  p.lex.expect('}');
  if (!p.lex.eof()) throw error("trailing input after tuple-calculus query");
  return q;
}

} // namespace inse::nrdm
