#include "inse/logic/text.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace inse::logic {

namespace {

struct SexprLexer {
  const std::string& text;
  std::size_t pos{0};

  void skip() {
    while (pos < text.size()) {
      char c = text[pos];
      if (std::isspace(static_cast<unsigned char>(c))) { ++pos; continue; }
      if (c == ';') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
        continue;
      }
      break;
    }
  }

  bool eof() { skip(); return pos >= text.size(); }

  char peek() { skip(); return pos < text.size() ? text[pos] : '\0'; }

  void expect(char c) {
    skip();
    if (pos >= text.size() || text[pos] != c)
      throw error(std::string("expected '") + c + "' at offset " + std::to_string(pos) +
                  " in formula");
    ++pos;
  }

  std::string symbol() {
    skip();
    std::size_t start = pos;
    while (pos < text.size()) {
      char c = text[pos];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ';') break;
      ++pos;
    }
    if (start == pos) throw error("expected a symbol at offset " + std::to_string(start));
    return text.substr(start, pos - start);
  }
};

bool is_connective(const std::string& s) {
  return s == "not" || s == "and" || s == "or" || s == "implies" || s == "iff" ||
         s == "forall" || s == "exists";
}

PropPtr parse_prop(SexprLexer& lex) {
  if (lex.peek() != '(') {
    std::string sym = lex.symbol();
    if (sym == "true") return ptruth();
    if (sym == "false") return pfalsity();
    return pvar(sym);
  }
  lex.expect('(');
  std::string head = lex.symbol();
  PropPtr result;
  if (head == "not") {
    result = pnot(parse_prop(lex));
  } else if (head == "and" || head == "or" || head == "implies" || head == "iff") {
    Conn c = head == "and" ? Conn::And
             : head == "or" ? Conn::Or
             : head == "implies" ? Conn::Implies
                                 : Conn::Iff;
    PropPtr acc = parse_prop(lex);
    PropPtr next = parse_prop(lex);
    acc = pbin(c, acc, next);
    while (lex.peek() != ')') acc = pbin(c, acc, parse_prop(lex));
    result = acc;
  } else {
    throw error("unknown propositional connective '" + head + "'");
  }
  lex.expect(')');
  return result;
}

Term parse_term(SexprLexer& lex, const std::set<std::string>& bound) {
  if (lex.peek() == '(') {
    lex.expect('(');
    std::string fn = lex.symbol();
    std::vector<Term> args;
    while (lex.peek() != ')') args.push_back(parse_term(lex, bound));
    lex.expect(')');
    return Term::func(std::move(fn), std::move(args));
  }
  std::string sym = lex.symbol();
  if (bound.count(sym)) return Term::var(sym);
  return Term::cst(sym);
}

PredPtr parse_pred(SexprLexer& lex, std::set<std::string>& bound) {
  if (lex.peek() != '(') {
    std::string sym = lex.symbol();
    if (sym == "true") return qtruth();
    if (sym == "false") return qfalsity();
    return atom(sym);
  }
  lex.expect('(');
  std::string head = lex.symbol();
  PredPtr result;
  if (head == "not") {
    result = qnot(parse_pred(lex, bound));
  } else if (head == "and" || head == "or" || head == "implies" || head == "iff") {
    Conn c = head == "and" ? Conn::And
             : head == "or" ? Conn::Or
             : head == "implies" ? Conn::Implies
                                 : Conn::Iff;
    PredPtr acc = parse_pred(lex, bound);
    PredPtr next = parse_pred(lex, bound);
    acc = qbin(c, acc, next);
    while (lex.peek() != ')') acc = qbin(c, acc, parse_pred(lex, bound));
    result = acc;
  } else if (head == "forall" || head == "exists") {
    std::string var = lex.symbol();
    const bool was_bound = bound.count(var) > 0;
    bound.insert(var);
    PredPtr body = parse_pred(lex, bound);
    if (!was_bound) bound.erase(var);
    result = head == "forall" ? forall(var, body) : exists(var, body);
  } else {
    std::vector<Term> terms;
    while (lex.peek() != ')') terms.push_back(parse_term(lex, bound));
    result = atom(head, std::move(terms));
  }
  lex.expect(')');
  return result;
}

} // namespace

PropPtr parse_prop_formula(const std::string& text) {
  SexprLexer lex{text};
  PropPtr f = parse_prop(lex);
  if (!lex.eof()) throw error("trailing input after formula");
  return f;
}

PredPtr parse_pred_formula(const std::string& text) {
  SexprLexer lex{text};
  std::set<std::string> bound;
  PredPtr f = parse_pred(lex, bound);
  if (!lex.eof()) throw error("trailing input after formula");
  return f;
}

Interpretation parse_interpretation(std::istream& in) {
  Interpretation m;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos || line[p] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw error("line " + std::to_string(lineno) + ": expected 'name = <t,i,f>'");
    std::string name = line.substr(0, eq);
    name.erase(name.find_last_not_of(" \t") + 1);
    name.erase(0, name.find_first_not_of(" \t"));
    m[name] = parse_triple(line.substr(eq + 1));
  }
  return m;
}

Interpretation load_interpretation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  return parse_interpretation(in);
}

FiniteModel parse_model(std::istream& in) {
  FiniteModel m;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw error("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ss(line);
    std::string word;
    ss >> word;
    if (word == "domain") {
      std::string e;
      while (ss >> e) m.domain.push_back(e);
      if (m.domain.empty()) fail("empty domain");
    } else if (word == "const") {
      std::string name, elem;
      if (!(ss >> name >> elem)) fail("expected 'const name element'");
      int idx = m.element_index(elem);
      if (idx < 0) fail("unknown domain element '" + elem + "'");
      m.constants[name] = idx;
    } else if (word == "pred") {
      std::string name;
      int arity;
      if (!(ss >> name >> arity) || arity < 0) fail("expected 'pred name arity'");
      m.predicates[name].arity = arity;
    } else if (word == "fn") {
      std::string name;
      int arity;
      if (!(ss >> name >> arity) || arity < 0) fail("expected 'fn name arity'");
      m.functions[name].arity = arity;
    } else {
      // Table row: either "p e1 .. en : <triple>" or "f e1 .. en -> e".
      auto pit = m.predicates.find(word);
      auto fit = m.functions.find(word);
      if (pit == m.predicates.end() && fit == m.functions.end())
        fail("unknown symbol '" + word + "' (declare with pred/fn first)");
      const int arity = pit != m.predicates.end() ? pit->second.arity : fit->second.arity;
      std::vector<int> args;
      for (int k = 0; k < arity; ++k) {
        std::string e;
        if (!(ss >> e)) fail("expected " + std::to_string(arity) + " arguments");
        int idx = m.element_index(e);
        if (idx < 0) fail("unknown domain element '" + e + "'");
        args.push_back(idx);
      }
      std::string sep;
      if (!(ss >> sep)) fail("truncated table row");
      if (pit != m.predicates.end()) {
        if (sep != ":") fail("expected ':' before grade triple");
        std::string rest;
        std::getline(ss, rest);
        pit->second.rows[args] = parse_triple(rest);
      } else {
        if (sep != "->") fail("expected '->' before function value");
        std::string e;
        if (!(ss >> e)) fail("missing function value");
        int idx = m.element_index(e);
        if (idx < 0) fail("unknown domain element '" + e + "'");
        fit->second.rows[args] = idx;
      }
    }
  }
  // Totality of every declared table.
  std::size_t n = m.domain.size();
  for (const auto& [name, t] : m.predicates) {
    std::size_t expect = 1;
    for (int k = 0; k < t.arity; ++k) expect *= n;
    if (t.rows.size() != expect) throw error("predicate table '" + name + "' is not total");
  }
  for (const auto& [name, t] : m.functions) {
    std::size_t expect = 1;
    for (int k = 0; k < t.arity; ++k) expect *= n;
    if (t.rows.size() != expect) throw error("function table '" + name + "' is not total");
  }
  return m;
}

FiniteModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  return parse_model(in);
}

} // namespace inse::logic
