#include "inse/inls/rules_text.hpp"

#include <fstream>
#include <sstream>

namespace inse::inls {

namespace {

Trapezoid read_trapezoid(std::istringstream& ss, int lineno) {
  double a, b, c, d;
  if (!(ss >> a >> b >> c >> d))
    throw error("line " + std::to_string(lineno) + ": expected four trapezoid parameters");
  try {
    return Trapezoid(a, b, c, d);
  } catch (const error& e) {
    throw error("line " + std::to_string(lineno) + ": " + e.what());
  }
}

MembershipFn read_membership(std::istringstream& ss, int lineno) {
  Trapezoid lower = read_trapezoid(ss, lineno);
  std::streampos mark = ss.tellg();
  std::string sep;
  if (ss >> sep && sep == "/") return MembershipFn(lower, read_trapezoid(ss, lineno));
  ss.clear();
  ss.seekg(mark);
  return MembershipFn::crisp(lower);
}

// lower(x) <= upper(x) must hold everywhere; probing the breakpoints and a
// dense grid over the variable range covers the piecewise-linear surfaces.
void check_surfaces(const LinguisticTriple& lt, const VarDecl& var, const std::string& term,
                    int lineno) {
  const int n = 257;
  const double dx = (var.hi - var.lo) / (n - 1);
  for (int k = 0; k < n; ++k) {
    const double x = var.lo + k * dx;
    try {
      lt.eval(x);
    } catch (const error&) {
      throw error("line " + std::to_string(lineno) + ": term '" + term +
                  "' has lower surface above upper surface near x=" + fmt_grade(x));
    }
  }
}

} // namespace

RuleBase parse_rulebase(std::istream& in) {
  RuleBase rb;
  bool output_seen = false;
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

    if (word == "input" || word == "output") {
      VarDecl v;
      if (!(ss >> v.name >> v.lo >> v.hi) || !(v.lo < v.hi))
        fail("expected '" + word + " name lo hi' with lo < hi");
      if (word == "input") {
        if (rb.input_index(v.name) >= 0 || (output_seen && v.name == rb.output.name))
          fail("duplicate variable '" + v.name + "'");
        rb.inputs.push_back(v);
      } else {
        if (output_seen) fail("only one output variable is supported");
        rb.output = v;
        output_seen = true;
      }
    } else if (word == "term") {
      std::string var, term;
      if (!(ss >> var >> term)) fail("expected 'term var name ...'");
      const VarDecl* decl = nullptr;
      if (int idx = rb.input_index(var); idx >= 0) decl = &rb.inputs[static_cast<std::size_t>(idx)];
      else if (output_seen && var == rb.output.name) decl = &rb.output;
      if (!decl) fail("term references undeclared variable '" + var + "'");
      LinguisticTriple lt;
      for (int comp = 0; comp < 3; ++comp) {
        std::string tag;
        if (!(ss >> tag)) fail("expected T, I and F membership specs");
        MembershipFn fn = read_membership(ss, lineno);
        if (tag == "T" || tag == "t") lt.truth = fn;
        else if (tag == "I" || tag == "i") lt.indet = fn;
        else if (tag == "F" || tag == "f") lt.falsity = fn;
        else fail("unknown membership tag '" + tag + "'");
      }
      check_surfaces(lt, *decl, term, lineno);
      if (rb.terms[var].count(term)) fail("duplicate term '" + term + "' for '" + var + "'");
      rb.terms[var][term] = lt;
    } else if (word == "rule") {
      std::string kw;
      if (!(ss >> kw) || kw != "if") fail("expected 'rule if ...'");
      Rule rule;
      std::map<std::string, LinguisticTriple> bound;
      while (true) {
        std::string var, is, term;
        if (!(ss >> var >> is >> term) || is != "is") fail("expected 'var is term'");
        std::string owner = var;
        auto vit = rb.terms.find(var);
        if (vit == rb.terms.end()) fail("no terms declared for variable '" + var + "'");
        auto tit = vit->second.find(term);
        if (tit == vit->second.end()) fail("unknown term '" + term + "' for '" + var + "'");
        std::string next;
        if (!(ss >> next)) fail("rule is missing its 'then' part");
        if (var == rb.output.name) fail("output variable in the antecedent");
        if (bound.count(owner)) fail("variable '" + var + "' appears twice in one rule");
        bound[owner] = tit->second;
        if (next == "and") continue;
        if (next != "then") fail("expected 'and' or 'then'");
        break;
      }
      std::string ovar, is, oterm;
      if (!(ss >> ovar >> is >> oterm) || is != "is") fail("expected 'then output is term'");
      if (!output_seen || ovar != rb.output.name)
        fail("consequent must use the declared output variable");
      auto vit = rb.terms.find(ovar);
      if (vit == rb.terms.end() || !vit->second.count(oterm))
        fail("unknown term '" + oterm + "' for output");
      rule.consequent = vit->second.at(oterm);
      for (const auto& v : rb.inputs) {
        auto bit = bound.find(v.name);
        if (bit == bound.end())
          fail("rule must constrain every input variable ('" + v.name + "' missing)");
        rule.antecedents.push_back(bit->second);
      }
      rb.rules.push_back(std::move(rule));
    } else {
      fail("unknown directive '" + word + "'");
    }
  }
  if (!output_seen) throw error("rulebase declares no output variable");
  if (rb.inputs.empty()) throw error("rulebase declares no input variables");
  if (rb.rules.empty()) throw error("rulebase declares no rules");
  return rb;
}

RuleBase load_rulebase(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  return parse_rulebase(in);
}

} // namespace inse::inls
