#pragma once

#include <memory>
#include <string>
#include <vector>

namespace inse::logic {

enum class Conn { And, Or, Implies, Iff };

// Propositional formula tree. Truth/Falsity are the designated constants and
// take their value from the convention in force at evaluation time.
struct PropFormula;
using PropPtr = std::shared_ptr<const PropFormula>;

struct PropFormula {
  enum class Kind { Var, Truth, Falsity, Not, Binary };
  Kind kind;
  std::string name;  // Var
  Conn conn{};       // Binary
  PropPtr lhs, rhs;  // Not uses lhs only
};

PropPtr pvar(std::string name);
PropPtr ptruth();
PropPtr pfalsity();
PropPtr pnot(PropPtr f);
PropPtr pbin(Conn c, PropPtr a, PropPtr b);
inline PropPtr pand(PropPtr a, PropPtr b) { return pbin(Conn::And, std::move(a), std::move(b)); }
inline PropPtr por(PropPtr a, PropPtr b) { return pbin(Conn::Or, std::move(a), std::move(b)); }
inline PropPtr pimplies(PropPtr a, PropPtr b) { return pbin(Conn::Implies, std::move(a), std::move(b)); }
inline PropPtr piff(PropPtr a, PropPtr b) { return pbin(Conn::Iff, std::move(a), std::move(b)); }

std::vector<std::string> prop_variables(const PropPtr& f);
std::string to_text(const PropPtr& f);

// First-order terms: variables, constants and applications of table-backed
// function symbols.
struct Term {
  enum class Kind { Var, Const, Func };
  Kind kind;
  std::string name;
  std::vector<Term> args;

  static Term var(std::string n) { return {Kind::Var, std::move(n), {}}; }
  static Term cst(std::string n) { return {Kind::Const, std::move(n), {}}; }
  static Term func(std::string n, std::vector<Term> a) { return {Kind::Func, std::move(n), std::move(a)}; }
};

struct PredFormula;
using PredPtr = std::shared_ptr<const PredFormula>;

struct PredFormula {
  enum class Kind { Atom, Truth, Falsity, Not, Binary, Forall, Exists };
  Kind kind;
  std::string name;         // Atom: predicate symbol; quantifiers: bound variable
  std::vector<Term> terms;  // Atom
  Conn conn{};
  PredPtr lhs, rhs;  // Not uses lhs; quantifiers use lhs as body
};

PredPtr atom(std::string pred, std::vector<Term> terms = {});
PredPtr qtruth();
PredPtr qfalsity();
PredPtr qnot(PredPtr f);
PredPtr qbin(Conn c, PredPtr a, PredPtr b);
inline PredPtr qand(PredPtr a, PredPtr b) { return qbin(Conn::And, std::move(a), std::move(b)); }
inline PredPtr qor(PredPtr a, PredPtr b) { return qbin(Conn::Or, std::move(a), std::move(b)); }
inline PredPtr qimplies(PredPtr a, PredPtr b) { return qbin(Conn::Implies, std::move(a), std::move(b)); }
inline PredPtr qiff(PredPtr a, PredPtr b) { return qbin(Conn::Iff, std::move(a), std::move(b)); }
PredPtr forall(std::string var, PredPtr body);
PredPtr exists(std::string var, PredPtr body);

std::string to_text(const PredPtr& f);

} // namespace inse::logic
