#pragma once

#include "inse/logic/eval.hpp"

#include <iosfwd>

namespace inse::logic {

// S-expression formula syntax:
//   (and p (not q)), (or p q), (implies p q), (iff p q), true, false
//   (forall x (p x)), (exists x (p x y)), terms may nest: (p (next x) c)
// In propositional formulas every symbol is a variable; in predicate formulas
// symbols bound by an enclosing quantifier are variables, the rest constants.
PropPtr parse_prop_formula(const std::string& text);
PredPtr parse_pred_formula(const std::string& text);

// Interpretation file: one "name = <t,i,f>" line per proposition.
Interpretation parse_interpretation(std::istream& in);
Interpretation load_interpretation(const std::string& path);

// Model file:
//   domain 1 2 3
//   const a 1
//   pred p 1
//   p 1 : <0.5,1,0.4>
//   fn next 1
//   next 1 -> 2
FiniteModel parse_model(std::istream& in);
FiniteModel load_model(const std::string& path);

} // namespace inse::logic
