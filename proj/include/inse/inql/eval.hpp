#pragma once

#include "inse/inql/ast.hpp"
#include "inse/nrdm/calc.hpp"
#include "inse/nrdm/storage.hpp"

namespace inse::inql {

using nrdm::ConfidencePair;
using nrdm::NeutroRelation;
using nrdm::QuantifierRange;

struct Database {
  nrdm::DomainCatalog catalog;
  std::map<std::string, NeutroRelation> relations;
};

struct SessionConfig {
  int grid_k{2};
  QuantifierRange range{QuantifierRange::active};
  bool explain{false};
  std::size_t product_guard{200000};
};

struct EvalTrace {
  std::vector<std::string> sections;  // rendered intermediate tables
};

// Evaluates a (possibly union-chained) generalized SELECT against the
// database: projection of the infinite-valued selection of the product of
// the from-relations, per-tuple <max,min> across union arms.
NeutroRelation eval_query(const Query& q, const Database& db, const SessionConfig& cfg,
                          EvalTrace* trace = nullptr);

// The environment a condition sees: one row of the enclosing product(s),
// innermost scope first.
class RowScope;

ConfidencePair eval_condition(const CondPtr& c, const std::vector<const RowScope*>& scopes,
                              const Database& db, const SessionConfig& cfg);

// Convenience for tests: evaluates a condition against one relation's row.
ConfidencePair eval_condition_on_row(const CondPtr& c, const std::string& relname,
                                     const nrdm::Tuple& row, const Database& db,
                                     const SessionConfig& cfg);

} // namespace inse::inql
