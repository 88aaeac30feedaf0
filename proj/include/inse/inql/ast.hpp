#pragma once

#include "inse/nrdm/algebra.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace inse::inql {

using nrdm::CmpOp;

// Operand of a condition: an (optionally qualified) attribute reference, a
// bare identifier (resolved to an attribute when one matches, else a domain
// constant), a number or a quoted string.
struct Operand {
  enum class Kind { Ident, Qualified, Number, String };
  Kind kind{Kind::Ident};
  std::string text;       // identifier / number text / string body
  std::string qualifier;  // relation part of "R.A"

  bool operator==(const Operand& o) const {
    return kind == o.kind && text == o.text && qualifier == o.qualifier;
  }
};

struct SelectQuery;
using QueryPtr = std::shared_ptr<SelectQuery>;
struct Query;

struct Cond;
using CondPtr = std::shared_ptr<Cond>;

// "in"/"exists"/any-all targets: a subquery (possibly a union chain) or a
// named relation.
struct SubqueryRef {
  std::shared_ptr<Query> query;  // null when a named relation is used
  std::string relname;           // empty when a subquery is used

  bool operator==(const SubqueryRef& o) const;
};

struct Cond {
  enum class Kind { Not, And, Or, Exists, In, AnyAll, Cmp };
  Kind kind;
  CondPtr lhs, rhs;             // Not uses lhs
  SubqueryRef target;           // Exists / In / AnyAll
  std::vector<Operand> tuple;   // In
  Operand left, right;          // Cmp; AnyAll uses left
  CmpOp op{};                   // Cmp / AnyAll
  bool quantifier_any{true};    // AnyAll: any vs all

  bool operator==(const Cond& o) const;
};

struct SelectItem {
  Operand attr;  // Ident or Qualified
  bool operator==(const SelectItem& o) const { return attr == o.attr; }
};

struct SelectQuery {
  bool star{false};
  std::vector<SelectItem> items;
  std::vector<std::string> froms;
  CondPtr where;

  bool operator==(const SelectQuery& o) const;
};

// A query is a union chain of SELECT blocks.
struct Query {
  std::vector<QueryPtr> selects;

  bool operator==(const Query& o) const;
};

struct Diagnostic {
  int line{0};
  int column{0};
  std::string message;

  std::string str() const;
};

class parse_error : public error {
public:
  parse_error(Diagnostic d) : error(d.str()), diagnostic(std::move(d)) {}
  Diagnostic diagnostic;
};

Query parse_query(const std::string& text);
std::string print_query(const Query& q);

} // namespace inse::inql
