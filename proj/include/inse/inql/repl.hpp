#pragma once

#include "inse/inql/eval.hpp"

namespace inse::inql {

enum class OutputFormat { table, csv, json };

struct Session {
  Database db;
  SessionConfig cfg;
  OutputFormat format{OutputFormat::table};
  std::map<std::string, nrdm::MultiRelation> multis;  // split() results by name

  // Loads DIR/domains.def and every DIR/*.rel (relation named by file stem).
  void load_data_dir(const std::string& dir);
};

struct ReplResult {
  std::string output;
  bool is_error{false};
  bool quit{false};
};

// Executes one line: a SQL query, a tuple-calculus query in braces, an
// algebra expression, "let NAME = <expr>", or a backslash meta command.
ReplResult repl_execute(const std::string& line, Session& session);

std::string render_relation(const NeutroRelation& r, OutputFormat format);
std::string render_multi(const nrdm::MultiRelation& r, OutputFormat format);

int run_repl(Session& session, std::istream& in, std::ostream& out, bool interactive);

} // namespace inse::inql
