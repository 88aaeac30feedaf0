#include "inse/inql/repl.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace inse;

namespace {

int apply_session_options(inql::Session& session, const std::string& data_dir, int grid,
                          const std::string& range, const std::string& format) {
  session.load_data_dir(data_dir);
  session.cfg.grid_k = grid;
  if (range == "active") session.cfg.range = nrdm::QuantifierRange::active;
  else if (range == "full") session.cfg.range = nrdm::QuantifierRange::full;
  else throw error("--quantifier-range must be active or full");
  if (format == "table") session.format = inql::OutputFormat::table;
  else if (format == "csv") session.format = inql::OutputFormat::csv;
  else if (format == "json") session.format = inql::OutputFormat::json;
  else throw error("--format must be table, csv or json");
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"query engine for neutrosophic relations"};
  app.require_subcommand(1);

  std::string data_dir, script_path, query_text;
  std::string range = "active", format = "table";
  int grid = 2;

  auto* repl = app.add_subcommand("repl", "interactive session");
  repl->add_option("--data", data_dir, "data directory with domains.def and *.rel")->required();
  repl->add_option("--grid", grid, "completion grid parameter K (step 1/K)");
  repl->add_option("--quantifier-range", range, "active|full");
  repl->add_option("--format", format, "table|csv|json");

  auto* run = app.add_subcommand("run", "execute a script of session commands");
  run->add_option("script", script_path, "script file")->required();
  run->add_option("--data", data_dir, "data directory")->required();
  run->add_option("--grid", grid, "completion grid parameter K");
  run->add_option("--quantifier-range", range, "active|full");
  run->add_option("--format", format, "table|csv|json");

  auto* ev = app.add_subcommand("eval", "evaluate one query and print the result");
  ev->add_option("-q", query_text, "query text")->required();
  ev->add_option("--data", data_dir, "data directory")->required();
  ev->add_option("--grid", grid, "completion grid parameter K");
  ev->add_option("--quantifier-range", range, "active|full");
  ev->add_option("--format", format, "table|csv|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    inql::Session session;
    apply_session_options(session, data_dir, grid, range, format);

    if (repl->parsed()) return inql::run_repl(session, std::cin, std::cout, true);

    if (run->parsed()) {
      std::ifstream in(script_path);
      if (!in) throw error("cannot open script '" + script_path + "'");
      return inql::run_repl(session, in, std::cout, false);
    }

    if (ev->parsed()) {
      inql::ReplResult r = inql::repl_execute(query_text, session);
      if (r.is_error) {
        std::cerr << r.output;
        return 1;
      }
      std::cout << r.output;
      return 0;
    }
  } catch (const inql::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
