#include "inse/inql/repl.hpp"

#include "inse/nrdm/reps.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>

namespace inse::inql {

namespace fs = std::filesystem;
using nrdm::MultiRelation;
using nrdm::Tuple;

void Session::load_data_dir(const std::string& dir) {
  fs::path root(dir);
  if (!fs::is_directory(root)) throw error("data directory '" + dir + "' does not exist");
  fs::path domains = root / "domains.def";
  if (!fs::exists(domains)) throw error("missing domain catalog '" + domains.string() + "'");
  db.catalog = nrdm::load_domains(domains.string());
  std::vector<fs::path> rels;
  for (const auto& entry : fs::directory_iterator(root))
    if (entry.is_regular_file() && entry.path().extension() == ".rel")
      rels.push_back(entry.path());
  std::sort(rels.begin(), rels.end());
  for (const auto& p : rels)
    db.relations[p.stem().string()] = nrdm::load_relation(p.string(), db.catalog);
}

namespace {

std::string pair_text(const ConfidencePair& p) {
  return "<" + fmt_grade(p.belief) + "," + fmt_grade(p.doubt) + ">";
}

std::string trim(std::string s) {
  s.erase(0, s.find_first_not_of(" \t\r\n"));
  s.erase(s.find_last_not_of(" \t\r\n") + 1);
  return s;
}

bool starts_with_ci(const std::string& s, const std::string& prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t k = 0; k < prefix.size(); ++k)
    if (std::tolower(static_cast<unsigned char>(s[k])) != prefix[k]) return false;
  if (s.size() == prefix.size()) return true;
  unsigned char next = static_cast<unsigned char>(s[prefix.size()]);
  return !std::isalnum(next) && next != '_';
}

// ---- algebra expression parser ------------------------------------------

struct AlgebraValue {
  bool multi{false};
  NeutroRelation rel;
  MultiRelation mrel;
};

struct AlgebraParser {
  const std::string& text;
  std::size_t pos{0};
  Session& session;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
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
      throw error(std::string("expected '") + c + "' at offset " + std::to_string(pos));
  }
  std::string word() {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_' || text[pos] == '.'))
      ++pos;
    if (start == pos) throw error("expected a name at offset " + std::to_string(pos));
    return text.substr(start, pos - start);
  }
  bool done() {
    skip();
    return pos >= text.size();
  }

  // Grabs raw text up to the closing ')' of the current call (nesting-aware);
  // used for guard arguments.
  std::string raw_until_close() {
    skip();
    int depth = 0;
    std::size_t start = pos;
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) break;
        --depth;
      }
      ++pos;
    }
    return trim(text.substr(start, pos - start));
  }

  AlgebraValue lookup(const std::string& name) {
    auto mit = session.multis.find(name);
    if (mit != session.multis.end()) return {true, {}, mit->second};
    auto rit = session.db.relations.find(name);
    if (rit != session.db.relations.end()) return {false, rit->second, {}};
    throw error("unknown relation '" + name + "'");
  }

  AlgebraValue parse_expr() {
    skip();
    std::string name = word();
    skip();
    if (pos >= text.size() || text[pos] != '(') return lookup(name);
    return parse_call(name);
  }

  MultiRelation as_multi(const AlgebraValue& v) { return v.multi ? v.mrel : nrdm::split(v.rel); }

  NeutroRelation need_rel(const AlgebraValue& v, const std::string& fn) {
    if (v.multi) throw error(fn + " expects a canonical relation; apply combine() first");
    return v.rel;
  }

  AlgebraValue parse_call(const std::string& fn) {
    expect('(');
    auto binary = [&](auto neutro_op, auto multi_op) -> AlgebraValue {
      AlgebraValue a = parse_expr();
      expect(',');
      AlgebraValue b = parse_expr();
      expect(')');
      if (a.multi || b.multi) return {true, {}, multi_op(as_multi(a), as_multi(b))};
      return {false, neutro_op(a.rel, b.rel), {}};
    };
    if (fn == "union") return binary(nrdm::n_union, nrdm::m_union);
    if (fn == "intersect") return binary(nrdm::n_intersect, nrdm::m_intersect);
    if (fn == "diff") return binary(nrdm::n_difference, nrdm::m_difference);
    if (fn == "join") return binary(nrdm::n_join, nrdm::m_join);
    if (fn == "complement") {
      AlgebraValue a = parse_expr();
      expect(')');
      if (a.multi) return {true, {}, nrdm::m_complement(a.mrel)};
      return {false, nrdm::n_complement(a.rel), {}};
    }
    if (fn == "split") {
      AlgebraValue a = parse_expr();
      expect(')');
      return {true, {}, nrdm::split(need_rel(a, "split"))};
    }
    if (fn == "combine") {
      AlgebraValue a = parse_expr();
      expect(')');
      if (!a.multi) return a;  // combine of a canonical relation is itself
      return {false, nrdm::combine(a.mrel), {}};
    }
    if (fn == "project" || fn == "with_split_project") {
      AlgebraValue a = parse_expr();
      std::vector<std::string> attrs;
      while (accept(',')) attrs.push_back(word());
      expect(')');
      if (fn == "with_split_project")
        return {false, nrdm::with_split_project(need_rel(a, fn), attrs), {}};
      if (a.multi) return {false, nrdm::m_project(a.mrel, attrs), {}};
      return {false, nrdm::n_project(a.rel, attrs), {}};
    }
    if (fn == "select_guard") {
      AlgebraValue a = parse_expr();
      expect(',');
      std::string guard_text = raw_until_close();
      expect(')');
      const nrdm::Scheme& scheme = a.multi ? a.mrel.scheme() : a.rel.scheme();
      nrdm::GuardPtr g = parse_guard(guard_text, scheme);
      if (a.multi) return {true, {}, nrdm::m_select_guard(a.mrel, g)};
      return {false, nrdm::n_select_guard(a.rel, g), {}};
    }
    if (fn == "with_split_union" || fn == "with_split_intersect" ||
        fn == "with_split_difference" || fn == "with_split_join") {
      AlgebraValue a = parse_expr();
      expect(',');
      AlgebraValue b = parse_expr();
      expect(')');
      NeutroRelation ra = need_rel(a, fn), rb = need_rel(b, fn);
      if (fn == "with_split_union") return {false, nrdm::with_split_union(ra, rb), {}};
      if (fn == "with_split_intersect") return {false, nrdm::with_split_intersect(ra, rb), {}};
      if (fn == "with_split_difference") return {false, nrdm::with_split_difference(ra, rb), {}};
      return {false, nrdm::with_split_join(ra, rb), {}};
    }
    throw error("unknown algebra function '" + fn + "'");
  }

  static nrdm::GuardPtr parse_guard(const std::string& text, const nrdm::Scheme& scheme);
};

// Guard grammar: cmp | not g | g and g | g or g | (g); operands are attribute
// names of the scheme, quoted strings or bare constants.
struct GuardParser {
  const std::string& text;
  const nrdm::Scheme& scheme;
  std::size_t pos{0};

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool accept_word(const char* w) {
    skip();
    std::size_t n = std::string(w).size();
    if (pos + n > text.size()) return false;
    for (std::size_t k = 0; k < n; ++k)
      if (std::tolower(static_cast<unsigned char>(text[pos + k])) != w[k]) return false;
    std::size_t end = pos + n;
    if (end < text.size() && (std::isalnum(static_cast<unsigned char>(text[end])) ||
                              text[end] == '_'))
      return false;
    pos = end;
    return true;
  }
  bool accept(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  nrdm::GuardOperand operand() {
    skip();
    if (pos < text.size() && text[pos] == '\'') {
      ++pos;
      std::size_t start = pos;
      while (pos < text.size() && text[pos] != '\'') ++pos;
      if (pos >= text.size()) throw error("unterminated string in guard");
      std::string v = text.substr(start, pos - start);
      ++pos;
      return nrdm::GuardOperand::constant(v);
    }
    std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_' || text[pos] == '.'))
      ++pos;
    if (start == pos) throw error("expected a guard operand at offset " + std::to_string(pos));
    std::string w = text.substr(start, pos - start);
    if (scheme.index_of(w) >= 0) return nrdm::GuardOperand::attr(w);
    return nrdm::GuardOperand::constant(w);
  }

  nrdm::CmpOp cmp() {
    skip();
    auto starts = [&](const char* s) {
      return text.compare(pos, std::string(s).size(), s) == 0;
    };
    if (starts("!=")) { pos += 2; return nrdm::CmpOp::Ne; }
    if (starts("<=")) { pos += 2; return nrdm::CmpOp::Le; }
    if (starts(">=")) { pos += 2; return nrdm::CmpOp::Ge; }
    if (starts("=")) { pos += 1; return nrdm::CmpOp::Eq; }
    if (starts("<")) { pos += 1; return nrdm::CmpOp::Lt; }
    if (starts(">")) { pos += 1; return nrdm::CmpOp::Gt; }
    throw error("expected a comparator in guard at offset " + std::to_string(pos));
  }

  nrdm::GuardPtr primary() {
    if (accept('(')) {
      nrdm::GuardPtr g = parse_or();
      if (!accept(')')) throw error("missing ')' in guard");
      return g;
    }
    if (accept_word("not")) return nrdm::guard_not(primary());
    nrdm::GuardOperand l = operand();
    nrdm::CmpOp op = cmp();
    nrdm::GuardOperand r = operand();
    return nrdm::guard_cmp(op, l, r);
  }

  nrdm::GuardPtr parse_and() {
    nrdm::GuardPtr g = primary();
    while (accept_word("and")) g = nrdm::guard_and(g, primary());
    return g;
  }

  nrdm::GuardPtr parse_or() {
    nrdm::GuardPtr g = parse_and();
    while (accept_word("or")) g = nrdm::guard_or(g, parse_and());
    return g;
  }
};

nrdm::GuardPtr AlgebraParser::parse_guard(const std::string& text, const nrdm::Scheme& scheme) {
  GuardParser p{text, scheme};
  nrdm::GuardPtr g = p.parse_or();
  p.skip();
  if (p.pos != text.size()) throw error("trailing input in guard");
  return g;
}

// ---- rendering ------------------------------------------------------------

std::vector<std::string> tuple_members(const nrdm::Scheme& s, const Tuple& t) {
  std::vector<std::string> out;
  out.reserve(t.size());
  for (std::size_t k = 0; k < t.size(); ++k)
    out.push_back(s.attrs[k].domain->members[static_cast<std::size_t>(t[k])]);
  return out;
}

} // namespace

std::string render_relation(const NeutroRelation& r, OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out;
    for (std::size_t k = 0; k < r.scheme().attrs.size(); ++k)
      out += r.scheme().attrs[k].name + ",";
    out += "belief,doubt\n";
    for (const auto& [t, p] : r.rows()) {
      for (const auto& m : tuple_members(r.scheme(), t)) out += m + ",";
      out += fmt_grade(p.belief) + "," + fmt_grade(p.doubt) + "\n";
    }
    return out;
  }
  if (format == OutputFormat::json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [t, p] : r.rows()) {
      nlohmann::json row;
      const auto members = tuple_members(r.scheme(), t);
      for (std::size_t k = 0; k < members.size(); ++k)
        row[r.scheme().attrs[k].name] = members[k];
      row["belief"] = p.belief;
      row["doubt"] = p.doubt;
      rows.push_back(std::move(row));
    }
    return rows.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t k = 0; k < r.scheme().attrs.size(); ++k)
    out += r.scheme().attrs[k].name + (k + 1 < r.scheme().attrs.size() ? " " : "");
  out += " | <belief,doubt>\n";
  if (r.rows().empty()) return out + "  (empty)\n";
  for (const auto& [t, p] : r.rows())
    out += "  " + nrdm::tuple_text(r.scheme(), t) + " " + pair_text(p) + "\n";
  return out;
}

std::string render_multi(const MultiRelation& r, OutputFormat format) {
  std::string out = format == OutputFormat::table ? "(multi-relation rows)\n" : "";
  for (const auto& [t, ps] : r.rows())
    for (const auto& p : ps)
      out += "  " + nrdm::tuple_text(r.scheme(), t) + " " + pair_text(p) + "\n";
  return out;
}

namespace {

ReplResult meta_command(const std::string& line, Session& session) {
  std::istringstream ss(line);
  std::string cmd;
  ss >> cmd;
  if (cmd == "\\help") {
    return {
        "commands:\n"
        "  select ... from ... where ...   generalized SQL query\n"
        "  { t of (A:Dom) | formula }      tuple-calculus query\n"
        "  union/intersect/diff/complement/join/project/select_guard/split/combine\n"
        "  with_split_union/.../with_split_join, with_split_project\n"
        "  let NAME = <expression>\n"
        "meta:\n"
        "  \\load PATH [NAME]   \\save NAME PATH   \\classify NAME   \\list\n"
        "  \\reps NAME          \\stronggen union|complement|join|project:A,B R [S]\n"
        "  \\set grid K | quantifier-range active|full | format table|csv|json\n"
        "  \\explain on|off     \\help              \\quit\n",
        false};
  }
  if (cmd == "\\quit" || cmd == "\\q") return {"", false, true};
  if (cmd == "\\list") {
    std::string out;
    for (const auto& [name, rel] : session.db.relations)
      out += name + " (" + std::to_string(rel.rows().size()) + " rows)\n";
    for (const auto& [name, rel] : session.multis) out += name + " (multi)\n";
    return {out.empty() ? "(no relations loaded)\n" : out, false};
  }
  if (cmd == "\\classify") {
    std::string name;
    if (!(ss >> name)) return {"usage: \\classify NAME\n", true};
    auto mit = session.multis.find(name);
    if (mit != session.multis.end())
      return {to_string(nrdm::classify(mit->second)) + "\n", false};
    auto it = session.db.relations.find(name);
    if (it == session.db.relations.end()) return {"unknown relation '" + name + "'\n", true};
    return {to_string(nrdm::classify(it->second)) + "\n", false};
  }
  if (cmd == "\\reps") {
    std::string name;
    if (!(ss >> name)) return {"usage: \\reps NAME\n", true};
    auto it = session.db.relations.find(name);
    if (it == session.db.relations.end()) return {"unknown relation '" + name + "'\n", true};
    auto completions = nrdm::reps_enum(it->second, session.cfg.grid_k);
    std::string out = std::to_string(completions.size()) + " completion(s) on the 1/" +
                      std::to_string(session.cfg.grid_k) + " grid\n";
    const std::size_t shown = std::min<std::size_t>(completions.size(), 5);
    for (std::size_t k = 0; k < shown; ++k) {
      const auto& f = completions[k];
      out += " ";
      for (std::size_t rank = 0; rank < f.grades.size(); ++rank)
        out += " " + nrdm::tuple_text(f.scheme, nrdm::tuple_at(f.scheme, rank)) + "=" +
               fmt_grade(f.grades[rank]);
      out += "\n";
    }
    if (completions.size() > shown)
      out += "  ... " + std::to_string(completions.size() - shown) + " more\n";
    return {out, false};
  }
  if (cmd == "\\stronggen") {
    std::string opname, rname, sname;
    if (!(ss >> opname >> rname)) return {"usage: \\stronggen OP R [S]\n", true};
    ss >> sname;
    auto find = [&](const std::string& n) -> const NeutroRelation* {
      auto it = session.db.relations.find(n);
      return it == session.db.relations.end() ? nullptr : &it->second;
    };
    const NeutroRelation* r = find(rname);
    if (!r) return {"unknown relation '" + rname + "'\n", true};
    const NeutroRelation* s = sname.empty() ? nullptr : find(sname);
    if (!sname.empty() && !s) return {"unknown relation '" + sname + "'\n", true};
    nrdm::StrongGenOp op;
    if (opname == "union") op = nrdm::StrongGenOp::union_op();
    else if (opname == "complement") op = nrdm::StrongGenOp::complement_op();
    else if (opname == "join") op = nrdm::StrongGenOp::join_op();
    else if (opname.rfind("project:", 0) == 0) {
      std::vector<std::string> attrs;
      std::istringstream as(opname.substr(8));
      std::string attr;
      while (std::getline(as, attr, ',')) attrs.push_back(attr);
      op = nrdm::StrongGenOp::project_op(attrs);
    } else {
      return {"usage: \\stronggen union|complement|join|project:A,B R [S]\n", true};
    }
    auto verdict = nrdm::strong_gen_check(op, *r, s, session.cfg.grid_k);
    std::string out = verdict.equal ? "equal" : "unequal";
    out += " (result completions: " + std::to_string(verdict.lhs_count) +
           ", operator images: " + std::to_string(verdict.rhs_count) + ")\n";
    if (!verdict.equal) out += "  witness: " + verdict.witness + "\n";
    return {out, false};
  }
  if (cmd == "\\load") {
    std::string path, name;
    if (!(ss >> path)) return {"usage: \\load PATH [NAME]\n", true};
    if (!(ss >> name)) name = fs::path(path).stem().string();
    session.db.relations[name] = nrdm::load_relation(path, session.db.catalog);
    return {"loaded " + name + " (" +
                std::to_string(session.db.relations[name].rows().size()) + " rows)\n",
            false};
  }
  if (cmd == "\\save") {
    std::string name, path;
    if (!(ss >> name >> path)) return {"usage: \\save NAME PATH\n", true};
    auto it = session.db.relations.find(name);
    if (it == session.db.relations.end()) return {"unknown relation '" + name + "'\n", true};
    nrdm::save_relation(it->second, path);
    return {"saved " + name + "\n", false};
  }
  if (cmd == "\\explain") {
    std::string mode;
    ss >> mode;
    if (mode == "on") session.cfg.explain = true;
    else if (mode == "off") session.cfg.explain = false;
    else return {"usage: \\explain on|off\n", true};
    return {"", false};
  }
  if (cmd == "\\set") {
    std::string what;
    ss >> what;
    if (what == "grid") {
      int k;
      if (!(ss >> k) || k < 1) return {"usage: \\set grid K (K >= 1)\n", true};
      session.cfg.grid_k = k;
      return {"", false};
    }
    if (what == "quantifier-range") {
      std::string mode;
      ss >> mode;
      if (mode == "active") session.cfg.range = QuantifierRange::active;
      else if (mode == "full") session.cfg.range = QuantifierRange::full;
      else return {"usage: \\set quantifier-range active|full\n", true};
      return {"", false};
    }
    if (what == "format") {
      std::string f;
      ss >> f;
      if (f == "table") session.format = OutputFormat::table;
      else if (f == "csv") session.format = OutputFormat::csv;
      else if (f == "json") session.format = OutputFormat::json;
      else return {"usage: \\set format table|csv|json\n", true};
      return {"", false};
    }
    return {"unknown setting '" + what + "'; try \\help\n", true};
  }
  return {"unknown command '" + cmd + "'; try \\help\n", true};
}

struct EvalOutcome {
  bool multi{false};
  NeutroRelation rel;
  MultiRelation mrel;
  std::string trace_text;
};

EvalOutcome eval_expression(const std::string& text, Session& session) {
  EvalOutcome out;
  if (starts_with_ci(text, "select")) {
    Query q = parse_query(text);
    EvalTrace trace;
    out.rel = eval_query(q, session.db, session.cfg, &trace);
    for (const auto& s : trace.sections) out.trace_text += s;
    return out;
  }
  if (!text.empty() && text[0] == '{') {
    nrdm::CalcQuery q = nrdm::parse_calc_query(text, session.db.catalog);
    nrdm::CalcDatabase cdb{session.db.relations};
    nrdm::CalcConfig ccfg;
    ccfg.range = session.cfg.range;
    out.rel = nrdm::tc_query(q.var, q.scheme, q.body, cdb, ccfg);
    return out;
  }
  AlgebraParser p{text, 0, session};
  AlgebraValue v = p.parse_expr();
  if (!p.done()) throw error("trailing input after expression");
  out.multi = v.multi;
  out.rel = std::move(v.rel);
  out.mrel = std::move(v.mrel);
  return out;
}

} // namespace

ReplResult repl_execute(const std::string& raw, Session& session) {
  std::string line = trim(raw);
  if (line.empty() || line[0] == '#') return {"", false};
  try {
    if (line[0] == '\\') return meta_command(line, session);

    // let NAME = expression
    if (starts_with_ci(line, "let")) {
      std::size_t eq = line.find('=');
      if (eq == std::string::npos) return {"usage: let NAME = <expression>\n", true};
      std::string name = trim(line.substr(3, eq - 3));
      if (name.empty() ||
          !std::all_of(name.begin(), name.end(),
                       [](unsigned char c) { return std::isalnum(c) || c == '_'; }))
        return {"invalid name '" + name + "'\n", true};
      EvalOutcome out = eval_expression(trim(line.substr(eq + 1)), session);
      if (out.multi) {
        session.multis[name] = std::move(out.mrel);
        session.db.relations.erase(name);
      } else {
        session.db.relations[name] = std::move(out.rel);
        session.multis.erase(name);
      }
      return {"", false};
    }

    EvalOutcome out = eval_expression(line, session);
    std::string text = out.trace_text;
    text += out.multi ? render_multi(out.mrel, session.format)
                      : render_relation(out.rel, session.format);
    return {text, false};
  } catch (const parse_error& e) {
    return {std::string("error: ") + e.what() + "\n", true};
  } catch (const error& e) {
    return {std::string("error: ") + e.what() + "\n", true};
  }
}

int run_repl(Session& session, std::istream& in, std::ostream& out, bool interactive) {
  std::string line;
  bool any_error = false;
  if (interactive) out << "inql> " << std::flush;
  while (std::getline(in, line)) {
    ReplResult r = repl_execute(line, session);
    if (r.quit) break;
    out << r.output;
    if (r.is_error) {
      any_error = true;
      if (!interactive) return 1;
    }
    if (interactive) out << "inql> " << std::flush;
  }
  return any_error ? 1 : 0;
}

} // namespace inse::inql
