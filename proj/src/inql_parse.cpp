#include "inse/inql/ast.hpp"

#include <cctype>
#include <sstream>

namespace inse::inql {

bool SubqueryRef::operator==(const SubqueryRef& o) const {
  if (relname != o.relname) return false;
  if (!query != !o.query) return false;
  return !query || *query == *o.query;
}

bool Cond::operator==(const Cond& o) const {
  if (kind != o.kind) return false;
  auto eq = [](const CondPtr& a, const CondPtr& b) {
    if (!a != !b) return false;
    return !a || *a == *b;
  };
  return eq(lhs, o.lhs) && eq(rhs, o.rhs) && target == o.target && tuple == o.tuple &&
         left == o.left && right == o.right && op == o.op && quantifier_any == o.quantifier_any;
}

bool SelectQuery::operator==(const SelectQuery& o) const {
  auto eq = [](const CondPtr& a, const CondPtr& b) {
    if (!a != !b) return false;
    return !a || *a == *b;
  };
  return star == o.star && items == o.items && froms == o.froms && eq(where, o.where);
}

bool Query::operator==(const Query& o) const {
  if (selects.size() != o.selects.size()) return false;
  for (std::size_t k = 0; k < selects.size(); ++k)
    if (!(*selects[k] == *o.selects[k])) return false;
  return true;
}

std::string Diagnostic::str() const {
  std::ostringstream ss;
  ss << line << ":" << column << ": " << message;
  return ss.str();
}

namespace {

struct Token {
  enum class Kind { Ident, Keyword, Number, String, Symbol, End };
  Kind kind{Kind::End};
  std::string text;  // keywords lower-cased
  int line{1}, column{1};
};

const char* kKeywords[] = {"select", "from", "where", "union", "not", "and",
                           "or",     "in",   "exists", "any",  "all"};

bool is_keyword(const std::string& lower) {
  for (const char* k : kKeywords)
    if (lower == k) return true;
  return false;
}

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  struct State {
    std::size_t pos;
    int line, col;
    Token current;
  };
  State save() const { return {pos_, line_, col_, current_}; }
  void restore(const State& s) {
    pos_ = s.pos;
    line_ = s.line;
    col_ = s.col;
    current_ = s.current;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error({current_.line, current_.column, msg});
  }

private:
  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
    current_.line = line_;
    current_.column = col_;
    if (pos_ >= text_.size()) {
      current_.kind = Token::Kind::End;
      current_.text.clear();
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_'))
        consume();
      std::string word = text_.substr(start, pos_ - start);
      std::string lower = word;
      for (char& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      if (is_keyword(lower)) {
        current_.kind = Token::Kind::Keyword;
        current_.text = lower;
      } else {
        current_.kind = Token::Kind::Ident;
        current_.text = word;
      }
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '.'))
        consume();
      current_.kind = Token::Kind::Number;
      current_.text = text_.substr(start, pos_ - start);
      return;
    }
    if (c == '\'') {
      consume();
      std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != '\'') consume();
      if (pos_ >= text_.size())
        throw parse_error({current_.line, current_.column, "unterminated string literal"});
      current_.kind = Token::Kind::String;
      current_.text = text_.substr(start, pos_ - start);
      consume();  // closing quote
      return;
    }
    static const char* two_char[] = {"!=", "<=", ">="};
    for (const char* s : two_char) {
      if (text_.compare(pos_, 2, s) == 0) {
        current_.kind = Token::Kind::Symbol;
        current_.text = s;
        consume();
        consume();
        return;
      }
    }
    if (std::string("(),=<>*.").find(c) != std::string::npos) {
      current_.kind = Token::Kind::Symbol;
      current_.text = std::string(1, c);
      consume();
      return;
    }
    throw parse_error({line_, col_, std::string("unexpected character '") + c + "'"});
  }

  void consume() {
    ++pos_;
    ++col_;
  }

  const std::string& text_;
  std::size_t pos_{0};
  int line_{1}, col_{1};
  Token current_;
};

class Parser {
public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Query parse() {
    Query q;
    q.selects.push_back(parse_select());
    while (accept_keyword("union")) q.selects.push_back(parse_select());
    if (lex_.peek().kind != Token::Kind::End) lex_.fail("trailing input after query");
    return q;
  }

private:
  Lexer lex_;

  bool accept_keyword(const std::string& kw) {
    if (lex_.peek().kind == Token::Kind::Keyword && lex_.peek().text == kw) {
      lex_.take();
      return true;
    }
    return false;
  }

  void expect_keyword(const std::string& kw) {
    if (!accept_keyword(kw)) lex_.fail("expected '" + kw + "'");
  }

  bool accept_symbol(const std::string& sym) {
    if (lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == sym) {
      lex_.take();
      return true;
    }
    return false;
  }

  void expect_symbol(const std::string& sym) {
    if (!accept_symbol(sym)) lex_.fail("expected '" + sym + "'");
  }

  std::string expect_ident() {
    if (lex_.peek().kind != Token::Kind::Ident) lex_.fail("expected an identifier");
    return lex_.take().text;
  }

  QueryPtr parse_select() {
    expect_keyword("select");
    auto q = std::make_shared<SelectQuery>();
    if (accept_symbol("*")) {
      q->star = true;
    } else {
      q->items.push_back({parse_attr_ref()});
      while (accept_symbol(",")) q->items.push_back({parse_attr_ref()});
    }
    expect_keyword("from");
    q->froms.push_back(expect_ident());
    while (accept_symbol(",")) q->froms.push_back(expect_ident());
    expect_keyword("where");
    q->where = parse_cond();
    return q;
  }

  Operand parse_attr_ref() {
    Operand o;
    o.text = expect_ident();
    o.kind = Operand::Kind::Ident;
    if (accept_symbol(".")) {
      o.qualifier = o.text;
      o.text = expect_ident();
      o.kind = Operand::Kind::Qualified;
    }
    return o;
  }

  Operand parse_operand() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Number) {
      Operand o;
      o.kind = Operand::Kind::Number;
      o.text = lex_.take().text;
      return o;
    }
    if (t.kind == Token::Kind::String) {
      Operand o;
      o.kind = Operand::Kind::String;
      o.text = lex_.take().text;
      return o;
    }
    if (t.kind == Token::Kind::Ident) return parse_attr_ref();
    lex_.fail("expected an operand");
  }

  CmpOp parse_cmp_op() {
    if (lex_.peek().kind != Token::Kind::Symbol) lex_.fail("expected a comparator");
    std::string s = lex_.take().text;
    if (s == "=") return CmpOp::Eq;
    if (s == "!=") return CmpOp::Ne;
    if (s == "<") return CmpOp::Lt;
    if (s == "<=") return CmpOp::Le;
    if (s == ">") return CmpOp::Gt;
    if (s == ">=") return CmpOp::Ge;
    lex_.fail("expected a comparator, got '" + s + "'");
  }

  bool at_cmp_op() const {
    if (lex_.peek().kind != Token::Kind::Symbol) return false;
    const std::string& s = lex_.peek().text;
    return s == "=" || s == "!=" || s == "<" || s == "<=" || s == ">" || s == ">=";
  }

  SubqueryRef parse_target() {
    SubqueryRef ref;
    if (accept_symbol("(")) {
      ref.query = parse_union_chain();
      expect_symbol(")");
    } else {
      ref.relname = expect_ident();
    }
    return ref;
  }

  std::shared_ptr<Query> parse_union_chain() {
    auto q = std::make_shared<Query>();
    q->selects.push_back(parse_select());
    while (accept_keyword("union")) q->selects.push_back(parse_select());
    return q;
  }

  CondPtr parse_cond() { return parse_or(); }

  CondPtr parse_or() {
    CondPtr acc = parse_and();
    while (accept_keyword("or")) {
      auto node = std::make_shared<Cond>();
      node->kind = Cond::Kind::Or;
      node->lhs = acc;
      node->rhs = parse_and();
      acc = node;
    }
    return acc;
  }

  CondPtr parse_and() {
    CondPtr acc = parse_not();
    while (accept_keyword("and")) {
      auto node = std::make_shared<Cond>();
      node->kind = Cond::Kind::And;
      node->lhs = acc;
      node->rhs = parse_not();
      acc = node;
    }
    return acc;
  }

  CondPtr parse_not() {
    if (accept_keyword("not")) {
      auto node = std::make_shared<Cond>();
      node->kind = Cond::Kind::Not;
      node->lhs = parse_not();
      return node;
    }
    return parse_primary();
  }

  CondPtr parse_primary() {
    if (accept_keyword("exists")) {
      auto node = std::make_shared<Cond>();
      node->kind = Cond::Kind::Exists;
      expect_symbol("(");
      node->target.query = parse_union_chain();
      expect_symbol(")");
      return node;
    }
    if (lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == "(") {
      // Either a parenthesized condition or a tuple "(a, b) in ...".
      if (auto tuple = try_parse_tuple_in()) return tuple;
      expect_symbol("(");
      CondPtr inner = parse_cond();
      expect_symbol(")");
      return inner;
    }
    Operand left = parse_operand();
    if (accept_keyword("in")) {
      auto node = std::make_shared<Cond>();
      node->kind = Cond::Kind::In;
      node->tuple.push_back(left);
      node->target = parse_target();
      return node;
    }
    CmpOp op = parse_cmp_op();
    if (peek_keyword("any") || peek_keyword("all")) {
      bool any = lex_.take().text == "any";
      auto node = std::make_shared<Cond>();
      node->kind = Cond::Kind::AnyAll;
      node->left = left;
      node->op = op;
      node->quantifier_any = any;
      node->target = parse_target();
      return node;
    }
    auto node = std::make_shared<Cond>();
    node->kind = Cond::Kind::Cmp;
    node->left = left;
    node->op = op;
    node->right = parse_operand();
    return node;
  }

  bool peek_keyword(const std::string& kw) const {
    return lex_.peek().kind == Token::Kind::Keyword && lex_.peek().text == kw;
  }

  // Tentatively parses "(operand, operand, ...) in"; returns null (without
  // consuming input) when the shape does not match.
  CondPtr try_parse_tuple_in() {
    Lexer::State save = lex_.save();
    try {
      expect_symbol("(");
      std::vector<Operand> elems;
      elems.push_back(parse_operand());
      while (accept_symbol(",")) elems.push_back(parse_operand());
      expect_symbol(")");
      expect_keyword("in");
      auto node = std::make_shared<Cond>();
      node->kind = Cond::Kind::In;
      node->tuple = std::move(elems);
      node->target = parse_target();
      return node;
    } catch (const parse_error&) {
      lex_.restore(save);
      return nullptr;
    }
  }
};

std::string operand_text(const Operand& o) {
  switch (o.kind) {
    case Operand::Kind::Ident: return o.text;
    case Operand::Kind::Qualified: return o.qualifier + "." + o.text;
    case Operand::Kind::Number: return o.text;
    case Operand::Kind::String: return "'" + o.text + "'";
  }
  return o.text;
}

const char* cmp_text(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return "=";
    case CmpOp::Ne: return "!=";
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
  }
  return "?";
}

std::string print_select(const SelectQuery& q);
std::string print_query_text(const Query& q);

std::string target_text(const SubqueryRef& ref) {
  if (ref.query) return "(" + print_query_text(*ref.query) + ")";
  return ref.relname;
}

std::string cond_text(const Cond& c) {
  switch (c.kind) {
    case Cond::Kind::Not: return "not (" + cond_text(*c.lhs) + ")";
    case Cond::Kind::And: return "(" + cond_text(*c.lhs) + " and " + cond_text(*c.rhs) + ")";
    case Cond::Kind::Or: return "(" + cond_text(*c.lhs) + " or " + cond_text(*c.rhs) + ")";
    case Cond::Kind::Exists: return "exists " + target_text(c.target);
    case Cond::Kind::In: {
      std::string t;
      if (c.tuple.size() == 1) {
        t = operand_text(c.tuple[0]);
      } else {
        t = "(";
        for (std::size_t k = 0; k < c.tuple.size(); ++k)
          t += (k ? ", " : "") + operand_text(c.tuple[k]);
        t += ")";
      }
      return t + " in " + target_text(c.target);
    }
    case Cond::Kind::AnyAll:
      return operand_text(c.left) + " " + cmp_text(c.op) + " " +
             (c.quantifier_any ? "any " : "all ") + target_text(c.target);
    case Cond::Kind::Cmp:
      return operand_text(c.left) + " " + cmp_text(c.op) + " " + operand_text(c.right);
  }
  return "?";
}

std::string print_select(const SelectQuery& q) {
  std::string out = "select ";
  if (q.star) {
    out += "*";
  } else {
    for (std::size_t k = 0; k < q.items.size(); ++k)
      out += (k ? ", " : "") + operand_text(q.items[k].attr);
  }
  out += " from ";
  for (std::size_t k = 0; k < q.froms.size(); ++k) out += (k ? ", " : "") + q.froms[k];
  out += " where " + cond_text(*q.where);
  return out;
}

std::string print_query_text(const Query& q) {
  std::string out;
  for (std::size_t k = 0; k < q.selects.size(); ++k) {
    if (k) out += " union ";
    out += print_select(*q.selects[k]);
  }
  return out;
}

} // namespace

Query parse_query(const std::string& text) { return Parser(text).parse(); }

std::string print_query(const Query& q) { return print_query_text(q); }

} // namespace inse::inql
