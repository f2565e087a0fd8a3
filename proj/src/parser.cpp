/*
 * Copyright 2026 The RMA Engine Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "rma/parser.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "rma/value_format.hpp"

namespace rma {

namespace {

enum class Tok {
  end,
  identifier,   // bare or double-quoted
  integer,
  floating,
  string,
  lparen, rparen, comma, semicolon, star,
  plus, minus, slash,
  eq, ne, lt, le, gt, ge,
};

struct Token {
  Tok kind = Tok::end;
  std::string text;      // identifier (unquoted form) or string body
  bool quoted = false;   // identifier came double-quoted
  int64_t int_value = 0;
  double float_value = 0;
  SourcePos pos;
};

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { tokenize(); }
  const std::vector<Token>& tokens() const { return tokens_; }

 private:
  [[noreturn]] void fail(const std::string& message, int line, int col) {
    throw RmaError(errc::parse_error, message, SourcePos{line, col});
  }

  void tokenize() {
    size_t i = 0;
    int line = 1, col = 1;
    auto advance = [&](size_t n) {
      for (size_t k = 0; k < n; ++k) {
        if (text_[i + k] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      i += n;
    };
    while (i < text_.size()) {
      char c = text_[i];
      SourcePos pos{line, col};
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
        continue;
      }
      if (c == '-' && i + 1 < text_.size() && text_[i + 1] == '-') {
        while (i < text_.size() && text_[i] != '\n') advance(1);
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t j = i;
        while (j < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[j])) ||
                text_[j] == '_')) {
          ++j;
        }
        Token t;
        t.kind = Tok::identifier;
        t.text = std::string(text_.substr(i, j - i));
        t.pos = pos;
        tokens_.push_back(std::move(t));
        advance(j - i);
        continue;
      }
      if (c == '"') {
        std::string body;
        size_t j = i + 1;
        bool closed = false;
        while (j < text_.size()) {
          if (text_[j] == '"') {
            if (j + 1 < text_.size() && text_[j + 1] == '"') {
              body += '"';
              j += 2;
              continue;
            }
            closed = true;
            ++j;
            break;
          }
          body += text_[j++];
        }
        if (!closed) fail("unterminated quoted identifier", pos.line, pos.column);
        Token t;
        t.kind = Tok::identifier;
        t.text = std::move(body);
        t.quoted = true;
        t.pos = pos;
        tokens_.push_back(std::move(t));
        advance(j - i);
        continue;
      }
      if (c == '\'') {
        std::string body;
        size_t j = i + 1;
        bool closed = false;
        while (j < text_.size()) {
          if (text_[j] == '\'') {
            if (j + 1 < text_.size() && text_[j + 1] == '\'') {
              body += '\'';
              j += 2;
              continue;
            }
            closed = true;
            ++j;
            break;
          }
          body += text_[j++];
        }
        if (!closed) fail("unterminated string literal", pos.line, pos.column);
        Token t;
        t.kind = Tok::string;
        t.text = std::move(body);
        t.pos = pos;
        tokens_.push_back(std::move(t));
        advance(j - i);
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) ||
          (c == '.' && i + 1 < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[i + 1])))) {
        size_t j = i;
        bool is_float = false;
        while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
        if (j < text_.size() && text_[j] == '.') {
          is_float = true;
          ++j;
          while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
        }
        if (j < text_.size() && (text_[j] == 'e' || text_[j] == 'E')) {
          size_t k = j + 1;
          if (k < text_.size() && (text_[k] == '+' || text_[k] == '-')) ++k;
          if (k < text_.size() && std::isdigit(static_cast<unsigned char>(text_[k]))) {
            is_float = true;
            j = k;
            while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
          }
        }
        std::string_view body = text_.substr(i, j - i);
        Token t;
        t.pos = pos;
        if (!is_float) {
          int64_t v = 0;
          auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
          if (ec == std::errc() && p == body.data() + body.size()) {
            t.kind = Tok::integer;
            t.int_value = v;
          } else {
            is_float = true;
          }
        }
        if (is_float) {
          double v = 0;
          auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
          if (ec != std::errc() || p != body.data() + body.size()) {
            fail("bad numeric literal", pos.line, pos.column);
          }
          t.kind = Tok::floating;
          t.float_value = v;
        }
        tokens_.push_back(std::move(t));
        advance(j - i);
        continue;
      }
      auto push = [&](Tok kind, size_t len) {
        Token t;
        t.kind = kind;
        t.pos = pos;
        tokens_.push_back(std::move(t));
        advance(len);
      };
      switch (c) {
        case '(': push(Tok::lparen, 1); continue;
        case ')': push(Tok::rparen, 1); continue;
        case ',': push(Tok::comma, 1); continue;
        case ';': push(Tok::semicolon, 1); continue;
        case '*': push(Tok::star, 1); continue;
        case '+': push(Tok::plus, 1); continue;
        case '-': push(Tok::minus, 1); continue;
        case '/': push(Tok::slash, 1); continue;
        case '=': push(Tok::eq, 1); continue;
        case '<':
          if (i + 1 < text_.size() && text_[i + 1] == '>') {
            push(Tok::ne, 2);
          } else if (i + 1 < text_.size() && text_[i + 1] == '=') {
            push(Tok::le, 2);
          } else {
            push(Tok::lt, 1);
          }
          continue;
        case '>':
          if (i + 1 < text_.size() && text_[i + 1] == '=') {
            push(Tok::ge, 2);
          } else {
            push(Tok::gt, 1);
          }
          continue;
        default:
          fail(std::string("unexpected character '") + c + "'", pos.line,
               pos.column);
      }
    }
    Token t;
    t.kind = Tok::end;
    t.pos = {line, col};
    tokens_.push_back(std::move(t));
  }

  std::string_view text_;
  std::vector<Token> tokens_;
};

class Parser {
 public:
  explicit Parser(std::string_view sql) : lexer_(sql) {}

  Query parse_statement() {
    Query q = parse_query();
    expect_semicolon();
    if (peek().kind != Tok::end) {
      fail("unexpected input after statement");
    }
    return q;
  }

 private:
  const Token& peek(size_t ahead = 0) const {
    size_t i = std::min(pos_ + ahead, lexer_.tokens().size() - 1);
    return lexer_.tokens()[i];
  }
  const Token& advance() { return lexer_.tokens()[pos_++]; }

  bool is_keyword(const Token& t, std::string_view kw) const {
    return t.kind == Tok::identifier && !t.quoted && upper(t.text) == kw;
  }
  bool accept_keyword(std::string_view kw) {
    if (is_keyword(peek(), kw)) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect_keyword(std::string_view kw) {
    if (!accept_keyword(kw)) {
      fail("expected " + std::string(kw));
    }
  }
  bool accept(Tok kind) {
    if (peek().kind == kind) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(Tok kind, const char* what) {
    if (!accept(kind)) fail(std::string("expected ") + what);
  }
  void expect_semicolon() { expect(Tok::semicolon, "';'"); }

  [[noreturn]] void fail(const std::string& message) const {
    throw RmaError(errc::parse_error, message, peek().pos);
  }

  static bool is_reserved(const std::string& word) {
    static const char* kReserved[] = {
        "SELECT", "FROM", "WHERE", "GROUP", "ORDER", "BY", "AS",
        "JOIN",   "CROSS", "ON",   "AND",  "OR",    "NOT", "NAMED",
    };
    std::string u = upper(word);
    for (const char* kw : kReserved) {
      if (u == kw) return true;
    }
    return false;
  }

  std::string expect_identifier(const char* what) {
    const Token& t = peek();
    if (t.kind != Tok::identifier || (!t.quoted && is_reserved(t.text))) {
      fail(std::string("expected ") + what);
    }
    return advance().text;
  }

  // --- expressions ---

  ExprPtr parse_expr() { return parse_or(); }

  ExprPtr parse_or() {
    ExprPtr e = parse_and();
    while (is_keyword(peek(), "OR")) {
      SourcePos pos = advance().pos;
      e = ScalarExpr::binary(BinOp::logic_or, e, parse_and(), pos);
    }
    return e;
  }

  ExprPtr parse_and() {
    ExprPtr e = parse_not();
    while (is_keyword(peek(), "AND")) {
      SourcePos pos = advance().pos;
      e = ScalarExpr::binary(BinOp::logic_and, e, parse_not(), pos);
    }
    return e;
  }

  ExprPtr parse_not() {
    if (is_keyword(peek(), "NOT")) {
      SourcePos pos = advance().pos;
      return ScalarExpr::unary(UnOp::logic_not, parse_not(), pos);
    }
    return parse_comparison();
  }

  ExprPtr parse_comparison() {
    ExprPtr e = parse_additive();
    BinOp op;
    switch (peek().kind) {
      case Tok::eq: op = BinOp::eq; break;
      case Tok::ne: op = BinOp::ne; break;
      case Tok::lt: op = BinOp::lt; break;
      case Tok::le: op = BinOp::le; break;
      case Tok::gt: op = BinOp::gt; break;
      case Tok::ge: op = BinOp::ge; break;
      default: return e;
    }
    SourcePos pos = advance().pos;
    return ScalarExpr::binary(op, e, parse_additive(), pos);
  }

  ExprPtr parse_additive() {
    ExprPtr e = parse_multiplicative();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      BinOp op = peek().kind == Tok::plus ? BinOp::add : BinOp::sub;
      SourcePos pos = advance().pos;
      e = ScalarExpr::binary(op, e, parse_multiplicative(), pos);
    }
    return e;
  }

  ExprPtr parse_multiplicative() {
    ExprPtr e = parse_unary();
    while (peek().kind == Tok::star || peek().kind == Tok::slash) {
      BinOp op = peek().kind == Tok::star ? BinOp::mul : BinOp::div;
      SourcePos pos = advance().pos;
      e = ScalarExpr::binary(op, e, parse_unary(), pos);
    }
    return e;
  }

  ExprPtr parse_unary() {
    if (peek().kind == Tok::minus) {
      SourcePos pos = advance().pos;
      return ScalarExpr::unary(UnOp::negate, parse_unary(), pos);
    }
    return parse_primary();
  }

  std::optional<AggFn> aggregate_fn(const Token& t) const {
    if (t.kind != Tok::identifier || t.quoted) return std::nullopt;
    std::string u = upper(t.text);
    if (u == "COUNT") return AggFn::count;
    if (u == "SUM") return AggFn::sum;
    if (u == "AVG") return AggFn::avg;
    if (u == "MIN") return AggFn::min;
    if (u == "MAX") return AggFn::max;
    return std::nullopt;
  }

  ExprPtr parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::integer: {
        SourcePos pos = advance().pos;
        return ScalarExpr::literal(lexer_.tokens()[pos_ - 1].int_value, pos);
      }
      case Tok::floating: {
        SourcePos pos = advance().pos;
        return ScalarExpr::literal(lexer_.tokens()[pos_ - 1].float_value, pos);
      }
      case Tok::string: {
        const Token& tok = advance();
        return ScalarExpr::literal(tok.text, tok.pos);
      }
      case Tok::lparen: {
        advance();
        ExprPtr e = parse_expr();
        expect(Tok::rparen, "')'");
        return e;
      }
      case Tok::identifier: {
        if (auto fn = aggregate_fn(t); fn && peek(1).kind == Tok::lparen) {
          SourcePos pos = advance().pos;
          advance();  // '('
          if (*fn == AggFn::count && peek().kind == Tok::star) {
            advance();
            expect(Tok::rparen, "')'");
            return ScalarExpr::aggregate(AggFn::count_star, nullptr, pos);
          }
          ExprPtr arg = parse_expr();
          expect(Tok::rparen, "')'");
          return ScalarExpr::aggregate(*fn, arg, pos);
        }
        if (!t.quoted && is_reserved(t.text)) {
          fail("unexpected keyword " + upper(t.text));
        }
        const Token& tok = advance();
        return ScalarExpr::column(tok.text, tok.pos);
      }
      default:
        fail("expected an expression");
    }
  }

  // --- FROM clause ---

  std::string parse_optional_alias() {
    if (accept_keyword("AS")) return expect_identifier("alias");
    const Token& t = peek();
    if (t.kind == Tok::identifier && (t.quoted || !is_reserved(t.text))) {
      return advance().text;
    }
    return {};
  }

  FromItem parse_from_item() {
    FromItem item;
    item.pos = peek().pos;
    if (peek().kind == Tok::lparen) {
      advance();
      if (!is_keyword(peek(), "SELECT")) {
        fail("expected SELECT to start a subquery");
      }
      item.kind = FromItem::Kind::subquery;
      item.subquery = std::make_shared<Query>(parse_query());
      expect(Tok::rparen, "')'");
      item.alias = parse_optional_alias();
      if (item.alias.empty()) {
        fail("a subquery in FROM needs an alias");
      }
      return item;
    }
    const Token& t = peek();
    if (t.kind != Tok::identifier || (!t.quoted && is_reserved(t.text))) {
      fail("expected a table, subquery, or matrix operation");
    }
    if (!t.quoted && peek(1).kind == Tok::lparen) {
      if (auto op = opcode_from_name(t.text)) {
        advance();  // op name
        advance();  // '('
        item.kind = FromItem::Kind::rma_call;
        item.op = *op;
        item.args.push_back(parse_rma_arg());
        while (peek().kind == Tok::comma && !comma_continues_order_list(1)) {
          advance();
          item.args.push_back(parse_rma_arg());
        }
        if (accept_keyword("NAMED")) {
          item.context_name = expect_identifier("context attribute name");
        }
        expect(Tok::rparen, "')'");
        item.alias = parse_optional_alias();
        return item;
      }
      fail("'" + t.text + "' is not a relational matrix operation");
    }
    item.kind = FromItem::Kind::table;
    item.table_name = advance().text;
    item.alias = parse_optional_alias();
    return item;
  }

  /// Decides whether the comma at `pos_ + offset - 1`... i.e. looking at the
  /// tokens starting `offset` ahead, whether they continue a BY list (next
  /// terminator at depth 0 is ',' / ')' / NAMED) or start a new rma argument
  /// (terminator is BY).
  bool comma_continues_order_list(size_t offset) const {
    int depth = 0;
    for (size_t k = offset;; ++k) {
      const Token& t = peek(k);
      if (t.kind == Tok::end) return true;
      if (t.kind == Tok::lparen) {
        ++depth;
        continue;
      }
      if (t.kind == Tok::rparen) {
        if (depth == 0) return true;
        --depth;
        continue;
      }
      if (depth > 0) continue;
      if (t.kind == Tok::comma) return true;
      if (is_keyword(t, "BY")) return false;
      if (is_keyword(t, "NAMED")) return true;
    }
  }

  FromItem::RmaArg parse_rma_arg() {
    FromItem::RmaArg arg;
    arg.item = std::make_unique<FromItem>(parse_from_item());
    expect_keyword("BY");
    arg.order_schema.push_back(expect_identifier("order attribute"));
    while (peek().kind == Tok::comma && comma_continues_order_list(1)) {
      advance();
      arg.order_schema.push_back(expect_identifier("order attribute"));
    }
    return arg;
  }

  // --- query ---

  std::vector<std::string> parse_ident_list() {
    std::vector<std::string> names;
    names.push_back(expect_identifier("attribute name"));
    while (accept(Tok::comma)) {
      names.push_back(expect_identifier("attribute name"));
    }
    return names;
  }

  Query parse_query() {
    Query q;
    q.pos = peek().pos;
    expect_keyword("SELECT");
    if (peek().kind == Tok::star) {
      advance();
      q.select_star = true;
    } else {
      for (;;) {
        SelectItem item;
        item.expr = parse_expr();
        item.alias = parse_optional_alias();
        q.select.push_back(std::move(item));
        if (!accept(Tok::comma)) break;
      }
    }
    expect_keyword("FROM");
    q.from = parse_from_item();
    for (;;) {
      if (peek().kind == Tok::comma) {
        advance();
        JoinClause j;
        j.kind = JoinClause::Kind::comma;
        j.item = parse_from_item();
        q.joins.push_back(std::move(j));
        continue;
      }
      if (is_keyword(peek(), "CROSS")) {
        advance();
        expect_keyword("JOIN");
        JoinClause j;
        j.kind = JoinClause::Kind::cross;
        j.item = parse_from_item();
        q.joins.push_back(std::move(j));
        continue;
      }
      if (is_keyword(peek(), "JOIN")) {
        advance();
        JoinClause j;
        j.kind = JoinClause::Kind::inner;
        j.item = parse_from_item();
        expect_keyword("ON");
        j.on = parse_expr();
        q.joins.push_back(std::move(j));
        continue;
      }
      break;
    }
    if (accept_keyword("WHERE")) {
      q.where = parse_expr();
    }
    if (is_keyword(peek(), "GROUP")) {
      advance();
      expect_keyword("BY");
      q.group_by = parse_ident_list();
    }
    if (is_keyword(peek(), "ORDER")) {
      advance();
      expect_keyword("BY");
      q.order_by = parse_ident_list();
    }
    return q;
  }

  Lexer lexer_;
  size_t pos_ = 0;
};

}  // namespace

Query parse(std::string_view sql) { return Parser(sql).parse_statement(); }

// --- AST equality and rendering ---

bool SelectItem::equals(const SelectItem& o) const {
  return alias == o.alias && expr->equals(*o.expr);
}

bool FromItem::equals(const FromItem& o) const {
  if (kind != o.kind || alias != o.alias) return false;
  switch (kind) {
    case Kind::table: return table_name == o.table_name;
    case Kind::subquery: return subquery->equals(*o.subquery);
    case Kind::rma_call: {
      if (op != o.op || context_name != o.context_name ||
          args.size() != o.args.size()) {
        return false;
      }
      for (size_t i = 0; i < args.size(); ++i) {
        if (args[i].order_schema != o.args[i].order_schema) return false;
        if (!args[i].item->equals(*o.args[i].item)) return false;
      }
      return true;
    }
  }
  return false;
}

bool JoinClause::equals(const JoinClause& o) const {
  if (kind != o.kind || !item.equals(o.item)) return false;
  if (!on != !o.on) return false;
  return !on || on->equals(*o.on);
}

bool Query::equals(const Query& o) const {
  if (select_star != o.select_star || select.size() != o.select.size()) {
    return false;
  }
  for (size_t i = 0; i < select.size(); ++i) {
    if (!select[i].equals(o.select[i])) return false;
  }
  if (!from.equals(o.from) || joins.size() != o.joins.size()) return false;
  for (size_t i = 0; i < joins.size(); ++i) {
    if (!joins[i].equals(o.joins[i])) return false;
  }
  if (!where != !o.where) return false;
  if (where && !where->equals(*o.where)) return false;
  return group_by == o.group_by && order_by == o.order_by;
}

namespace {

std::string render_from_item(const FromItem& item);

std::string render_query_body(const Query& q) {
  std::string out = "SELECT ";
  if (q.select_star) {
    out += "*";
  } else {
    for (size_t i = 0; i < q.select.size(); ++i) {
      if (i) out += ", ";
      out += q.select[i].expr->to_string();
      if (!q.select[i].alias.empty()) {
        out += " AS " + quote_identifier(q.select[i].alias);
      }
    }
  }
  out += " FROM " + render_from_item(q.from);
  for (const JoinClause& j : q.joins) {
    switch (j.kind) {
      case JoinClause::Kind::comma: out += ", "; break;
      case JoinClause::Kind::cross: out += " CROSS JOIN "; break;
      case JoinClause::Kind::inner: out += " JOIN "; break;
    }
    out += render_from_item(j.item);
    if (j.kind == JoinClause::Kind::inner) {
      out += " ON " + j.on->to_string();
    }
  }
  if (q.where) out += " WHERE " + q.where->to_string();
  auto list = [](const std::vector<std::string>& names) {
    std::string s;
    for (size_t i = 0; i < names.size(); ++i) {
      if (i) s += ", ";
      s += quote_identifier(names[i]);
    }
    return s;
  };
  if (!q.group_by.empty()) out += " GROUP BY " + list(q.group_by);
  if (!q.order_by.empty()) out += " ORDER BY " + list(q.order_by);
  return out;
}

std::string render_from_item(const FromItem& item) {
  std::string out;
  switch (item.kind) {
    case FromItem::Kind::table:
      out = quote_identifier(item.table_name);
      break;
    case FromItem::Kind::subquery:
      out = "(" + render_query_body(*item.subquery) + ")";
      break;
    case FromItem::Kind::rma_call: {
      out = std::string(opcode_name(item.op)) + "(";
      for (size_t i = 0; i < item.args.size(); ++i) {
        if (i) out += ", ";
        out += render_from_item(*item.args[i].item) + " BY ";
        for (size_t k = 0; k < item.args[i].order_schema.size(); ++k) {
          if (k) out += ", ";
          out += quote_identifier(item.args[i].order_schema[k]);
        }
      }
      if (!item.context_name.empty()) {
        out += " NAMED " + quote_identifier(item.context_name);
      }
      out += ")";
      break;
    }
  }
  if (!item.alias.empty()) out += " AS " + quote_identifier(item.alias);
  return out;
}

}  // namespace

std::string render(const Query& query) { return render_query_body(query) + ";"; }

}  // namespace rma
