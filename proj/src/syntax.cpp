#include "antiunify/syntax.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include "antiunify/errors.hpp"

namespace antiunify {

namespace {

constexpr std::string_view kOperatorChars = "+-*/<>^~@#&?!\\";

bool is_lower(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }
bool is_upper_or_underscore(char c) {
  return std::isupper(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_operator_char(char c) { return kOperatorChars.find(c) != std::string_view::npos; }

bool is_plain_identifier(std::string_view s) {
  if (s.empty() || !is_lower(s.front())) return false;
  for (char c : s) {
    if (!is_ident_char(c)) return false;
  }
  return true;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!is_digit(c)) return false;
  }
  return true;
}

bool is_operator_symbol(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!is_operator_char(c)) return false;
  }
  return true;
}

std::string quote(std::string_view s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'' || c == '\\') out += '\\';
    out += c;
  }
  out += '\'';
  return out;
}

/// Functor and predicate names: operators stay bare because they are always
/// followed by '(' when printed.
std::string format_name(std::string_view s) {
  if (is_plain_identifier(s) || is_operator_symbol(s)) return std::string(s);
  return quote(s);
}

std::string format_constant(std::string_view s) {
  if (is_plain_identifier(s) || is_integer_literal(s)) return std::string(s);
  return quote(s);
}

enum class NameKind { kIdentifier, kQuoted, kOperator };

struct Name {
  std::string text;
  NameKind kind;
  std::size_t line;
  std::size_t column;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  GoalDocument document(const ParseOptions& options) {
    GoalDocument doc;
    std::map<std::string, std::pair<std::size_t, std::pair<std::size_t, std::size_t>>>
        arities;
    for (skip_space(); !at_end(); skip_space()) {
      NamedGoal entry;
      entry.line = line_;
      entry.column = column_;
      if (auto label = try_label()) {
        entry.name = std::move(*label);
        entry.labeled = true;
        skip_space();
      } else {
        entry.name = "goal" + std::to_string(doc.goals.size() + 1);
      }
      std::vector<std::pair<std::size_t, std::size_t>> positions;
      entry.goal = goal_body(positions);
      if (options.strict_arity) {
        std::size_t k = 0;
        for (const Atom& a : entry.goal) {
          const auto where = positions[k++];
          auto [it, inserted] = arities.try_emplace(a.predicate, a.arity(), where);
          if (!inserted && it->second.first != a.arity()) {
            throw ArityConflict(
                std::to_string(where.first) + ":" + std::to_string(where.second) +
                ": predicate '" + a.predicate + "' used with arity " +
                std::to_string(a.arity()) + " and " + std::to_string(it->second.first));
          }
        }
      }
      doc.goals.push_back(std::move(entry));
    }
    return doc;
  }

  Goal single_goal() {
    skip_space();
    std::vector<std::pair<std::size_t, std::size_t>> positions;
    Goal g = goal_body(positions);
    expect_end();
    return g;
  }

  Atom single_atom() {
    skip_space();
    Atom a = atom();
    skip_space();
    if (peek() == '.') advance();
    expect_end();
    return a;
  }

  Term single_term() {
    skip_space();
    Term t = term();
    expect_end();
    return t;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_);
  }

  [[noreturn]] void fail_at(const std::string& message, std::size_t line,
                            std::size_t column) const {
    throw ParseError(message, line, column);
  }

  std::string describe_next() const {
    if (at_end()) return "end of input";
    return std::string("'") + peek() + "'";
  }

  void skip_space() {
    while (!at_end()) {
      const char c = peek();
      if (c == '%') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip_space();
    if (peek() != c || at_end()) {
      fail(std::string("expected '") + c + "' but found " + describe_next());
    }
    advance();
  }

  void expect_end() {
    skip_space();
    if (!at_end()) fail("unexpected " + describe_next() + " after end of input");
  }

  std::optional<std::string> try_label() {
    if (!is_lower(peek())) return std::nullopt;
    const std::size_t saved_pos = pos_, saved_line = line_, saved_column = column_;
    std::string ident = identifier();
    skip_space();
    if (peek() == ':') {
      advance();
      return ident;
    }
    pos_ = saved_pos;
    line_ = saved_line;
    column_ = saved_column;
    return std::nullopt;
  }

  std::string identifier() {
    std::string out;
    while (!at_end() && is_ident_char(peek())) {
      out += peek();
      advance();
    }
    return out;
  }

  std::string quoted() {
    const std::size_t l = line_, c = column_;
    advance();  // opening quote
    std::string out;
    for (;;) {
      if (at_end()) fail_at("unterminated quoted name", l, c);
      char ch = peek();
      if (ch == '\\') {
        advance();
        if (at_end()) fail_at("unterminated quoted name", l, c);
        ch = peek();
      } else if (ch == '\'') {
        advance();
        break;
      }
      out += ch;
      advance();
    }
    if (out.empty()) fail_at("empty quoted name", l, c);
    return out;
  }

  std::optional<Name> name() {
    Name n{{}, NameKind::kIdentifier, line_, column_};
    const char c = peek();
    if (is_lower(c)) {
      n.text = identifier();
    } else if (c == '\'') {
      n.kind = NameKind::kQuoted;
      n.text = quoted();
    } else if (is_operator_char(c) && !(c == '-' && is_digit(peek(1)))) {
      n.kind = NameKind::kOperator;
      while (!at_end() && is_operator_char(peek())) {
        n.text += peek();
        advance();
      }
    } else {
      return std::nullopt;
    }
    return n;
  }

  std::vector<Term> argument_list() {
    std::vector<Term> args;
    advance();  // '('
    for (;;) {
      skip_space();
      args.push_back(term());
      skip_space();
      if (peek() == ',') {
        advance();
        continue;
      }
      if (peek() == ')') {
        advance();
        return args;
      }
      fail("expected ',' or ')' but found " + describe_next());
    }
  }

  Term term() {
    skip_space();
    const std::size_t l = line_, c = column_;
    const char ch = peek();
    if (at_end()) fail("expected a term but found end of input");
    if (is_upper_or_underscore(ch)) return Term::variable(identifier());
    if (is_digit(ch) || (ch == '-' && is_digit(peek(1)))) {
      std::string text;
      if (ch == '-') {
        text += ch;
        advance();
      }
      while (!at_end() && is_digit(peek())) {
        text += peek();
        advance();
      }
      if (is_ident_char(peek())) fail("malformed integer literal");
      return Term::constant(std::move(text));
    }
    auto n = name();
    if (!n) fail("expected a term but found " + describe_next());
    if (peek() == '(') {
      try {
        return Term::compound(n->text, argument_list());
      } catch (const InvalidIdentifier& e) {
        fail_at(e.what(), l, c);
      }
    }
    if (n->kind == NameKind::kOperator) {
      fail_at("operator '" + n->text + "' must be applied as " + n->text + "(...)", l, c);
    }
    try {
      return Term::constant(n->text);
    } catch (const InvalidIdentifier& e) {
      fail_at(e.what(), l, c);
    }
  }

  Atom atom() {
    skip_space();
    const std::size_t l = line_, c = column_;
    auto n = name();
    if (!n) fail("expected an atom but found " + describe_next());
    std::vector<Term> args;
    if (peek() == '(') {
      args = argument_list();
    } else if (n->kind == NameKind::kOperator) {
      fail_at("operator '" + n->text + "' must be applied as " + n->text + "(...)", l, c);
    }
    try {
      return Atom(n->text, std::move(args));
    } catch (const InvalidIdentifier& e) {
      fail_at(e.what(), l, c);
    }
  }

  Goal goal_body(std::vector<std::pair<std::size_t, std::size_t>>& positions) {
    Goal g;
    skip_space();
    if (peek() == '.') {
      advance();
      return g;
    }
    for (;;) {
      skip_space();
      positions.emplace_back(line_, column_);
      if (!g.insert(atom())) positions.pop_back();
      skip_space();
      if (peek() == ',') {
        advance();
        continue;
      }
      if (peek() == '.') {
        advance();
        return g;
      }
      fail("expected ',' or '.' but found " + describe_next());
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

GoalDocument parse_goals(std::string_view text, const ParseOptions& options) {
  return Parser(text).document(options);
}

Goal parse_goal(std::string_view text) { return Parser(text).single_goal(); }
Atom parse_atom(std::string_view text) { return Parser(text).single_atom(); }
Term parse_term(std::string_view text) { return Parser(text).single_term(); }

std::ostream& operator<<(std::ostream& os, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVariable:
      return os << t.symbol();
    case Term::Kind::kConstant:
      return os << format_constant(t.symbol());
    case Term::Kind::kCompound:
      break;
  }
  os << format_name(t.symbol()) << '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i) os << ", ";
    os << t.args()[i];
  }
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const Atom& a) {
  os << format_name(a.predicate);
  if (a.args.empty()) return os;
  os << '(';
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) os << ", ";
    os << a.args[i];
  }
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const Goal& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) os << ", ";
    os << g[i];
  }
  return os << '.';
}

std::string to_string(const Term& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

std::string to_string(const Atom& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

std::string to_string(const Goal& g) {
  std::ostringstream os;
  os << g;
  return os.str();
}

std::string to_string(const GoalDocument& doc) {
  std::ostringstream os;
  for (const NamedGoal& entry : doc.goals) {
    if (entry.labeled) os << entry.name << ": ";
    os << entry.goal << '\n';
  }
  return os.str();
}

}  // namespace antiunify
