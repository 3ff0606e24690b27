#include "fdinfer/rules_file.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "fdinfer/error.hpp"

namespace fdinfer {

namespace {

enum class TokKind { Ident, Number, Arrow, Colon, End };

struct Token {
  TokKind kind;
  std::string_view text;
  std::size_t column;  // 1-based
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Tokenizes one line (comment already stripped).
std::vector<Token> lex(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (is_alpha(c)) {
      while (i < line.size() && (is_alpha(line[i]) || is_digit(line[i]) || line[i] == '_')) ++i;
      out.push_back({TokKind::Ident, line.substr(start, i - start), start + 1});
    } else if (is_digit(c)) {
      while (i < line.size() && is_digit(line[i])) ++i;
      if (i < line.size() && (is_alpha(line[i]) || line[i] == '_')) {
        throw ParseError("invalid attribute identifier", line_no, start + 1);
      }
      out.push_back({TokKind::Number, line.substr(start, i - start), start + 1});
    } else if (line.substr(i, 2) == "->") {
      i += 2;
      out.push_back({TokKind::Arrow, line.substr(start, 2), start + 1});
    } else if (c == ':') {
      ++i;
      out.push_back({TokKind::Colon, line.substr(start, 1), start + 1});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line_no, start + 1);
    }
  }
  out.push_back({TokKind::End, {}, line.size() + 1});
  return out;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool blank(std::string_view s) { return std::all_of(s.begin(), s.end(), is_space); }

struct Cursor {
  const std::vector<Token>& toks;
  std::size_t line_no;
  std::size_t i = 0;

  const Token& peek() const { return toks[i]; }
  const Token& next() { return toks[i++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_no, peek().column);
  }
};

// Reads identifiers up to the next non-identifier token, checking each
// against `universe` when given.
AttrSet read_attrs(Cursor& cur, const Universe* universe, std::string_view side) {
  std::vector<Attribute> names;
  while (cur.peek().kind == TokKind::Ident) {
    const Token& t = cur.next();
    Attribute a{std::string(t.text)};
    if (universe && !universe->contains(a)) {
      throw ParseError("undeclared attribute '" + a.name() + "'", cur.line_no, t.column);
    }
    names.push_back(std::move(a));
  }
  if (names.empty()) cur.fail("empty " + std::string(side));
  return AttrSet::from_attributes(std::move(names));
}

Dependency read_fd(Cursor& cur, const Universe* universe) {
  Dependency fd;
  fd.determinant = read_attrs(cur, universe, "determinant");
  if (cur.peek().kind != TokKind::Arrow) cur.fail("expected '->'");
  cur.next();
  fd.dependent = read_attrs(cur, universe, "dependent");
  if (cur.peek().kind != TokKind::End) cur.fail("unexpected token '" + std::string(cur.peek().text) + "'");
  return fd;
}

}  // namespace

std::vector<Dependency> RulesDocument::dependencies() const {
  std::vector<Dependency> out;
  out.reserve(rules.size());
  for (const auto& r : rules) out.push_back(r.fd);
  return out;
}

RulesDocument parse_rules_file(std::string_view text) {
  RulesDocument doc;
  bool have_header = false;
  std::set<Dependency> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;

  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    line = strip_comment(line);
    if (blank(line)) continue;

    auto toks = lex(line, line_no);
    Cursor cur{toks, line_no};

    if (!have_header) {
      if (cur.peek().kind != TokKind::Ident || cur.peek().text != "attributes") {
        cur.fail("expected 'attributes:' declaration");
      }
      cur.next();
      if (cur.peek().kind != TokKind::Colon) cur.fail("expected ':' after 'attributes'");
      cur.next();
      std::vector<Attribute> names;
      std::set<std::string_view> declared;
      while (cur.peek().kind == TokKind::Ident) {
        const Token& t = cur.next();
        if (!declared.insert(t.text).second) {
          throw ParseError("attribute '" + std::string(t.text) + "' declared twice", line_no,
                           t.column);
        }
        names.emplace_back(std::string(t.text));
      }
      if (cur.peek().kind != TokKind::End) cur.fail("expected attribute name");
      if (names.empty()) cur.fail("no attributes declared");
      try {
        doc.universe = Universe(AttrSet::from_attributes(std::move(names)));
      } catch (const ValidationError& e) {
        throw ParseError(e.what(), line_no, 1);
      }
      have_header = true;
      continue;
    }

    RuleLine rule;
    rule.line = line_no;
    std::size_t position = doc.rules.size() + 1;
    if (cur.peek().kind == TokKind::Number) {
      const Token& num = cur.next();
      unsigned long value = 0;
      if (num.text.size() > 9 || (value = std::stoul(std::string(num.text))) == 0) {
        throw ParseError("rule label must be a positive integer", line_no, num.column);
      }
      if (value != position) {
        throw ParseError("label " + std::to_string(value) + " does not match rule position " +
                             std::to_string(position),
                         line_no, num.column);
      }
      if (cur.peek().kind != TokKind::Colon) cur.fail("expected ':' after rule label");
      cur.next();
      rule.label = static_cast<unsigned>(value);
    }
    rule.fd = read_fd(cur, &doc.universe);
    if (!seen.insert(rule.fd).second) {
      throw ParseError("duplicate rule " + format_rule(rule.fd), line_no, 1);
    }
    doc.rules.push_back(std::move(rule));
  }

  if (!have_header) throw ParseError("missing 'attributes:' declaration", line_no + 1, 1);
  return doc;
}

Dependency parse_fd_expr(std::string_view text) {
  if (text.find('\n') != std::string_view::npos) throw ParseError("FD must be on one line", 1, 1);
  auto toks = lex(text, 1);
  Cursor cur{toks, 1};
  return read_fd(cur, nullptr);
}

AttrSet parse_attr_list(std::string_view text) {
  if (text.find('\n') != std::string_view::npos) throw ParseError("attribute list must be on one line", 1, 1);
  auto toks = lex(text, 1);
  Cursor cur{toks, 1};
  AttrSet out = read_attrs(cur, nullptr, "attribute list");
  if (cur.peek().kind != TokKind::End) cur.fail("expected attribute name");
  return out;
}

std::string format_rule(const Dependency& fd) {
  return join(fd.determinant, " ") + " -> " + join(fd.dependent, " ");
}

}  // namespace fdinfer
