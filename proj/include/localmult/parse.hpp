#ifndef LOCALMULT_PARSE_HPP
#define LOCALMULT_PARSE_HPP

#include <cctype>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "localmult/ideal.hpp"
#include "localmult/polynomial.hpp"

namespace localmult {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

// Recursive-descent reader for
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := int ['/' uint] | var ['^' uint] | '(' poly ')' ['^' uint]
class PolyReader {
 public:
  PolyReader(std::string_view text, const PolyRing& ring, std::size_t base = 0)
      : text_(text), ring_(ring), base_(base) {}

  Polynomial parse_all() {
    Polynomial p = poly();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, base_ + pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial poly() {
    bool negate = accept('-');
    if (!negate) accept('+');
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned exponent() {
    skip_ws();
    std::string d = digits();
    if (d.empty()) fail("expected exponent");
    if (d.size() > 6) fail("exponent too large");
    return static_cast<unsigned>(std::stoul(d));
  }

  Polynomial factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = poly();
      if (!accept(')')) fail("expected ')'");
      if (accept('^')) inner = inner.pow(exponent());
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      std::string den = "1";
      if (accept('/')) {
        skip_ws();
        den = digits();
        if (den.empty()) fail("expected denominator");
        if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
      }
      return Polynomial::constant(ring_, Rational::parse(num + "/" + den));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_.index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      unsigned e = accept('^') ? exponent() : 1u;
      return Polynomial::term(ring_, Monomial::variable(ring_.size(), *idx, e), Rational(1));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const PolyRing& ring_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const PolyRing& ring) {
  return detail::PolyReader(text, ring).parse_all();
}

// One `lhs = rhs;` or keyword statement of a fixture file, comments removed.
struct Statement {
  std::string text;
  std::size_t offset;  // of the first non-blank character in the source file
};

// Splits on ';', dropping '#' and '//' comments through end of line.
inline std::vector<Statement> split_statements(std::string_view source) {
  std::string cleaned(source);
  for (std::size_t i = 0; i < cleaned.size(); ++i) {
    bool hash = cleaned[i] == '#';
    bool slashes = cleaned[i] == '/' && i + 1 < cleaned.size() && cleaned[i + 1] == '/';
    if (!hash && !slashes) continue;
    while (i < cleaned.size() && cleaned[i] != '\n') cleaned[i++] = ' ';
  }
  std::vector<Statement> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= cleaned.size(); ++i) {
    if (i < cleaned.size() && cleaned[i] != ';') continue;
    std::string_view piece(cleaned.data() + start, i - start);
    std::size_t lead = 0;
    while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) ++lead;
    auto body = detail::trim(piece);
    if (!body.empty()) {
      if (i == cleaned.size()) throw ParseError("missing ';'", start + lead + body.size());
      out.push_back({std::string(body), start + lead});
    }
    start = i + 1;
  }
  return out;
}

struct RingDeclaration {
  std::string name;
  PolyRing ring;
};

// `ring <name>[v1,v2,...] (local|global)` without the trailing ';'.
inline RingDeclaration parse_ring_declaration(std::string_view stmt, std::size_t base = 0) {
  auto body = detail::trim(stmt);
  if (body.substr(0, 4) != "ring" || body.size() < 5 || !std::isspace(static_cast<unsigned char>(body[4])))
    throw ParseError("expected 'ring' declaration", base);
  auto open = body.find('['), close = body.find(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open)
    throw ParseError("expected '[variables]' in ring declaration", base);
  std::string name(detail::trim(body.substr(4, open - 4)));
  if (name.empty()) throw ParseError("ring declaration needs a name", base);
  std::vector<std::string> vars;
  std::string_view list = body.substr(open + 1, close - open - 1);
  std::size_t s = 0;
  while (s <= list.size()) {
    auto comma = list.find(',', s);
    if (comma == std::string_view::npos) comma = list.size();
    auto v = detail::trim(list.substr(s, comma - s));
    if (v.empty()) throw ParseError("empty variable name", base + open + 1 + s);
    for (char ch : v)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
        throw ParseError("bad variable name '" + std::string(v) + "'", base + open + 1 + s);
    vars.emplace_back(v);
    s = comma + 1;
  }
  auto kind = detail::trim(body.substr(close + 1));
  OrderKind order;
  if (kind == "local") {
    order = OrderKind::kLocalDegRevLex;
  } else if (kind == "global") {
    order = OrderKind::kDegRevLex;
  } else {
    throw ParseError("ring order must be 'local' or 'global'", base + close + 1);
  }
  try {
    return {name, PolyRing(vars, order)};
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), base);
  }
}

struct Binding {
  std::string name;
  std::string value;
  std::size_t value_offset;
};

// A parsed fixture: the ring plus `name = value` statements in file order.
// `ideal NAME = p1, p2;` statements are returned with name "ideal NAME".
struct FixtureFile {
  RingDeclaration ring;
  std::vector<Binding> bindings;

  const Binding* find(const std::string& name) const {
    for (const auto& b : bindings)
      if (b.name == name) return &b;
    return nullptr;
  }
};

inline FixtureFile parse_fixture(std::string_view source) {
  auto stmts = split_statements(source);
  if (stmts.empty()) throw ParseError("empty file: expected ring declaration", 0);
  FixtureFile f{parse_ring_declaration(stmts[0].text, stmts[0].offset), {}};
  for (std::size_t i = 1; i < stmts.size(); ++i) {
    const auto& st = stmts[i];
    auto eq = st.text.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'name = value'", st.offset);
    std::string lhs(detail::trim(std::string_view(st.text).substr(0, eq)));
    std::size_t voff = eq + 1;
    while (voff < st.text.size() && std::isspace(static_cast<unsigned char>(st.text[voff]))) ++voff;
    if (lhs.empty()) throw ParseError("missing name before '='", st.offset);
    if (lhs.rfind("ideal", 0) == 0) {
      std::string rest(detail::trim(std::string_view(lhs).substr(5)));
      if (rest.empty() || lhs.size() < 6 || !std::isspace(static_cast<unsigned char>(lhs[5])))
        throw ParseError("expected 'ideal NAME = ...'", st.offset);
      lhs = "ideal " + rest;
    }
    if (f.find(lhs)) throw ParseError("duplicate binding '" + lhs + "'", st.offset);
    f.bindings.push_back({lhs, st.text.substr(voff), st.offset + voff});
  }
  return f;
}

// Comma-separated polynomial list, e.g. the right side of an ideal statement.
inline std::vector<Polynomial> parse_polynomial_list(std::string_view text, const PolyRing& ring,
                                                     std::size_t base = 0) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size()) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      if (text[i] != ',' || depth != 0) continue;
    }
    out.push_back(detail::PolyReader(text.substr(start, i - start), ring, base + start).parse_all());
    start = i + 1;
  }
  return out;
}

// `expect_NAME = value;` statements are kept verbatim in `expectations`.
struct IdealFile {
  RingDeclaration ring;
  std::vector<std::pair<std::string, Ideal>> ideals;
  std::map<std::string, std::string> expectations = {};
};

inline IdealFile parse_ideal_file(std::string_view source) {
  FixtureFile f = parse_fixture(source);
  IdealFile out{f.ring, {}};
  for (const auto& b : f.bindings) {
    if (b.name.rfind("expect_", 0) == 0) {
      out.expectations[b.name.substr(7)] = b.value;
      continue;
    }
    if (b.name.rfind("ideal ", 0) != 0)
      throw ParseError("ideal files hold only 'ideal NAME = ...' statements", b.value_offset);
    auto gens = parse_polynomial_list(b.value, f.ring.ring, b.value_offset);
    out.ideals.emplace_back(b.name.substr(6), Ideal(f.ring.ring, gens));
  }
  if (out.ideals.empty()) throw ParseError("no ideal declared", source.size());
  return out;
}

}  // namespace localmult

#endif  // LOCALMULT_PARSE_HPP
