#include <cctype>

#include "stsp/ring.hpp"

namespace stsp {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip();
    return pos_ == text_.size();
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  bool at_ident() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::string ident() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected an identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  /// Text up to the next top-level ',' or ')' (not consumed).
  std::string_view balanced() {
    skip();
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') {
        if (depth == 0) break;
        --depth;
      }
      if (c == ',' && depth == 0) break;
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string& what) {
    raise(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class ValueParser {
 public:
  ValueParser(const RingPtr& ring, Cursor& cur) : ring_(ring), cur_(cur) {}

  RingValue expression() {
    RingValue acc = term();
    for (;;) {
      if (cur_.accept('+')) {
        acc = acc + term();
      } else if (cur_.accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

 private:
  RingValue term() {
    RingValue acc = unary();
    for (;;) {
      if (cur_.accept('*')) {
        acc = acc * unary();
      } else if (cur_.accept('/')) {
        RingValue d = unary();
        auto q = ring_->divide_exact(acc, d);
        if (!q) raise(ErrorCode::DivisibilityFailure, acc.str() + " is not divisible by " + d.str() + " in " + ring_->spec());
        acc = *q;
      } else {
        return acc;
      }
    }
  }

  RingValue unary() {
    if (cur_.accept('-')) return -unary();
    if (cur_.accept('+')) return unary();
    return power();
  }

  RingValue power() {
    RingValue base = atom();
    if (cur_.accept('^')) {
      mpz_class e = cur_.integer();
      if (!e.fits_uint_p()) cur_.fail("exponent too large");
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  RingValue atom() {
    if (cur_.accept('(')) {
      RingValue v = expression();
      cur_.expect(')');
      return v;
    }
    if (cur_.at_digit()) return ring_->from_integer(cur_.integer());
    if (cur_.at_ident()) {
      std::string name = cur_.ident();
      if (auto v = ring_->variable(name)) return *v;
      cur_.fail("unknown variable '" + name + "' for ring " + ring_->spec());
    }
    cur_.fail("unexpected character");
  }

  const RingPtr& ring_;
  Cursor& cur_;
};

RingPtr ring_expr(Cursor& cur);

RingValue value_arg(const RingPtr& ring, Cursor& cur) {
  std::string_view text = cur.balanced();
  return parse_value(ring, text);
}

RingPtr ring_atom(Cursor& cur) {
  std::string head = cur.ident();
  if (head == "Z") {
    if (cur.accept('/')) return integers_mod(cur.integer());
    return integers();
  }
  if (head == "Loc") {
    cur.expect('(');
    RingPtr base = ring_expr(cur);
    cur.expect(',');
    RingValue a = value_arg(base, cur);
    cur.expect(')');
    return localized(base, a);
  }
  if (head == "B") {
    cur.expect('(');
    RingPtr base = ring_expr(cur);
    cur.expect(',');
    RingValue a = value_arg(base, cur);
    std::string var = "t";
    if (cur.accept(',')) var = cur.ident();
    cur.expect(')');
    return mixed(base, a, var);
  }
  cur.fail("unknown ring constructor '" + head + "'");
}

RingPtr ring_expr(Cursor& cur) {
  RingPtr ring = ring_atom(cur);
  while (cur.accept('[')) {
    std::vector<std::string> vars{cur.ident()};
    while (cur.accept(',')) vars.push_back(cur.ident());
    cur.expect(']');
    ring = polynomials(ring, std::move(vars));
  }
  return ring;
}

}  // namespace

RingPtr parse_ring(std::string_view text) {
  Cursor cur(text);
  RingPtr ring = ring_expr(cur);
  if (!cur.done()) cur.fail("trailing input");
  return ring;
}

RingValue parse_value(const RingPtr& ring, std::string_view text) {
  if (ring->kind() == RingKind::Mixed) {
    // Elements of B print as polynomials over R_a; read them back the same way.
    const auto& b = as_mixed(*ring);
    RingValue p = parse_value(b.ambient(), text);
    auto v = b.from_ambient(p);
    if (!v) raise(ErrorCode::ParseError, "constant term of \"" + std::string(text) + "\" is not in " + b.base()->spec());
    return *v;
  }
  Cursor cur(text);
  if (cur.done()) cur.fail("empty value");
  ValueParser p(ring, cur);
  RingValue v = p.expression();
  if (!cur.done()) cur.fail("trailing input");
  return v;
}

}  // namespace stsp
