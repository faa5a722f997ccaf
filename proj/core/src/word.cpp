#include "stsp/word.hpp"

#include <cctype>
#include <cstdlib>

#include "stsp/relations.hpp"

namespace stsp {

std::string Letter::str() const {
  std::string s = "X(" + std::to_string(i) + "," + std::to_string(j) + ";" + a.str() + ")";
  return inverse ? s + "^-1" : s;
}

bool same_letter(const Letter& x, const Letter& y) {
  return x.i == y.i && x.j == y.j && x.param() == y.param();
}

SteinbergWord::SteinbergWord(RingPtr ring, int n) : ring_(std::move(ring)), n_(n) { check_rank(n); }

SteinbergWord::SteinbergWord(RingPtr ring, int n, std::vector<Letter> letters)
    : ring_(std::move(ring)), n_(n), letters_(std::move(letters)) {
  check_rank(n);
  for (const auto& l : letters_) check(l);
}

SteinbergWord SteinbergWord::generator(const RingPtr& ring, int n, int i, int j, const RingValue& a) {
  SteinbergWord w(ring, n);
  w.push(i, j, a);
  return w;
}

void SteinbergWord::check(const Letter& l) const {
  check_index(l.i, n_);
  check_index(l.j, n_);
  if (l.i == l.j) raise(ErrorCode::PreconditionViolated, "generator X_ii is not defined");
  require_ring(l.a, ring_);
}

void SteinbergWord::push(int i, int j, const RingValue& a, bool inverse) { push(Letter{i, j, a, inverse}); }

void SteinbergWord::push(const Letter& l) {
  check(l);
  letters_.push_back(l);
}

SteinbergWord& SteinbergWord::operator*=(const SteinbergWord& other) {
  if (other.ring_ != ring_ || other.n_ != n_)
    raise(ErrorCode::DescriptorMismatch, "words over " + ring_->spec() + " and " + other.ring_->spec());
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

SteinbergWord SteinbergWord::operator*(const SteinbergWord& other) const {
  SteinbergWord out = *this;
  out *= other;
  return out;
}

SteinbergWord SteinbergWord::inverse() const {
  SteinbergWord out(ring_, n_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(it->inverted());
  return out;
}

SteinbergWord SteinbergWord::slice(std::size_t pos, std::size_t len) const {
  if (pos + len > letters_.size()) raise(ErrorCode::PreconditionViolated, "slice out of range");
  return SteinbergWord(ring_, n_, std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

SteinbergWord SteinbergWord::map(const RingHom& hom) const {
  if (hom.source() != ring_) raise(ErrorCode::DescriptorMismatch, hom.name() + " does not start at " + ring_->spec());
  SteinbergWord out(hom.target(), n_);
  out.letters_.reserve(letters_.size());
  for (const auto& l : letters_) out.letters_.push_back(Letter{l.i, l.j, hom(l.a), l.inverse});
  return out;
}

std::string SteinbergWord::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < letters_.size(); ++k) s += (k ? "*" : "") + letters_[k].str();
  return s;
}

bool operator==(const SteinbergWord& x, const SteinbergWord& y) {
  if (x.ring_ != y.ring_ || x.n_ != y.n_ || x.letters_.size() != y.letters_.size()) return false;
  for (std::size_t k = 0; k < x.letters_.size(); ++k)
    if (!same_letter(x.letters_[k], y.letters_[k])) return false;
  return true;
}

SteinbergWord commutator(const SteinbergWord& x, const SteinbergWord& y) { return x * y * x.inverse() * y.inverse(); }

SteinbergWord conjugate(const SteinbergWord& g, const SteinbergWord& x) { return g * x * g.inverse(); }

SympMatrix phi(const SteinbergWord& w) {
  SympMatrix m = SympMatrix::identity(w.ring(), w.rank());
  for (const auto& l : w.letters()) m.right_multiply_transvection(l.i, l.j, l.param());
  return m;
}

SteinbergWord free_reduce(const SteinbergWord& w, ReduceOptions options, std::vector<TraceStep>* trace) {
  std::vector<Letter> out;
  out.reserve(w.size());
  // Stack-based: each incoming letter interacts only with the current top.
  for (const auto& incoming : w.letters()) {
    Letter l = incoming;
    for (;;) {
      const std::size_t pos = out.size();
      if (options.merge && l.param().is_zero()) {
        if (trace) trace->push_back(cancel_step(pos, l, true));
        break;
      }
      if (out.empty() || out.back().i != l.i || out.back().j != l.j) {
        out.push_back(l);
        break;
      }
      Letter top = out.back();
      RingValue sum = top.param() + l.param();
      if (sum.is_zero()) {
        if (trace) trace->push_back(cancel_step(pos - 1, top, false));
        out.pop_back();
        break;
      }
      if (!options.merge) {
        out.push_back(l);
        break;
      }
      if (trace) trace->push_back(merge_step(pos - 1, top.i, top.j, top.param(), l.param()));
      out.pop_back();
      l = Letter{top.i, top.j, sum, false};
    }
  }
  return SteinbergWord(w.ring(), w.rank(), std::move(out));
}

SteinbergWord parse_word(const RingPtr& ring, int n, std::string_view text) {
  SteinbergWord w(ring, n);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> void {
    raise(ErrorCode::ParseError, what + " at offset " + std::to_string(pos) + " in word \"" + std::string(text) + "\"");
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  };
  auto integer = [&]() -> int {
    skip();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected an index");
    return std::atoi(std::string(text.substr(start, pos - start)).c_str());
  };
  skip();
  if (text.substr(pos) == "1") return w;
  for (;;) {
    expect('X');
    expect('(');
    int i = integer();
    expect(',');
    int j = integer();
    expect(';');
    skip();
    std::size_t start = pos;
    int depth = 0;
    while (pos < text.size() && !(depth == 0 && text[pos] == ')')) {
      if (text[pos] == '(') ++depth;
      if (text[pos] == ')') --depth;
      ++pos;
    }
    RingValue a = parse_value(ring, text.substr(start, pos - start));
    expect(')');
    skip();
    bool inverse = false;
    if (text.substr(pos, 3) == "^-1") {
      inverse = true;
      pos += 3;
    }
    w.push(i, j, a, inverse);
    skip();
    if (pos == text.size()) break;
    expect('*');
  }
  return w;
}

}  // namespace stsp
