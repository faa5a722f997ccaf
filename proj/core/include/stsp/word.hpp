#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stsp/ring.hpp"
#include "stsp/symplectic.hpp"

namespace stsp {

/// X_ij(a), or its formal inverse.  j == -i is the long root generator.
struct Letter {
  int i = 1;
  int j = 2;
  RingValue a;
  bool inverse = false;

  /// a, or -a for an inverse letter.
  RingValue param() const { return inverse ? -a : a; }
  Letter inverted() const { return Letter{i, j, a, !inverse}; }
  std::string str() const;
};

/// Same root and same effective parameter.
bool same_letter(const Letter& x, const Letter& y);

class SteinbergWord {
 public:
  SteinbergWord() = default;
  SteinbergWord(RingPtr ring, int n);
  SteinbergWord(RingPtr ring, int n, std::vector<Letter> letters);

  static SteinbergWord generator(const RingPtr& ring, int n, int i, int j, const RingValue& a);

  const RingPtr& ring() const noexcept { return ring_; }
  int rank() const noexcept { return n_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  void push(int i, int j, const RingValue& a, bool inverse = false);
  void push(const Letter& l);
  SteinbergWord& operator*=(const SteinbergWord& other);
  SteinbergWord operator*(const SteinbergWord& other) const;
  SteinbergWord inverse() const;
  /// letters [pos, pos+len)
  SteinbergWord slice(std::size_t pos, std::size_t len) const;
  /// Coefficient-wise image under a ring homomorphism.
  SteinbergWord map(const RingHom& hom) const;

  std::string str() const;

  /// Letter-wise equality (roots and effective parameters).
  friend bool operator==(const SteinbergWord& x, const SteinbergWord& y);

 private:
  void check(const Letter& l) const;
  RingPtr ring_;
  int n_ = 3;
  std::vector<Letter> letters_;
};

/// x y x^-1 y^-1
SteinbergWord commutator(const SteinbergWord& x, const SteinbergWord& y);
/// g x g^-1
SteinbergWord conjugate(const SteinbergWord& g, const SteinbergWord& x);

/// Product of the transvections of the letters.
SympMatrix phi(const SteinbergWord& w);

struct ReduceOptions {
  /// Merge adjacent letters with the same root (S1) and drop zero letters.
  bool merge = true;
};

struct TraceStep;
/// Cancels adjacent inverse pairs (and merges per options) to a fixed point.
/// When `trace` is given, the licensed steps performed are appended to it.
SteinbergWord free_reduce(const SteinbergWord& w, ReduceOptions options = {}, std::vector<TraceStep>* trace = nullptr);

/// Grammar: word := "1" | factor ("*" factor)*;  factor := "X(" i "," j ";" value ")" ["^-1"]
SteinbergWord parse_word(const RingPtr& ring, int n, std::string_view text);

}  // namespace stsp
