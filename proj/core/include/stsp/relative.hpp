#pragma once

// Relative groups for a splitting ideal I of R': Keune-Loday words
// (actor, root) and Tulenbaev generators [u, v, a, b], with the maps
// iota, kappa, theta and psi between them.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "stsp/elements.hpp"
#include "stsp/relations.hpp"
#include "stsp/ring_hom.hpp"

namespace stsp {

struct SplittingIdealData {
  RingPtr ring;      // R'
  RingHom rho;       // R' -> R'/I
  RingHom sigma;     // R'/I -> R'
  std::function<bool(const RingValue&)> member;

  bool in_ideal(const RingValue& x) const { return member(x); }
  RingPtr quotient() const { return rho.target(); }

  /// I = t R[t] in a univariate R[t]: rho = ev_0, sigma = constants.
  static SplittingIdealData polynomial(const RingPtr& poly_ring);
  /// I = t R_a[t] inside B = B(R, a): rho(r, f) = r, sigma(r) = (r, 0).
  static SplittingIdealData mixed(const RingPtr& b_ring);
};

/// ^g Y_ij(a), or its inverse.
struct KLLetter {
  SteinbergWord actor;
  int i = 1;
  int j = 2;
  RingValue a;
  bool inverse = false;
  std::string str() const;
};

class KLWord {
 public:
  KLWord() = default;
  KLWord(RingPtr ring, int n) : ring_(std::move(ring)), n_(n) {}

  /// Y_ij(a) with the empty actor.
  static KLWord root(const RingPtr& ring, int n, int i, int j, const RingValue& a);
  static KLWord acted_root(const SteinbergWord& g, int i, int j, const RingValue& a);

  const RingPtr& ring() const noexcept { return ring_; }
  int rank() const noexcept { return n_; }
  const std::vector<KLLetter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }

  void push(KLLetter l);
  KLWord& operator*=(const KLWord& other);
  KLWord operator*(const KLWord& other) const;
  KLWord inverse() const;
  /// ^g of every letter: actors become g * actor.
  KLWord acted(const SteinbergWord& g) const;
  std::string str() const;

 private:
  RingPtr ring_;
  int n_ = 3;
  std::vector<KLLetter> letters_;
};

/// Checks that every root parameter lies in I.
void require_relative(const KLWord& w, const SplittingIdealData& data);

/// ^g Y_ij(a) -> g X_ij(a) g^-1
SteinbergWord iota(const KLWord& w);

struct TulenbaevGenerator {
  OrbitVector u;
  IndexedVector v;
  RingValue a;
  RingValue b;
  bool inverse = false;
  std::string str() const;
};
using TulenbaevWord = std::vector<TulenbaevGenerator>;

/// [u, v, a, b] -> X(u, v a, b)
SteinbergWord kappa(const TulenbaevGenerator& x);
SteinbergWord kappa(const TulenbaevWord& w);

/// Y_ij(a) -> [e_i, e_-j, a sign(-j), 0],  Y_{i,-i}(a) -> [e_i, 0, 0, a], transported by the actor.
TulenbaevWord theta(const KLWord& w);

/// [u, v, a, b] -> [phi(g) u, phi(g) v, a, b]; the witness of u is extended by g.
TulenbaevGenerator act_on_tulenbaev(const SteinbergWord& g, const TulenbaevGenerator& x);

struct SplitImage {
  KLWord relative;          // over R'
  SteinbergWord quotient;   // over R'/I
};

/// X_ij(r) -> (Y_ij(r - sigma rho r), X_ij(rho r)), multiplied in the semidirect product.
SplitImage psi_split(const SteinbergWord& w, const SplittingIdealData& data);
/// phi(iota(relative)) * phi(sigma*(quotient))
SympMatrix recombine(const SplitImage& s, const SplittingIdealData& data);

/// Checks relation T0..T6 (or KL0..KL7) from the catalogue.
CheckResult check_tulenbaev_relation(std::string_view id, const Bindings& b);

}  // namespace stsp
