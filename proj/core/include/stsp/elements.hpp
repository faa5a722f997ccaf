#pragma once

// Explicit words for the derived elements X(u,v,a) and Y_(i)(u,v,a).

#include <optional>

#include "stsp/symplectic.hpp"
#include "stsp/word.hpp"

namespace stsp {

/// u = phi(M) e_1 together with the word M.
class OrbitVector {
 public:
  OrbitVector() = default;
  explicit OrbitVector(SteinbergWord witness);
  /// e_1 with the empty witness.
  static OrbitVector e1(const RingPtr& ring, int n);
  /// e_i for any index, with a short fixed witness.
  static OrbitVector basis(const RingPtr& ring, int n, int i);

  const SteinbergWord& witness() const noexcept { return witness_; }
  const IndexedVector& vector() const noexcept { return vector_; }
  const RingPtr& ring() const noexcept { return witness_.ring(); }
  int rank() const noexcept { return witness_.rank(); }

  /// phi(g) u, witness g * M.
  OrbitVector acted(const SteinbergWord& g) const;
  /// -phi(M) e_{-1}: a vector w with <w, u> = 1.
  IndexedVector co_vector() const;
  OrbitVector map(const RingHom& hom) const;

 private:
  SteinbergWord witness_;
  IndexedVector vector_;
};

/// (M e_1, M e_2) with the word M.
class OrbitPair {
 public:
  OrbitPair() = default;
  explicit OrbitPair(SteinbergWord witness);
  const SteinbergWord& witness() const noexcept { return witness_; }
  const IndexedVector& first() const noexcept { return first_; }
  const IndexedVector& second() const noexcept { return second_; }
  OrbitVector first_orbit() const { return OrbitVector(witness_); }
  /// M e_2 as an orbit vector: witness M * X_21(1) X_12(-1) X_21(1) would also
  /// work; we use M * P where P e_1 = e_2.
  OrbitVector second_orbit() const;
  /// u + v r with witness M * X_21(r).
  OrbitVector combination(const RingValue& r) const;
  OrbitPair acted(const SteinbergWord& g) const;

 private:
  SteinbergWord witness_;
  IndexedVector first_;
  IndexedVector second_;
};

/// X(e_i, w, a) for <e_i, w> = 0 written in elementary generators:
/// prod_k X_{i,-k}(w_k sign k) times X_{i,-i}(a + 2 w_i - sum_{p<q} <f_p, f_q>).
SteinbergWord basis_x(const RingPtr& ring, int n, int i, const IndexedVector& w, const RingValue& a);

/// g X(e_1, phi(g)^-1 v, a) g^-1 with g the witness of u.
SteinbergWord x_element(const OrbitVector& u, const IndexedVector& v, const RingValue& a);

/// Y_(i)(u, v, a) for u_i = u_{-i} = 0 and <u,v> = 0, built from Y5 then Y4.
SteinbergWord y_element(int i, const IndexedVector& u, const IndexedVector& v, const RingValue& a);

/// X(u, v, a) for an arbitrary vector u (no witness), via the Y-elements.
SteinbergWord x_general(const IndexedVector& u, const IndexedVector& v, const RingValue& a);

/// A first argument of X: a plain vector, optionally with an orbit witness.
struct Anchor {
  IndexedVector vec;
  std::optional<OrbitVector> orbit;

  Anchor() = default;
  Anchor(const IndexedVector& v) : vec(v) {}  // NOLINT(google-explicit-constructor)
  Anchor(const OrbitVector& o) : vec(o.vector()), orbit(o) {}  // NOLINT(google-explicit-constructor)
};

/// X(u, v, a) through the witness when there is one.
SteinbergWord x_of(const Anchor& u, const IndexedVector& v, const RingValue& a);

}  // namespace stsp
