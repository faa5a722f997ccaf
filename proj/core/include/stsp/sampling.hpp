#pragma once

// Seeded generators for scalars, vectors, orbit vectors and words.  All draws
// go through Rng::below so results do not depend on the standard library's
// distribution implementations.

#include <cstdint>
#include <random>
#include <string_view>

#include "stsp/elements.hpp"

namespace stsp {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  long range(long lo, long hi);
  bool coin(unsigned num = 1, unsigned den = 2) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

/// FNV-1a, used to derive per-relation seeds.
std::uint64_t fnv1a(std::string_view text);

struct ScalarShape {
  long int_bound = 20;   // |x| <= int_bound over Z
  unsigned degree = 2;   // polynomial degree bound
  unsigned max_terms = 3;
  unsigned max_denominator_power = 2;
};

RingValue random_scalar(const RingPtr& ring, Rng& rng, const ScalarShape& shape = {});
/// Small scalars for witness words.
RingValue small_scalar(const RingPtr& ring, Rng& rng);
/// Elements of t*R_a[t] inside B, or of s*R[s] inside R[s].
RingValue random_ideal_element(const RingPtr& ring, Rng& rng, const ScalarShape& shape = {});

IndexedVector random_vector(const RingPtr& ring, int n, Rng& rng, const ScalarShape& shape = {});
/// Random vector with u_i = u_{-i} = 0.
IndexedVector random_vector_zero_pair(const RingPtr& ring, int n, int i, Rng& rng, const ScalarShape& shape = {});
/// u_ij = e_i u_{-j} sign j - e_j u_{-i} sign i; always orthogonal to u.
IndexedVector orth_basis_vector(const IndexedVector& u, int i, int j);
/// Random vector v with <u, v> = 0; with `avoid` != 0 the result has a zero pair at avoid
/// (the multiple of u is only mixed in when u itself has that zero pair).
IndexedVector random_orthogonal(const IndexedVector& u, Rng& rng, int avoid = 0, const ScalarShape& shape = {});

SteinbergWord random_word(const RingPtr& ring, int n, Rng& rng, std::size_t length, bool small = true);
/// Word only using roots among indices other than +-avoid.
SteinbergWord random_word_avoiding(const RingPtr& ring, int n, Rng& rng, std::size_t length, int avoid);
OrbitVector random_orbit(const RingPtr& ring, int n, Rng& rng, std::size_t length = 3);
OrbitPair random_orbit_pair(const RingPtr& ring, int n, Rng& rng, std::size_t length = 3);

/// Smallest integer k >= 2 that the ring certifies as a non-zero-divisor.
RingValue default_localizing_element(const RingPtr& ring);
/// A variable name not yet used anywhere in the tower of `ring`.
std::string fresh_variable(const RingPtr& ring, std::string_view preferred = "t");

}  // namespace stsp
