#include "stsp/sampling.hpp"

#include <limits>

namespace stsp {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) raise(ErrorCode::PreconditionViolated, "Rng::below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

long Rng::range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

RingValue random_poly(const PolynomialRing& p, Rng& rng, const ScalarShape& shape, bool zero_constant) {
  std::vector<detail::PolyTerm> terms;
  const unsigned count = static_cast<unsigned>(rng.below(shape.max_terms + 1));
  const std::size_t nv = p.variables().size();
  for (unsigned k = 0; k < count; ++k) {
    Monomial e(nv, 0);
    unsigned budget = static_cast<unsigned>(rng.below(shape.degree + 1));
    if (zero_constant && budget == 0) budget = 1;
    for (unsigned d = 0; d < budget; ++d) ++e[rng.below(nv)];
    terms.push_back({e, random_scalar(p.base(), rng, shape)});
  }
  return p.from_terms(std::move(terms));
}

}  // namespace

RingValue random_scalar(const RingPtr& ring, Rng& rng, const ScalarShape& shape) {
  switch (ring->kind()) {
    case RingKind::Integer:
      return ring->from_integer(rng.range(-shape.int_bound, shape.int_bound));
    case RingKind::IntegerMod: {
      const auto& m = as_integer_mod(*ring).modulus();
      mpz_class pick = m.fits_ulong_p() ? mpz_class(static_cast<unsigned long>(rng.below(m.get_ui())))
                                        : mpz_class(static_cast<unsigned long>(rng.below(1u << 30)));
      return ring->from_integer(pick);
    }
    case RingKind::Polynomial:
      return random_poly(as_polynomial(*ring), rng, shape, false);
    case RingKind::Localized: {
      const auto& l = as_localized(*ring);
      return l.fraction(random_scalar(l.base(), rng, shape),
                        static_cast<unsigned>(rng.below(shape.max_denominator_power + 1)));
    }
    case RingKind::Mixed: {
      const auto& b = as_mixed(*ring);
      RingValue f = random_poly(as_polynomial(*b.ambient()), rng, shape, true);
      return b.pair(random_scalar(b.base(), rng, shape), f);
    }
  }
  return ring->zero();
}

RingValue small_scalar(const RingPtr& ring, Rng& rng) {
  ScalarShape s;
  s.int_bound = 3;
  s.degree = 1;
  s.max_terms = 2;
  s.max_denominator_power = 1;
  return random_scalar(ring, rng, s);
}

RingValue random_ideal_element(const RingPtr& ring, Rng& rng, const ScalarShape& shape) {
  if (ring->kind() == RingKind::Mixed) {
    const auto& b = as_mixed(*ring);
    return b.pair(b.base()->zero(), random_poly(as_polynomial(*b.ambient()), rng, shape, true));
  }
  if (ring->kind() == RingKind::Polynomial) return random_poly(as_polynomial(*ring), rng, shape, true);
  raise(ErrorCode::PreconditionViolated, "no distinguished ideal in " + ring->spec());
}

IndexedVector random_vector(const RingPtr& ring, int n, Rng& rng, const ScalarShape& shape) {
  std::vector<RingValue> e;
  for (int k = 0; k < 2 * n; ++k) e.push_back(rng.coin(1, 4) ? ring->zero() : random_scalar(ring, rng, shape));
  return IndexedVector::from_entries(ring, n, std::move(e));
}

IndexedVector random_vector_zero_pair(const RingPtr& ring, int n, int i, Rng& rng, const ScalarShape& shape) {
  return random_vector(ring, n, rng, shape).without_pair(i);
}

IndexedVector orth_basis_vector(const IndexedVector& u, int i, int j) {
  IndexedVector out = IndexedVector::zero(u.ring(), u.rank());
  out.set(i, sign(j) > 0 ? u[-j] : -u[-j]);
  out.set(j, sign(i) > 0 ? -u[-i] : u[-i]);
  return out;
}

IndexedVector random_orthogonal(const IndexedVector& u, Rng& rng, int avoid, const ScalarShape& shape) {
  const int n = u.rank();
  const RingPtr& ring = u.ring();
  std::vector<int> pool;
  for (int k : indices(n))
    if (avoid == 0 || (k != avoid && k != -avoid)) pool.push_back(k);
  IndexedVector v = IndexedVector::zero(ring, n);
  const int terms = 1 + static_cast<int>(rng.below(3));
  for (int t = 0; t < terms; ++t) {
    int i = pool[rng.below(pool.size())];
    int j = pool[rng.below(pool.size())];
    if (i == j) continue;
    v = v + orth_basis_vector(u, i, j) * random_scalar(ring, rng, shape);
  }
  if ((avoid == 0 || u.zero_pair(avoid)) && rng.coin()) v = v + u * random_scalar(ring, rng, shape);
  return v;
}

SteinbergWord random_word(const RingPtr& ring, int n, Rng& rng, std::size_t length, bool small) {
  SteinbergWord w(ring, n);
  const auto idx = indices(n);
  while (w.size() < length) {
    int i = idx[rng.below(idx.size())];
    int j = idx[rng.below(idx.size())];
    if (i == j) continue;
    w.push(i, j, small ? small_scalar(ring, rng) : random_scalar(ring, rng));
  }
  return w;
}

SteinbergWord random_word_avoiding(const RingPtr& ring, int n, Rng& rng, std::size_t length, int avoid) {
  SteinbergWord w(ring, n);
  std::vector<int> idx;
  for (int k : indices(n))
    if (k != avoid && k != -avoid) idx.push_back(k);
  while (w.size() < length) {
    int i = idx[rng.below(idx.size())];
    int j = idx[rng.below(idx.size())];
    if (i == j) continue;
    w.push(i, j, small_scalar(ring, rng));
  }
  return w;
}

OrbitVector random_orbit(const RingPtr& ring, int n, Rng& rng, std::size_t length) {
  return OrbitVector(random_word(ring, n, rng, length));
}

OrbitPair random_orbit_pair(const RingPtr& ring, int n, Rng& rng, std::size_t length) {
  return OrbitPair(random_word(ring, n, rng, length));
}

RingValue default_localizing_element(const RingPtr& ring) {
  for (long k = 2; k < 1000; ++k) {
    RingValue a = ring->from_integer(k);
    if (ring->is_non_zero_divisor(a)) return a;
  }
  raise(ErrorCode::InvalidDescriptor, "no small integer non-zero-divisor in " + ring->spec());
}

namespace {

bool uses_name(const RingPtr& ring, std::string_view name) { return ring->variable(name).has_value(); }

}  // namespace

std::string fresh_variable(const RingPtr& ring, std::string_view preferred) {
  if (!uses_name(ring, preferred)) return std::string(preferred);
  for (const char* c : {"s", "t", "y", "z", "w"})
    if (!uses_name(ring, c)) return c;
  for (int k = 1;; ++k) {
    std::string name = "t" + std::to_string(k);
    if (!uses_name(ring, name)) return name;
  }
}

}  // namespace stsp
