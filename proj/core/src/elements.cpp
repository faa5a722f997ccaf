#include "stsp/elements.hpp"

namespace stsp {

namespace {

IndexedVector first_column(const SteinbergWord& m, int index) {
  SympMatrix p = phi(m);
  return p.column(index);
}

void require_isotropic(const IndexedVector& u, const IndexedVector& v) {
  RingValue f = symp_form(u, v);
  if (!f.is_zero()) raise(ErrorCode::NotIsotropicPair, "<u,v> = " + f.str() + " for u=" + u.str() + ", v=" + v.str());
}

// Word P with phi(P) e_1 = e_i.
SteinbergWord basis_witness(const RingPtr& ring, int n, int i) {
  check_index(i, n);
  SteinbergWord w(ring, n);
  const RingValue one = ring->one();
  if (i == 1) return w;
  if (i == -1) {
    w.push(1, -1, -one);
    w.push(-1, 1, -one);
    return w;
  }
  w.push(1, i, -one);
  w.push(i, 1, one);
  return w;
}

}  // namespace

// ---------------------------------------------------------------------------
// OrbitVector / OrbitPair

OrbitVector::OrbitVector(SteinbergWord witness) : witness_(std::move(witness)) {
  vector_ = first_column(witness_, 1);
}

OrbitVector OrbitVector::e1(const RingPtr& ring, int n) { return OrbitVector(SteinbergWord(ring, n)); }

OrbitVector OrbitVector::basis(const RingPtr& ring, int n, int i) { return OrbitVector(basis_witness(ring, n, i)); }

OrbitVector OrbitVector::acted(const SteinbergWord& g) const { return OrbitVector(g * witness_); }

IndexedVector OrbitVector::co_vector() const { return -first_column(witness_, -1); }

OrbitVector OrbitVector::map(const RingHom& hom) const { return OrbitVector(witness_.map(hom)); }

OrbitPair::OrbitPair(SteinbergWord witness) : witness_(std::move(witness)) {
  SympMatrix p = phi(witness_);
  first_ = p.column(1);
  second_ = p.column(2);
}

OrbitVector OrbitPair::second_orbit() const {
  return OrbitVector(witness_ * basis_witness(witness_.ring(), witness_.rank(), 2));
}

OrbitVector OrbitPair::combination(const RingValue& r) const {
  SteinbergWord w = witness_;
  w.push(2, 1, r);
  return OrbitVector(w);
}

OrbitPair OrbitPair::acted(const SteinbergWord& g) const { return OrbitPair(g * witness_); }

// ---------------------------------------------------------------------------
// Words

SteinbergWord basis_x(const RingPtr& ring, int n, int i, const IndexedVector& w, const RingValue& a) {
  check_index(i, n);
  if (!w[-i].is_zero())
    raise(ErrorCode::NotIsotropicPair, "<e_" + std::to_string(i) + ", w> != 0 for w=" + w.str());
  SteinbergWord out(ring, n);
  // X(e_i, w, 0) = prod_k [e_i, e_k w_k, 0] * X(e_i, 0, -sum_{p<q} <f_p, f_q>)   (K1)
  // [e_i, e_k c, 0] = X_{i,-k}(c sign k),  [e_i, e_i c, 0] = X_{i,-i}(2c).
  RingValue tail = a + w[i] * 2;
  std::vector<IndexedVector> parts;
  for (int k : indices(n)) {
    if (k == -i || w[k].is_zero()) continue;
    IndexedVector f = IndexedVector::zero(ring, n);
    f.set(k, w[k]);
    parts.push_back(f);
    if (k != i) out.push(i, -k, sign(k) > 0 ? w[k] : -w[k]);
  }
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (std::size_t q = p + 1; q < parts.size(); ++q) tail -= symp_form(parts[p], parts[q]);
  if (!tail.is_zero()) out.push(i, -i, tail);
  return out;
}

SteinbergWord x_element(const OrbitVector& u, const IndexedVector& v, const RingValue& a) {
  require_isotropic(u.vector(), v);
  const SteinbergWord& g = u.witness();
  IndexedVector pulled = g.empty() ? v : phi(g.inverse()) * v;
  return g * basis_x(u.ring(), u.rank(), 1, pulled, a) * g.inverse();
}

SteinbergWord y_element(int i, const IndexedVector& u, const IndexedVector& v, const RingValue& a) {
  const int n = u.rank();
  const RingPtr& ring = u.ring();
  check_index(i, n);
  if (!u.zero_pair(i))
    raise(ErrorCode::PreconditionViolated, "Y_(" + std::to_string(i) + ") needs u_i = u_-i = 0, u=" + u.str());
  require_isotropic(u, v);
  // Y5: split off the +-i coordinates of v.
  IndexedVector rest = v.without_pair(i);
  RingValue a2 = a - (sign(i) > 0 ? v[i] * v[-i] : -(v[i] * v[-i]));
  // Y4 on the remaining part.
  const RingValue si = ring->from_integer(sign(i));
  SteinbergWord left = basis_x(ring, n, i, u, ring->zero());
  SteinbergWord right = basis_x(ring, n, -i, rest * si, a2);
  SteinbergWord out = commutator(left, right);
  out *= basis_x(ring, n, -i, u * (a2 * -sign(i)), ring->zero());
  out *= basis_x(ring, n, i, u * v[i], ring->zero());
  out *= basis_x(ring, n, -i, u * v[-i], ring->zero());
  return out;
}

SteinbergWord x_general(const IndexedVector& u, const IndexedVector& v, const RingValue& a) {
  require_isotropic(u, v);
  const int n = u.rank();
  const RingPtr& ring = u.ring();
  if (int i = u.first_zero_pair()) return y_element(i, u, v, a);
  SteinbergWord tail(ring, n);
  if (!a.is_zero()) {
    // Y6 with q' on the +-n pair: X(q+q',0,a) = Y_(n)(q,0,a) Y(q',0,a) Y(q',qa,0)
    IndexedVector qp = u.only_pair(n);
    IndexedVector q = u.without_pair(n);
    const IndexedVector zero = IndexedVector::zero(ring, n);
    tail = y_element(n, q, zero, a) * y_element(1, qp, zero, a) * y_element(1, qp, q * a, ring->zero());
  }
  if (v.is_zero()) return tail;
  if (int k = v.first_zero_pair()) {
    // X(u,v,0) = X(v,u,0)
    return y_element(k, v, u, ring->zero()) * tail;
  }
  // X(u,v,0) = X(v,0,-1) X(u,0,-1) X(u+v,0,1)
  const RingValue one = ring->one();
  return x_general(v, IndexedVector::zero(ring, n), -one) * x_general(u, IndexedVector::zero(ring, n), -one) *
         x_general(u + v, IndexedVector::zero(ring, n), one) * tail;
}

SteinbergWord x_of(const Anchor& u, const IndexedVector& v, const RingValue& a) {
  if (u.orbit) return x_element(*u.orbit, v, a);
  return x_general(u.vec, v, a);
}

}  // namespace stsp
