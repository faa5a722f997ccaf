#include "stsp/symplectic.hpp"

#include <cstdlib>

namespace stsp {

void check_rank(int n) {
  if (n < 3) raise(ErrorCode::PreconditionViolated, "rank n must be at least 3, got " + std::to_string(n));
}

void check_index(int i, int n) {
  if (i == 0 || std::abs(i) > n)
    raise(ErrorCode::PreconditionViolated, "index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
}

std::vector<int> indices(int n) {
  std::vector<int> out;
  for (int i = -n; i <= n; ++i)
    if (i != 0) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------
// IndexedVector

IndexedVector IndexedVector::zero(const RingPtr& ring, int n) {
  check_rank(n);
  return IndexedVector(ring, n, std::vector<RingValue>(2 * n, ring->zero()));
}

IndexedVector IndexedVector::basis(const RingPtr& ring, int n, int i) {
  IndexedVector v = zero(ring, n);
  check_index(i, n);
  v.entries_[position(i, n)] = ring->one();
  return v;
}

IndexedVector IndexedVector::from_entries(const RingPtr& ring, int n, std::vector<RingValue> entries) {
  check_rank(n);
  if (entries.size() != static_cast<std::size_t>(2 * n))
    raise(ErrorCode::PreconditionViolated, "vector needs " + std::to_string(2 * n) + " entries");
  for (const auto& e : entries) require_ring(e, ring);
  return IndexedVector(ring, n, std::move(entries));
}

void IndexedVector::set(int i, RingValue value) {
  check_index(i, n_);
  require_ring(value, ring_);
  entries_[position(i, n_)] = std::move(value);
}

static void require_compatible(const IndexedVector& x, const IndexedVector& y) {
  if (x.ring() != y.ring())
    raise(ErrorCode::DescriptorMismatch, x.ring()->spec() + " vs " + y.ring()->spec());
  if (x.rank() != y.rank()) raise(ErrorCode::DescriptorMismatch, "vectors of different rank");
}

IndexedVector IndexedVector::operator+(const IndexedVector& other) const {
  require_compatible(*this, other);
  std::vector<RingValue> out(entries_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = entries_[k] + other.entries_[k];
  return IndexedVector(ring_, n_, std::move(out));
}

IndexedVector IndexedVector::operator-(const IndexedVector& other) const {
  require_compatible(*this, other);
  std::vector<RingValue> out(entries_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = entries_[k] - other.entries_[k];
  return IndexedVector(ring_, n_, std::move(out));
}

IndexedVector IndexedVector::operator-() const {
  std::vector<RingValue> out(entries_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = -entries_[k];
  return IndexedVector(ring_, n_, std::move(out));
}

IndexedVector IndexedVector::operator*(const RingValue& r) const {
  require_ring(r, ring_);
  std::vector<RingValue> out(entries_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = entries_[k].is_zero() ? entries_[k] : entries_[k] * r;
  return IndexedVector(ring_, n_, std::move(out));
}

bool IndexedVector::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool IndexedVector::zero_pair(int i) const { return (*this)[i].is_zero() && (*this)[-i].is_zero(); }

int IndexedVector::first_zero_pair() const {
  for (int k = 1; k <= n_; ++k)
    if (zero_pair(k)) return k;
  return 0;
}

IndexedVector IndexedVector::without_pair(int i) const {
  IndexedVector out = *this;
  out.entries_[position(i, n_)] = ring_->zero();
  out.entries_[position(-i, n_)] = ring_->zero();
  return out;
}

IndexedVector IndexedVector::only_pair(int i) const { return *this - without_pair(i); }

IndexedVector IndexedVector::map(const RingHom& hom) const {
  require_ring(ring_->zero(), hom.source());
  std::vector<RingValue> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(hom(e));
  return IndexedVector(hom.target(), n_, std::move(out));
}

std::string IndexedVector::str() const {
  std::string s = "[";
  for (std::size_t k = 0; k < entries_.size(); ++k) s += (k ? ", " : "") + entries_[k].str();
  return s + "]";
}

bool operator==(const IndexedVector& x, const IndexedVector& y) {
  require_compatible(x, y);
  for (std::size_t k = 0; k < x.entries_.size(); ++k)
    if (!(x.entries_[k] == y.entries_[k])) return false;
  return true;
}

RingValue symp_form(const IndexedVector& u, const IndexedVector& v) {
  require_compatible(u, v);
  RingValue acc = u.ring()->zero();
  for (int i = 1; i <= u.rank(); ++i) {
    const RingValue& a = u[i];
    const RingValue& b = u[-i];
    if (!a.is_zero() && !v[-i].is_zero()) acc += a * v[-i];
    if (!b.is_zero() && !v[i].is_zero()) acc -= b * v[i];
  }
  return acc;
}

// ---------------------------------------------------------------------------
// SympMatrix

SympMatrix SympMatrix::identity(const RingPtr& ring, int n) {
  check_rank(n);
  SympMatrix m;
  m.ring_ = ring;
  m.n_ = n;
  m.data_.assign(m.dim() * m.dim(), ring->zero());
  for (std::size_t k = 0; k < m.dim(); ++k) m.data_[k * m.dim() + k] = ring->one();
  return m;
}

SympMatrix SympMatrix::from_columns(const std::vector<IndexedVector>& columns) {
  if (columns.empty()) raise(ErrorCode::PreconditionViolated, "no columns");
  const int n = columns.front().rank();
  if (columns.size() != static_cast<std::size_t>(2 * n)) raise(ErrorCode::PreconditionViolated, "wrong column count");
  SympMatrix m = identity(columns.front().ring(), n);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    require_compatible(columns[c], columns.front());
    for (std::size_t r = 0; r < m.dim(); ++r) m.data_[r * m.dim() + c] = columns[c].entries()[r];
  }
  return m;
}

void SympMatrix::set(int i, int j, RingValue value) {
  check_index(i, n_);
  check_index(j, n_);
  require_ring(value, ring_);
  data_[position(i, n_) * dim() + position(j, n_)] = std::move(value);
}

IndexedVector SympMatrix::column(int j) const {
  std::vector<RingValue> out(dim());
  const std::size_t c = position(j, n_);
  for (std::size_t r = 0; r < dim(); ++r) out[r] = data_[r * dim() + c];
  return IndexedVector::from_entries(ring_, n_, std::move(out));
}

IndexedVector SympMatrix::operator*(const IndexedVector& v) const {
  if (v.ring() != ring_ || v.rank() != n_) raise(ErrorCode::DescriptorMismatch, "matrix/vector mismatch");
  std::vector<RingValue> out(dim(), ring_->zero());
  for (std::size_t c = 0; c < dim(); ++c) {
    const RingValue& x = v.entries()[c];
    if (x.is_zero()) continue;
    for (std::size_t r = 0; r < dim(); ++r) {
      const RingValue& m = data_[r * dim() + c];
      if (!m.is_zero()) out[r] += m * x;
    }
  }
  return IndexedVector::from_entries(ring_, n_, std::move(out));
}

SympMatrix SympMatrix::operator*(const SympMatrix& other) const {
  if (other.ring_ != ring_ || other.n_ != n_) raise(ErrorCode::DescriptorMismatch, "matrix mismatch");
  SympMatrix out = identity(ring_, n_);
  const std::size_t d = dim();
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      RingValue acc = ring_->zero();
      for (std::size_t k = 0; k < d; ++k) {
        const RingValue& x = data_[r * d + k];
        const RingValue& y = other.data_[k * d + c];
        if (!x.is_zero() && !y.is_zero()) acc += x * y;
      }
      out.data_[r * d + c] = std::move(acc);
    }
  }
  return out;
}

SympMatrix SympMatrix::symplectic_inverse() const {
  SympMatrix out = identity(ring_, n_);
  for (int i : indices(n_)) {
    for (int j : indices(n_)) {
      const RingValue& x = (*this)(-j, -i);
      out.data_[position(i, n_) * dim() + position(j, n_)] = sign(i) * sign(j) > 0 ? x : -x;
    }
  }
  return out;
}

void SympMatrix::right_multiply_transvection(int i, int j, const RingValue& a) {
  check_index(i, n_);
  check_index(j, n_);
  require_ring(a, ring_);
  if (a.is_zero()) return;
  const std::size_t d = dim();
  auto col_axpy = [&](int dst, int src, const RingValue& s) {
    const std::size_t cd = position(dst, n_);
    const std::size_t cs = position(src, n_);
    for (std::size_t r = 0; r < d; ++r) {
      const RingValue& x = data_[r * d + cs];
      if (!x.is_zero()) data_[r * d + cd] += x * s;
    }
  };
  if (j == -i) {
    col_axpy(-i, i, sign(i) > 0 ? a : -a);
    return;
  }
  if (j == i) raise(ErrorCode::PreconditionViolated, "transvection needs i != j");
  col_axpy(j, i, a);
  col_axpy(-i, -j, sign(i) * sign(j) > 0 ? -a : a);
}

SympMatrix SympMatrix::map(const RingHom& hom) const {
  require_ring(ring_->zero(), hom.source());
  SympMatrix out;
  out.ring_ = hom.target();
  out.n_ = n_;
  out.data_.reserve(data_.size());
  for (const auto& x : data_) out.data_.push_back(hom(x));
  return out;
}

bool SympMatrix::is_identity() const {
  const std::size_t d = dim();
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      const RingValue& x = data_[r * d + c];
      if (r == c ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

bool SympMatrix::block_trivial(int k) const {
  for (int s : {k, -k}) {
    for (int j : indices(n_)) {
      const bool diag = (s == j);
      const RingValue& row = (*this)(s, j);
      const RingValue& col = (*this)(j, s);
      if (diag ? !row.is_one() : !row.is_zero()) return false;
      if (diag ? !col.is_one() : !col.is_zero()) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::string>> SympMatrix::rows() const {
  std::vector<std::vector<std::string>> out(dim());
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < dim(); ++c) out[r].push_back(data_[r * dim() + c].str());
  return out;
}

bool operator==(const SympMatrix& x, const SympMatrix& y) {
  if (x.ring_ != y.ring_ || x.n_ != y.n_) raise(ErrorCode::DescriptorMismatch, "matrix mismatch");
  for (std::size_t k = 0; k < x.data_.size(); ++k)
    if (!(x.data_[k] == y.data_[k])) return false;
  return true;
}

SympMatrix transvection_matrix(int n, int i, int j, const RingValue& a) {
  SympMatrix m = SympMatrix::identity(a.ring(), n);
  m.right_multiply_transvection(i, j, a);
  return m;
}

SympMatrix esd_matrix(const IndexedVector& u, const IndexedVector& v, const RingValue& a) {
  require_compatible(u, v);
  require_ring(a, u.ring());
  if (!symp_form(u, v).is_zero())
    raise(ErrorCode::NotIsotropicPair, "<u,v> = " + symp_form(u, v).str() + " for u=" + u.str() + ", v=" + v.str());
  const int n = u.rank();
  std::vector<IndexedVector> cols;
  cols.reserve(2 * n);
  for (int k : indices(n)) {
    // <x, e_k> = -sign(k) x_{-k}
    const RingValue uw = sign(k) > 0 ? -u[-k] : u[-k];
    const RingValue vw = sign(k) > 0 ? -v[-k] : v[-k];
    IndexedVector w = IndexedVector::basis(u.ring(), n, k);
    if (!uw.is_zero() || !vw.is_zero()) w = w + u * (vw + a * uw) + v * uw;
    cols.push_back(std::move(w));
  }
  return SympMatrix::from_columns(cols);
}

bool is_symplectic(const SympMatrix& m) {
  const int n = m.rank();
  std::vector<IndexedVector> cols;
  for (int k : indices(n)) cols.push_back(m.column(k));
  const auto& ring = m.ring();
  for (int i : indices(n)) {
    for (int j : indices(n)) {
      RingValue expect = (j == -i) ? ring->from_integer(sign(i)) : ring->zero();
      if (!(symp_form(cols[position(i, n)], cols[position(j, n)]) == expect)) return false;
    }
  }
  return true;
}

}  // namespace stsp
