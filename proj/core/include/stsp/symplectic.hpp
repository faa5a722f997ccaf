#pragma once

// R^{2n} with basis e_{-n}, ..., e_{-1}, e_1, ..., e_n and the form
// <e_i, e_{-i}> = 1 for i > 0.  Index i is stored at position i+n when i < 0
// and i+n-1 when i > 0.

#include <string>
#include <vector>

#include "stsp/ring.hpp"
#include "stsp/ring_hom.hpp"

namespace stsp {

inline int sign(int i) { return i > 0 ? 1 : -1; }

void check_rank(int n);
void check_index(int i, int n);
inline std::size_t position(int i, int n) {
  return static_cast<std::size_t>(i < 0 ? i + n : i + n - 1);
}
inline int index_at(std::size_t pos, int n) {
  int p = static_cast<int>(pos);
  return p < n ? p - n : p - n + 1;
}
/// All indices in layout order: -n..-1, 1..n.
std::vector<int> indices(int n);

class IndexedVector {
 public:
  IndexedVector() = default;
  static IndexedVector zero(const RingPtr& ring, int n);
  static IndexedVector basis(const RingPtr& ring, int n, int i);
  /// Entries listed in layout order.
  static IndexedVector from_entries(const RingPtr& ring, int n, std::vector<RingValue> entries);

  const RingPtr& ring() const noexcept { return ring_; }
  int rank() const noexcept { return n_; }
  const RingValue& operator[](int i) const { return entries_[position(i, n_)]; }
  void set(int i, RingValue value);
  const std::vector<RingValue>& entries() const noexcept { return entries_; }

  IndexedVector operator+(const IndexedVector& other) const;
  IndexedVector operator-(const IndexedVector& other) const;
  IndexedVector operator-() const;
  /// Right scalar multiplication u*r.
  IndexedVector operator*(const RingValue& r) const;

  bool is_zero() const;
  /// u_i = u_{-i} = 0
  bool zero_pair(int i) const;
  /// Some positive k with u_k = u_{-k} = 0, or 0.
  int first_zero_pair() const;
  /// Entries with index +-i cleared.
  IndexedVector without_pair(int i) const;
  /// Only the entries with index +-i kept.
  IndexedVector only_pair(int i) const;

  IndexedVector map(const RingHom& hom) const;
  std::string str() const;

  friend bool operator==(const IndexedVector& x, const IndexedVector& y);

 private:
  IndexedVector(RingPtr ring, int n, std::vector<RingValue> entries)
      : ring_(std::move(ring)), n_(n), entries_(std::move(entries)) {}
  RingPtr ring_;
  int n_ = 0;
  std::vector<RingValue> entries_;
};

RingValue symp_form(const IndexedVector& u, const IndexedVector& v);

class SympMatrix {
 public:
  SympMatrix() = default;
  static SympMatrix identity(const RingPtr& ring, int n);
  static SympMatrix from_columns(const std::vector<IndexedVector>& columns);

  const RingPtr& ring() const noexcept { return ring_; }
  int rank() const noexcept { return n_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(2 * n_); }
  const RingValue& operator()(int i, int j) const { return data_[position(i, n_) * dim() + position(j, n_)]; }
  void set(int i, int j, RingValue value);

  IndexedVector column(int j) const;
  IndexedVector operator*(const IndexedVector& v) const;
  SympMatrix operator*(const SympMatrix& other) const;
  /// Inverse of a symplectic matrix: (M^-1)_{ij} = sign(i) sign(j) M_{-j,-i}.
  SympMatrix symplectic_inverse() const;

  /// In place: M <- M * T_ij(a) (i != +-j) or M * T_{i,-i}(a).
  void right_multiply_transvection(int i, int j, const RingValue& a);

  SympMatrix map(const RingHom& hom) const;
  bool is_identity() const;
  /// Rows and columns +-k agree with the identity.
  bool block_trivial(int k) const;
  /// Rows, layout order, entries formatted.
  std::vector<std::vector<std::string>> rows() const;

  friend bool operator==(const SympMatrix& x, const SympMatrix& y);
  friend bool operator!=(const SympMatrix& x, const SympMatrix& y) { return !(x == y); }

 private:
  RingPtr ring_;
  int n_ = 0;
  std::vector<RingValue> data_;
};

/// T_ij(a) = 1 + e_ij a - e_{-j,-i} a sign(i) sign(j); T_{i,-i}(a) = 1 + e_{i,-i} a sign(i).
SympMatrix transvection_matrix(int n, int i, int j, const RingValue& a);

/// Matrix of w -> w + u(<v,w> + a<u,w>) + v<u,w>.  Throws NotIsotropicPair.
SympMatrix esd_matrix(const IndexedVector& u, const IndexedVector& v, const RingValue& a);

bool is_symplectic(const SympMatrix& m);

}  // namespace stsp
