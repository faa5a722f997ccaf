#pragma once

// Independent reference arithmetic for the tests: dense integer matrices in
// layout order (optionally mod m) and univariate polynomials over Q.  Nothing
// here calls into the library except to read entries out of its values.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "stsp/suite.hpp"

namespace oracle {

// mpz_class entries; modulus 0 means Z
struct Dense {
  int n = 3;
  mpz_class m = 0;
  std::vector<std::vector<mpz_class>> a;

  std::size_t dim() const { return static_cast<std::size_t>(2 * n); }

  static Dense identity(int n, const mpz_class& m = 0) {
    Dense d;
    d.n = n;
    d.m = m;
    d.a.assign(d.dim(), std::vector<mpz_class>(d.dim(), 0));
    for (std::size_t k = 0; k < d.dim(); ++k) d.a[k][k] = 1;
    return d;
  }

  void reduce() {
    if (m == 0) return;
    for (auto& row : a)
      for (auto& x : row) {
        x %= m;
        if (x < 0) x += m;
      }
  }

  // index -> row/column, written out again on purpose
  std::size_t at(int i) const { return static_cast<std::size_t>(i < 0 ? n + i : n + i - 1); }

  mpz_class& operator()(int i, int j) { return a[at(i)][at(j)]; }

  Dense operator*(const Dense& o) const {
    Dense r = identity(n, m);
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) {
        mpz_class s = 0;
        for (std::size_t k = 0; k < dim(); ++k) s += a[i][k] * o.a[k][j];
        r.a[i][j] = s;
      }
    r.reduce();
    return r;
  }

  Dense transpose() const {
    Dense r = *this;
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) r.a[i][j] = a[j][i];
    return r;
  }

  friend bool operator==(const Dense& x, const Dense& y) {
    Dense p = x, q = y;
    p.reduce();
    q.reduce();
    return p.a == q.a;
  }
};

inline int sgn(int i) { return i > 0 ? 1 : -1; }

// J with J(i,-i) = sign(i): <x,y> = x^T J y
inline Dense gram(int n, const mpz_class& m = 0) {
  Dense j = Dense::identity(n, m);
  for (auto& row : j.a)
    for (auto& x : row) x = 0;
  for (int i = 1; i <= n; ++i) {
    j(i, -i) = 1;
    j(-i, i) = -1;
  }
  j.reduce();
  return j;
}

inline bool preserves_form(const Dense& M) { return M.transpose() * gram(M.n, M.m) * M == gram(M.n, M.m); }

// 1 + e_ij a - e_{-j,-i} a s_i s_j, or 1 + e_{i,-i} a s_i
inline Dense transvection(int n, int i, int j, const mpz_class& a, const mpz_class& m = 0) {
  Dense d = Dense::identity(n, m);
  if (j == -i) {
    d(i, -i) += a * sgn(i);
  } else {
    d(i, j) += a;
    d(-j, -i) -= a * sgn(i) * sgn(j);
  }
  d.reduce();
  return d;
}

using Vec = std::vector<mpz_class>;  // layout order

inline mpz_class form(int n, const Vec& x, const Vec& y) {
  mpz_class s = 0;
  for (int i = 1; i <= n; ++i) s += x[n + i - 1] * y[n - i] - x[n - i] * y[n + i - 1];
  return s;
}

// column k of T(u,v,a): e_k + u(<v,e_k> + a<u,e_k>) + v<u,e_k>
inline Dense esd(int n, const Vec& u, const Vec& v, const mpz_class& a, const mpz_class& m = 0) {
  Dense d = Dense::identity(n, m);
  const std::size_t dim = d.dim();
  for (std::size_t k = 0; k < dim; ++k) {
    Vec e(dim, 0);
    e[k] = 1;
    const mpz_class uv = form(n, v, e) + a * form(n, u, e);
    const mpz_class ue = form(n, u, e);
    for (std::size_t r = 0; r < dim; ++r) d.a[r][k] = e[r] + u[r] * uv + v[r] * ue;
  }
  d.reduce();
  return d;
}

// library values over Z or Z/m read as integers
inline Dense from_library(const stsp::SympMatrix& M) {
  Dense d = Dense::identity(M.rank());
  if (M.ring()->kind() == stsp::RingKind::IntegerMod) d.m = stsp::as_integer_mod(*M.ring()).modulus();
  for (int i : stsp::indices(M.rank()))
    for (int j : stsp::indices(M.rank())) d(i, j) = stsp::integer_value(M(i, j));
  d.reduce();
  return d;
}

inline Vec from_library(const stsp::IndexedVector& v) {
  Vec out;
  for (const auto& e : v.entries()) out.push_back(stsp::integer_value(e));
  return out;
}

// ---------------------------------------------------------------------------
// univariate polynomials over Q, exponent -> coefficient, zeros pruned

struct Poly {
  std::map<unsigned, mpq_class> c;

  static Poly constant(const mpq_class& x) {
    Poly p;
    if (x != 0) p.c[0] = x;
    return p;
  }
  static Poly monomial(const mpq_class& x, unsigned e) {
    Poly p;
    if (x != 0) p.c[e] = x;
    return p;
  }
  void prune() {
    for (auto it = c.begin(); it != c.end();) it = it->second == 0 ? c.erase(it) : std::next(it);
  }
  Poly operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, x] : o.c) r.c[e] += x;
    r.prune();
    return r;
  }
  Poly operator*(const Poly& o) const {
    Poly r;
    for (const auto& [e, x] : c)
      for (const auto& [f, y] : o.c) r.c[e + f] += x * y;
    r.prune();
    return r;
  }
  // p(k t)
  Poly scaled(const mpq_class& k) const {
    Poly r;
    mpq_class pw = 1;
    unsigned last = 0;
    for (const auto& [e, x] : c) {
      while (last < e) {
        pw *= k;
        ++last;
      }
      r.c[e] = x * pw;
    }
    r.prune();
    return r;
  }
  mpq_class at0() const { return c.count(0) ? c.at(0) : mpq_class(0); }
  // value grammar text in variable `var`
  std::string text(const std::string& var = "t") const {
    if (c.empty()) return "0";
    std::string s;
    for (const auto& [e, x] : c) {
      if (!s.empty()) s += " + ";
      s += "(" + x.get_str() + ")";
      if (e > 0) s += "*" + var + "^" + std::to_string(e);
    }
    return s;
  }
  friend bool operator==(const Poly& x, const Poly& y) { return x.c == y.c; }
};

// values of Z[t], Loc(Z,a), Loc(Z,a)[t], B(Z,a) read as polynomials over Q
inline mpq_class rational(const stsp::RingValue& x) {
  using namespace stsp;
  const RingPtr& r = x.ring();
  if (r->kind() == RingKind::Integer) return mpq_class(integer_value(x));
  const auto& loc = as_localized(*r);
  const auto& f = loc.parts(x);
  mpq_class q(integer_value(f.num));
  mpz_class den = 1;
  for (unsigned k = 0; k < f.k; ++k) den *= integer_value(loc.element());
  q /= den;
  q.canonicalize();
  return q;
}

inline Poly poly(const stsp::RingValue& x) {
  using namespace stsp;
  if (x.ring()->kind() == RingKind::Mixed) return poly(as_mixed(*x.ring()).embed(x));
  if (x.ring()->kind() != RingKind::Polynomial) return Poly::constant(rational(x));
  Poly p;
  for (const auto& t : as_polynomial(*x.ring()).terms(x)) p.c[t.exponents.at(0)] = rational(t.coeff);
  p.prune();
  return p;
}

// smallest N with every parameter p(a^N t) integral, read off the rational coefficients
inline unsigned min_dilation(const stsp::SteinbergWord& g, long a, unsigned cap = 64) {
  for (unsigned N = 0; N <= cap; ++N) {
    mpq_class k = 1;
    for (unsigned p = 0; p < N; ++p) k *= a;
    bool ok = true;
    for (const auto& l : g.letters())
      for (const auto& [ex, c] : poly(l.param()).scaled(k).c) ok = ok && c.get_den() == 1;
    if (ok) return N;
  }
  return cap + 1;
}

// small seeded integer generator, separate from the library's Rng
struct Gen {
  std::mt19937_64 eng;
  explicit Gen(std::uint64_t seed) : eng(seed) {}
  long range(long lo, long hi) { return lo + static_cast<long>(eng() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Poly poly(unsigned deg, long bound) {
    Poly p;
    for (unsigned e = 0; e <= deg; ++e) p.c[e] = range(-bound, bound);
    p.prune();
    return p;
  }
};

}  // namespace oracle
