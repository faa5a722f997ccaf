#include <doctest.h>

#include <algorithm>

#include "../support/oracle.hpp"

using namespace stsp;

namespace {

IndexedVector e(const RingPtr& r, int n, int i) { return IndexedVector::basis(r, n, i); }

bool literally_equal(const SteinbergWord& x, const SteinbergWord& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!same_letter(x.letters()[k], y.letters()[k])) return false;
  return true;
}

struct BFrame {
  RingPtr B;
  RingValue a;  // (2, 0)
};

BFrame bframe(const char* base = "Z") {
  auto R = parse_ring(base);
  auto B = mixed(R, R->from_integer(2), "t");
  const auto& m = as_mixed(*B);
  return {B, m.pair(R->from_integer(2), m.ambient()->zero())};
}

// frame bindings for the Z family with u = e_1 (empty M)
Bindings zbind(const BFrame& f, long N, const RingValue& b) {
  Bindings out;
  out.set("n", 3L).set("N", N).set("K1", 0L).set("K2", 0L);
  out.set("M", SteinbergWord(f.B, 3)).set("b", b).set("c", f.B->zero()).set("r", f.B->one());
  out.set("v", IndexedVector::zero(f.B, 3)).set("v'", IndexedVector::zero(f.B, 3));
  return out;
}

// dense oracle sum over i < j in layout order
IndexedVector oracle_sum(const IndexedVector& u, const IndexedVector& v, const IndexedVector& w) {
  IndexedVector s = IndexedVector::zero(u.ring(), u.rank());
  const auto idx = indices(u.rank());
  for (std::size_t p = 0; p < idx.size(); ++p)
    for (std::size_t q = p + 1; q < idx.size(); ++q) {
      const int i = idx[p], j = idx[q];
      // e_i u_-j s_j - e_j u_-i s_i, times v_i w_j - v_j w_i
      IndexedVector b = e(u.ring(), u.rank(), i) * (u[-j] * sign(j)) - e(u.ring(), u.rank(), j) * (u[-i] * sign(i));
      s = s + b * (v[i] * w[j] - v[j] * w[i]);
    }
  return s;
}

}  // namespace

TEST_CASE("suslin examples") {
  auto Z = integers();
  auto d = suslin_decompose(e(Z, 3, 1), e(Z, 3, 2), -e(Z, 3, -1));
  CHECK(d.A.is_one());
  int nonzero = 0;
  for (const auto& p : d.parts) nonzero += !p.v.is_zero();
  CHECK(nonzero == 1);
  CHECK(d.part(-1, 2) == e(Z, 3, 2));
  CHECK(d.sum() == e(Z, 3, 2));

  auto z = suslin_decompose(e(Z, 3, 1), IndexedVector::zero(Z, 3), -e(Z, 3, -1));
  for (const auto& p : z.parts) CHECK(p.v.is_zero());

  auto Z7 = parse_ring("Z/7");
  Rng rng(89);
  for (int k = 0; k < 100; ++k) {
    auto u = random_vector(Z7, 3, rng), w = random_vector(Z7, 3, rng);
    auto v = random_orthogonal(u, rng);
    auto dd = suslin_decompose(u, v, w);
    CHECK(dd.sum() == v * symp_form(w, u));
    CHECK(dd.sum() == oracle_sum(u, v, w));
  }
}

TEST_CASE("suslin invariants") {
  for (const char* s : {"Z", "Z/4", "Z/5", "Z/5[t]", "B(Z,2)"}) {
    CAPTURE(s);
    auto R = parse_ring(s);
    for (int n : {3, 4}) {
      Rng rng(97 + n);
      for (int k = 0; k < 500; ++k) {
        auto u = random_vector(R, n, rng), w = random_vector(R, n, rng);
        auto v = random_orthogonal(u, rng);
        auto d = suslin_decompose(u, v, w);
        CHECK(d.sum() == v * d.A);
        for (const auto& p : d.parts) {
          CHECK(symp_form(u, p.v).is_zero());
          CHECK(suslin_part(u, v, w, p.j, p.i) == p.v);
        }
      }
    }
  }
}

TEST_CASE("z_list examples") {
  auto R = parse_ring("Z/5[t]");
  auto e1 = OrbitVector::e1(R, 3);
  Rng rng(101);
  auto v = random_orthogonal(e1.vector(), rng);
  auto one = z_list(e1, {v});
  CHECK(literally_equal(one.word, x_element(e1, v, R->zero())));
  CHECK(one.expected == esd_matrix(e1.vector(), v, R->zero()));
  CHECK(phi(z_list(e1, {}).word).is_identity());

  for (int k = 0; k < 100; ++k) {
    auto u = random_orbit(R, 3, rng);
    std::vector<IndexedVector> vs;
    for (int p = 0; p < 3; ++p) vs.push_back(random_orthogonal(u.vector(), rng, 1 + static_cast<int>(rng.below(3))));
    auto z = z_list(u, vs);
    CHECK(phi(z.word) == z.expected);
    auto ws = vs;
    std::reverse(ws.begin(), ws.end());
    CHECK(phi(z_list(u, ws).word) == z.expected);
  }
}

TEST_CASE("z_upper_A examples") {
  auto Z = integers();
  auto e1 = OrbitVector::e1(Z, 3);
  auto z = z_upper_A(e1, e(Z, 3, 2), -e(Z, 3, -1));
  CHECK(phi(z.word) == esd_matrix(e(Z, 3, 1), e(Z, 3, 2), Z->zero()));
  CHECK(phi(z_upper_A(e1, IndexedVector::zero(Z, 3), -e(Z, 3, -1)).word).is_identity());

  for (const char* s : {"Z", "Z/4", "Z/5[t]"}) {
    auto R = parse_ring(s);
    Rng rng(103);
    for (int k = 0; k < 100; ++k) {
      auto u = random_orbit(R, 3, rng);
      auto v = random_orthogonal(u.vector(), rng);
      auto w1 = u.co_vector() * R->from_integer(3);
      // w2 = w1 + u r has the same A
      auto w2 = w1 + u.vector() * random_scalar(R, rng);
      auto A = symp_form(w1, u.vector());
      CHECK(phi(z_upper_A(u, v, w1).word) == esd_matrix(u.vector(), v * A * A, R->zero()));
      CHECK(phi(z_upper_A(u, v, w1).word) == phi(z_upper_A(u, v, w2).word));
    }
  }
}

TEST_CASE("z_scalar and z_full examples") {
  auto f = bframe();
  const int n = 3;
  auto e1 = OrbitVector::e1(f.B, n);
  Rng rng(107);
  auto v = random_orthogonal(e1.vector(), rng);
  auto b = random_ideal_element(f.B, rng), c = random_ideal_element(f.B, rng);
  auto zero = IndexedVector::zero(f.B, n);

  ZScalarData d0{f.a, 0, -e(f.B, n, -1)};
  ZScalarData d1{f.a, 1, -e(f.B, n, -1) * f.a};
  CHECK(phi(z_scalar(e1, v, b, d0).word) == esd_matrix(e1.vector(), v * b, f.B->zero()));
  CHECK(phi(z_scalar(e1, v, b, d0).word) == phi(z_scalar(e1, v, b, d1).word));
  CHECK(phi(z_scalar(e1, v, f.B->zero(), d1).word).is_identity());
  CHECK(phi(z_scalar(e1, v, b, ZScalarData{f.a, 2, std::nullopt}).word) == z_scalar(e1, v, b, d0).expected);

  CHECK(phi(z_full(e1, v, b, f.B->zero(), d0).word) == phi(z_scalar(e1, v, b, d0).word));
  CHECK(phi(z_full(e1, zero, f.B->zero(), c, d0).word) == esd_matrix(e1.vector(), zero, c));
  auto full = z_full(e1, v, b, c, d1);
  CHECK(phi(full.word) == esd_matrix(e1.vector(), v * b, f.B->zero()) * esd_matrix(e1.vector(), zero, c));

  // wrong pairing and a scalar outside I
  CHECK_THROWS_AS(z_scalar(e1, v, b, ZScalarData{f.a, 1, -e(f.B, n, -1)}), Error);
  CHECK_THROWS_AS(divide_by_power(f.B->one(), f.a, 1), Error);
  CHECK(divide_by_power(f.a * f.a * b, f.a, 2) == b);

  for (int k = 0; k < 200; ++k) {
    auto u = random_orbit(f.B, n, rng);
    auto vv = random_orthogonal(u.vector(), rng);
    auto bb = random_ideal_element(f.B, rng);
    const unsigned N = static_cast<unsigned>(rng.below(3));
    ZScalarData d{f.a, N, u.co_vector() * f.a.pow(N)};
    CHECK(phi(z_scalar(u, vv, bb, d).word) == esd_matrix(u.vector(), vv * bb, f.B->zero()));
  }
}

TEST_CASE("column witness") {
  auto Z = integers();
  auto u = e(Z, 3, 2) * Z->from_integer(3) + e(Z, 3, -1);
  auto w = column_witness(Anchor(u), Z->from_integer(6));
  CHECK(symp_form(w, u) == Z->from_integer(6));
  CHECK_THROWS_AS(column_witness(Anchor(e(Z, 3, 1) * Z->from_integer(2)), Z->one()), Error);
  Rng r3(3);
  auto o = random_orbit(Z, 3, r3);
  CHECK(symp_form(column_witness(o, Z->from_integer(4)), o.vector()) == Z->from_integer(4));
}

TEST_CASE("Z relation examples") {
  auto f = bframe();
  Rng rng(109);
  auto b = random_ideal_element(f.B, rng);

  // Z4 with g = X_23(r)
  auto z4 = zbind(f, 1, b);
  z4.set("v", random_orthogonal(e(f.B, 3, 1), rng));
  z4.set("g", parse_word(f.B, 3, "X(2,3;3)"));
  CHECK(check_relation(*find_relation("Z4"), z4).pass);

  // Z5 with u = e_1, w = -e_-1, z-pair from e_2
  auto z5 = zbind(f, 0, b);
  auto r5 = check_relation(*find_relation("Z5"), z5);
  CHECK(r5.pass);
  CHECK(r5.lhs == esd_matrix(e(f.B, 3, 1), IndexedVector::zero(f.B, 3), b * 2L));

  auto om = zbind(f, 1, b);
  om.set("v", random_orthogonal(e(f.B, 3, 1), rng)).set("m", 1L);
  CHECK(check_relation(*find_relation("onemore"), om).pass);
}

TEST_CASE("certified traces") {
  auto f = bframe();
  Rng rng(113);
  for (int k = 0; k < 20; ++k) {
    auto b = random_ideal_element(f.B, rng);
    auto z = zbind(f, static_cast<long>(rng.below(3)), b);
    z.set("v", random_orthogonal(e(f.B, 3, 1), rng)).set("r", random_scalar(f.B, rng));
    z.set("c", random_ideal_element(f.B, rng));
    for (const char* id : {"Z1", "Z3"}) {
      CAPTURE(id);
      auto s = find_relation(id)->sides(z);
      auto tr = certify_e1(s.lhs, *s.rhs);
      REQUIRE(tr.has_value());
      CHECK(literally_equal(replay(s.lhs, *tr), *s.rhs));
      CHECK(literally_equal(replay(*s.rhs, reverse_trace(*tr)), s.lhs));
    }
  }

  // forgotten over Z: X(e_1 r, v, 0) realized as X(e_1, v r, 0); the trace reorders the list
  auto Z = integers();
  auto e1 = OrbitVector::e1(Z, 3);
  for (int k = 0; k < 20; ++k) {
    auto r = random_scalar(Z, rng);
    std::vector<IndexedVector> vs, rv;
    for (int p = 0; p < 3; ++p) vs.push_back(random_orthogonal(e1.vector(), rng, 2 + static_cast<int>(rng.below(2))));
    for (const auto& v : vs) rv.push_back(v * r);
    auto lhs = z_list(e1, rv).word;
    auto perm = rv;
    std::rotate(perm.begin(), perm.begin() + 1, perm.end());
    auto rhs = z_list(e1, perm).word;
    CHECK(phi(lhs) == phi(z_list(Anchor(e1.vector() * r), vs).word));
    auto tr = certify_e1(lhs, rhs);
    REQUIRE(tr.has_value());
    CHECK(literally_equal(replay(lhs, *tr), rhs));
  }

  // outside the e_1 root subgroup there is no certificate
  CHECK_FALSE(certify_e1(parse_word(Z, 3, "X(2,3;1)"), parse_word(Z, 3, "X(2,3;1)")).has_value());
}
