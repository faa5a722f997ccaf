#include <doctest.h>

#include "../support/oracle.hpp"

using namespace stsp;

namespace {

SteinbergWord W(const RingPtr& r, int n, const char* s) { return parse_word(r, n, s); }

bool literally_equal(const SteinbergWord& x, const SteinbergWord& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!same_letter(x.letters()[k], y.letters()[k])) return false;
  return true;
}

SteinbergWord prefix_word(const RingPtr& r, int n, Rng& rng) {
  return random_word(r, n, rng, rng.below(3), true);
}

}  // namespace

TEST_CASE("phi examples") {
  auto Z = integers();
  CHECK(phi(SteinbergWord(Z, 3)).is_identity());
  CHECK(phi(W(Z, 3, "X(1,2;5)")) == transvection_matrix(3, 1, 2, Z->from_integer(5)));
  CHECK(phi(W(Z, 3, "X(1,2;1)*X(1,2;-1)")).is_identity());
  CHECK(phi(W(Z, 3, "X(1,2;3)^-1")) == transvection_matrix(3, 1, 2, Z->from_integer(-3)));
  auto w = W(Z, 4, "X(1,2;3)*X(2,-1;4)^-1*X(-3,3;2)*X(4,1;-1)");
  oracle::Dense d = oracle::Dense::identity(4);
  for (const auto& l : w.letters()) d = d * oracle::transvection(4, l.i, l.j, integer_value(l.param()));
  CHECK(oracle::from_library(phi(w)) == d);
}

TEST_CASE("word grammar") {
  auto R = parse_ring("Z/5[t]");
  auto w = W(R, 3, "X(1,2;t+1)*X(2,-1;3*t)^-1");
  REQUIRE(w.size() == 2);
  CHECK(w.letters()[1].inverse);
  CHECK(W(R, 3, w.str().c_str()) == w);
  CHECK(W(R, 3, "1").empty());
  CHECK_THROWS_AS(W(R, 3, "X(1,1;2)"), Error);
  CHECK_THROWS_AS(W(R, 3, "X(1,4;2)"), Error);
  CHECK_THROWS_AS(W(R, 3, "X(1,2;2"), Error);
}

TEST_CASE("free_reduce examples") {
  auto R = parse_ring("Z[a,b]");
  CHECK(free_reduce(W(R, 5, "X(1,2;a)*X(1,2;a)^-1")).empty());
  CHECK(free_reduce(W(R, 5, "X(1,2;a)*X(1,2;b)")) == W(R, 5, "X(1,2;a+b)"));
  CHECK(free_reduce(W(R, 5, "X(1,2;a)*X(3,4;b)")) == W(R, 5, "X(1,2;a)*X(3,4;b)"));
  CHECK(free_reduce(W(R, 5, "X(1,2;a)*X(1,2;b)"), ReduceOptions{false}).size() == 2);

  DerivationTrace tr;
  auto src = W(R, 5, "X(2,3;b)*X(1,2;a)*X(1,2;b)*X(1,2;-a-b)*X(2,3;-b)");
  auto out = free_reduce(src, {}, &tr);
  CHECK(out.empty());
  CHECK(replay(src, tr).empty());
  CHECK(literally_equal(replay(out, reverse_trace(tr)), src));
}

TEST_CASE("apply_relation examples") {
  auto R = parse_ring("Z[a,b]");
  const int n = 5;
  auto a = parse_value(R, "a"), b = parse_value(R, "b");

  TraceStep s2{"S2", 0, true, {}};
  s2.params.set("i", 1L).set("j", 2L).set("h", 4L).set("k", 5L).set("a", a).set("b", b);
  CHECK(literally_equal(apply_relation(W(R, n, "X(1,2;a)*X(4,5;b)"), s2), W(R, n, "X(4,5;b)*X(1,2;a)")));

  TraceStep s3{"S3", 0, true, {}};
  s3.params.set("i", 1L).set("j", 2L).set("k", 3L).set("a", a).set("b", b);
  auto r3 = apply_relation(W(R, n, "X(1,2;a)*X(2,3;b)"), s3);
  CHECK(literally_equal(r3, W(R, n, "X(1,3;a*b)*X(2,3;b)*X(1,2;a)")));

  TraceStep s5{"S5", 0, true, {}};
  s5.params.set("i", 1L).set("j", 2L).set("a", a).set("b", b);
  auto r5 = apply_relation(W(R, n, "X(1,2;a)*X(2,-1;b)"), s5);
  CHECK(literally_equal(r5, W(R, n, "X(1,-1;2*a*b)*X(2,-1;b)*X(1,2;a)")));

  CHECK_THROWS_AS(apply_relation(W(R, n, "X(1,2;a)*X(2,3;a)"), s3), Error);
  TraceStep bad{"S3", 0, true, {}};
  bad.params.set("i", 1L).set("j", 2L).set("k", -1L).set("a", a).set("b", b);
  CHECK_THROWS_AS(apply_relation(W(R, n, "X(1,2;a)*X(2,-1;b)"), bad), Error);
  TraceStep x0{"X0", 0, true, {}};
  CHECK_THROWS_AS(apply_relation(W(R, n, "X(1,2;a)"), x0), Error);
}

TEST_CASE("random rewrite steps preserve phi and reverse") {
  for (const char* s : {"Z", "Z/4", "Z/5[t]"}) {
    CAPTURE(s);
    auto R = parse_ring(s);
    Rng rng(41);
    for (int k = 0; k < 300; ++k) {
      const int n = 3 + static_cast<int>(rng.below(2));
      const char* ids[] = {"S0", "S1", "S2", "S3", "S4", "S5"};
      const Relation* rel = find_relation(ids[rng.below(6)]);
      SampleContext ctx{R, n, rng};
      Bindings b = rel->sample(ctx);
      Sides sd = rel->sides(b);
      auto pre = prefix_word(R, n, rng), post = prefix_word(R, n, rng);
      auto src = pre * sd.lhs * post;
      TraceStep st{rel->id, pre.size(), true, b};
      auto out = apply_relation(src, st);
      CHECK(literally_equal(out, pre * *sd.rhs * post));
      CHECK(phi(out) == phi(src));
      DerivationTrace tr{st};
      CHECK(literally_equal(replay(out, reverse_trace(tr)), src));
    }
  }
}

TEST_CASE("replay is deterministic and reversible on reduction traces") {
  auto R = parse_ring("Z/5");
  Rng rng(43);
  for (int k = 0; k < 200; ++k) {
    auto g = random_word(R, 3, rng, 4);
    auto src = g * g.inverse() * random_word(R, 3, rng, 3);
    DerivationTrace tr;
    auto out = free_reduce(src, {}, &tr);
    auto once = replay(src, tr), twice = replay(src, tr);
    CHECK(literally_equal(once, out));
    CHECK(literally_equal(once, twice));
    CHECK(phi(out) == phi(src));
    CHECK(literally_equal(replay(out, reverse_trace(tr)), src));
  }
}

TEST_CASE("x_element examples") {
  auto R = parse_ring("Z[a]");
  auto a = parse_value(R, "a");
  auto e1 = OrbitVector::e1(R, 3);
  // [e_1, e_-2 a sign(-2), 0] = X_12(a)
  auto w = x_element(e1, IndexedVector::basis(R, 3, -2) * -a, R->zero());
  CHECK(phi(w) == phi(W(R, 3, "X(1,2;a)")));
  CHECK(phi(x_element(e1, IndexedVector::zero(R, 3), a)) == phi(W(R, 3, "X(1,-1;a)")));
  CHECK(literally_equal(free_reduce(x_element(e1, IndexedVector::zero(R, 3), a)), W(R, 3, "X(1,-1;a)")));

  for (const char* s : {"Z", "Z/4", "Z/5[t]"}) {
    auto S = parse_ring(s);
    Rng rng(47);
    for (int k = 0; k < 100; ++k) {
      auto u = random_orbit(S, 3, rng);
      auto v = random_orthogonal(u.vector(), rng);
      auto c = random_scalar(S, rng);
      CHECK(phi(x_element(u, v, c)) == esd_matrix(u.vector(), v, c));
    }
  }
}

TEST_CASE("orbit vectors") {
  auto R = parse_ring("Z/5[t]");
  Rng rng(53);
  for (int k = 0; k < 100; ++k) {
    auto u = random_orbit(R, 4, rng);
    CHECK(u.vector() == phi(u.witness()).column(1));
    CHECK(symp_form(u.co_vector(), u.vector()).is_one());
    auto p = random_orbit_pair(R, 4, rng);
    CHECK(symp_form(p.first(), p.second()).is_zero());
    CHECK(p.second_orbit().vector() == p.second());
    auto r = random_scalar(R, rng);
    CHECK(p.combination(r).vector() == p.first() + p.second() * r);
  }
  for (int i : indices(3)) CHECK(OrbitVector::basis(R, 3, i).vector() == IndexedVector::basis(R, 3, i));
}

TEST_CASE("y_element examples") {
  auto R = parse_ring("Z[b]");
  auto b = parse_value(R, "b");
  auto zero = IndexedVector::zero(R, 3);
  auto e2 = IndexedVector::basis(R, 3, 2);
  auto e1 = IndexedVector::basis(R, 3, 1);
  CHECK(phi(y_element(1, e2, zero, b)) == esd_matrix(e2, zero, b));
  CHECK(phi(y_element(1, zero, zero, R->zero())).is_identity());
  CHECK(phi(y_element(3, e1, e2 * b, R->zero())) == esd_matrix(e1, e2 * b, R->zero()));
  CHECK_THROWS_AS(y_element(1, e1, zero, b), Error);

  auto S = parse_ring("Z/4");
  Rng rng(59);
  for (int k = 0; k < 100; ++k) {
    const int i = 1 + static_cast<int>(rng.below(3));
    auto u = random_vector_zero_pair(S, 3, i, rng);
    auto v = random_orthogonal(u, rng);
    auto c = random_scalar(S, rng);
    CHECK(phi(y_element(i, u, v, c)) == esd_matrix(u, v, c));
    CHECK(phi(x_general(u, v, c)) == esd_matrix(u, v, c));
  }
}
