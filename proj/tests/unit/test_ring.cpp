#include <doctest.h>

#include "../support/oracle.hpp"

using namespace stsp;

namespace {

RingValue val(const RingPtr& r, const char* s) { return parse_value(r, s); }

const char* const kRings[] = {"Z", "Z/4", "Z/5", "Z/7", "Z/5[t]", "Z[x,y]", "Loc(Z,2)", "Loc(Z[t],3)", "B(Z,2)",
                              "B(Z/5,2)", "Loc(B(Z,2),2)"};

}  // namespace

TEST_CASE("ring examples") {
  auto Z5 = parse_ring("Z/5");
  CHECK((val(Z5, "3") + val(Z5, "4")) == val(Z5, "2"));

  auto L = parse_ring("Loc(Z,2)");
  auto q = val(L, "1/2") + val(L, "1/4");
  CHECK(as_localized(*L).parts(q).k == 2);
  CHECK(integer_value(as_localized(*L).parts(q).num) == 3);

  auto B = parse_ring("B(Z,2)");
  const auto& mb = as_mixed(*B);
  auto Zt = mb.ambient();
  auto sum = mb.pair(val(integers(), "1"), val(Zt, "t")) + mb.pair(val(integers(), "2"), val(Zt, "3*t"));
  CHECK(sum == mb.pair(val(integers(), "3"), val(Zt, "4*t")));

  auto P = parse_ring("Z/5[t]");
  CHECK((val(P, "t+1") * val(P, "t+4")) == val(P, "t^2+4"));
  CHECK((val(P, "t+1") * P->one()) == val(P, "t+1"));
}

TEST_CASE("mixed product against the polynomial oracle") {
  auto B = parse_ring("B(Z,2)");
  const auto& mb = as_mixed(*B);
  auto amb = mb.ambient();
  auto x = mb.pair(integers()->from_integer(2), val(amb, "t"));
  auto y = mb.pair(integers()->from_integer(3), val(amb, "t"));
  // (2 + t)(3 + t) with the constant split off
  oracle::Poly p = oracle::Poly::constant(2) + oracle::Poly::monomial(1, 1);
  oracle::Poly q = oracle::Poly::constant(3) + oracle::Poly::monomial(1, 1);
  oracle::Poly pq = p * q;
  CHECK(pq.at0() == 6);
  auto prod = x * y;
  CHECK(oracle::poly(prod) == pq);
  CHECK(integer_value(mb.parts(prod).r) == 6);
  // frozen: (6, 5t + t^2)
  CHECK(prod == mb.pair(integers()->from_integer(6), val(amb, "5*t + t^2")));
  CHECK_THROWS_AS(mb.pair(integers()->one(), val(amb, "1 + t")), Error);
}

TEST_CASE("localize and lift") {
  auto Z = integers();
  auto L = parse_ring("Loc(Z,2)");
  const auto& loc = as_localized(*L);
  auto six = localize(Z->from_integer(6), L);
  CHECK(loc.parts(six).k == 0);
  CHECK(integer_value(loc.parts(six).num) == 6);
  CHECK((localize(Z->from_integer(4), L) * loc.fraction(Z->one(), 2)).is_one());

  auto [y, N] = lift_clearing_denominators(loc.fraction(Z->from_integer(3), 2));
  CHECK(integer_value(y) == 3);
  CHECK(N == 2);
  auto [y1, N1] = lift_clearing_denominators(loc.fraction(Z->from_integer(6), 1));
  CHECK(integer_value(y1) == 3);
  CHECK(N1 == 0);
  auto [y0, N0] = lift_clearing_denominators(loc.fraction(Z->zero(), 5));
  CHECK(y0.is_zero());
  CHECK(N0 == 0);

  auto Zt = parse_ring("Z[t]");
  auto Lt = localized(Zt, Zt->from_integer(2));
  auto t = localize(val(Zt, "t"), Lt);
  CHECK(as_localized(*Lt).parts(t).k == 0);
  CHECK(as_localized(*Lt).parts(t).num == val(Zt, "t"));
}

TEST_CASE("eval_poly") {
  auto Zt = parse_ring("Z[t]");
  auto id = identity_hom(integers());
  CHECK(eval_poly(val(Zt, "1+3*t"), val(Zt, "2*t"), constant_embedding(Zt)) == val(Zt, "1+6*t"));
  CHECK(eval_poly(val(Zt, "t^2"), integers()->zero(), id).is_zero());

  auto L = parse_ring("Loc(Z,2)");
  auto Lt = polynomials(L, {"t"});
  auto half_t = val(Lt, "t/2");
  auto coeff = constant_embedding(Lt).after(localization_hom(L));
  auto r = eval_poly(val(Zt, "1+3*t"), half_t, coeff);
  oracle::Poly want = oracle::Poly::constant(1) + oracle::Poly::monomial(mpq_class(3, 2), 1);
  CHECK(oracle::poly(r) == want);
  CHECK(r == val(Lt, want.text().c_str()));
}

TEST_CASE("descriptor errors") {
  CHECK_THROWS_AS(parse_ring("Loc(Z/4,2)"), Error);
  CHECK_THROWS_AS(parse_ring("Loc(Z,0)"), Error);
  CHECK_THROWS_AS(parse_ring("Z/1"), Error);
  CHECK_THROWS_AS(parse_ring("Q"), Error);
  try {
    (void)(integers()->one() + parse_ring("Z/5")->one());
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DescriptorMismatch);
  }
  CHECK(parse_ring("Z/5") == parse_ring("Z/5"));
  CHECK(parse_ring("Loc(Z,2)") == localized(integers(), integers()->from_integer(2)));
}

TEST_CASE("spec strings round-trip") {
  for (const char* s : kRings) {
    auto r = parse_ring(s);
    CHECK(r->spec() == s);
    Rng rng(fnv1a(s));
    for (int k = 0; k < 50; ++k) {
      auto x = random_scalar(r, rng);
      CHECK(parse_value(r, x.str()) == x);
    }
  }
}

TEST_CASE("ring axioms on seeded triples") {
  for (const char* s : kRings) {
    CAPTURE(s);
    auto r = parse_ring(s);
    Rng rng(17);
    int bad = 0;
    for (int k = 0; k < 500; ++k) {
      auto x = random_scalar(r, rng), y = random_scalar(r, rng), z = random_scalar(r, rng);
      bad += !((x + y) + z == x + (y + z));
      bad += !((x * y) * z == x * (y * z));
      bad += !(x * (y + z) == x * y + x * z);
      bad += !(x + y == y + x);
      bad += !(x * y == y * x);
      bad += !(x * r->one() == x);
      bad += !(x + r->zero() == x);
      bad += !((x + (-x)).is_zero());
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("localization is injective and lifts back") {
  for (const char* s : {"Loc(Z,2)", "Loc(Z,6)", "Loc(Z[t],3)", "Loc(Z/9,2)"}) {
    CAPTURE(s);
    auto L = parse_ring(s);
    const auto& loc = as_localized(*L);
    auto base = loc.base();
    Rng rng(3);
    for (int k = 0; k < 500; ++k) {
      auto x = random_scalar(base, rng), y = random_scalar(base, rng);
      // cross-multiplication: equal images iff equal in R (a is a non-zero-divisor)
      CHECK((localize(x, L) == localize(y, L)) == (x == y));
      auto e = static_cast<unsigned>(rng.below(4));
      auto [num, N] = lift_clearing_denominators(loc.fraction(x, e));
      CHECK(N <= e);
      CHECK(num * loc.element().pow(e - N) == x);
    }
  }
}

TEST_CASE("mixed product agrees with the ambient product") {
  for (const char* s : {"B(Z,2)", "B(Z/5,2)", "B(Z[x],2)", "B(Z,6)"}) {
    CAPTURE(s);
    auto B = parse_ring(s);
    const auto& mb = as_mixed(*B);
    Rng rng(5);
    for (int k = 0; k < 500; ++k) {
      auto x = random_scalar(B, rng), y = random_scalar(B, rng);
      auto xy = x * y;
      CHECK(mb.embed(xy) == mb.embed(x) * mb.embed(y));
      CHECK(mb.from_ambient(mb.embed(xy)) == xy);
    }
  }
  // brute-force over Q for B(Z,2)
  auto B = parse_ring("B(Z,2)");
  Rng rng(6);
  for (int k = 0; k < 200; ++k) {
    auto x = random_scalar(B, rng), y = random_scalar(B, rng);
    CHECK(oracle::poly(x * y) == oracle::poly(x) * oracle::poly(y));
  }
}

TEST_CASE("ev composition matches the direct system") {
  auto Zt = parse_ring("Z[t]");
  auto t = val(Zt, "t");
  oracle::Gen g(11);
  for (int k = 0; k < 200; ++k) {
    const long a = g.range(-4, 4);
    oracle::Poly p = g.poly(3, 9);
    auto x = val(Zt, p.text().c_str());
    auto at = evaluation_hom(Zt, t * a);
    auto a2t = evaluation_hom(Zt, t * (a * a));
    CHECK(at(at(x)) == a2t(x));
    CHECK(oracle::poly(a2t(x)) == p.scaled(a * a));
  }
}
