#include <doctest.h>

#include "../support/oracle.hpp"

using namespace stsp;

namespace {

SteinbergWord W(const RingPtr& r, int n, const char* s) { return parse_word(r, n, s); }
IndexedVector e(const RingPtr& r, int n, int i) { return IndexedVector::basis(r, n, i); }

const char* const kDilationWord = "X(1,3;t/4)*X(3,2;t/4)*X(1,3;-t/4)*X(3,2;-t/4)*X(1,2;-t^2/16)";

}  // namespace

TEST_CASE("evaluate_word examples") {
  auto Zt = parse_ring("Z[t]");
  auto g = W(Zt, 3, "X(1,2;t)");
  CHECK(evaluate_word(g, parse_value(Zt, "5*t")) == W(Zt, 3, "X(1,2;5*t)"));

  auto rel = W(Zt, 3, "X(1,2;t)*X(2,3;3*t^2)*X(-1,-2;2*t)");
  auto at0 = free_reduce(evaluate_word(rel, Zt->zero()));
  CHECK(at0.empty());
  CHECK_THROWS_AS(evaluate_word(W(parse_ring("Z[x,y]"), 3, "X(1,2;x)"), parse_value(parse_ring("Z[x,y]"), "y")), Error);

  Rng rng(127);
  for (int k = 0; k < 100; ++k) {
    auto w = random_word(Zt, 3, rng, 4, false);
    auto x = random_scalar(Zt, rng);
    auto ev = evaluation_hom(Zt, x);
    CHECK(phi(evaluate_word(w, x)) == phi(w).map(ev));
    auto y = random_scalar(Zt, rng);
    CHECK(evaluate_word(evaluate_word(w, x), y) == evaluate_word(w, evaluation_hom(Zt, y)(x)));
  }
}

TEST_CASE("phi_i examples") {
  auto Zt = parse_ring("Z[t]");
  auto B = parse_ring("B(Z,2)");
  const auto& mb = as_mixed(*B);
  auto p = parse_value(Zt, "1+3*t");
  auto phi0 = phi_i(Zt, B, 0);
  CHECK(phi0(p) == mb.pair(integers()->one(), parse_value(mb.ambient(), "3*t")));
  DirectSystemMap psi{Zt, integers()->from_integer(2), 0, 1};
  CHECK(phi_i(Zt, B, 1)(psi.hom()(p)) == phi0(p));
  CHECK(phi_i(Zt, B, 1)(psi.hom()(p)) == mb.pair(integers()->one(), parse_value(mb.ambient(), "3*t")));
  CHECK(phi_i(Zt, B, 3)(parse_value(Zt, "7")) == mb.pair(integers()->from_integer(7), mb.ambient()->zero()));
  CHECK(phi_i(Zt, B, 1)(p) == mb.pair(integers()->one(), parse_value(mb.ambient(), "3/2*t")));
  CHECK_THROWS_AS((DirectSystemMap{Zt, integers()->from_integer(2), 2, 1}.hom()), Error);
  CHECK_THROWS_AS(phi_i(parse_ring("Z/5[t]"), B, 0), Error);

  auto w = W(Zt, 3, "X(1,2;1+3*t)");
  auto pushed = phi_i_push(w, B, 0);
  CHECK(pushed.ring() == B);
  CHECK(pushed.letters()[0].a == phi0(p));
}

TEST_CASE("direct system compatibility") {
  auto Zt = parse_ring("Z[t]");
  auto B = parse_ring("B(Z,2)");
  oracle::Gen g(131);
  for (int k = 0; k < 200; ++k) {
    oracle::Poly p = g.poly(3, 12);
    auto x = parse_value(Zt, p.text().c_str());
    for (unsigned i = 0; i <= 4; ++i) {
      mpq_class inv = 1;
      for (unsigned q = 0; q < i; ++q) inv /= 2;
      // phi_i(p) embedded is p(t / 2^i)
      CHECK(oracle::poly(phi_i(Zt, B, i)(x)) == p.scaled(inv));
      for (unsigned j = i; j <= 4; ++j) {
        DirectSystemMap psi{Zt, integers()->from_integer(2), i, j};
        CHECK(phi_i(Zt, B, j)(psi.hom()(x)) == phi_i(Zt, B, i)(x));
      }
    }
  }
}

TEST_CASE("tulenbaev examples") {
  for (const char* s : {"B(Z,2)", "B(Z[x],2)"}) {
    CAPTURE(s);
    auto B = parse_ring(s);
    auto Ba = localized_mixed(B);
    const auto& lb = as_localized(*Ba);
    const int n = 3;
    auto e1 = OrbitVector::e1(Ba, n);
    Rng rng(137);
    auto c = lb.fraction(random_ideal_element(B, rng), 1);
    TulenbaevGenerator x{e1, IndexedVector::zero(Ba, n), Ba->zero(), c, false};
    auto img = tulenbaev_T(x);
    CHECK(tulenbaev_diagram_holds(img));
    CHECK(phi(img.element.word).map(localization_hom(Ba)) == esd_matrix(e1.vector(), IndexedVector::zero(Ba, n), c));

    auto b = lb.fraction(random_ideal_element(B, rng), 2);
    TulenbaevGenerator y{e1, e(Ba, n, 2), b, Ba->zero(), false};
    CHECK(tulenbaev_diagram_holds(tulenbaev_T(y)));

    // supported away from +-n
    auto u = OrbitVector(random_word_avoiding(Ba, n, rng, 3, n));
    auto v = random_orthogonal(u.vector(), rng, n);
    TulenbaevGenerator z{u, v, lb.fraction(random_ideal_element(B, rng), 1), lb.fraction(random_ideal_element(B, rng), 2), false};
    auto iz = tulenbaev_T(z);
    CHECK(tulenbaev_diagram_holds(iz));
    CHECK(phi(iz.element.word).block_trivial(n));

    TulenbaevGenerator bad{e1, IndexedVector::zero(Ba, n), Ba->zero(), Ba->one(), false};
    CHECK_THROWS_AS(tulenbaev_T(bad), Error);
    TulenbaevWord word{x, y, z};
    CHECK(phi(tulenbaev_T(word)).map(localization_hom(Ba)) == phi(kappa(word)));
  }
}

TEST_CASE("dilation examples") {
  auto Zt = parse_ring("Z[t]");
  auto two = integers()->from_integer(2);
  auto g = W(Zt, 3, "X(1,2;2*t)*X(1,2;5*t)*X(1,2;-7*t)");
  DerivationTrace tr;
  CHECK(free_reduce(g, {}, &tr).empty());
  auto r = dilation_search(g, two, 16, &tr);
  REQUIRE(r.N.has_value());
  CHECK(*r.N == 0);
  CHECK(r.trace_replayed);

  auto L = parse_ring("Loc(Z,2)[t]");
  auto h = W(L, 3, kDilationWord);
  const unsigned want = oracle::min_dilation(h, 2);
  CHECK(want == 2);
  auto rh = dilation_search(h, two);
  REQUIRE(rh.N.has_value());
  CHECK(*rh.N == want);
  CHECK(rh.matrix_identity);
  CHECK(phi(*rh.dilated).is_identity());
  CHECK_FALSE(dilation_search(h, two, 1).N.has_value());

  CHECK_THROWS_AS(dilation_search(W(Zt, 3, "X(1,2;t)"), two), Error);
}

TEST_CASE("dilation is monotone") {
  auto L = parse_ring("Loc(Z,2)[t]");
  auto Zt = parse_ring("Z[t]");
  auto to_l = polynomial_hom(Zt, localization_hom(as_polynomial(*L).base()));
  auto two = integers()->from_integer(2);
  Rng rng(139);
  for (int k = 0; k < 30; ++k) {
    // conjugates of the commutator word by random words stay trivial
    auto g = random_word(Zt, 3, rng, 2, false).map(to_l);
    auto h = W(L, 3, kDilationWord);
    auto w = g * h * g.inverse();
    auto r = dilation_search(w, two);
    REQUIRE(r.N.has_value());
    CHECK(*r.N == oracle::min_dilation(w, 2));
    CHECK(r.dilated->ring() == Zt);
    auto next = evaluate_word(*r.dilated, parse_value(Zt, "2*t"));
    CHECK(phi(next).is_identity());
  }
}

TEST_CASE("comaximal glue examples") {
  auto Zt = parse_ring("Z[t]");
  auto Z = integers();
  auto a = Z->from_integer(2), b = Z->from_integer(3);
  auto triv = W(Zt, 3, "X(1,3;t)*X(3,2;t)*X(1,3;-t)*X(3,2;-t)*X(1,2;-t^2)");
  auto rep = comaximal_glue_check(triv, a, b, Z->from_integer(-1), Z->one());
  CHECK(rep.applicable());
  CHECK(rep.holds());
  CHECK(rep.conclusion);

  auto bad = comaximal_glue_check(W(Zt, 3, "X(1,2;t)"), a, b, Z->from_integer(-1), Z->one());
  CHECK_FALSE(bad.applicable());
  CHECK(bad.holds());

  CHECK_THROWS_AS(comaximal_glue_check(triv, a, Z->from_integer(4), Z->one(), Z->one()), Error);

  Rng rng(149);
  for (int k = 0; k < 20; ++k) {
    auto g = random_word(Zt, 3, rng, 3);
    auto r = comaximal_glue_check(g * triv * g.inverse(), a, b, Z->from_integer(-1), Z->one());
    CHECK(r.applicable());
    CHECK(r.conclusion);
  }
}
