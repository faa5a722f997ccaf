// S, K, X and Y families.

#include "catalogue_util.hpp"

namespace stsp {

using namespace cat;

namespace {

RingValue sgn(const RingPtr& ring, int i) { return ring->from_integer(sign(i)); }

bool s2_ok(int i, int j, int h, int k) {
  return i != j && h != k && h != j && h != -i && k != i && k != -j;
}

bool s3_ok(int i, int j, int k) {
  return i != j && j != k && i != k && i != -j && i != -k && j != -k;
}

Bindings base(const SampleContext& c) {
  Bindings b;
  b.set("n", static_cast<long>(c.n));
  return b;
}

RingValue sc(SampleContext& c) { return random_scalar(c.ring, c.rng); }

// Either an orbit vector with its witness or a plain vector.
Binding any_anchor(SampleContext& c) {
  if (c.rng.coin()) return random_orbit(c.ring, c.n, c.rng);
  return random_vector(c.ring, c.n, c.rng);
}

void add_s(std::vector<Relation>& out) {
  {
    Relation r = rel("S0", "S", "X_ij(a) = X_{-j,-i}(-a sign(i) sign(j))");
    r.rewrite = true;
    r.shrinkable = {"a"};
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      int i = pick_index(c.rng, c.n), j = i;
      while (j == i) j = pick_index(c.rng, c.n);
      return b.set("i", static_cast<long>(i)).set("j", static_cast<long>(j)).set("a", sc(c));
    };
    r.guard = [](const Bindings& b) { need_distinct(idx(b, "i"), idx(b, "j")); };
    r.sides = [](const Bindings& b) {
      auto ring = ring_of(b);
      int n = rank_of(b), i = idx(b, "i"), j = idx(b, "j");
      const RingValue& a = b.scalar("a");
      return Sides{gen(ring, n, i, j, a), gen(ring, n, -j, -i, -a * sign(i) * sign(j)), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("S1", "S", "X_ij(a) X_ij(b) = X_ij(a+b)");
    r.rewrite = true;
    r.shrinkable = {"a", "b"};
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      int i = pick_index(c.rng, c.n), j = i;
      while (j == i) j = pick_index(c.rng, c.n);
      return b.set("i", static_cast<long>(i)).set("j", static_cast<long>(j)).set("a", sc(c)).set("b", sc(c));
    };
    r.guard = [](const Bindings& b) { need_distinct(idx(b, "i"), idx(b, "j")); };
    r.sides = [](const Bindings& b) {
      auto ring = ring_of(b);
      int n = rank_of(b), i = idx(b, "i"), j = idx(b, "j");
      const RingValue &x = b.scalar("a"), &y = b.scalar("b");
      return Sides{gen(ring, n, i, j, x) * gen(ring, n, i, j, y), gen(ring, n, i, j, x + y), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("S2", "S", "[X_ij(a), X_hk(b)] = 1 for h != j,-i and k != i,-j");
    r.rewrite = true;
    r.shrinkable = {"a", "b"};
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      int i, j, h, k;
      do {
        i = pick_index(c.rng, c.n);
        j = pick_index(c.rng, c.n);
        h = pick_index(c.rng, c.n);
        k = pick_index(c.rng, c.n);
      } while (!s2_ok(i, j, h, k));
      b.set("i", static_cast<long>(i)).set("j", static_cast<long>(j));
      b.set("h", static_cast<long>(h)).set("k", static_cast<long>(k));
      return b.set("a", sc(c)).set("b", sc(c));
    };
    r.guard = [](const Bindings& b) {
      guard_that(s2_ok(idx(b, "i"), idx(b, "j"), idx(b, "h"), idx(b, "k")), "S2 index condition");
    };
    r.sides = [](const Bindings& b) {
      auto ring = ring_of(b);
      int n = rank_of(b), i = idx(b, "i"), j = idx(b, "j"), h = idx(b, "h"), k = idx(b, "k");
      auto x = gen(ring, n, i, j, b.scalar("a"));
      auto y = gen(ring, n, h, k, b.scalar("b"));
      return Sides{x * y, y * x, {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("S3", "S", "[X_ij(a), X_jk(b)] = X_ik(ab) for i != -j,-k and j != -k");
    r.rewrite = true;
    r.shrinkable = {"a", "b"};
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      int i, j, k;
      do {
        i = pick_index(c.rng, c.n);
        j = pick_index(c.rng, c.n);
        k = pick_index(c.rng, c.n);
      } while (!s3_ok(i, j, k));
      b.set("i", static_cast<long>(i)).set("j", static_cast<long>(j)).set("k", static_cast<long>(k));
      return b.set("a", sc(c)).set("b", sc(c));
    };
    r.guard = [](const Bindings& b) { guard_that(s3_ok(idx(b, "i"), idx(b, "j"), idx(b, "k")), "S3 index condition"); };
    r.sides = [](const Bindings& b) {
      auto ring = ring_of(b);
      int n = rank_of(b), i = idx(b, "i"), j = idx(b, "j"), k = idx(b, "k");
      const RingValue &x = b.scalar("a"), &y = b.scalar("b");
      auto gx = gen(ring, n, i, j, x);
      auto gy = gen(ring, n, j, k, y);
      // x y = [x,y] y x
      return Sides{gx * gy, gen(ring, n, i, k, x * y) * gy * gx, {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("S4", "S", "[X_{i,-i}(a), X_{-i,j}(b)] = X_ij(ab sign i) X_{-j,j}(-ab^2) for j != +-i");
    r.rewrite = true;
    r.shrinkable = {"a", "b"};
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      int i = pick_index(c.rng, c.n);
      int j = pick_other(c.rng, c.n, i);
      return b.set("i", static_cast<long>(i)).set("j", static_cast<long>(j)).set("a", sc(c)).set("b", sc(c));
    };
    r.guard = [](const Bindings& b) {
      int i = idx(b, "i"), j = idx(b, "j");
      guard_that(j != i && j != -i, "S4 needs j != +-i");
    };
    r.sides = [](const Bindings& b) {
      auto ring = ring_of(b);
      int n = rank_of(b), i = idx(b, "i"), j = idx(b, "j");
      const RingValue &x = b.scalar("a"), &y = b.scalar("b");
      auto gx = gen(ring, n, i, -i, x);
      auto gy = gen(ring, n, -i, j, y);
      auto rhs = gen(ring, n, i, j, x * y * sign(i)) * gen(ring, n, -j, j, -(x * y * y)) * gy * gx;
      return Sides{gx * gy, rhs, {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("S5", "S", "[X_ij(a), X_{j,-i}(b)] = X_{i,-i}(2ab sign i) for j != +-i");
    r.rewrite = true;
    r.shrinkable = {"a", "b"};
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      int i = pick_index(c.rng, c.n);
      int j = pick_other(c.rng, c.n, i);
      return b.set("i", static_cast<long>(i)).set("j", static_cast<long>(j)).set("a", sc(c)).set("b", sc(c));
    };
    r.guard = [](const Bindings& b) {
      int i = idx(b, "i"), j = idx(b, "j");
      guard_that(j != i && j != -i, "S5 needs j != +-i");
    };
    r.sides = [](const Bindings& b) {
      auto ring = ring_of(b);
      int n = rank_of(b), i = idx(b, "i"), j = idx(b, "j");
      const RingValue &x = b.scalar("a"), &y = b.scalar("b");
      auto gx = gen(ring, n, i, j, x);
      auto gy = gen(ring, n, j, -i, y);
      return Sides{gx * gy, gen(ring, n, i, -i, x * y * (2 * sign(i))) * gy * gx, {}};
    };
    out.push_back(r);
  }
}

// ---------------------------------------------------------------------------
// K: the generators [u, v, a] = X(u, v, a) with u in the orbit of e_1.

SteinbergWord K(const OrbitVector& u, const IndexedVector& v, const RingValue& a) { return x_element(u, v, a); }

void add_k(std::vector<Relation>& out) {
  {
    Relation r = rel("K1", "K", "[u,v1,a1][u,v2,a2] = [u, v1+v2, a1+a2+<v1,v2>]");
    r.shrinkable = {"a1", "a2"};
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      auto u = random_orbit(c.ring, c.n, c.rng);
      b.set("u", u).set("v1", random_orthogonal(u.vector(), c.rng)).set("v2", random_orthogonal(u.vector(), c.rng));
      return b.set("a1", sc(c)).set("a2", sc(c));
    };
    r.guard = [](const Bindings& b) {
      need_orth(b.vec("u"), b.vec("v1"), "u, v1");
      need_orth(b.vec("u"), b.vec("v2"), "u, v2");
    };
    r.sides = [](const Bindings& b) {
      const auto& u = b.orbit("u");
      auto v1 = b.vec("v1"), v2 = b.vec("v2");
      const RingValue &a1 = b.scalar("a1"), &a2 = b.scalar("a2");
      return Sides{K(u, v1, a1) * K(u, v2, a2), K(u, v1 + v2, a1 + a2 + symp_form(v1, v2)), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("K2", "K", "[u1, u2 b, 0] = [u2, u1 b, 0] for <u1,u2> = 0");
    r.shrinkable = {"b"};
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      return b.set("p", random_orbit_pair(c.ring, c.n, c.rng)).set("b", sc(c));
    };
    r.sides = [](const Bindings& b) {
      const auto& p = b.pair("p");
      const RingValue& s = b.scalar("b");
      auto zero = p.first().ring()->zero();
      return Sides{K(p.first_orbit(), p.second() * s, zero), K(p.second_orbit(), p.first() * s, zero), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("K3", "K", "g [u,v,a] g^-1 = [T u, T v, a] with g = [u',v',a'], T = phi(g)");
    r.shrinkable = {"a", "a'"};
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      auto u = random_orbit(c.ring, c.n, c.rng);
      auto up = random_orbit(c.ring, c.n, c.rng);
      b.set("u", u).set("v", random_orthogonal(u.vector(), c.rng)).set("a", sc(c));
      return b.set("u'", up).set("v'", random_orthogonal(up.vector(), c.rng)).set("a'", sc(c));
    };
    r.guard = [](const Bindings& b) {
      need_orth(b.vec("u"), b.vec("v"), "u, v");
      need_orth(b.vec("u'"), b.vec("v'"), "u', v'");
    };
    r.sides = [](const Bindings& b) {
      auto g = K(b.orbit("u'"), b.vec("v'"), b.scalar("a'"));
      auto t = phi(g);
      auto lhs = act(g, K(b.orbit("u"), b.vec("v"), b.scalar("a")));
      // right side through the witness-free construction
      return Sides{lhs, x_general(t * b.vec("u"), t * b.vec("v"), b.scalar("a")), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("K4", "K", "[u, u a, 0] = [u, 0, 2a]");
    r.shrinkable = {"a"};
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      return b.set("u", random_orbit(c.ring, c.n, c.rng)).set("a", sc(c));
    };
    r.sides = [](const Bindings& b) {
      const auto& u = b.orbit("u");
      const RingValue& a = b.scalar("a");
      auto ring = a.ring();
      return Sides{K(u, u.vector() * a, ring->zero()), K(u, zero_vec(ring, u.rank()), a * 2), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("K5", "K", "[u b, 0, a] = [u, 0, a b^2]");
    r.shrinkable = {"a", "b"};
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      return b.set("u", random_orbit(c.ring, c.n, c.rng)).set("a", sc(c)).set("b", sc(c));
    };
    r.sides = [](const Bindings& b) {
      const auto& u = b.orbit("u");
      const RingValue &a = b.scalar("a"), &s = b.scalar("b");
      auto z = zero_vec(a.ring(), u.rank());
      return Sides{x_general(u.vector() * s, z, a), K(u, z, a * s * s), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("K6", "K", "[u+v, 0, a] = [u,0,a][v,0,a][v, u a, 0] for <u,v> = 0");
    r.shrinkable = {"a"};
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      return b.set("p", random_orbit_pair(c.ring, c.n, c.rng)).set("a", sc(c));
    };
    r.sides = [](const Bindings& b) {
      const auto& p = b.pair("p");
      const RingValue& a = b.scalar("a");
      auto ring = a.ring();
      auto z = zero_vec(ring, p.witness().rank());
      auto lhs = K(p.combination(ring->one()), z, a);
      auto rhs = K(p.first_orbit(), z, a) * K(p.second_orbit(), z, a) * K(p.second_orbit(), p.first() * a, ring->zero());
      return Sides{lhs, rhs, {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("K7", "K", "[u + w r, 0, a] = [u,0,a][w,0,a r^2][u, w a r, 0] for <u,w> = 0");
    r.shrinkable = {"a", "r"};
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      return b.set("p", random_orbit_pair(c.ring, c.n, c.rng)).set("a", sc(c)).set("r", sc(c));
    };
    r.sides = [](const Bindings& b) {
      const auto& p = b.pair("p");
      const RingValue &a = b.scalar("a"), &s = b.scalar("r");
      auto ring = a.ring();
      auto z = zero_vec(ring, p.witness().rank());
      auto lhs = K(p.combination(s), z, a);
      auto rhs = K(p.first_orbit(), z, a) * K(p.second_orbit(), z, a * s * s) *
                 K(p.first_orbit(), p.second() * (a * s), ring->zero());
      return Sides{lhs, rhs, {}};
    };
    out.push_back(r);
  }
}

// ---------------------------------------------------------------------------
// X: X(u, v, a) for general u.  Samplers mix witnessed and plain vectors.

// u with a zero pair and v orthogonal, or v (and w) with a zero pair.
Bindings split_case(SampleContext& c, bool with_w) {
  Bindings b = base(c);
  int i = pick_index(c.rng, c.n);
  b.set("i", static_cast<long>(i));
  if (c.rng.coin()) {
    auto u = random_vector_zero_pair(c.ring, c.n, i, c.rng);
    b.set("u", u).set("v", random_orthogonal(u, c.rng));
    if (with_w) b.set("w", random_orthogonal(u, c.rng));
  } else {
    auto u = random_vector(c.ring, c.n, c.rng);
    b.set("u", u).set("v", random_orthogonal(u, c.rng, i));
    if (with_w) b.set("w", random_orthogonal(u, c.rng, i));
  }
  return b;
}

void split_guard(const Bindings& b, bool with_w) {
  int i = idx(b, "i");
  auto u = b.vec("u"), v = b.vec("v");
  need_orth(u, v, "u, v");
  bool ok = u.zero_pair(i) || (v.zero_pair(i) && (!with_w || b.vec("w").zero_pair(i)));
  if (with_w) need_orth(u, b.vec("w"), "u, w");
  guard_that(ok, "needs u or the other vectors to vanish on the pair i");
}

void add_x(std::vector<Relation>& out) {
  {
    Relation r = rel("X0", "X", "phi(X(u,v,a)) = T(u,v,a)");
    r.shrinkable = {"a"};
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      b.set("u", any_anchor(c));
      return b.set("v", random_orthogonal(b.vec("u"), c.rng)).set("a", sc(c));
    };
    r.guard = [](const Bindings& b) { need_orth(b.vec("u"), b.vec("v"), "u, v"); };
    r.sides = [](const Bindings& b) {
      return Sides{x_of(b.anchor("u"), b.vec("v"), b.scalar("a")), {}, esd_matrix(b.vec("u"), b.vec("v"), b.scalar("a"))};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("X1", "X", "g X(u,v,a) g^-1 = X(phi(g)u, phi(g)v, a)");
    r.shrinkable = {"a"};
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      b.set("u", any_anchor(c));
      b.set("v", random_orthogonal(b.vec("u"), c.rng)).set("a", sc(c));
      return b.set("g", random_word(c.ring, c.n, c.rng, 3));
    };
    r.guard = [](const Bindings& b) { need_orth(b.vec("u"), b.vec("v"), "u, v"); };
    r.sides = [](const Bindings& b) {
      const auto& g = b.word("g");
      auto t = phi(g);
      return Sides{act(g, x_of(b.anchor("u"), b.vec("v"), b.scalar("a"))),
                   x_general(t * b.vec("u"), t * b.vec("v"), b.scalar("a")), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("X2", "X", "X(u b, 0, a) = X(u, 0, b^2 a)");
    r.shrinkable = {"a", "b"};
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      return b.set("u", any_anchor(c)).set("a", sc(c)).set("b", sc(c));
    };
    r.sides = [](const Bindings& b) {
      const RingValue &a = b.scalar("a"), &s = b.scalar("b");
      auto z = zero_vec(a.ring(), rank_of(b));
      return Sides{x_general(b.vec("u") * s, z, a), x_of(b.anchor("u"), z, s * s * a), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("X3", "X", "X(u,0,a) X(u,0,b) = X(u,0,a+b)");
    r.shrinkable = {"a", "b"};
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      return b.set("u", any_anchor(c)).set("a", sc(c)).set("b", sc(c));
    };
    r.sides = [](const Bindings& b) {
      const RingValue &a = b.scalar("a"), &s = b.scalar("b");
      auto z = zero_vec(a.ring(), rank_of(b));
      auto u = b.anchor("u");
      return Sides{x_of(u, z, a) * x_of(u, z, s), x_of(u, z, a + s), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("X4", "X", "X(u,v,0) = X(v,u,0)");
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      b.set("u", any_anchor(c));
      return b.set("v", random_orthogonal(b.vec("u"), c.rng));
    };
    r.guard = [](const Bindings& b) { need_orth(b.vec("u"), b.vec("v"), "u, v"); };
    r.sides = [](const Bindings& b) {
      auto u = b.vec("u"), v = b.vec("v");
      auto zero = u.ring()->zero();
      return Sides{x_of(b.anchor("u"), v, zero), x_general(v, u, zero), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("X5", "X", "X(u a, u b, 0) = X(u, 0, 2ab)");
    r.shrinkable = {"a", "b"};
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      return b.set("u", any_anchor(c)).set("a", sc(c)).set("b", sc(c));
    };
    r.sides = [](const Bindings& b) {
      const RingValue &a = b.scalar("a"), &s = b.scalar("b");
      auto u = b.vec("u");
      auto zero = a.ring()->zero();
      return Sides{x_general(u * a, u * s, zero), x_of(b.anchor("u"), zero_vec(a.ring(), rank_of(b)), a * s * 2), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("X6", "X", "X(u+v,0,1) = X(u,0,1) X(v,0,1) X(u,v,0) for <u,v> = 0");
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      b.set("u", any_anchor(c));
      return b.set("v", random_orthogonal(b.vec("u"), c.rng));
    };
    r.guard = [](const Bindings& b) { need_orth(b.vec("u"), b.vec("v"), "u, v"); };
    r.sides = [](const Bindings& b) {
      auto u = b.vec("u"), v = b.vec("v");
      auto ring = u.ring();
      auto z = zero_vec(ring, rank_of(b));
      auto rhs = x_of(b.anchor("u"), z, ring->one()) * x_general(v, z, ring->one()) * x_of(b.anchor("u"), v, ring->zero());
      return Sides{x_general(u + v, z, ring->one()), rhs, {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("X7", "X", "X(u,v,a) = X(u,v,0) X(u,0,a)");
    r.shrinkable = {"a"};
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      b.set("u", any_anchor(c));
      return b.set("v", random_orthogonal(b.vec("u"), c.rng)).set("a", sc(c));
    };
    r.guard = [](const Bindings& b) { need_orth(b.vec("u"), b.vec("v"), "u, v"); };
    r.sides = [](const Bindings& b) {
      auto u = b.anchor("u");
      auto v = b.vec("v");
      const RingValue& a = b.scalar("a");
      return Sides{x_of(u, v, a), x_of(u, v, a.ring()->zero()) * x_of(u, zero_vec(a.ring(), rank_of(b)), a), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("X8", "X", "X(u+vr,0,a) = X(u,0,a) X(v,0,r^2 a) X(u, v r a, 0)");
    r.shrinkable = {"a", "r"};
    r.sample = [](SampleContext& c) {
      Bindings b = split_case(c, false);
      return b.set("a", sc(c)).set("r", sc(c));
    };
    r.guard = [](const Bindings& b) { split_guard(b, false); };
    r.sides = [](const Bindings& b) {
      auto u = b.vec("u"), v = b.vec("v");
      const RingValue &a = b.scalar("a"), &s = b.scalar("r");
      auto z = zero_vec(a.ring(), rank_of(b));
      auto rhs = x_general(u, z, a) * x_general(v, z, s * s * a) * x_general(u, v * (s * a), a.ring()->zero());
      return Sides{x_general(u + v * s, z, a), rhs, {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("X9", "X", "X(u, v a, 0) = X(v, u a, 0)");
    r.shrinkable = {"a"};
    r.sample = [](SampleContext& c) {
      Bindings b = split_case(c, false);
      return b.set("a", sc(c));
    };
    r.guard = [](const Bindings& b) { split_guard(b, false); };
    r.sides = [](const Bindings& b) {
      auto u = b.vec("u"), v = b.vec("v");
      const RingValue& a = b.scalar("a");
      auto zero = a.ring()->zero();
      return Sides{x_general(u, v * a, zero), x_general(v, u * a, zero), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("X10", "X", "X(u,v,a) X(u,w,b) = X(u, v+w, a+b+<v,w>)");
    r.shrinkable = {"a", "b"};
    r.sample = [](SampleContext& c) {
      Bindings b = split_case(c, true);
      return b.set("a", sc(c)).set("b", sc(c));
    };
    r.guard = [](const Bindings& b) { split_guard(b, true); };
    r.sides = [](const Bindings& b) {
      auto u = b.vec("u"), v = b.vec("v"), w = b.vec("w");
      const RingValue &a = b.scalar("a"), &s = b.scalar("b");
      return Sides{x_general(u, v, a) * x_general(u, w, s), x_general(u, v + w, a + s + symp_form(v, w)), {}};
    };
    out.push_back(r);
  }
}

// ---------------------------------------------------------------------------
// Y: Y_(i)(u, v, a) for u with a zero pair at i.

// Y(e_i, w, a) through a recursive Y_(k), k != +-i.
SteinbergWord y_basis(int i, int k, const IndexedVector& w, const RingValue& a) {
  return y_element(k, IndexedVector::basis(w.ring(), w.rank(), i), w, a);
}

Bindings zero_pair_case(SampleContext& c) {
  Bindings b = base(c);
  int i = pick_index(c.rng, c.n);
  auto u = random_vector_zero_pair(c.ring, c.n, i, c.rng);
  b.set("i", static_cast<long>(i)).set("k", static_cast<long>(pick_other(c.rng, c.n, i)));
  return b.set("u", u).set("v", random_orthogonal(u, c.rng));
}

void zero_pair_guard(const Bindings& b) {
  need_zero_pair(b.vec("u"), idx(b, "i"), "u");
  need_orth(b.vec("u"), b.vec("v"), "u, v");
  if (b.has("k")) guard_that(idx(b, "k") != idx(b, "i") && idx(b, "k") != -idx(b, "i"), "k != +-i");
}

void add_y(std::vector<Relation>& out) {
  {
    Relation r = rel("Y0", "Y", "phi(Y_(i)(u,v,a)) = T(u,v,a)");
    r.shrinkable = {"a"};
    r.sample = [](SampleContext& c) { return zero_pair_case(c).set("a", sc(c)); };
    r.guard = zero_pair_guard;
    r.sides = [](const Bindings& b) {
      return Sides{y_element(idx(b, "i"), b.vec("u"), b.vec("v"), b.scalar("a")), {},
                   esd_matrix(b.vec("u"), b.vec("v"), b.scalar("a"))};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("Y1", "Y", "Y_(i)(u,v,a) = Y_(j)(u,v,a) when u vanishes on both pairs");
    r.shrinkable = {"a"};
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      int i = pick_index(c.rng, c.n);
      int j = pick_other(c.rng, c.n, i);
      auto u = random_vector(c.ring, c.n, c.rng).without_pair(i).without_pair(j);
      b.set("i", static_cast<long>(i)).set("j", static_cast<long>(j)).set("u", u);
      return b.set("v", random_orthogonal(u, c.rng)).set("a", sc(c));
    };
    r.guard = [](const Bindings& b) {
      zero_pair_guard(b);
      need_zero_pair(b.vec("u"), idx(b, "j"), "u");
    };
    r.sides = [](const Bindings& b) {
      auto u = b.vec("u"), v = b.vec("v");
      const RingValue& a = b.scalar("a");
      return Sides{y_element(idx(b, "i"), u, v, a), y_element(idx(b, "j"), u, v, a), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("Y2", "Y", "Y(e_i,w,a) Y(e_i,w',a') = Y(e_i, w+w', a+a'+<w,w'>)");
    r.shrinkable = {"a", "a'"};
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      int i = pick_index(c.rng, c.n);
      auto e = IndexedVector::basis(c.ring, c.n, i);
      b.set("i", static_cast<long>(i)).set("k", static_cast<long>(pick_other(c.rng, c.n, i)));
      b.set("w", random_orthogonal(e, c.rng)).set("w'", random_orthogonal(e, c.rng));
      return b.set("a", sc(c)).set("a'", sc(c));
    };
    r.guard = [](const Bindings& b) {
      int i = idx(b, "i");
      guard_that(b.vec("w")[-i].is_zero() && b.vec("w'")[-i].is_zero(), "w, w' orthogonal to e_i");
    };
    r.sides = [](const Bindings& b) {
      int i = idx(b, "i"), k = idx(b, "k");
      auto w = b.vec("w"), w2 = b.vec("w'");
      const RingValue &a = b.scalar("a"), &a2 = b.scalar("a'");
      return Sides{y_basis(i, k, w, a) * y_basis(i, k, w2, a2), y_basis(i, k, w + w2, a + a2 + symp_form(w, w2)), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("Y3", "Y", "Y(e_i,w,a) = X(e_i,w,a)");
    r.shrinkable = {"a"};
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      int i = pick_index(c.rng, c.n);
      b.set("i", static_cast<long>(i)).set("k", static_cast<long>(pick_other(c.rng, c.n, i)));
      return b.set("w", random_orthogonal(IndexedVector::basis(c.ring, c.n, i), c.rng)).set("a", sc(c));
    };
    r.guard = [](const Bindings& b) { guard_that(b.vec("w")[-idx(b, "i")].is_zero(), "w orthogonal to e_i"); };
    r.sides = [](const Bindings& b) {
      int i = idx(b, "i");
      auto w = b.vec("w");
      const RingValue& a = b.scalar("a");
      return Sides{y_basis(i, idx(b, "k"), w, a), basis_x(a.ring(), rank_of(b), i, w, a), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("Y4", "Y", "Y_(i)(u,v,a) = [Y(e_i,u,0), Y(e_-i, v sign i, a)] Y(e_-i, u a sign(-i), 0), v_i = v_-i = 0");
    r.shrinkable = {"a"};
    r.sample = [](SampleContext& c) {
      Bindings b = zero_pair_case(c);
      int i = idx(b, "i");
      b.set("v", random_orthogonal(b.vec("u"), c.rng, i));
      return b.set("a", sc(c));
    };
    r.guard = [](const Bindings& b) {
      zero_pair_guard(b);
      need_zero_pair(b.vec("v"), idx(b, "i"), "v");
    };
    r.sides = [](const Bindings& b) {
      int i = idx(b, "i"), k = idx(b, "k");
      auto u = b.vec("u"), v = b.vec("v");
      const RingValue& a = b.scalar("a");
      auto ring = a.ring();
      auto rhs = commutator(y_basis(i, k, u, ring->zero()), y_basis(-i, k, v * sgn(ring, i), a)) *
                 y_basis(-i, k, u * (a * sign(-i)), ring->zero());
      return Sides{y_element(i, u, v, a), rhs, {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("Y5", "Y", "Y_(i)(u,v,a) = Y_(i)(u,v',a - v_i v_-i sign i) Y(e_i, u v_i, 0) Y(e_-i, u v_-i, 0)");
    r.shrinkable = {"a"};
    r.sample = [](SampleContext& c) { return zero_pair_case(c).set("a", sc(c)); };
    r.guard = zero_pair_guard;
    r.sides = [](const Bindings& b) {
      int i = idx(b, "i"), k = idx(b, "k");
      auto u = b.vec("u"), v = b.vec("v");
      const RingValue& a = b.scalar("a");
      auto zero = a.ring()->zero();
      RingValue a2 = a - v[i] * v[-i] * sign(i);
      auto rhs = y_element(i, u, v.without_pair(i), a2) * y_basis(i, k, u * v[i], zero) * y_basis(-i, k, u * v[-i], zero);
      return Sides{y_element(i, u, v, a), rhs, {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("Y6", "Y", "X(q+q',0,a) = Y_(i)(q,0,a) Y(q',0,a) Y(q',q a,0), q' on the pair i");
    r.shrinkable = {"a"};
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      int i = pick_index(c.rng, c.n);
      b.set("i", static_cast<long>(i)).set("k", static_cast<long>(pick_other(c.rng, c.n, i)));
      return b.set("u", random_orbit(c.ring, c.n, c.rng)).set("a", sc(c));
    };
    r.sides = [](const Bindings& b) {
      int i = idx(b, "i"), k = idx(b, "k");
      const auto& u = b.orbit("u");
      const RingValue& a = b.scalar("a");
      auto z = zero_vec(a.ring(), rank_of(b));
      auto q = u.vector().without_pair(i), qp = u.vector().only_pair(i);
      auto rhs = y_element(i, q, z, a) * y_element(k, qp, z, a) * y_element(k, qp, q * a, a.ring()->zero());
      return Sides{x_element(u, z, a), rhs, {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("Y7", "Y", "Y_(i)(r,s,0) Y(r',s,0) = Y_(i)(r+r',s,0), r' on pair j, s on pair i");
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      int i = pick_index(c.rng, c.n);
      int j = pick_other(c.rng, c.n, i);
      auto x = random_vector(c.ring, c.n, c.rng);
      b.set("i", static_cast<long>(i)).set("j", static_cast<long>(j));
      b.set("r", x.without_pair(i).without_pair(j));
      b.set("r'", random_vector(c.ring, c.n, c.rng).only_pair(j));
      return b.set("s", random_vector(c.ring, c.n, c.rng).only_pair(i));
    };
    r.guard = [](const Bindings& b) {
      int i = idx(b, "i"), j = idx(b, "j");
      guard_that(j != i && j != -i, "j != +-i");
      need_zero_pair(b.vec("r"), i, "r");
      need_zero_pair(b.vec("r"), j, "r");
      guard_that(b.vec("r'") == b.vec("r'").only_pair(j), "r' lives on the pair j");
      guard_that(b.vec("s") == b.vec("s").only_pair(i), "s lives on the pair i");
    };
    r.sides = [](const Bindings& b) {
      int i = idx(b, "i");
      auto x = b.vec("r"), xp = b.vec("r'"), s = b.vec("s");
      auto zero = s.ring()->zero();
      return Sides{y_element(i, x, s, zero) * y_element(i, xp, s, zero), y_element(i, x + xp, s, zero), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("Y8", "Y", "Y_(i)(u,v,a+b) = Y_(i)(u,v,a) Y_(i)(u,0,b)");
    r.shrinkable = {"a", "b"};
    r.sample = [](SampleContext& c) { return zero_pair_case(c).set("a", sc(c)).set("b", sc(c)); };
    r.guard = zero_pair_guard;
    r.sides = [](const Bindings& b) {
      int i = idx(b, "i");
      auto u = b.vec("u"), v = b.vec("v");
      const RingValue &a = b.scalar("a"), &s = b.scalar("b");
      return Sides{y_element(i, u, v, a + s), y_element(i, u, v, a) * y_element(i, u, zero_vec(a.ring(), u.rank()), s), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("Y9", "Y", "Y_(i)(u,v,a) = Y_(i)(u, v', a) Y_(i)(u, v - v', 0), v' = v off the pair i");
    r.shrinkable = {"a"};
    r.sample = [](SampleContext& c) { return zero_pair_case(c).set("a", sc(c)); };
    r.guard = zero_pair_guard;
    r.sides = [](const Bindings& b) {
      int i = idx(b, "i");
      auto u = b.vec("u"), v = b.vec("v");
      const RingValue& a = b.scalar("a");
      return Sides{y_element(i, u, v, a), y_element(i, u, v.without_pair(i), a) * y_element(i, u, v.only_pair(i), a.ring()->zero()), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("Y10", "Y", "X(u+v,0,a) = X(u,0,a) X(v,0,a) Y_(i)(u, v a, 0)");
    r.shrinkable = {"a"};
    r.sample = [](SampleContext& c) { return zero_pair_case(c).set("a", sc(c)); };
    r.guard = zero_pair_guard;
    r.sides = [](const Bindings& b) {
      int i = idx(b, "i");
      auto u = b.vec("u"), v = b.vec("v");
      const RingValue& a = b.scalar("a");
      auto z = zero_vec(a.ring(), u.rank());
      auto rhs = y_element(i, u, z, a) * x_general(v, z, a) * y_element(i, u, v * a, a.ring()->zero());
      return Sides{x_general(u + v, z, a), rhs, {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("Y11", "Y", "Y_(i)(u, v a, 0) = Y_(i)(v, u a, 0), v_i = v_-i = 0");
    r.shrinkable = {"a"};
    r.sample = [](SampleContext& c) {
      Bindings b = zero_pair_case(c);
      b.set("v", random_orthogonal(b.vec("u"), c.rng, idx(b, "i")));
      return b.set("a", sc(c));
    };
    r.guard = [](const Bindings& b) {
      zero_pair_guard(b);
      need_zero_pair(b.vec("v"), idx(b, "i"), "v");
    };
    r.sides = [](const Bindings& b) {
      int i = idx(b, "i");
      auto u = b.vec("u"), v = b.vec("v");
      const RingValue& a = b.scalar("a");
      auto zero = a.ring()->zero();
      return Sides{y_element(i, u, v * a, zero), y_element(i, v, u * a, zero), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("Y12", "Y", "Y_(i)(u,v,a) = X(u,v,a)");
    r.shrinkable = {"a"};
    r.sample = [](SampleContext& c) {
      Bindings b = base(c);
      int i = pick_other(c.rng, c.n, 1);
      OrbitVector u(random_word_avoiding(c.ring, c.n, c.rng, 3, i));
      b.set("i", static_cast<long>(i)).set("u", u);
      return b.set("v", random_orthogonal(u.vector(), c.rng)).set("a", sc(c));
    };
    r.guard = zero_pair_guard;
    r.sides = [](const Bindings& b) {
      auto v = b.vec("v");
      const RingValue& a = b.scalar("a");
      return Sides{y_element(idx(b, "i"), b.vec("u"), v, a), x_element(b.orbit("u"), v, a), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("Y13", "Y", "Y_(i)(u,v,0) Y_(i)(u,w,0) = Y_(i)(u, v+w, <v,w>)");
    r.sample = [](SampleContext& c) {
      Bindings b = zero_pair_case(c);
      return b.set("w", random_orthogonal(b.vec("u"), c.rng));
    };
    r.guard = [](const Bindings& b) {
      zero_pair_guard(b);
      need_orth(b.vec("u"), b.vec("w"), "u, w");
    };
    r.sides = [](const Bindings& b) {
      int i = idx(b, "i");
      auto u = b.vec("u"), v = b.vec("v"), w = b.vec("w");
      auto zero = u.ring()->zero();
      return Sides{y_element(i, u, v, zero) * y_element(i, u, w, zero), y_element(i, u, v + w, symp_form(v, w)), {}};
    };
    out.push_back(r);
  }
}

}  // namespace

void add_steinberg_relations(std::vector<Relation>& out) {
  add_s(out);
  add_k(out);
  add_x(out);
  add_y(out);
}

}  // namespace stsp
