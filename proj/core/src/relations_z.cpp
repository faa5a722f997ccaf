// Z and L families: properties of Z(u,v,b) over B(R, a) and the lemmas on
// Z(u; v_1..v_N) and Z^A(u, v) over R.

#include <algorithm>
#include <array>

#include "catalogue_util.hpp"
#include "stsp/z_calculus.hpp"

namespace stsp {

using namespace cat;

namespace {

const ScalarShape kShape{6, 1, 2, 1};

// ---------------------------------------------------------------------------
// Z: frames over B = B(R, a0)

RingPtr z_ring(const RingPtr& base) {
  return mixed(base, default_localizing_element(base), fresh_variable(base, "t"));
}

RingValue a_of(const RingPtr& b_ring) {
  const auto& m = as_mixed(*b_ring);
  return m.pair(m.element(), m.ambient()->zero());
}

// u = M e_1 a^K1, w = -M e_-1 a^(N-K1); v = M e_2 a^K2, z = -M e_-2 a^(N-K2);
// x = M e_3 a^N, y = M e_-3.  <w,u> = <z,v> = <x,y> = a^N, pairs mutually orthogonal.
struct Frame {
  RingValue a;
  unsigned N = 0;
  IndexedVector u, w, v, z, x, y;
  Anchor ua, va;
  OrbitPair pair;
};

Frame frame(const Bindings& b) {
  const auto& M = b.word("M");
  const RingPtr& ring = M.ring();
  Frame f;
  f.a = a_of(ring);
  f.N = static_cast<unsigned>(b.index("N"));
  const unsigned k1 = static_cast<unsigned>(b.index("K1"));
  const unsigned k2 = static_cast<unsigned>(b.index("K2"));
  guard_that(k1 <= f.N && k2 <= f.N, "K1, K2 <= N");
  const SympMatrix m = phi(M);
  f.u = m.column(1) * f.a.pow(k1);
  f.w = -m.column(-1) * f.a.pow(f.N - k1);
  f.v = m.column(2) * f.a.pow(k2);
  f.z = -m.column(-2) * f.a.pow(f.N - k2);
  f.x = m.column(3) * f.a.pow(f.N);
  f.y = m.column(-3);
  f.pair = OrbitPair(M);
  f.ua = k1 == 0 ? Anchor(f.pair.first_orbit()) : Anchor(f.u);
  f.va = k2 == 0 ? Anchor(f.pair.second_orbit()) : Anchor(f.v);
  return f;
}

SteinbergWord Zw(const Frame& f, const Anchor& u, const IndexedVector& v, const RingValue& b, const IndexedVector& w,
                 unsigned N) {
  return z_scalar(u, v, b, ZScalarData{f.a, N, w}).word;
}

SteinbergWord Zu(const Frame& f, const IndexedVector& v, const RingValue& b) { return Zw(f, f.ua, v, b, f.w, f.N); }

Bindings z_sample(SampleContext& c) {
  const RingPtr B = z_ring(c.ring);
  Bindings b;
  b.set("n", static_cast<long>(c.n));
  const long N = c.rng.range(0, 2);
  b.set("N", N).set("K1", c.rng.range(0, N)).set("K2", c.rng.range(0, N));
  b.set("M", random_word(B, c.n, c.rng, 3));
  b.set("b", random_ideal_element(B, c.rng, kShape)).set("c", random_ideal_element(B, c.rng, kShape));
  b.set("r", random_scalar(B, c.rng, kShape));
  return b;
}

void z_guard(const Bindings& b) {
  guard_that(b.word("M").ring()->kind() == RingKind::Mixed, "Z frames live over B(R, a)");
  guard_that(as_mixed(*b.word("M").ring()).in_ideal(b.scalar("b")), "b in I");
  guard_that(as_mixed(*b.word("M").ring()).in_ideal(b.scalar("c")), "c in I");
}

IndexedVector zero_like(const IndexedVector& v) { return IndexedVector::zero(v.ring(), v.rank()); }

void add_z(std::vector<Relation>& out) {
  auto with_v = [](SampleContext& c) {
    Bindings b = z_sample(c);
    Frame f = frame(b);
    b.set("v", random_orthogonal(f.u, c.rng, 0, kShape));
    return b.set("v'", random_orthogonal(f.u, c.rng, 0, kShape));
  };
  auto guard_v = [](const Bindings& b) {
    z_guard(b);
    Frame f = frame(b);
    need_orth(f.u, b.vec("v"), "u, v");
    need_orth(f.u, b.vec("v'"), "u, v'");
  };
  {
    Relation r = rel("Z0", "Z", "phi(Z(u,v,b)) = T(u, v b, 0)");
    r.shrinkable = {"b"};
    r.sample = with_v;
    r.guard = guard_v;
    r.sides = [](const Bindings& b) {
      Frame f = frame(b);
      const auto v = b.vec("v");
      const RingValue& s = b.scalar("b");
      return Sides{Zu(f, v, s), std::nullopt, esd_matrix(f.u, v * s, s.ring()->zero())};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("Z1", "Z", "Z(u, v r, b) = Z(u, v, r b)");
    r.shrinkable = {"b", "r"};
    r.sample = with_v;
    r.guard = guard_v;
    r.sides = [](const Bindings& b) {
      Frame f = frame(b);
      const auto v = b.vec("v");
      const RingValue &s = b.scalar("b"), &t = b.scalar("r");
      return Sides{Zu(f, v * t, s), Zu(f, v, t * s), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("Z2", "Z", "Z(u,v,b) Z(u,v',b) = Z(u,v+v',b) X(u,0,b^2<v,v'>)");
    r.shrinkable = {"b"};
    r.sample = with_v;
    r.guard = guard_v;
    r.sides = [](const Bindings& b) {
      Frame f = frame(b);
      const auto v = b.vec("v"), vp = b.vec("v'");
      const RingValue& s = b.scalar("b");
      auto rhs = Zu(f, v + vp, s) * x_of(f.ua, zero_like(v), s * s * symp_form(v, vp));
      return Sides{Zu(f, v, s) * Zu(f, vp, s), rhs, {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("Z3", "Z", "Z(u,v,b) Z(u,v,c) = Z(u,v,b+c)");
    r.shrinkable = {"b", "c"};
    r.sample = with_v;
    r.guard = guard_v;
    r.sides = [](const Bindings& b) {
      Frame f = frame(b);
      const auto v = b.vec("v");
      const RingValue &s = b.scalar("b"), &t = b.scalar("c");
      return Sides{Zu(f, v, s) * Zu(f, v, t), Zu(f, v, s + t), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("Z4", "Z", "g Z(u,v,b) g^-1 = Z(phi(g) u, phi(g) v, b)");
    r.shrinkable = {"b"};
    r.sample = [with_v](SampleContext& c) {
      Bindings b = with_v(c);
      return b.set("g", random_word(b.word("M").ring(), c.n, c.rng, 2));
    };
    r.guard = guard_v;
    r.sides = [](const Bindings& b) {
      Frame f = frame(b);
      const auto& g = b.word("g");
      const SympMatrix pg = phi(g);
      const auto v = b.vec("v");
      const RingValue& s = b.scalar("b");
      return Sides{act(g, Zu(f, v, s)), Zw(f, Anchor(pg * f.u), pg * v, s, pg * f.w, f.N), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("Z5", "Z", "Z(u,u,b) = X(u,0,2b)");
    r.shrinkable = {"b"};
    r.sample = z_sample;
    r.guard = z_guard;
    r.sides = [](const Bindings& b) {
      Frame f = frame(b);
      const RingValue& s = b.scalar("b");
      return Sides{Zu(f, f.u, s), x_of(f.ua, zero_like(f.u), s * 2L), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("Z6", "Z", "Z(u,v,b) = Z(v,u,b)");
    r.shrinkable = {"b"};
    r.sample = z_sample;
    r.guard = z_guard;
    r.sides = [](const Bindings& b) {
      Frame f = frame(b);
      const RingValue& s = b.scalar("b");
      return Sides{Zu(f, f.v, s), Zw(f, f.va, f.u, s, f.z, f.N), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("Z7", "Z", "X(u+vr,0,b) = X(u,0,b) X(v,0,b r^2) Z(u,v,b r)");
    r.shrinkable = {"b", "r"};
    r.sample = z_sample;
    r.guard = z_guard;
    r.sides = [](const Bindings& b) {
      Frame f = frame(b);
      const RingValue &s = b.scalar("b"), &t = b.scalar("r");
      const auto zero = zero_like(f.u);
      Anchor sum = f.ua.orbit && f.va.orbit ? Anchor(f.pair.combination(t)) : Anchor(f.u + f.v * t);
      auto rhs = x_of(f.ua, zero, s) * x_of(f.va, zero, s * t * t) * Zu(f, f.v, s * t);
      return Sides{x_of(sum, zero, s), rhs, {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("onemore", "Z", "Z(u a^m, v, b) = Z(u, v, a^m b)");
    r.shrinkable = {"b"};
    r.sample = [with_v](SampleContext& c) {
      Bindings b = with_v(c);
      return b.set("m", c.rng.range(0, 2));
    };
    r.guard = guard_v;
    r.sides = [](const Bindings& b) {
      Frame f = frame(b);
      const unsigned m = static_cast<unsigned>(b.index("m"));
      const auto v = b.vec("v");
      const RingValue& s = b.scalar("b");
      const RingValue am = f.a.pow(m);
      return Sides{Zw(f, Anchor(f.u * am), v, s, f.w, f.N + m), Zu(f, v, am * s), {}};
    };
    out.push_back(r);
  }
}

// ---------------------------------------------------------------------------
// L: over R with u = M e_1 r, w = -M e_-1 s, A = r s

struct LFrame {
  IndexedVector u, w;
  Anchor ua;
  RingValue A;
  SympMatrix m;
};

LFrame lframe(const Bindings& b) {
  const auto& M = b.word("M");
  const RingValue &r = b.scalar("fr"), &s = b.scalar("fs");
  LFrame f;
  f.m = phi(M);
  f.u = f.m.column(1) * r;
  f.w = -f.m.column(-1) * s;
  f.ua = r.is_one() ? Anchor(OrbitVector(M)) : Anchor(f.u);
  f.A = r * s;
  return f;
}

Bindings l_sample(SampleContext& c) {
  Bindings b;
  b.set("n", static_cast<long>(c.n));
  b.set("M", random_word(c.ring, c.n, c.rng, 3));
  b.set("fr", c.rng.coin() ? c.ring->one() : small_scalar(c.ring, c.rng));
  b.set("fs", small_scalar(c.ring, c.rng));
  return b;
}

SteinbergWord ZA(const Anchor& u, const IndexedVector& v, const IndexedVector& w) { return z_upper_A(u, v, w).word; }

SteinbergWord Zl(const Anchor& u, const std::vector<IndexedVector>& vs) { return z_list(u, vs).word; }

std::vector<IndexedVector> vec_list(const Bindings& b, const std::string& prefix) {
  std::vector<IndexedVector> out;
  for (long k = 0; k < b.index(prefix + "#"); ++k) out.push_back(b.vec(prefix + std::to_string(k)));
  return out;
}

void set_list(Bindings& b, const std::string& prefix, const std::vector<IndexedVector>& vs) {
  b.set(prefix + "#", static_cast<long>(vs.size()));
  for (std::size_t k = 0; k < vs.size(); ++k) b.set(prefix + std::to_string(k), vs[k]);
}

void need_list(const Bindings& b, const LFrame& f, const std::string& prefix) {
  for (const auto& v : vec_list(b, prefix)) {
    need_orth(f.u, v, "u, v_k");
    guard_that(v.first_zero_pair() != 0, "each v_k needs a zero pair");
  }
}

std::vector<IndexedVector> zero_pair_list(const IndexedVector& u, Rng& rng, std::size_t count) {
  std::vector<IndexedVector> out;
  for (std::size_t k = 0; k < count; ++k)
    out.push_back(random_orthogonal(u, rng, pick_index(rng, u.rank()), kShape));
  return out;
}

void add_l(std::vector<Relation>& out) {
  {
    Relation r = rel("commutator", "L", "[X(u,v,0), X(u,w,0)] = X(u,0,2<v,w>), w with a zero pair");
    r.sample = [](SampleContext& c) {
      Bindings b = l_sample(c);
      LFrame f = lframe(b);
      b.set("v", random_orthogonal(f.u, c.rng, 0, kShape));
      return b.set("q", random_orthogonal(f.u, c.rng, pick_index(c.rng, c.n), kShape));
    };
    r.guard = [](const Bindings& b) {
      LFrame f = lframe(b);
      need_orth(f.u, b.vec("v"), "u, v");
      need_orth(f.u, b.vec("q"), "u, w");
      guard_that(b.vec("q").first_zero_pair() != 0, "w needs a zero pair");
    };
    r.sides = [](const Bindings& b) {
      LFrame f = lframe(b);
      const auto v = b.vec("v"), q = b.vec("q");
      const RingValue zero = f.A.ring()->zero();
      auto x = x_of(f.ua, v, zero), y = x_of(f.ua, q, zero);
      return Sides{x * y * x.inverse() * y.inverse(), x_of(f.ua, zero_like(v), symp_form(v, q) * 2L), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("permutation", "L", "Z(u; v_1..v_N) = Z(u; v_s(1)..v_s(N))");
    r.sample = [](SampleContext& c) {
      Bindings b = l_sample(c);
      LFrame f = lframe(b);
      set_list(b, "v", zero_pair_list(f.u, c.rng, 3));
      return b.set("perm", c.rng.range(0, 5));
    };
    r.guard = [](const Bindings& b) {
      LFrame f = lframe(b);
      need_list(b, f, "v");
    };
    r.sides = [](const Bindings& b) {
      LFrame f = lframe(b);
      auto vs = vec_list(b, "v");
      std::vector<std::size_t> p(vs.size());
      for (std::size_t k = 0; k < p.size(); ++k) p[k] = k;
      for (long k = 0; k < b.index("perm"); ++k) std::next_permutation(p.begin(), p.end());
      std::vector<IndexedVector> ws;
      for (auto k : p) ws.push_back(vs[k]);
      return Sides{Zl(f.ua, vs), Zl(f.ua, ws), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("forgotten", "L", "Z(u r; {v_k}) = Z(u; {r v_k})");
    r.shrinkable = {"r"};
    r.sample = [](SampleContext& c) {
      Bindings b = l_sample(c);
      LFrame f = lframe(b);
      set_list(b, "v", zero_pair_list(f.u, c.rng, 3));
      return b.set("r", random_scalar(c.ring, c.rng, kShape));
    };
    r.guard = [](const Bindings& b) {
      LFrame f = lframe(b);
      need_list(b, f, "v");
    };
    r.sides = [](const Bindings& b) {
      LFrame f = lframe(b);
      const RingValue& t = b.scalar("r");
      auto vs = vec_list(b, "v");
      std::vector<IndexedVector> ws;
      for (const auto& v : vs) ws.push_back(v * t);
      return Sides{Zl(Anchor(f.u * t), vs), Zl(f.ua, ws), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("orth", "L", "X(u,v+w,0) = X(u,v,0) X(u,w,0) for u, v, w orthogonal, w with a zero pair");
    r.sample = [](SampleContext& c) {
      Bindings b = l_sample(c);
      LFrame f = lframe(b);
      auto q = random_orthogonal(f.u, c.rng, pick_index(c.rng, c.n), kShape);
      auto v0 = random_orthogonal(f.u, c.rng, 0, kShape);
      auto x = random_orthogonal(f.u, c.rng, 0, kShape);
      return b.set("q", q).set("v", v0 * symp_form(q, x) - x * symp_form(q, v0));
    };
    r.guard = [](const Bindings& b) {
      LFrame f = lframe(b);
      const auto v = b.vec("v"), q = b.vec("q");
      need_orth(f.u, v, "u, v");
      need_orth(f.u, q, "u, w");
      need_orth(v, q, "v, w");
      guard_that(q.first_zero_pair() != 0, "w needs a zero pair");
    };
    r.sides = [](const Bindings& b) {
      LFrame f = lframe(b);
      const auto v = b.vec("v"), q = b.vec("q");
      const RingValue zero = f.A.ring()->zero();
      return Sides{x_of(f.ua, v + q, zero), x_of(f.ua, v, zero) * x_of(f.ua, q, zero), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("x=z", "L", "X(u, v A, 0) = Z(u; {v_ij}_{i<j}), <w,u> = A, v with a zero pair");
    r.sample = [](SampleContext& c) {
      Bindings b = l_sample(c);
      LFrame f = lframe(b);
      return b.set("v", random_orthogonal(f.u, c.rng, pick_index(c.rng, c.n), kShape));
    };
    r.guard = [](const Bindings& b) {
      LFrame f = lframe(b);
      need_orth(f.u, b.vec("v"), "u, v");
      guard_that(b.vec("v").first_zero_pair() != 0, "v needs a zero pair");
    };
    r.sides = [](const Bindings& b) {
      LFrame f = lframe(b);
      const auto v = b.vec("v");
      const auto d = suslin_decompose(f.u, v, f.w);
      std::vector<IndexedVector> parts;
      for (const auto& p : d.parts) parts.push_back(p.v);
      return Sides{x_of(f.ua, v * f.A, f.A.ring()->zero()), Zl(f.ua, parts), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("decomposition", "L", "Z(u; {x^k A}) = Z(u; {v_ij A}_{i<j}) when sum x^k = v A");
    r.sample = [](SampleContext& c) {
      Bindings b = l_sample(c);
      LFrame f = lframe(b);
      auto v = random_orthogonal(f.u, c.rng, 0, kShape);
      // parts for w + u t also sum to v A; split each in two
      auto d = suslin_decompose(f.u, v, f.w + f.u * small_scalar(c.ring, c.rng));
      std::vector<IndexedVector> xs;
      for (const auto& p : d.parts) {
        if (p.v.is_zero()) continue;
        const RingValue s = small_scalar(c.ring, c.rng);
        xs.push_back(p.v * s);
        xs.push_back(p.v * (c.ring->one() - s));
      }
      set_list(b, "x", xs);
      return b.set("v", v);
    };
    r.guard = [](const Bindings& b) {
      LFrame f = lframe(b);
      need_orth(f.u, b.vec("v"), "u, v");
      need_list(b, f, "x");
      IndexedVector sum = zero_like(f.u);
      for (const auto& x : vec_list(b, "x")) sum = sum + x;
      guard_that(sum == b.vec("v") * f.A, "sum x^k = v A");
    };
    r.sides = [](const Bindings& b) {
      LFrame f = lframe(b);
      std::vector<IndexedVector> xs;
      for (const auto& x : vec_list(b, "x")) xs.push_back(x * f.A);
      return Sides{Zl(f.ua, xs), ZA(f.ua, b.vec("v"), f.w), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("conj", "L", "g Z^A(u,v) g^-1 = Z^A(phi(g) u, phi(g) v)");
    r.sample = [](SampleContext& c) {
      Bindings b = l_sample(c);
      LFrame f = lframe(b);
      b.set("v", random_orthogonal(f.u, c.rng, 0, kShape));
      return b.set("g", random_word(c.ring, c.n, c.rng, 2));
    };
    r.guard = [](const Bindings& b) { need_orth(lframe(b).u, b.vec("v"), "u, v"); };
    r.sides = [](const Bindings& b) {
      LFrame f = lframe(b);
      const auto& g = b.word("g");
      const SympMatrix pg = phi(g);
      const auto v = b.vec("v");
      return Sides{act(g, ZA(f.ua, v, f.w)), ZA(Anchor(pg * f.u), pg * v, pg * f.w), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("add", "L", "Z^A(u,v) Z^A(u,w) = Z^A(u,v+w) X(u,0,<v,w> A^4)");
    r.sample = [](SampleContext& c) {
      Bindings b = l_sample(c);
      LFrame f = lframe(b);
      b.set("v", random_orthogonal(f.u, c.rng, 0, kShape));
      return b.set("q", random_orthogonal(f.u, c.rng, 0, kShape));
    };
    r.guard = [](const Bindings& b) {
      LFrame f = lframe(b);
      need_orth(f.u, b.vec("v"), "u, v");
      need_orth(f.u, b.vec("q"), "u, w");
    };
    r.sides = [](const Bindings& b) {
      LFrame f = lframe(b);
      const auto v = b.vec("v"), q = b.vec("q");
      auto rhs = ZA(f.ua, v + q, f.w) * x_of(f.ua, zero_like(v), symp_form(v, q) * f.A.pow(4));
      return Sides{ZA(f.ua, v, f.w) * ZA(f.ua, q, f.w), rhs, {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("add-corollary", "L", "Z^A(u,v)^-1 = Z^A(u,-v)");
    r.sample = [](SampleContext& c) {
      Bindings b = l_sample(c);
      return b.set("v", random_orthogonal(lframe(b).u, c.rng, 0, kShape));
    };
    r.guard = [](const Bindings& b) { need_orth(lframe(b).u, b.vec("v"), "u, v"); };
    r.sides = [](const Bindings& b) {
      LFrame f = lframe(b);
      const auto v = b.vec("v");
      return Sides{ZA(f.ua, v, f.w).inverse(), ZA(f.ua, -v, f.w), {}};
    };
    out.push_back(r);
  }
  // u = M e_1, v = M e_2; w_u = -M e_-1 A, w_v = -M e_-2 A; p = M e_3 A, q = M e_-3
  auto symm_sample = [](SampleContext& c) {
    Bindings b;
    b.set("n", static_cast<long>(c.n));
    b.set("M", random_word(c.ring, c.n, c.rng, 3));
    b.set("A", small_scalar(c.ring, c.rng));
    return b.set("b", random_scalar(c.ring, c.rng, kShape));
  };
  {
    Relation r = rel("symm", "L", "Z^A(u, v b A^3) = Z^A(v, u b A^3)");
    r.shrinkable = {"b"};
    r.sample = symm_sample;
    r.sides = [](const Bindings& b) {
      const OrbitPair P(b.word("M"));
      const SympMatrix m = phi(b.word("M"));
      const RingValue &A = b.scalar("A"), &s = b.scalar("b");
      const RingValue k = s * A.pow(3);
      return Sides{ZA(P.first_orbit(), P.second() * k, -m.column(-1) * A),
                   ZA(P.second_orbit(), P.first() * k, -m.column(-2) * A), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("self-symm", "L", "Z^A(u, u b A^3) = X(u, 0, 2 b A^5)");
    r.shrinkable = {"b"};
    r.sample = symm_sample;
    r.sides = [](const Bindings& b) {
      const OrbitPair P(b.word("M"));
      const SympMatrix m = phi(b.word("M"));
      const RingValue &A = b.scalar("A"), &s = b.scalar("b");
      const auto u = P.first_orbit();
      return Sides{ZA(u, P.first() * (s * A.pow(3)), -m.column(-1) * A),
                   x_of(u, zero_like(P.first()), s * A.pow(5) * 2L), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("5+6", "L", "X(u+vb,0,c A^11) = X(u,0,c A^11) X(v,0,b^2 c A^11) Z^A(u, v b c A^9)");
    r.shrinkable = {"b", "c"};
    r.sample = [symm_sample](SampleContext& c) {
      Bindings b = symm_sample(c);
      return b.set("c", small_scalar(c.ring, c.rng));
    };
    r.sides = [](const Bindings& b) {
      const OrbitPair P(b.word("M"));
      const SympMatrix m = phi(b.word("M"));
      const RingValue &A = b.scalar("A"), &s = b.scalar("b"), &t = b.scalar("c");
      const auto zero = zero_like(P.first());
      const RingValue k = t * A.pow(11);
      auto rhs = x_of(P.first_orbit(), zero, k) * x_of(P.second_orbit(), zero, s * s * k) *
                 ZA(P.first_orbit(), P.second() * (s * t * A.pow(9)), -m.column(-1) * A);
      return Sides{x_of(P.combination(s), zero, k), rhs, {}};
    };
    out.push_back(r);
  }
}

}  // namespace

void add_z_relations(std::vector<Relation>& out) {
  add_z(out);
  add_l(out);
}

}  // namespace stsp
