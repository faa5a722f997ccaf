#include "stsp/relative.hpp"

#include "catalogue_util.hpp"

namespace stsp {

// ---------------------------------------------------------------------------
// Splitting data

SplittingIdealData SplittingIdealData::polynomial(const RingPtr& poly_ring) {
  const auto& p = as_polynomial(*poly_ring);
  if (p.variables().size() != 1)
    raise(ErrorCode::InvalidDescriptor, "splitting data needs a univariate ring, got " + poly_ring->spec());
  RingHom rho = constant_term_hom(poly_ring);
  RingHom sigma = constant_embedding(poly_ring);
  auto member = [rho](const RingValue& x) { return rho(x).is_zero(); };
  return SplittingIdealData{poly_ring, rho, sigma, member};
}

SplittingIdealData SplittingIdealData::mixed(const RingPtr& b_ring) {
  const auto& b = as_mixed(*b_ring);
  RingPtr base = b.base();
  RingHom rho(b_ring, base, "rho", [b_ring](const RingValue& x) { return as_mixed(*b_ring).parts(x).r; });
  RingHom sigma(base, b_ring, "sigma", [b_ring](const RingValue& r) {
    const auto& m = as_mixed(*b_ring);
    return m.pair(r, m.ambient()->zero());
  });
  auto member = [b_ring](const RingValue& x) { return as_mixed(*b_ring).in_ideal(x); };
  return SplittingIdealData{b_ring, rho, sigma, member};
}

// ---------------------------------------------------------------------------
// Keune-Loday words

std::string KLLetter::str() const {
  std::string root = "Y(" + std::to_string(i) + "," + std::to_string(j) + ";" + a.str() + ")";
  if (!actor.empty()) root = "^{" + actor.str() + "}" + root;
  return inverse ? root + "^-1" : root;
}

KLWord KLWord::root(const RingPtr& ring, int n, int i, int j, const RingValue& a) {
  return acted_root(SteinbergWord(ring, n), i, j, a);
}

KLWord KLWord::acted_root(const SteinbergWord& g, int i, int j, const RingValue& a) {
  KLWord w(g.ring(), g.rank());
  w.push(KLLetter{g, i, j, a, false});
  return w;
}

void KLWord::push(KLLetter l) {
  check_index(l.i, n_);
  check_index(l.j, n_);
  if (l.i == l.j) raise(ErrorCode::PreconditionViolated, "Y_ii is not a generator");
  require_ring(l.a, ring_);
  if (l.actor.ring() != ring_ || l.actor.rank() != n_)
    raise(ErrorCode::DescriptorMismatch, "actor over a different ring or rank");
  letters_.push_back(std::move(l));
}

KLWord& KLWord::operator*=(const KLWord& other) {
  if (other.ring_ != ring_ || other.n_ != n_) raise(ErrorCode::DescriptorMismatch, "KL words over different groups");
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

KLWord KLWord::operator*(const KLWord& other) const {
  KLWord out = *this;
  out *= other;
  return out;
}

KLWord KLWord::inverse() const {
  KLWord out(ring_, n_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    KLLetter l = *it;
    l.inverse = !l.inverse;
    out.letters_.push_back(std::move(l));
  }
  return out;
}

KLWord KLWord::acted(const SteinbergWord& g) const {
  KLWord out(ring_, n_);
  for (const auto& l : letters_) {
    KLLetter m = l;
    m.actor = g * l.actor;
    out.letters_.push_back(std::move(m));
  }
  return out;
}

std::string KLWord::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += " * ";
    out += l.str();
  }
  return out;
}

void require_relative(const KLWord& w, const SplittingIdealData& data) {
  for (const auto& l : w.letters())
    if (!data.in_ideal(l.a)) raise(ErrorCode::PreconditionViolated, "Y parameter " + l.a.str() + " is not in I");
}

SteinbergWord iota(const KLWord& w) {
  SteinbergWord out(w.ring(), w.rank());
  for (const auto& l : w.letters()) {
    SteinbergWord x = SteinbergWord::generator(w.ring(), w.rank(), l.i, l.j, l.a);
    if (l.inverse) x = x.inverse();
    out *= l.actor * x * l.actor.inverse();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tulenbaev generators

std::string TulenbaevGenerator::str() const {
  std::string s = "[" + u.vector().str() + ", " + v.str() + ", " + a.str() + ", " + b.str() + "]";
  return inverse ? s + "^-1" : s;
}

SteinbergWord kappa(const TulenbaevGenerator& x) {
  SteinbergWord w = x_element(x.u, x.v * x.a, x.b);
  return x.inverse ? w.inverse() : w;
}

SteinbergWord kappa(const TulenbaevWord& w) {
  if (w.empty()) raise(ErrorCode::PreconditionViolated, "kappa of an empty word needs a ring");
  SteinbergWord out(w.front().u.ring(), w.front().u.rank());
  for (const auto& x : w) out *= kappa(x);
  return out;
}

TulenbaevGenerator act_on_tulenbaev(const SteinbergWord& g, const TulenbaevGenerator& x) {
  if (g.empty()) return x;
  TulenbaevGenerator out = x;
  out.u = x.u.acted(g);
  out.v = phi(g) * x.v;
  return out;
}

TulenbaevWord theta(const KLWord& w) {
  TulenbaevWord out;
  const RingPtr& ring = w.ring();
  const int n = w.rank();
  for (const auto& l : w.letters()) {
    TulenbaevGenerator g;
    g.u = OrbitVector::basis(ring, n, l.i);
    if (l.j == -l.i) {
      g.v = IndexedVector::zero(ring, n);
      g.a = ring->zero();
      g.b = l.a;
    } else {
      g.v = IndexedVector::basis(ring, n, -l.j);
      g.a = l.a * sign(-l.j);
      g.b = ring->zero();
    }
    g.inverse = l.inverse;
    out.push_back(act_on_tulenbaev(l.actor, g));
  }
  return out;
}

// ---------------------------------------------------------------------------
// psi

SplitImage psi_split(const SteinbergWord& w, const SplittingIdealData& data) {
  if (w.ring() != data.ring) raise(ErrorCode::DescriptorMismatch, "psi_split: word over " + w.ring()->spec());
  SplitImage out{KLWord(w.ring(), w.rank()), SteinbergWord(data.quotient(), w.rank())};
  for (const auto& l : w.letters()) {
    RingValue r = l.param();
    RingValue q = data.rho(r);
    RingValue rel = r - data.sigma(q);
    // (x1, y1)(x2, y2) = (x1 * ^{sigma(y1)} x2, y1 y2)
    if (!rel.is_zero()) out.relative *= KLWord::acted_root(out.quotient.map(data.sigma), l.i, l.j, rel);
    if (!q.is_zero()) out.quotient.push(l.i, l.j, q);
  }
  return out;
}

SympMatrix recombine(const SplitImage& s, const SplittingIdealData& data) {
  return phi(iota(s.relative)) * phi(s.quotient.map(data.sigma));
}

CheckResult check_tulenbaev_relation(std::string_view id, const Bindings& b) {
  const Relation* r = find_relation(id);
  if (!r || (r->family != "T" && r->family != "KL"))
    raise(ErrorCode::ConfigError, "not a relative relation: " + std::string(id));
  return check_relation(*r, b);
}

// ---------------------------------------------------------------------------
// Catalogue: KL and T, over R' = R[s] with I = s R[s].

using namespace cat;

namespace {

RingPtr relative_ring(const RingPtr& base) { return polynomials(base, {fresh_variable(base, "s")}); }

struct RelCtx {
  RingPtr ring;
  int n;
  Rng& rng;
  RingValue ideal() { return random_ideal_element(ring, rng); }
  RingValue any() { return random_scalar(ring, rng); }
};

Bindings rel_base(SampleContext& c) {
  Bindings b;
  b.set("n", static_cast<long>(c.n));
  return b;
}

void need_ideal(const Bindings& b, std::initializer_list<const char*> names) {
  for (const char* name : names) {
    const RingValue& x = b.scalar(name);
    guard_that(SplittingIdealData::polynomial(x.ring()).in_ideal(x), std::string(name) + " must lie in I");
  }
}

KLWord Y(const RingPtr& ring, int n, int i, int j, const RingValue& a) { return KLWord::root(ring, n, i, j, a); }

KLWord Yg(const SteinbergWord& g, int i, int j, const RingValue& a) { return KLWord::acted_root(g, i, j, a); }

// [[g, h] = ^g h * h^-1
KLWord left_bracket(const SteinbergWord& g, const KLWord& h) { return h.acted(g) * h.inverse(); }

Sides kl_sides(const KLWord& lhs, const KLWord& rhs) { return Sides{iota(lhs), iota(rhs), {}}; }

bool s2_ok(int i, int j, int h, int k) { return i != j && h != k && h != j && h != -i && k != i && k != -j; }
bool s3_ok(int i, int j, int k) { return i != j && j != k && i != k && i != -j && i != -k && j != -k; }

Bindings kl_sample(SampleContext& c, int count) {
  RelCtx rc{relative_ring(c.ring), c.n, c.rng};
  Bindings b = rel_base(c);
  b.set("a", rc.ideal()).set("r", rc.any());
  if (count > 1) b.set("b", rc.ideal());
  return b;
}

void add_kl(std::vector<Relation>& out) {
  {
    Relation r = rel("KL0", "KL", "Y_ij(a) = Y_{-j,-i}(-a sign i sign j)");
    r.shrinkable = {"a"};
    r.sample = [](SampleContext& c) {
      Bindings b = kl_sample(c, 1);
      int i = pick_index(c.rng, c.n), j = i;
      while (j == i) j = pick_index(c.rng, c.n);
      return b.set("i", static_cast<long>(i)).set("j", static_cast<long>(j));
    };
    r.guard = [](const Bindings& b) {
      need_distinct(idx(b, "i"), idx(b, "j"));
      need_ideal(b, {"a"});
    };
    r.sides = [](const Bindings& b) {
      auto ring = ring_of(b);
      int n = rank_of(b), i = idx(b, "i"), j = idx(b, "j");
      const RingValue& a = b.scalar("a");
      return kl_sides(Y(ring, n, i, j, a), Y(ring, n, -j, -i, -a * sign(i) * sign(j)));
    };
    out.push_back(r);
  }
  {
    Relation r = rel("KL1", "KL", "Y_ij(a) Y_ij(b) = Y_ij(a+b)");
    r.shrinkable = {"a", "b"};
    r.sample = [](SampleContext& c) {
      Bindings b = kl_sample(c, 2);
      int i = pick_index(c.rng, c.n), j = i;
      while (j == i) j = pick_index(c.rng, c.n);
      return b.set("i", static_cast<long>(i)).set("j", static_cast<long>(j));
    };
    r.guard = [](const Bindings& b) {
      need_distinct(idx(b, "i"), idx(b, "j"));
      need_ideal(b, {"a", "b"});
    };
    r.sides = [](const Bindings& b) {
      auto ring = ring_of(b);
      int n = rank_of(b), i = idx(b, "i"), j = idx(b, "j");
      const RingValue &x = b.scalar("a"), &y = b.scalar("b");
      return kl_sides(Y(ring, n, i, j, x) * Y(ring, n, i, j, y), Y(ring, n, i, j, x + y));
    };
    out.push_back(r);
  }
  {
    Relation r = rel("KL2", "KL", "[[X_ij(r), Y_hk(a)] = 1 for h != j,-i and k != i,-j");
    r.shrinkable = {"a", "r"};
    r.sample = [](SampleContext& c) {
      Bindings b = kl_sample(c, 1);
      int i, j, h, k;
      do {
        i = pick_index(c.rng, c.n);
        j = pick_index(c.rng, c.n);
        h = pick_index(c.rng, c.n);
        k = pick_index(c.rng, c.n);
      } while (!s2_ok(i, j, h, k));
      b.set("i", static_cast<long>(i)).set("j", static_cast<long>(j));
      return b.set("h", static_cast<long>(h)).set("k", static_cast<long>(k));
    };
    r.guard = [](const Bindings& b) {
      guard_that(s2_ok(idx(b, "i"), idx(b, "j"), idx(b, "h"), idx(b, "k")), "KL2 index condition");
      need_ideal(b, {"a"});
    };
    r.sides = [](const Bindings& b) {
      auto ring = ring_of(b);
      int n = rank_of(b);
      auto g = gen(ring, n, idx(b, "i"), idx(b, "j"), b.scalar("r"));
      return kl_sides(left_bracket(g, Y(ring, n, idx(b, "h"), idx(b, "k"), b.scalar("a"))), KLWord(ring, n));
    };
    out.push_back(r);
  }
  {
    Relation r = rel("KL3", "KL", "[[X_ij(r), Y_jk(a)] = Y_ik(ra) for i != -j,-k and j != -k");
    r.shrinkable = {"a", "r"};
    r.sample = [](SampleContext& c) {
      Bindings b = kl_sample(c, 1);
      int i, j, k;
      do {
        i = pick_index(c.rng, c.n);
        j = pick_index(c.rng, c.n);
        k = pick_index(c.rng, c.n);
      } while (!s3_ok(i, j, k));
      return b.set("i", static_cast<long>(i)).set("j", static_cast<long>(j)).set("k", static_cast<long>(k));
    };
    r.guard = [](const Bindings& b) {
      guard_that(s3_ok(idx(b, "i"), idx(b, "j"), idx(b, "k")), "KL3 index condition");
      need_ideal(b, {"a"});
    };
    r.sides = [](const Bindings& b) {
      auto ring = ring_of(b);
      int n = rank_of(b), i = idx(b, "i"), j = idx(b, "j"), k = idx(b, "k");
      const RingValue &a = b.scalar("a"), &s = b.scalar("r");
      return kl_sides(left_bracket(gen(ring, n, i, j, s), Y(ring, n, j, k, a)), Y(ring, n, i, k, s * a));
    };
    out.push_back(r);
  }
  auto pair_sample = [](SampleContext& c) {
    Bindings b = kl_sample(c, 1);
    int i = pick_index(c.rng, c.n);
    return b.set("i", static_cast<long>(i)).set("j", static_cast<long>(pick_other(c.rng, c.n, i)));
  };
  auto pair_guard = [](const Bindings& b) {
    int i = idx(b, "i"), j = idx(b, "j");
    guard_that(j != i && j != -i, "needs j != +-i");
    need_ideal(b, {"a"});
  };
  {
    Relation r = rel("KL4", "KL", "[[X_{i,-i}(r), Y_{-i,j}(a)] = Y_ij(ra sign i) Y_{-j,j}(-ra^2)");
    r.shrinkable = {"a", "r"};
    r.sample = pair_sample;
    r.guard = pair_guard;
    r.sides = [](const Bindings& b) {
      auto ring = ring_of(b);
      int n = rank_of(b), i = idx(b, "i"), j = idx(b, "j");
      const RingValue &a = b.scalar("a"), &s = b.scalar("r");
      auto lhs = left_bracket(gen(ring, n, i, -i, s), Y(ring, n, -i, j, a));
      return kl_sides(lhs, Y(ring, n, i, j, s * a * sign(i)) * Y(ring, n, -j, j, -(s * a * a)));
    };
    out.push_back(r);
  }
  {
    Relation r = rel("KL5", "KL", "[Y_{i,-i}(a), X_{-i,j}(r)]] = Y_ij(ar sign i) Y_{-j,j}(-ar^2)");
    r.shrinkable = {"a", "r"};
    r.sample = pair_sample;
    r.guard = pair_guard;
    r.sides = [](const Bindings& b) {
      auto ring = ring_of(b);
      int n = rank_of(b), i = idx(b, "i"), j = idx(b, "j");
      const RingValue &a = b.scalar("a"), &s = b.scalar("r");
      KLWord h = Y(ring, n, i, -i, a);
      // [h, g]] = h * ^g h^-1
      auto lhs = h * h.inverse().acted(gen(ring, n, -i, j, s));
      return kl_sides(lhs, Y(ring, n, i, j, a * s * sign(i)) * Y(ring, n, -j, j, -(a * s * s)));
    };
    out.push_back(r);
  }
  {
    Relation r = rel("KL6", "KL", "[[X_ij(r), Y_{j,-i}(a)] = Y_{i,-i}(2ra sign i)");
    r.shrinkable = {"a", "r"};
    r.sample = pair_sample;
    r.guard = pair_guard;
    r.sides = [](const Bindings& b) {
      auto ring = ring_of(b);
      int n = rank_of(b), i = idx(b, "i"), j = idx(b, "j");
      const RingValue &a = b.scalar("a"), &s = b.scalar("r");
      auto lhs = left_bracket(gen(ring, n, i, j, s), Y(ring, n, j, -i, a));
      return kl_sides(lhs, Y(ring, n, i, -i, s * a * (2 * sign(i))));
    };
    out.push_back(r);
  }
  {
    Relation r = rel("KL7", "KL", "^{X_ij(a)}(^{X_hk(r)} Y_st(b)) = ^{Y_ij(a)}(^{X_hk(r)} Y_st(b))");
    r.shrinkable = {"a", "b", "r"};
    r.sample = [](SampleContext& c) {
      Bindings b = kl_sample(c, 2);
      auto pick_root = [&](const char* x, const char* y) {
        int i = pick_index(c.rng, c.n), j = i;
        while (j == i) j = pick_index(c.rng, c.n);
        b.set(x, static_cast<long>(i)).set(y, static_cast<long>(j));
      };
      pick_root("i", "j");
      pick_root("h", "k");
      pick_root("s", "t");
      return b;
    };
    r.guard = [](const Bindings& b) {
      need_distinct(idx(b, "i"), idx(b, "j"));
      need_distinct(idx(b, "h"), idx(b, "k"));
      need_distinct(idx(b, "s"), idx(b, "t"));
      need_ideal(b, {"a", "b"});
    };
    r.sides = [](const Bindings& b) {
      auto ring = ring_of(b);
      int n = rank_of(b);
      const RingValue& a = b.scalar("a");
      auto inner = Yg(gen(ring, n, idx(b, "h"), idx(b, "k"), b.scalar("r")), idx(b, "s"), idx(b, "t"), b.scalar("b"));
      auto lhs = inner.acted(gen(ring, n, idx(b, "i"), idx(b, "j"), a));
      // a relative element acts by conjugation
      auto y = Y(ring, n, idx(b, "i"), idx(b, "j"), a);
      return kl_sides(lhs, y * inner * y.inverse());
    };
    out.push_back(r);
  }
}

// T relations: all words through kappa.

SteinbergWord T(const OrbitVector& u, const IndexedVector& v, const RingValue& a, const RingValue& b) {
  return kappa(TulenbaevGenerator{u, v, a, b, false});
}

Bindings t_sample(SampleContext& c, std::initializer_list<const char*> ideal, std::initializer_list<const char*> any) {
  RelCtx rc{relative_ring(c.ring), c.n, c.rng};
  Bindings b = rel_base(c);
  for (const char* name : ideal) b.set(name, rc.ideal());
  for (const char* name : any) b.set(name, rc.any());
  return b;
}

void add_t(std::vector<Relation>& out) {
  {
    Relation r = rel("T0", "T", "[u, v r, a, b] = [u, v, r a, b]");
    r.shrinkable = {"a", "b", "r"};
    r.sample = [](SampleContext& c) {
      Bindings b = t_sample(c, {"a", "b"}, {"r"});
      auto ring = b.scalar("a").ring();
      auto u = random_orbit(ring, c.n, c.rng);
      return b.set("u", u).set("v", random_orthogonal(u.vector(), c.rng));
    };
    r.guard = [](const Bindings& b) {
      need_orth(b.vec("u"), b.vec("v"), "u, v");
      need_ideal(b, {"a", "b"});
    };
    r.sides = [](const Bindings& b) {
      const auto& u = b.orbit("u");
      auto v = b.vec("v");
      const RingValue &a = b.scalar("a"), &c = b.scalar("b"), &s = b.scalar("r");
      return Sides{T(u, v * s, a, c), T(u, v, s * a, c), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("T1", "T", "[u,v,a,b][u,w,a,c] = [u, v+w, a, b+c+a^2<v,w>]");
    r.shrinkable = {"a", "b", "c"};
    r.sample = [](SampleContext& c) {
      Bindings b = t_sample(c, {"a", "b", "c"}, {});
      auto ring = b.scalar("a").ring();
      auto u = random_orbit(ring, c.n, c.rng);
      return b.set("u", u).set("v", random_orthogonal(u.vector(), c.rng)).set("w", random_orthogonal(u.vector(), c.rng));
    };
    r.guard = [](const Bindings& b) {
      need_orth(b.vec("u"), b.vec("v"), "u, v");
      need_orth(b.vec("u"), b.vec("w"), "u, w");
      need_ideal(b, {"a", "b", "c"});
    };
    r.sides = [](const Bindings& b) {
      const auto& u = b.orbit("u");
      auto v = b.vec("v"), w = b.vec("w");
      const RingValue &a = b.scalar("a"), &x = b.scalar("b"), &y = b.scalar("c");
      return Sides{T(u, v, a, x) * T(u, w, a, y), T(u, v + w, a, x + y + a * a * symp_form(v, w)), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("T2", "T", "[u,v,a,0][u,v,b,0] = [u,v,a+b,0]");
    r.shrinkable = {"a", "b"};
    r.sample = [](SampleContext& c) {
      Bindings b = t_sample(c, {"a", "b"}, {});
      auto ring = b.scalar("a").ring();
      auto u = random_orbit(ring, c.n, c.rng);
      return b.set("u", u).set("v", random_orthogonal(u.vector(), c.rng));
    };
    r.guard = [](const Bindings& b) {
      need_orth(b.vec("u"), b.vec("v"), "u, v");
      need_ideal(b, {"a", "b"});
    };
    r.sides = [](const Bindings& b) {
      const auto& u = b.orbit("u");
      auto v = b.vec("v");
      const RingValue &a = b.scalar("a"), &x = b.scalar("b");
      auto zero = a.ring()->zero();
      return Sides{T(u, v, a, zero) * T(u, v, x, zero), T(u, v, a + x, zero), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("T3", "T", "[u,u,a,0] = [u,0,0,2a]");
    r.shrinkable = {"a"};
    r.sample = [](SampleContext& c) {
      Bindings b = t_sample(c, {"a"}, {});
      return b.set("u", random_orbit(b.scalar("a").ring(), c.n, c.rng));
    };
    r.guard = [](const Bindings& b) { need_ideal(b, {"a"}); };
    r.sides = [](const Bindings& b) {
      const auto& u = b.orbit("u");
      const RingValue& a = b.scalar("a");
      auto zero = a.ring()->zero();
      return Sides{T(u, u.vector(), a, zero), T(u, zero_vec(a.ring(), u.rank()), zero, a * 2), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("T4", "T", "[u,v,a,0] = [v,u,a,0] for (u,v) in Ep(e_1,e_2)");
    r.shrinkable = {"a"};
    r.sample = [](SampleContext& c) {
      Bindings b = t_sample(c, {"a"}, {});
      return b.set("p", random_orbit_pair(b.scalar("a").ring(), c.n, c.rng));
    };
    r.guard = [](const Bindings& b) { need_ideal(b, {"a"}); };
    r.sides = [](const Bindings& b) {
      const auto& p = b.pair("p");
      const RingValue& a = b.scalar("a");
      auto zero = a.ring()->zero();
      return Sides{T(p.first_orbit(), p.second(), a, zero), T(p.second_orbit(), p.first(), a, zero), {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("T5", "T", "[u+vr,0,0,a] = [u,0,0,a][v,0,0,ar^2][u,v,ar,0] for (u,v) in Ep(e_1,e_2)");
    r.shrinkable = {"a", "r"};
    r.sample = [](SampleContext& c) {
      Bindings b = t_sample(c, {"a"}, {"r"});
      return b.set("p", random_orbit_pair(b.scalar("a").ring(), c.n, c.rng));
    };
    r.guard = [](const Bindings& b) { need_ideal(b, {"a"}); };
    r.sides = [](const Bindings& b) {
      const auto& p = b.pair("p");
      const RingValue &a = b.scalar("a"), &s = b.scalar("r");
      auto ring = a.ring();
      auto zero = ring->zero();
      auto z = zero_vec(ring, p.witness().rank());
      auto lhs = T(p.combination(s), z, zero, a);
      auto rhs = T(p.first_orbit(), z, zero, a) * T(p.second_orbit(), z, zero, a * s * s) *
                 T(p.first_orbit(), p.second(), a * s, zero);
      return Sides{lhs, rhs, {}};
    };
    out.push_back(r);
  }
  {
    Relation r = rel("T6", "T", "g [u,v,a,b] g^-1 = [T u, T v, a, b] for g = [u',v',a',b'], T = T(u', v'a', b')");
    r.shrinkable = {"a", "b", "a'", "b'"};
    r.sample = [](SampleContext& c) {
      Bindings b = t_sample(c, {"a", "b", "a'", "b'"}, {});
      auto ring = b.scalar("a").ring();
      auto u = random_orbit(ring, c.n, c.rng);
      auto up = random_orbit(ring, c.n, c.rng);
      b.set("u", u).set("v", random_orthogonal(u.vector(), c.rng));
      return b.set("u'", up).set("v'", random_orthogonal(up.vector(), c.rng));
    };
    r.guard = [](const Bindings& b) {
      need_orth(b.vec("u"), b.vec("v"), "u, v");
      need_orth(b.vec("u'"), b.vec("v'"), "u', v'");
      need_ideal(b, {"a", "b", "a'", "b'"});
    };
    r.sides = [](const Bindings& b) {
      auto g = T(b.orbit("u'"), b.vec("v'"), b.scalar("a'"), b.scalar("b'"));
      auto t = phi(g);
      const RingValue &a = b.scalar("a"), &c = b.scalar("b");
      auto lhs = act(g, T(b.orbit("u"), b.vec("v"), a, c));
      return Sides{lhs, x_general(t * b.vec("u"), t * b.vec("v") * a, c), {}};
    };
    out.push_back(r);
  }
}

}  // namespace

void add_relative_relations(std::vector<Relation>& out) {
  add_kl(out);
  add_t(out);
}

}  // namespace stsp
