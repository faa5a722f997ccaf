#include "stsp/local_global.hpp"

namespace stsp {

namespace {

const PolynomialRing& univariate(const RingPtr& ring) {
  if (ring->kind() != RingKind::Polynomial || as_polynomial(*ring).variables().size() != 1)
    raise(ErrorCode::PreconditionViolated, "expected a univariate polynomial ring, got " + ring->spec());
  return as_polynomial(*ring);
}

RingValue var_of(const RingPtr& poly_ring) {
  const auto& p = univariate(poly_ring);
  return *p.variable(p.variables()[0]);
}

// R_a[t] -> R[t] on the image of R[t]
std::optional<RingValue> pull_back(const RingValue& x, const RingPtr& target) {
  const auto& src = as_polynomial(*x.ring());
  const auto& dst = as_polynomial(*target);
  std::vector<detail::PolyTerm> out;
  for (const auto& t : src.terms(x)) {
    auto [num, k] = lift_clearing_denominators(t.coeff);
    if (k != 0) return std::nullopt;
    out.push_back({t.exponents, num});
  }
  return dst.from_terms(std::move(out));
}

std::optional<SteinbergWord> pull_back(const SteinbergWord& w, const RingPtr& target) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const auto& l : w.letters()) {
    auto a = pull_back(l.a, target);
    if (!a) return std::nullopt;
    out.push_back(Letter{l.i, l.j, *a, l.inverse});
  }
  return SteinbergWord(target, w.rank(), std::move(out));
}

Binding map_binding(const Binding& b, const RingHom& hom) {
  return std::visit(
      [&](const auto& v) -> Binding {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, long>) {
          return v;
        } else if constexpr (std::is_same_v<T, RingValue>) {
          return hom(v);
        } else if constexpr (std::is_same_v<T, OrbitPair>) {
          return OrbitPair(v.witness().map(hom));
        } else {
          return v.map(hom);
        }
      },
      b);
}

std::optional<DerivationTrace> pull_back(const DerivationTrace& trace, const RingPtr& target) {
  DerivationTrace out;
  for (const auto& s : trace) {
    TraceStep t = s;
    Bindings params;
    for (const auto& [name, v] : s.params.values()) {
      if (auto x = std::get_if<RingValue>(&v)) {
        auto y = pull_back(*x, target);
        if (!y) return std::nullopt;
        params.set(name, *y);
      } else if (std::holds_alternative<long>(v)) {
        params.set(name, v);
      } else {
        return std::nullopt;
      }
    }
    t.params = params;
    out.push_back(std::move(t));
  }
  return out;
}

bool is_empty_word(const SteinbergWord& w) { return w.size() == 0; }

}  // namespace

SteinbergWord evaluate_word(const SteinbergWord& g, const RingValue& x) {
  univariate(g.ring());
  return g.map(evaluation_hom(g.ring(), x));
}

RingHom DirectSystemMap::hom() const {
  if (j < i) raise(ErrorCode::PreconditionViolated, "psi_ij needs i <= j");
  const auto& p = univariate(poly_ring);
  require_ring(a, p.base());
  const RingValue x = p.constant(a.pow(j - i)) * var_of(poly_ring);
  RingHom h = evaluation_hom(poly_ring, x);
  return RingHom(poly_ring, poly_ring, "psi_" + std::to_string(i) + std::to_string(j),
                 [h](const RingValue& y) { return h(y); });
}

RingHom phi_i(const RingPtr& poly_ring, const RingPtr& b_ring, unsigned i) {
  const auto& p = univariate(poly_ring);
  const auto& b = as_mixed(*b_ring);
  if (p.base() != b.base()) raise(ErrorCode::DescriptorMismatch, poly_ring->spec() + " vs " + b_ring->spec());
  const RingPtr amb = b.ambient();
  const RingPtr loc = b.localized_base();
  const RingHom coeff = constant_embedding(amb).after(localization_hom(loc));
  // t / a^i in R_a[t]
  const RingValue x = as_polynomial(*amb).constant(as_localized(*loc).fraction(p.base()->one(), i)) * var_of(amb);
  return RingHom(poly_ring, b_ring, "phi_" + std::to_string(i), [b_ring, coeff, x, loc](const RingValue& q) {
    const auto& mb = as_mixed(*b_ring);
    const RingValue c = as_polynomial(*q.ring()).constant_term(q);
    const RingValue f = eval_poly(q, x, coeff) - coeff(c);
    return mb.pair(c, f);
  });
}

SteinbergWord phi_i_push(const SteinbergWord& g, const RingPtr& b_ring, unsigned i) {
  return g.map(phi_i(g.ring(), b_ring, i));
}

RingPtr localized_mixed(const RingPtr& b_ring) {
  const auto& b = as_mixed(*b_ring);
  return localized(b_ring, b.pair(b.element(), b.ambient()->zero()));
}

TulenbaevImage tulenbaev_T(const TulenbaevGenerator& x) {
  const RingPtr Ba = x.u.ring();
  if (Ba->kind() != RingKind::Localized || as_localized(*Ba).base()->kind() != RingKind::Mixed)
    raise(ErrorCode::PreconditionViolated, "T expects a generator over Loc(B, a), got " + Ba->spec());
  const auto& loc = as_localized(*Ba);
  const RingPtr B = loc.base();
  const RingValue& a = loc.element();
  const auto& mb = as_mixed(*B);
  const int n = x.u.rank();
  require_ring(x.a, Ba);
  require_ring(x.b, Ba);
  if (!x.v.is_zero() && x.v.ring() != Ba) raise(ErrorCode::DescriptorMismatch, "v over " + x.v.ring()->spec());

  TulenbaevImage img;
  img.input = x;
  const IndexedVector w = x.u.co_vector();
  const IndexedVector v = x.v.is_zero() ? IndexedVector::zero(Ba, n) : x.v;
  unsigned N = 0;
  for (const auto* vec : {&x.u.vector(), &v, &w})
    for (const auto& e : vec->entries()) N = std::max(N, lift_clearing_denominators(e).second);
  auto lift = [&](const IndexedVector& vec) {
    std::vector<RingValue> out;
    for (const auto& e : vec.entries()) {
      auto [num, k] = lift_clearing_denominators(e);
      out.push_back(num * a.pow(N - k));
    }
    return IndexedVector::from_entries(B, n, std::move(out));
  };
  img.N = N;
  img.u_lift = lift(x.u.vector());
  img.v_lift = lift(v);
  img.w_lift = lift(w);
  // lambda_a is injective on B, so M = 0 already works; the loop is defensive
  bool found = false;
  for (unsigned M = 0; M <= 8 && !found; ++M) {
    const RingValue am = a.pow(M);
    if (symp_form(img.u_lift, img.v_lift * am).is_zero() && symp_form(img.w_lift * am, img.u_lift) == a.pow(2 * N + M)) {
      img.M = M;
      found = true;
    }
  }
  if (!found) raise(ErrorCode::LiftFailure, "no M with <w~ a^M, u~> = a^(2N+M)");
  const unsigned M = img.M;
  auto scalar = [&](const RingValue& s, unsigned extra) {
    auto [num, k] = lift_clearing_denominators(s);
    if (!mb.in_ideal(num)) raise(ErrorCode::DivisibilityFailure, s.str() + " is not in I");
    return divide_by_power(num, a, k + extra);
  };
  const RingValue b = scalar(x.a, 2 * N + M);
  const RingValue c = scalar(x.b, 2 * N);
  const RingValue am = a.pow(M);
  img.element = z_full(Anchor(img.u_lift), img.v_lift * am, b, c, ZScalarData{a, 2 * N + M, img.w_lift * am});
  if (x.inverse) {
    img.element.word = img.element.word.inverse();
    img.element.expected = img.element.expected.symplectic_inverse();
  }
  return img;
}

SteinbergWord tulenbaev_T(const TulenbaevWord& w) {
  if (w.empty()) raise(ErrorCode::PreconditionViolated, "empty Tulenbaev word has no ring");
  const RingPtr B = as_localized(*w.front().u.ring()).base();
  SteinbergWord out(B, w.front().u.rank());
  for (const auto& x : w) out *= tulenbaev_T(x).element.word;
  return out;
}

bool tulenbaev_diagram_holds(const TulenbaevImage& img) {
  const RingPtr Ba = img.input.u.ring();
  const SympMatrix lhs = phi(img.element.word).map(localization_hom(Ba));
  SympMatrix rhs = phi(kappa(img.input));
  return lhs == rhs;
}

DerivationTrace map_trace(const DerivationTrace& trace, const RingHom& hom) {
  DerivationTrace out;
  out.reserve(trace.size());
  for (const auto& s : trace) {
    TraceStep t = s;
    Bindings params;
    for (const auto& [name, v] : s.params.values()) params.set(name, map_binding(v, hom));
    t.params = params;
    out.push_back(std::move(t));
  }
  return out;
}

DilationResult dilation_search(const SteinbergWord& g, const RingValue& a, unsigned N_max,
                               const DerivationTrace* trace) {
  const auto& p = univariate(g.ring());
  RingPtr base;        // R
  RingPtr loc;         // R_a
  SteinbergWord local; // lambda_a*(g) over R_a[t]
  std::optional<RingHom> to_local;
  if (p.base()->kind() == RingKind::Localized && as_localized(*p.base()).element() == a) {
    loc = p.base();
    base = as_localized(*loc).base();
    local = g;
  } else {
    require_ring(a, p.base());
    base = p.base();
    loc = localized(base, a);
    to_local = polynomial_hom(g.ring(), localization_hom(loc));
    local = g.map(*to_local);
  }
  const RingPtr la_poly = local.ring();
  const RingPtr r_poly = polynomials(base, p.variables());
  DilationResult res;
  res.matrix_identity = phi(local).is_identity();
  if (!res.matrix_identity) raise(ErrorCode::HypothesisViolated, "phi(lambda_a*(g)) is not the identity");
  const RingValue t = var_of(la_poly);
  const RingValue la = localize(a, loc);
  for (unsigned N = 0; N <= N_max; ++N) {
    const RingHom dil = evaluation_hom(la_poly, as_polynomial(*la_poly).constant(la.pow(N)) * t);
    auto pulled = pull_back(local.map(dil), r_poly);
    if (!pulled) continue;
    if (!phi(*pulled).is_identity()) continue;
    res.N = N;
    res.dilated = *pulled;
    if (trace) {
      const DerivationTrace local_trace = to_local ? map_trace(*trace, *to_local) : *trace;
      if (auto tr = pull_back(map_trace(local_trace, dil), r_poly)) {
        res.dilated_trace = *tr;
        try {
          res.trace_replayed = is_empty_word(replay(*pulled, *tr));
        } catch (const Error&) {
          res.trace_replayed = false;
        }
      }
    }
    break;
  }
  return res;
}

GlueReport comaximal_glue_check(const SteinbergWord& g, const RingValue& a, const RingValue& b, const RingValue& s,
                                const RingValue& r) {
  const auto& p = univariate(g.ring());
  for (const auto* x : {&a, &b, &s, &r}) require_ring(*x, p.base());
  if (!(s * a + r * b).is_one()) raise(ErrorCode::NotComaximal, s.str() + "*" + a.str() + " + " + r.str() + "*" + b.str() + " != 1");
  auto local_identity = [&](const RingValue& x) {
    const RingPtr loc = localized(p.base(), x);
    return phi(g.map(polynomial_hom(g.ring(), localization_hom(loc)))).is_identity();
  };
  GlueReport rep;
  rep.hypothesis_a = local_identity(a);
  rep.hypothesis_b = local_identity(b);
  rep.conclusion = phi(g).is_identity();
  return rep;
}

}  // namespace stsp
