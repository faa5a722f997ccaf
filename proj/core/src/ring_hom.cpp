#include "stsp/ring_hom.hpp"

namespace stsp {

RingHom RingHom::after(const RingHom& first) const {
  if (first.target() != source_)
    raise(ErrorCode::DescriptorMismatch, "cannot compose " + name_ + " after " + first.name());
  return RingHom(first.source(), target_, name_ + "." + first.name(),
                 [outer = *this, inner = first](const RingValue& x) { return outer(inner(x)); });
}

RingHom identity_hom(const RingPtr& ring) {
  return RingHom(ring, ring, "id", [](const RingValue& x) { return x; });
}

RingHom localization_hom(const RingPtr& loc_ring) {
  const auto& loc = as_localized(*loc_ring);
  return RingHom(loc.base(), loc_ring, "lambda_" + loc.element().str(),
                 [loc_ring](const RingValue& x) { return as_localized(*loc_ring).fraction(x, 0); });
}

RingValue localize(const RingValue& x, const RingPtr& loc_ring) { return localization_hom(loc_ring)(x); }

std::pair<RingValue, unsigned> lift_clearing_denominators(const RingValue& x) {
  const auto& f = as_localized(*x.ring()).parts(x);
  return {f.num, f.k};
}

RingHom polynomial_hom(const RingPtr& poly_ring, const RingHom& coeff) {
  const auto& p = as_polynomial(*poly_ring);
  if (p.base() != coeff.source())
    raise(ErrorCode::DescriptorMismatch, "coefficient map " + coeff.name() + " does not start at " + p.base()->spec());
  RingPtr target = polynomials(coeff.target(), p.variables());
  return RingHom(poly_ring, target, coeff.name() + "[]", [poly_ring, target, coeff](const RingValue& x) {
    const auto& tp = as_polynomial(*target);
    std::vector<detail::PolyTerm> out;
    for (const auto& t : as_polynomial(*poly_ring).terms(x)) out.push_back({t.exponents, coeff(t.coeff)});
    return tp.from_terms(std::move(out));
  });
}

RingValue eval_poly(const RingValue& p, const RingValue& x, const RingHom& coeff) {
  const auto& pr = as_polynomial(*p.ring());
  if (pr.variables().size() != 1)
    raise(ErrorCode::PreconditionViolated, "eval_poly needs a univariate polynomial, got " + pr.spec());
  if (pr.base() != coeff.source()) raise(ErrorCode::DescriptorMismatch, "coefficient map does not match " + pr.spec());
  require_ring(x, coeff.target());
  // Horner from the leading term down.
  const auto& terms = pr.terms(p);
  RingValue acc = coeff.target()->zero();
  unsigned deg = terms.empty() ? 0 : terms.front().exponents[0];
  std::size_t k = 0;
  for (long e = deg; e >= 0; --e) {
    acc = acc * x;
    if (k < terms.size() && terms[k].exponents[0] == static_cast<unsigned>(e)) acc = acc + coeff(terms[k++].coeff);
  }
  return acc;
}

RingHom constant_embedding(const RingPtr& poly_ring) {
  const auto& p = as_polynomial(*poly_ring);
  return RingHom(p.base(), poly_ring, "sigma",
                 [poly_ring](const RingValue& x) { return as_polynomial(*poly_ring).constant(x); });
}

RingHom constant_term_hom(const RingPtr& poly_ring) {
  const auto& p = as_polynomial(*poly_ring);
  return RingHom(poly_ring, p.base(), "rho",
                 [poly_ring](const RingValue& x) { return as_polynomial(*poly_ring).constant_term(x); });
}

RingHom evaluation_hom(const RingPtr& poly_ring, const RingValue& x) {
  require_ring(x, poly_ring);
  RingHom sigma = constant_embedding(poly_ring);
  return RingHom(poly_ring, poly_ring, "ev_" + x.str(),
                 [x, sigma](const RingValue& p) { return eval_poly(p, x, sigma); });
}

}  // namespace stsp
