#pragma once

#include <functional>
#include <string>
#include <utility>

#include "stsp/ring.hpp"

namespace stsp {

/// A ring homomorphism between two interned descriptors.
class RingHom {
 public:
  using Fn = std::function<RingValue(const RingValue&)>;

  RingHom(RingPtr source, RingPtr target, std::string name, Fn fn)
      : source_(std::move(source)), target_(std::move(target)), name_(std::move(name)), fn_(std::move(fn)) {}

  const RingPtr& source() const noexcept { return source_; }
  const RingPtr& target() const noexcept { return target_; }
  const std::string& name() const noexcept { return name_; }

  RingValue operator()(const RingValue& x) const {
    require_ring(x, source_);
    return fn_(x);
  }

  /// this after first: x -> this(first(x))
  RingHom after(const RingHom& first) const;

 private:
  RingPtr source_;
  RingPtr target_;
  std::string name_;
  Fn fn_;
};

RingHom identity_hom(const RingPtr& ring);

/// lambda_a: R -> Loc(R, a)
RingHom localization_hom(const RingPtr& loc_ring);
RingValue localize(const RingValue& x, const RingPtr& loc_ring);

/// y in R and minimal N with localize(y) = x * a^N.
std::pair<RingValue, unsigned> lift_clearing_denominators(const RingValue& x);

/// Applies `coeff` to every coefficient: R[vars] -> S[vars].
RingHom polynomial_hom(const RingPtr& poly_ring, const RingHom& coeff);

/// Substitutes the (only) variable of `p` by `x` after mapping coefficients
/// through `coeff` (R -> S, x in S).
RingValue eval_poly(const RingValue& p, const RingValue& x, const RingHom& coeff);

/// sigma: R -> R[t] (constants)
RingHom constant_embedding(const RingPtr& poly_ring);
/// rho = ev_0: R[t] -> R
RingHom constant_term_hom(const RingPtr& poly_ring);
/// ev_x: R[t] -> R[t], the R-algebra map sending t to x.
RingHom evaluation_hom(const RingPtr& poly_ring, const RingValue& x);

}  // namespace stsp
