#pragma once

// Evaluation maps on words, the direct system (R[t], t -> a^(j-i) t), the
// maps phi_i into B(R, a), the map T from generators over B_a to words over
// B, the dilation search and the comaximal gluing check.

#include <optional>
#include <string>

#include "stsp/relative.hpp"
#include "stsp/z_calculus.hpp"

namespace stsp {

/// g(x): every parameter p(t) replaced by p(x).  g lives over a univariate R[t], x in R[t].
SteinbergWord evaluate_word(const SteinbergWord& g, const RingValue& x);

/// psi_ij: R[t] -> R[t], t -> a^(j-i) t.
struct DirectSystemMap {
  RingPtr poly_ring;
  RingValue a;  // in the coefficient ring
  unsigned i = 0;
  unsigned j = 0;

  RingHom hom() const;
};

/// phi_i: R[t] -> B(R, a), p -> (p(0), p(t / a^i) - p(0)).
RingHom phi_i(const RingPtr& poly_ring, const RingPtr& b_ring, unsigned i);
SteinbergWord phi_i_push(const SteinbergWord& g, const RingPtr& b_ring, unsigned i);

/// B_a = Loc(B, (a, 0)).
RingPtr localized_mixed(const RingPtr& b_ring);

struct TulenbaevImage {
  TulenbaevGenerator input;  // over B_a
  unsigned N = 0;
  unsigned M = 0;
  IndexedVector u_lift;      // preimage of u a^N
  IndexedVector v_lift;      // preimage of v a^N
  IndexedVector w_lift;      // preimage of w a^N, w = -M e_-1
  ZElement element;          // over B
};

/// Z(u~, v~ a^M, b / a^(2N+M), c / a^(2N)) for x = [u, v, b, c].  Throws LiftFailure, DivisibilityFailure.
TulenbaevImage tulenbaev_T(const TulenbaevGenerator& x);
SteinbergWord tulenbaev_T(const TulenbaevWord& w);
/// lambda_a*(phi(T(x))) == phi(kappa(x))
bool tulenbaev_diagram_holds(const TulenbaevImage& img);

/// Every parameter mapped through `hom`; vectors and words in the bindings too.
DerivationTrace map_trace(const DerivationTrace& trace, const RingHom& hom);

struct DilationResult {
  std::optional<unsigned> N;
  bool matrix_identity = false;   // phi(lambda_a* g) = 1
  bool trace_replayed = false;    // the dilated trace rewrites g(a^N t) to 1 over R[t]
  std::optional<SteinbergWord> dilated;  // g(a^N t) over R[t]
  DerivationTrace dilated_trace;
};

/// g over R[t] or R_a[t] (R_a = Loc(R, a)).  Smallest N <= N_max with g(a^N t) defined over R[t];
/// `trace` (optional) rewrites lambda_a*(g) to the empty word.  Throws HypothesisViolated.
DilationResult dilation_search(const SteinbergWord& g, const RingValue& a, unsigned N_max = 16,
                               const DerivationTrace* trace = nullptr);

struct GlueReport {
  bool hypothesis_a = false;
  bool hypothesis_b = false;
  bool conclusion = false;
  bool applicable() const { return hypothesis_a && hypothesis_b; }
  bool holds() const { return !applicable() || conclusion; }
};

/// s a + r b = 1 in R is checked first (NotComaximal).
GlueReport comaximal_glue_check(const SteinbergWord& g, const RingValue& a, const RingValue& b, const RingValue& s,
                                const RingValue& r);

}  // namespace stsp
