#pragma once

// Z(u; v_1..v_N), the symplectic Suslin decomposition, Z^A(u,v), Z(u,v,b)
// and Z(u,v,b,c), realized as explicit words.

#include <optional>
#include <string>
#include <vector>

#include "stsp/elements.hpp"
#include "stsp/relations.hpp"

namespace stsp {

struct SuslinPart {
  int i = 0;
  int j = 0;
  IndexedVector v;
};

struct SuslinDecomposition {
  IndexedVector u;
  IndexedVector v;
  IndexedVector w;
  RingValue A;  // <w, u>
  std::vector<SuslinPart> parts;  // every pair i < j

  /// sum of all parts; equals v A
  IndexedVector sum() const;
  const IndexedVector& part(int i, int j) const;
};

/// v_ij = (e_i u_-j sign j - e_j u_-i sign i)(v_i w_j - v_j w_i), any i != j.
IndexedVector suslin_part(const IndexedVector& u, const IndexedVector& v, const IndexedVector& w, int i, int j);
SuslinDecomposition suslin_decompose(const IndexedVector& u, const IndexedVector& v, const IndexedVector& w);

struct ZElement {
  std::string tag;        // "list", "A", "b", "bc"
  SteinbergWord word;
  SympMatrix expected;    // the documented phi-image
};

/// X(u,v_1,0)...X(u,v_N,0) X(u, 0, -sum_{i<j} <v_i, v_j>).  Zero parts are skipped.
ZElement z_list(const Anchor& u, const std::vector<IndexedVector>& parts);

/// Z(u; {v_ij^w A}_{i<j}) with A = <w, u>.
ZElement z_upper_A(const Anchor& u, const IndexedVector& v, const IndexedVector& w);

/// A vector w with <w, u> = target: the orbit co-vector when u has a witness,
/// otherwise a scaled basis vector.  Throws NoColumnWitness.
IndexedVector column_witness(const Anchor& u, const RingValue& target);

struct ZScalarData {
  RingValue a;                       // the localizing element, in the ring of u
  unsigned N = 0;                    // a^N in I(u)
  std::optional<IndexedVector> w;    // <w, u> = a^N; searched for when absent
};

/// Z(u, v, b) = Z^{a^N}(u, v b / a^{2N}).  Throws DivisibilityFailure, NoColumnWitness.
ZElement z_scalar(const Anchor& u, const IndexedVector& v, const RingValue& b, const ZScalarData& d);
/// Z(u, v, b) X(u, 0, c)
ZElement z_full(const Anchor& u, const IndexedVector& v, const RingValue& b, const RingValue& c, const ZScalarData& d);

/// Exact division x / a^k in the ring of x; throws DivisibilityFailure.
RingValue divide_by_power(const RingValue& x, const RingValue& a, unsigned k);

// ---------------------------------------------------------------------------
// Certificates

/// Rewrites a word whose letters all lie in the root subgroup of e_1
/// (X_{1,k} and X_{k,-1}) into a sorted normal form, recording the steps.
/// Returns nullopt when some letter is outside that subgroup.
std::optional<SteinbergWord> e1_normal_form(const SteinbergWord& w, DerivationTrace* trace);

/// A trace rewriting lhs into rhs when both reduce to the same e_1 normal form.
std::optional<DerivationTrace> certify_e1(const SteinbergWord& lhs, const SteinbergWord& rhs);

}  // namespace stsp
