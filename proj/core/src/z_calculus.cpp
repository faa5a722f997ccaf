#include "stsp/z_calculus.hpp"

#include <algorithm>
#include <limits>

#include "stsp/sampling.hpp"

namespace stsp {

IndexedVector SuslinDecomposition::sum() const {
  IndexedVector s = IndexedVector::zero(u.ring(), u.rank());
  for (const auto& p : parts) s = s + p.v;
  return s;
}

const IndexedVector& SuslinDecomposition::part(int i, int j) const {
  for (const auto& p : parts)
    if ((p.i == i && p.j == j) || (p.i == j && p.j == i)) return p.v;
  raise(ErrorCode::PreconditionViolated, "no Suslin part (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

IndexedVector suslin_part(const IndexedVector& u, const IndexedVector& v, const IndexedVector& w, int i, int j) {
  if (i == j) raise(ErrorCode::PreconditionViolated, "Suslin part needs i != j");
  return orth_basis_vector(u, i, j) * (v[i] * w[j] - v[j] * w[i]);
}

SuslinDecomposition suslin_decompose(const IndexedVector& u, const IndexedVector& v, const IndexedVector& w) {
  if (u.ring() != v.ring() || u.ring() != w.ring() || u.rank() != v.rank() || u.rank() != w.rank())
    raise(ErrorCode::DescriptorMismatch, "Suslin decomposition over mixed rings");
  if (!symp_form(u, v).is_zero()) raise(ErrorCode::NotIsotropicPair, "<u, v> != 0");
  SuslinDecomposition d{u, v, w, symp_form(w, u), {}};
  const auto idx = indices(u.rank());
  for (std::size_t p = 0; p < idx.size(); ++p)
    for (std::size_t q = p + 1; q < idx.size(); ++q)
      d.parts.push_back({idx[p], idx[q], suslin_part(u, v, w, idx[p], idx[q])});
  return d;
}

ZElement z_list(const Anchor& u, const std::vector<IndexedVector>& parts) {
  const RingPtr& ring = u.vec.ring();
  const int n = u.vec.rank();
  ZElement z{"list", SteinbergWord(ring, n), SympMatrix::identity(ring, n)};
  RingValue corr = ring->zero();
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (std::size_t q = p + 1; q < parts.size(); ++q) corr += symp_form(parts[p], parts[q]);
  const IndexedVector zero = IndexedVector::zero(ring, n);
  for (const auto& v : parts) {
    z.expected = z.expected * esd_matrix(u.vec, v, ring->zero());
    if (v.is_zero()) continue;
    z.word *= x_of(u, v, ring->zero());
  }
  z.expected = z.expected * esd_matrix(u.vec, zero, -corr);
  if (!corr.is_zero()) z.word *= x_of(u, zero, -corr);
  return z;
}

ZElement z_upper_A(const Anchor& u, const IndexedVector& v, const IndexedVector& w) {
  const SuslinDecomposition d = suslin_decompose(u.vec, v, w);
  std::vector<IndexedVector> parts;
  parts.reserve(d.parts.size());
  for (const auto& p : d.parts) parts.push_back(p.v * d.A);
  ZElement z = z_list(u, parts);
  z.tag = "A";
  // phi-image T(u, v A^2, 0)
  z.expected = esd_matrix(u.vec, v * (d.A * d.A), u.vec.ring()->zero());
  return z;
}

IndexedVector column_witness(const Anchor& u, const RingValue& target) {
  require_ring(target, u.vec.ring());
  if (u.orbit) return u.orbit->co_vector() * target;
  const RingPtr& ring = u.vec.ring();
  const int n = u.vec.rank();
  for (int k : indices(n)) {
    // <e_k c, u> = sign(k) u_{-k} c
    const RingValue coeff = u.vec[-k] * static_cast<long>(sign(k));
    if (coeff.is_zero()) continue;
    if (auto c = ring->divide_exact(target, coeff)) {
      IndexedVector w = IndexedVector::basis(ring, n, k) * *c;
      if (symp_form(w, u.vec) == target) return w;
    }
  }
  raise(ErrorCode::NoColumnWitness, "no basis vector w with <w, u> = " + target.str() + " for u = " + u.vec.str());
}

RingValue divide_by_power(const RingValue& x, const RingValue& a, unsigned k) {
  require_same_ring(x, a);
  if (k == 0) return x;
  auto q = x.ring()->divide_exact(x, a.pow(k));
  if (!q) raise(ErrorCode::DivisibilityFailure, x.str() + " is not divisible by (" + a.str() + ")^" + std::to_string(k));
  return *q;
}

ZElement z_scalar(const Anchor& u, const IndexedVector& v, const RingValue& b, const ZScalarData& d) {
  require_ring(b, u.vec.ring());
  require_ring(d.a, u.vec.ring());
  const RingValue A = d.a.pow(d.N);
  const IndexedVector w = d.w ? *d.w : column_witness(u, A);
  if (symp_form(w, u.vec) != A)
    raise(ErrorCode::HypothesisViolated, "<w, u> = " + symp_form(w, u.vec).str() + ", expected " + A.str());
  const RingValue scale = divide_by_power(b, d.a, 2 * d.N);
  ZElement z = z_upper_A(u, v * scale, w);
  z.tag = "b";
  z.expected = esd_matrix(u.vec, v * b, b.ring()->zero());
  return z;
}

ZElement z_full(const Anchor& u, const IndexedVector& v, const RingValue& b, const RingValue& c, const ZScalarData& d) {
  ZElement z = z_scalar(u, v, b, d);
  const IndexedVector zero = IndexedVector::zero(u.vec.ring(), u.vec.rank());
  z.tag = "bc";
  if (!c.is_zero()) z.word *= x_of(u, zero, c);
  z.expected = z.expected * esd_matrix(u.vec, zero, c);
  return z;
}

// ---------------------------------------------------------------------------

namespace {

TraceStep step(const std::string& rel, std::size_t pos, std::initializer_list<std::pair<const char*, Binding>> params) {
  TraceStep s;
  s.relation = rel;
  s.position = pos;
  for (const auto& [k, v] : params) s.params.set(k, v);
  return s;
}

// X_{k,-1}(a) -> X_{1,-k}(a sign k) and back, through S0.
Letter s0_image(const Letter& l) {
  const long s = -static_cast<long>(sign(l.i)) * sign(l.j);
  return Letter{-l.j, -l.i, l.param() * s, false};
}

bool in_radical(const Letter& l) { return l.i == 1 || l.j == -1; }

}  // namespace

std::optional<SteinbergWord> e1_normal_form(const SteinbergWord& w, DerivationTrace* trace) {
  const int n = w.rank();
  std::vector<Letter> ls(w.letters().begin(), w.letters().end());
  for (const auto& l : ls)
    if (!in_radical(l) || (l.i == -1 && l.j == 1)) return std::nullopt;
  auto record = [&](TraceStep s) {
    if (trace) trace->push_back(std::move(s));
  };
  auto s0 = [&](std::size_t pos) {
    const Letter& l = ls[pos];
    record(step("S0", pos, {{"i", static_cast<long>(l.i)}, {"j", static_cast<long>(l.j)}, {"a", l.param()}}));
    ls[pos] = s0_image(l);
  };
  for (std::size_t p = 0; p < ls.size(); ++p)
    if (ls[p].i != 1) s0(p);
  // every letter is now X_{1,k}; sort by k, X_{1,-1} last
  auto key = [&](const Letter& l) {
    return l.j == -1 ? std::numeric_limits<std::size_t>::max() : position(l.j, n);
  };
  for (;;) {
    std::size_t p = 0;
    while (p + 1 < ls.size() && key(ls[p]) <= key(ls[p + 1])) ++p;
    if (p + 1 >= ls.size()) break;
    const Letter x = ls[p];
    const Letter y = ls[p + 1];
    if (y.j != -x.j) {
      record(step("S2", p,
                  {{"i", 1L}, {"j", static_cast<long>(x.j)}, {"h", 1L}, {"k", static_cast<long>(y.j)},
                   {"a", x.param()}, {"b", y.param()}}));
      ls[p] = Letter{1, y.j, y.param(), false};
      ls[p + 1] = Letter{1, x.j, x.param(), false};
      continue;
    }
    // X_{1j}(a) X_{1,-j}(b): turn the second into X_{j,-1}(b'), apply S5, turn it back
    s0(p + 1);
    const RingValue bp = ls[p + 1].param();
    record(step("S5", p, {{"i", 1L}, {"j", static_cast<long>(x.j)}, {"a", x.param()}, {"b", bp}}));
    const RingValue two_ab = x.param() * bp * 2L;
    ls[p] = Letter{1, -1, two_ab, false};
    ls[p + 1] = Letter{x.j, -1, bp, false};
    ls.insert(ls.begin() + static_cast<long>(p) + 2, Letter{1, x.j, x.param(), false});
    s0(p + 1);
  }
  SteinbergWord sorted(w.ring(), n, std::move(ls));
  std::vector<TraceStep> steps;
  SteinbergWord reduced = free_reduce(sorted, ReduceOptions{true}, trace ? &steps : nullptr);
  if (trace) trace->insert(trace->end(), steps.begin(), steps.end());
  return reduced;
}

std::optional<DerivationTrace> certify_e1(const SteinbergWord& lhs, const SteinbergWord& rhs) {
  if (lhs.ring() != rhs.ring() || lhs.rank() != rhs.rank()) return std::nullopt;
  DerivationTrace left;
  DerivationTrace right;
  auto l = e1_normal_form(lhs, &left);
  auto r = e1_normal_form(rhs, &right);
  if (!l || !r || l->size() != r->size()) return std::nullopt;
  for (std::size_t p = 0; p < l->size(); ++p)
    if (!same_letter(l->letters()[p], r->letters()[p])) return std::nullopt;
  DerivationTrace back = reverse_trace(right);
  left.insert(left.end(), back.begin(), back.end());
  return left;
}

}  // namespace stsp
