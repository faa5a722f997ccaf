#pragma once

// Shared helpers for the catalogue sections.

#include <string>
#include <vector>

#include "stsp/relations.hpp"

namespace stsp::cat {

inline RingPtr ring_of(const Bindings& b) {
  for (const auto& [name, v] : b.values()) {
    if (auto p = std::get_if<RingValue>(&v)) return p->ring();
    if (auto p = std::get_if<IndexedVector>(&v)) return p->ring();
    if (auto p = std::get_if<OrbitVector>(&v)) return p->ring();
    if (auto p = std::get_if<OrbitPair>(&v)) return p->witness().ring();
    if (auto p = std::get_if<SteinbergWord>(&v)) return p->ring();
  }
  raise(ErrorCode::GuardViolated, "bindings carry no ring");
}

inline int rank_of(const Bindings& b) { return static_cast<int>(b.index("n")); }
inline int idx(const Bindings& b, const std::string& name) { return static_cast<int>(b.index(name)); }

inline int pick_index(Rng& rng, int n) {
  const auto all = indices(n);
  return all[rng.below(all.size())];
}

/// Random index outside {+-i}.
inline int pick_other(Rng& rng, int n, int i) {
  for (;;) {
    int k = pick_index(rng, n);
    if (k != i && k != -i) return k;
  }
}

inline int pick_other2(Rng& rng, int n, int i, int j) {
  for (;;) {
    int k = pick_index(rng, n);
    if (k != i && k != -i && k != j && k != -j) return k;
  }
}

inline SteinbergWord gen(const RingPtr& ring, int n, int i, int j, const RingValue& a) {
  return SteinbergWord::generator(ring, n, i, j, a);
}

inline SteinbergWord one(const RingPtr& ring, int n) { return SteinbergWord(ring, n); }

inline IndexedVector zero_vec(const RingPtr& ring, int n) { return IndexedVector::zero(ring, n); }

inline void need_orth(const IndexedVector& u, const IndexedVector& v, const char* what) {
  guard_that(symp_form(u, v).is_zero(), std::string(what) + " must be orthogonal");
}

inline void need_zero_pair(const IndexedVector& u, int i, const char* what) {
  guard_that(u.zero_pair(i), std::string(what) + " needs a zero pair at " + std::to_string(i));
}

inline void need_distinct(int i, int j) { guard_that(i != j, "root needs i != j"); }

inline SteinbergWord act(const SteinbergWord& g, const SteinbergWord& x) { return g * x * g.inverse(); }

inline Relation rel(std::string id, std::string family, std::string statement) {
  Relation r;
  r.id = std::move(id);
  r.family = std::move(family);
  r.statement = std::move(statement);
  return r;
}

}  // namespace stsp::cat
