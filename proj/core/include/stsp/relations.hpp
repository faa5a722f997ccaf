#pragma once

// Data-driven relation catalogue, derivation traces and the rewrite engine.
//
// Every relation is a record (id, family, guard, sampler, sides).  `sides`
// instantiates both sides as explicit words (or one word and a target
// matrix); `check_relation` compares their images under phi exactly.
// Relations flagged `rewrite` can also be used as trace steps: the left
// side is matched literally at a position and replaced by the right side.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stsp/elements.hpp"
#include "stsp/sampling.hpp"

namespace stsp {

using Binding = std::variant<long, RingValue, IndexedVector, OrbitVector, OrbitPair, SteinbergWord>;

class Bindings {
 public:
  Bindings() = default;
  Bindings& set(const std::string& name, Binding value);

  bool has(const std::string& name) const { return values_.count(name) != 0; }
  const Binding& at(const std::string& name) const;
  const std::map<std::string, Binding>& values() const noexcept { return values_; }

  long index(const std::string& name) const;
  const RingValue& scalar(const std::string& name) const;
  /// Vector bindings; orbit vectors and pairs are read as their vectors.
  IndexedVector vec(const std::string& name) const;
  const OrbitVector& orbit(const std::string& name) const;
  const OrbitPair& pair(const std::string& name) const;
  const SteinbergWord& word(const std::string& name) const;
  /// Vector with its witness when the binding has one.
  Anchor anchor(const std::string& name) const;

 private:
  std::map<std::string, Binding> values_;
};

std::string describe(const Binding& b);

struct TraceStep {
  std::string relation;
  std::size_t position = 0;
  bool forward = true;
  Bindings params;
};
using DerivationTrace = std::vector<TraceStep>;

struct Sides {
  SteinbergWord lhs;
  std::optional<SteinbergWord> rhs;
  /// Used instead of phi(rhs) when there is no right-hand word.
  std::optional<SympMatrix> target;
};

/// What a sampler gets to work with.
struct SampleContext {
  RingPtr ring;  // the suite's base ring R
  int n = 3;
  Rng& rng;
};

struct Relation {
  std::string id;
  std::string family;  // S, K, X, Y, KL, T, Z, L
  std::string statement;
  std::function<Bindings(SampleContext&)> sample;
  /// Throws GuardViolated when the bindings do not meet the hypotheses.
  std::function<void(const Bindings&)> guard;
  std::function<Sides(const Bindings&)> sides;
  /// Matched literally by apply_relation.
  bool rewrite = false;
  /// Scalars that the shrinker may move toward 0 or 1.
  std::vector<std::string> shrinkable;
};

const std::vector<Relation>& catalogue();
const Relation* find_relation(std::string_view id);
/// Family letter or relation id filter; comma separated; empty = all.
std::vector<const Relation*> select_relations(std::string_view filter);

struct CheckResult {
  bool pass = false;
  SympMatrix lhs;
  SympMatrix rhs;
};

/// Guard, instantiate, compare phi-images.
CheckResult check_relation(const Relation& rel, const Bindings& b);

/// Helper for guards.
void guard_that(bool condition, const std::string& what);

// ---------------------------------------------------------------------------
// Rewriting

/// Rewrites one step; throws PatternMismatch if the step does not apply.
SteinbergWord apply_relation(const SteinbergWord& w, const TraceStep& step);
SteinbergWord replay(const SteinbergWord& source, const DerivationTrace& trace);
/// Steps in reverse order with directions flipped.
DerivationTrace reverse_trace(const DerivationTrace& trace);

TraceStep cancel_step(std::size_t position, const Letter& l, bool single);
TraceStep merge_step(std::size_t position, int i, int j, const RingValue& a, const RingValue& b);

// Catalogue sections, defined next to the modules they belong to.
void add_steinberg_relations(std::vector<Relation>& out);
void add_relative_relations(std::vector<Relation>& out);
void add_z_relations(std::vector<Relation>& out);

}  // namespace stsp
