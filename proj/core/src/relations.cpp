#include "stsp/relations.hpp"

#include <algorithm>
#include <set>

namespace stsp {

// ---------------------------------------------------------------------------
// Bindings

Bindings& Bindings::set(const std::string& name, Binding value) {
  values_[name] = std::move(value);
  return *this;
}

const Binding& Bindings::at(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) raise(ErrorCode::GuardViolated, "missing binding '" + name + "'");
  return it->second;
}

template <class T>
static const T& get_as(const Bindings& b, const std::string& name, const char* kind) {
  const Binding& v = b.at(name);
  if (const T* p = std::get_if<T>(&v)) return *p;
  raise(ErrorCode::GuardViolated, "binding '" + name + "' is not a " + kind);
}

long Bindings::index(const std::string& name) const { return get_as<long>(*this, name, "index"); }
const RingValue& Bindings::scalar(const std::string& name) const { return get_as<RingValue>(*this, name, "scalar"); }
const OrbitVector& Bindings::orbit(const std::string& name) const { return get_as<OrbitVector>(*this, name, "orbit vector"); }
const OrbitPair& Bindings::pair(const std::string& name) const { return get_as<OrbitPair>(*this, name, "orbit pair"); }
const SteinbergWord& Bindings::word(const std::string& name) const { return get_as<SteinbergWord>(*this, name, "word"); }

IndexedVector Bindings::vec(const std::string& name) const {
  const Binding& v = at(name);
  if (auto p = std::get_if<IndexedVector>(&v)) return *p;
  if (auto p = std::get_if<OrbitVector>(&v)) return p->vector();
  raise(ErrorCode::GuardViolated, "binding '" + name + "' is not a vector");
}

Anchor Bindings::anchor(const std::string& name) const {
  const Binding& v = at(name);
  if (auto p = std::get_if<IndexedVector>(&v)) return Anchor(*p);
  if (auto p = std::get_if<OrbitVector>(&v)) return Anchor(*p);
  raise(ErrorCode::GuardViolated, "binding '" + name + "' is not a vector");
}

std::string describe(const Binding& b) {
  struct V {
    std::string operator()(long x) const { return std::to_string(x); }
    std::string operator()(const RingValue& x) const { return x.str(); }
    std::string operator()(const IndexedVector& x) const { return x.str(); }
    std::string operator()(const OrbitVector& x) const { return x.vector().str() + " = phi(" + x.witness().str() + ")e_1"; }
    std::string operator()(const OrbitPair& x) const {
      return "(" + x.first().str() + ", " + x.second().str() + ") = phi(" + x.witness().str() + ")(e_1,e_2)";
    }
    std::string operator()(const SteinbergWord& x) const { return x.str(); }
  };
  return std::visit(V{}, b);
}

// ---------------------------------------------------------------------------
// Catalogue

const std::vector<Relation>& catalogue() {
  static const std::vector<Relation> all = [] {
    std::vector<Relation> out;
    add_steinberg_relations(out);
    add_relative_relations(out);
    add_z_relations(out);
    std::set<std::string> seen;
    for (const auto& r : out)
      if (!seen.insert(r.id).second) raise(ErrorCode::ConfigError, "duplicate relation id " + r.id);
    return out;
  }();
  return all;
}

const Relation* find_relation(std::string_view id) {
  for (const auto& r : catalogue())
    if (r.id == id) return &r;
  return nullptr;
}

std::vector<const Relation*> select_relations(std::string_view filter) {
  std::vector<std::string> wanted;
  std::string cur;
  for (char c : filter) {
    if (c == ',') {
      if (!cur.empty()) wanted.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) wanted.push_back(cur);
  std::vector<const Relation*> out;
  for (const auto& r : catalogue()) {
    bool keep = wanted.empty();
    for (const auto& w : wanted)
      if (w == r.family || w == r.id) keep = true;
    if (keep) out.push_back(&r);
  }
  for (const auto& w : wanted) {
    bool known = std::any_of(catalogue().begin(), catalogue().end(),
                             [&](const Relation& r) { return r.family == w || r.id == w; });
    if (!known) raise(ErrorCode::ConfigError, "unknown relation family or id '" + w + "'");
  }
  return out;
}

void guard_that(bool condition, const std::string& what) {
  if (!condition) raise(ErrorCode::GuardViolated, what);
}

CheckResult check_relation(const Relation& rel, const Bindings& b) {
  if (rel.guard) rel.guard(b);
  Sides s = rel.sides(b);
  CheckResult out;
  out.lhs = phi(s.lhs);
  if (s.rhs) {
    out.rhs = phi(*s.rhs);
  } else if (s.target) {
    out.rhs = *s.target;
  } else {
    out.rhs = SympMatrix::identity(s.lhs.ring(), s.lhs.rank());
  }
  out.pass = out.lhs == out.rhs;
  return out;
}

// ---------------------------------------------------------------------------
// Rewriting

TraceStep cancel_step(std::size_t position, const Letter& l, bool single) {
  TraceStep s;
  s.relation = "free-cancel";
  s.position = position;
  s.params.set("i", static_cast<long>(l.i)).set("j", static_cast<long>(l.j)).set("a", l.param());
  s.params.set("single", static_cast<long>(single ? 1 : 0));
  return s;
}

TraceStep merge_step(std::size_t position, int i, int j, const RingValue& a, const RingValue& b) {
  TraceStep s;
  s.relation = "S1";
  s.position = position;
  s.params.set("i", static_cast<long>(i)).set("j", static_cast<long>(j)).set("a", a).set("b", b);
  return s;
}

namespace {

// Letters removed by free-cancel / inserted by insert-cancel-pair.
std::vector<Letter> cancel_letters(const TraceStep& step) {
  const int i = static_cast<int>(step.params.index("i"));
  const int j = static_cast<int>(step.params.index("j"));
  const RingValue& a = step.params.scalar("a");
  if (step.params.index("single")) return {Letter{i, j, a, false}};
  return {Letter{i, j, a, false}, Letter{i, j, -a, false}};
}

bool matches_at(const SteinbergWord& w, std::size_t pos, const std::vector<Letter>& pattern) {
  if (pos + pattern.size() > w.size()) return false;
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    const Letter& have = w.letters()[pos + k];
    const Letter& want = pattern[k];
    if (have.i != want.i || have.j != want.j) return false;
    if (have.a.ring() != want.a.ring()) return false;
    if (!(have.param() == want.param())) return false;
  }
  return true;
}

SteinbergWord splice(const SteinbergWord& w, std::size_t pos, std::size_t remove, const std::vector<Letter>& insert) {
  std::vector<Letter> out(w.letters().begin(), w.letters().begin() + pos);
  out.insert(out.end(), insert.begin(), insert.end());
  out.insert(out.end(), w.letters().begin() + pos + remove, w.letters().end());
  return SteinbergWord(w.ring(), w.rank(), std::move(out));
}

[[noreturn]] void mismatch(const SteinbergWord& w, const TraceStep& step, const std::string& why) {
  raise(ErrorCode::PatternMismatch, step.relation + (step.forward ? "" : " (backward)") + " at position " +
                                        std::to_string(step.position) + ": " + why + " in " + w.str());
}

}  // namespace

SteinbergWord apply_relation(const SteinbergWord& w, const TraceStep& step) {
  if (step.position > w.size()) mismatch(w, step, "position past the end");
  const bool is_cancel = step.relation == "free-cancel";
  if (is_cancel || step.relation == "insert-cancel-pair") {
    std::vector<Letter> letters = cancel_letters(step);
    if (letters.size() == 1 && !letters[0].a.is_zero()) mismatch(w, step, "single cancelled letter must be trivial");
    const bool removing = (is_cancel == step.forward);
    if (removing) {
      if (!matches_at(w, step.position, letters)) mismatch(w, step, "no cancelling pair");
      return splice(w, step.position, letters.size(), {});
    }
    return splice(w, step.position, 0, letters);
  }
  const Relation* rel = find_relation(step.relation);
  if (!rel) mismatch(w, step, "unknown relation");
  if (!rel->rewrite) mismatch(w, step, "relation is not a rewrite rule");
  Bindings params = step.params;
  if (!params.has("n")) params.set("n", static_cast<long>(w.rank()));
  if (rel->guard) rel->guard(params);
  Sides s = rel->sides(params);
  if (!s.rhs) mismatch(w, step, "relation has no right-hand word");
  const SteinbergWord& from = step.forward ? s.lhs : *s.rhs;
  const SteinbergWord& to = step.forward ? *s.rhs : s.lhs;
  if (!matches_at(w, step.position, from.letters())) mismatch(w, step, "pattern " + from.str() + " not found");
  return splice(w, step.position, from.size(), to.letters());
}

SteinbergWord replay(const SteinbergWord& source, const DerivationTrace& trace) {
  SteinbergWord w = source;
  for (const auto& step : trace) w = apply_relation(w, step);
  return w;
}

DerivationTrace reverse_trace(const DerivationTrace& trace) {
  DerivationTrace out(trace.rbegin(), trace.rend());
  for (auto& s : out) s.forward = !s.forward;
  return out;
}

}  // namespace stsp
