#include "stsp/suite.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <thread>

#include <json.hpp>

namespace stsp {

using json = nlohmann::ordered_json;

namespace {

json matrix_json(const std::vector<std::vector<std::string>>& rows) { return json(rows); }

json binding_json(const Binding& b) {
  if (auto p = std::get_if<long>(&b)) return *p;
  if (auto p = std::get_if<RingValue>(&b)) return p->str();
  if (auto p = std::get_if<IndexedVector>(&b)) {
    json a = json::array();
    for (const auto& e : p->entries()) a.push_back(e.str());
    return a;
  }
  return describe(b);
}

json bindings_json(const Bindings& b) {
  json o = json::object();
  for (const auto& [k, v] : b.values()) o[k] = binding_json(v);
  return o;
}

std::string bindings_text(const Bindings& b) { return bindings_json(b).dump(); }

bool is_guard(const Error& e) { return e.code() == ErrorCode::GuardViolated; }

// Outcome of one check: pass, fail (with matrices or an error), or guard rejection.
struct Outcome {
  enum Kind { Pass, Fail, Rejected } kind = Pass;
  CheckResult result;
  std::string error;
};

Outcome run_check(const Relation& rel, const Bindings& b) {
  Outcome o;
  try {
    o.result = check_relation(rel, b);
    o.kind = o.result.pass ? Outcome::Pass : Outcome::Fail;
  } catch (const Error& e) {
    o.kind = is_guard(e) ? Outcome::Rejected : Outcome::Fail;
    o.error = e.what();
  } catch (const std::exception& e) {
    o.kind = Outcome::Fail;
    o.error = e.what();
  }
  return o;
}

// Moves shrinkable scalars toward 0, then 1, while the check keeps failing.
Bindings shrink(const Relation& rel, Bindings b) {
  for (const auto& name : rel.shrinkable) {
    if (!b.has(name) || !std::holds_alternative<RingValue>(b.at(name))) continue;
    const RingPtr ring = b.scalar(name).ring();
    for (const RingValue& candidate : {ring->zero(), ring->one()}) {
      if (b.scalar(name) == candidate) break;
      Bindings trial = b;
      trial.set(name, candidate);
      if (run_check(rel, trial).kind == Outcome::Fail) {
        b = trial;
        break;
      }
    }
  }
  return b;
}

constexpr int kMaxResample = 32;

}  // namespace

void validate(const SuiteConfig& cfg) {
  if (cfg.n < 3) raise(ErrorCode::ConfigError, "n must be at least 3, got " + std::to_string(cfg.n));
  if (cfg.samples < 1) raise(ErrorCode::ConfigError, "samples must be at least 1, got " + std::to_string(cfg.samples));
  if (cfg.n_max > 64) raise(ErrorCode::ConfigError, "N_max above 64");
  try {
    parse_ring(cfg.ring);
  } catch (const Error& e) {
    raise(ErrorCode::ConfigError, std::string("ring: ") + e.what());
  }
  try {
    select_relations(cfg.family);
  } catch (const Error& e) {
    raise(ErrorCode::ConfigError, e.what());
  }
}

long SuiteReport::failures() const {
  long f = 0;
  for (const auto& r : records) f += r.failures;
  return f;
}

unsigned suite_threads() {
  if (const char* env = std::getenv("STSP_THREADS")) {
    const long k = std::strtol(env, nullptr, 10);
    if (k >= 1) return static_cast<unsigned>(k);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

std::uint64_t relation_seed(std::uint64_t seed, const std::string& id) { return seed ^ fnv1a(id); }

RelationRecord run_relation(const Relation& rel, const RingPtr& ring, const SuiteConfig& cfg) {
  RelationRecord rec;
  rec.relation_id = rel.id;
  rec.family = rel.family;
  const std::uint64_t seed = relation_seed(cfg.seed, rel.id);
  Rng rng(seed);
  for (long k = 0; k < cfg.samples; ++k) {
    Outcome o;
    Bindings b;
    int tries = 0;
    for (;; ++tries) {
      SampleContext ctx{ring, cfg.n, rng};
      try {
        b = rel.sample(ctx);
        o = run_check(rel, b);
      } catch (const Error& e) {
        o.kind = is_guard(e) ? Outcome::Rejected : Outcome::Fail;
        o.error = e.what();
      }
      if (o.kind != Outcome::Rejected || tries + 1 >= kMaxResample) break;
      ++rec.resampled;
    }
    if (o.kind == Outcome::Rejected) {
      o.kind = Outcome::Fail;
      o.error = "no admissible sample after " + std::to_string(kMaxResample) + " draws: " + o.error;
    }
    ++rec.samples;
    if (o.kind != Outcome::Fail) continue;
    ++rec.failures;
    if (rec.first_counterexample) continue;
    Counterexample ce;
    ce.seed = seed;
    ce.sample = k;
    if (!b.values().empty()) {
      b = shrink(rel, b);
      o = run_check(rel, b);
    }
    ce.bindings = bindings_text(b);
    ce.error = o.error;
    if (o.error.empty()) {
      ce.phi_lhs = o.result.lhs.rows();
      ce.phi_rhs = o.result.rhs.rows();
    }
    rec.first_counterexample = ce;
  }
  return rec;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  const RingPtr ring = parse_ring(cfg.ring);
  const auto rels = select_relations(cfg.family);
  SuiteReport rep;
  rep.config = cfg;
  rep.records.resize(rels.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < rels.size();) rep.records[k] = run_relation(*rels[k], ring, cfg);
  };
  const unsigned threads = std::min<unsigned>(suite_threads(), static_cast<unsigned>(std::max<std::size_t>(rels.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::string report_json(const SuiteReport& report) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["config"] = {{"ring", report.config.ring},
                 {"n", report.config.n},
                 {"seed", report.config.seed},
                 {"samples", report.config.samples},
                 {"family", report.config.family},
                 {"n_max", report.config.n_max}};
  json recs = json::array();
  for (const auto& r : report.records) {
    json o;
    o["relation_id"] = r.relation_id;
    o["family"] = r.family;
    o["samples"] = r.samples;
    o["failures"] = r.failures;
    o["resampled"] = r.resampled;
    if (r.first_counterexample) {
      const auto& c = *r.first_counterexample;
      json ce;
      ce["seed"] = c.seed;
      ce["sample"] = c.sample;
      ce["bindings"] = json::parse(c.bindings);
      if (c.error.empty()) {
        ce["phi_lhs"] = matrix_json(c.phi_lhs);
        ce["phi_rhs"] = matrix_json(c.phi_rhs);
      } else {
        ce["error"] = c.error;
      }
      o["first_counterexample"] = ce;
    } else {
      o["first_counterexample"] = nullptr;
    }
    recs.push_back(o);
  }
  j["records"] = recs;
  j["failures"] = report.failures();
  j["pass"] = report.failures() == 0;
  return j.dump(2) + "\n";
}

std::string check_json(const Relation& rel, std::uint64_t seed, const Bindings& b, const CheckResult& r) {
  json j;
  j["relation_id"] = rel.id;
  j["seed"] = seed;
  j["bindings"] = bindings_json(b);
  j["phi_lhs"] = matrix_json(r.lhs.rows());
  j["phi_rhs"] = matrix_json(r.rhs.rows());
  j["pass"] = r.pass;
  return j.dump(2) + "\n";
}

std::string trace_json(const DerivationTrace& trace) {
  json a = json::array();
  for (const auto& s : trace) {
    json o;
    o["relation"] = s.relation;
    o["position"] = s.position;
    o["forward"] = s.forward;
    o["params"] = bindings_json(s.params);
    a.push_back(o);
  }
  return a.dump(2) + "\n";
}

DerivationTrace parse_trace(const RingPtr& ring, int n, const std::string& text) {
  json a;
  try {
    a = json::parse(text);
  } catch (const json::exception& e) {
    raise(ErrorCode::ParseError, std::string("trace: ") + e.what());
  }
  if (!a.is_array()) raise(ErrorCode::ParseError, "trace must be a JSON array of steps");
  DerivationTrace out;
  for (const auto& o : a) {
    TraceStep s;
    try {
      s.relation = o.at("relation").get<std::string>();
      s.position = o.at("position").get<std::size_t>();
      s.forward = o.value("forward", true);
      const json params = o.value("params", json::object());
      for (const auto& [k, v] : params.items()) {
        if (v.is_number_integer()) {
          s.params.set(k, v.get<long>());
        } else if (v.is_string()) {
          s.params.set(k, parse_value(ring, v.get<std::string>()));
        } else if (v.is_array()) {
          std::vector<RingValue> e;
          for (const auto& x : v) e.push_back(parse_value(ring, x.get<std::string>()));
          s.params.set(k, IndexedVector::from_entries(ring, n, std::move(e)));
        } else {
          raise(ErrorCode::ParseError, "trace parameter " + k + " has an unsupported type");
        }
      }
    } catch (const json::exception& e) {
      raise(ErrorCode::ParseError, std::string("trace step: ") + e.what());
    }
    out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Demo pipeline

std::vector<std::string> demo_scenarios() { return {"trace-trivial", "nontrivial-phi", "dilation-needed"}; }

namespace {

TraceStep step_of(const std::string& rel, std::size_t pos, std::initializer_list<std::pair<const char*, Binding>> ps) {
  TraceStep s;
  s.relation = rel;
  s.position = pos;
  for (const auto& [k, v] : ps) s.params.set(k, v);
  return s;
}

struct Scenario {
  SteinbergWord g;
  RingValue a;
  DerivationTrace trace;
};

Scenario build_scenario(const std::string& name) {
  const RingPtr Z = integers();
  const RingValue two = Z->from_integer(2);
  const int n = 3;
  if (name == "trace-trivial") {
    // X_12(2t) X_12(5t) X_12(-7t): two merges and a cancellation
    const RingPtr P = polynomials(Z, {"t"});
    Scenario s{parse_word(P, n, "X(1,2;2*t)*X(1,2;5*t)*X(1,2;-7*t)"), two, {}};
    const RingValue t = parse_value(P, "t");
    s.trace.push_back(merge_step(0, 1, 2, t * 2L, t * 5L));
    s.trace.push_back(merge_step(0, 1, 2, t * 7L, t * -7L));
    s.trace.push_back(cancel_step(0, Letter{1, 2, P->zero(), false}, true));
    return s;
  }
  if (name == "nontrivial-phi") {
    const RingPtr P = polynomials(Z, {"t"});
    return Scenario{parse_word(P, n, "X(1,2;t)"), two, {}};
  }
  if (name == "dilation-needed") {
    // [X_13(t/4), X_32(t/4)] X_12(-t^2/16) over Z_2[t]
    const RingPtr P = polynomials(localized(Z, two), {"t"});
    Scenario s{parse_word(P, n, "X(1,3;t/4)*X(3,2;t/4)*X(1,3;-t/4)*X(3,2;-t/4)*X(1,2;-t^2/16)"), two, {}};
    const RingValue q = parse_value(P, "t/4");
    s.trace.push_back(step_of("S3", 0, {{"i", 1L}, {"j", 3L}, {"k", 2L}, {"a", q}, {"b", q}}));
    // X_12(q^2) X_32(q) X_13(q) X_13(-q) X_32(-q) X_12(-q^2)
    s.trace.push_back(cancel_step(2, Letter{1, 3, q, false}, false));
    s.trace.push_back(cancel_step(1, Letter{3, 2, q, false}, false));
    s.trace.push_back(cancel_step(0, Letter{1, 2, q * q, false}, false));
    return s;
  }
  raise(ErrorCode::ConfigError, "unknown scenario '" + name + "'");
}

}  // namespace

PipelineReport demo_local_global(const std::string& scenario, unsigned n_max) {
  Scenario s = build_scenario(scenario);
  PipelineReport r;
  r.scenario = scenario;
  r.word = s.g.str();
  r.ring = s.g.ring()->spec();
  r.a = s.a.str();
  try {
    DilationResult d = dilation_search(s.g, s.a, n_max, s.trace.empty() ? nullptr : &s.trace);
    r.matrix_identity = d.matrix_identity;
    r.N_found = d.N;
    r.trace_replayed = d.trace_replayed;
    r.trace = d.dilated_trace;
    if (d.dilated) {
      // gluing on g(a^N t) over Z[t] with a = 2, b = 3, (-1) 2 + 1 3 = 1
      const RingPtr P = d.dilated->ring();
      const RingPtr base = as_polynomial(*P).base();
      r.glue = comaximal_glue_check(*d.dilated, base->from_integer(2), base->from_integer(3), base->from_integer(-1),
                                    base->one());
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::HypothesisViolated) throw;
    r.matrix_identity = false;
    r.note = e.what();
  }
  if (scenario == "nontrivial-phi") {
    r.as_expected = !r.matrix_identity && !r.N_found;
  } else if (scenario == "trace-trivial") {
    r.as_expected = r.N_found == 0u && r.trace_replayed && r.glue && r.glue->holds();
  } else {
    r.as_expected = r.N_found == 2u && r.trace_replayed && r.glue && r.glue->holds();
  }
  return r;
}

std::string pipeline_json(const PipelineReport& r) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["scenario"] = r.scenario;
  j["word"] = r.word;
  j["ring"] = r.ring;
  j["a"] = r.a;
  j["N_found"] = r.N_found ? json(*r.N_found) : json(nullptr);
  j["matrix_identity"] = r.matrix_identity;
  j["trace_replayed"] = r.trace_replayed;
  if (r.glue) {
    j["glue"] = {{"a", "2"},
                 {"b", "3"},
                 {"hypothesis_a", r.glue->hypothesis_a},
                 {"hypothesis_b", r.glue->hypothesis_b},
                 {"conclusion", r.glue->conclusion}};
  } else {
    j["glue"] = nullptr;
  }
  if (!r.note.empty()) j["note"] = r.note;
  j["as_expected"] = r.as_expected;
  j["trace"] = json::parse(trace_json(r.trace));
  return j.dump(2) + "\n";
}

}  // namespace stsp
