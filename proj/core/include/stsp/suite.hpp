#pragma once

// Seeded property-suite execution over the relation catalogue, the
// local-global demo pipeline and their JSON reports.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stsp/local_global.hpp"
#include "stsp/relations.hpp"

namespace stsp {

inline constexpr int kReportSchemaVersion = 1;

struct SuiteConfig {
  std::string ring = "Z";
  int n = 3;
  std::uint64_t seed = 0;
  long samples = 20;
  std::string family;  // ids or family letters, comma separated; empty = all
  unsigned n_max = 16;
  std::string out;     // report path, empty = stdout
};

/// Throws ConfigError.
void validate(const SuiteConfig& cfg);

struct Counterexample {
  std::uint64_t seed = 0;  // the relation's seed
  long sample = 0;
  std::string bindings;
  std::vector<std::vector<std::string>> phi_lhs;
  std::vector<std::vector<std::string>> phi_rhs;
  std::string error;       // set when the check threw
};

struct RelationRecord {
  std::string relation_id;
  std::string family;
  long samples = 0;
  long failures = 0;
  long resampled = 0;      // guard rejections of sampled bindings
  std::optional<Counterexample> first_counterexample;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<RelationRecord> records;
  double wall_seconds = 0;  // not serialized

  long failures() const;
};

/// Threads from STSP_THREADS, else hardware concurrency.
unsigned suite_threads();
std::uint64_t relation_seed(std::uint64_t seed, const std::string& id);

RelationRecord run_relation(const Relation& rel, const RingPtr& ring, const SuiteConfig& cfg);
SuiteReport run_suite(const SuiteConfig& cfg);
std::string report_json(const SuiteReport& report);

/// {relation_id, seed, bindings, phi_lhs, phi_rhs, pass}
std::string check_json(const Relation& rel, std::uint64_t seed, const Bindings& b, const CheckResult& r);

std::string trace_json(const DerivationTrace& trace);
/// Inverse of trace_json; strings are parsed as values of `ring`.  Throws ParseError.
DerivationTrace parse_trace(const RingPtr& ring, int n, const std::string& text);

// ---------------------------------------------------------------------------
// Demo pipeline

struct PipelineReport {
  std::string scenario;
  std::string word;
  std::string ring;
  std::string a;
  std::optional<unsigned> N_found;
  bool matrix_identity = false;
  bool trace_replayed = false;
  bool as_expected = false;        // the scenario's documented outcome was observed
  std::string note;
  std::optional<GlueReport> glue;
  DerivationTrace trace;           // the replayed (dilated) trace
};

std::vector<std::string> demo_scenarios();
/// Throws ConfigError for an unknown scenario.
PipelineReport demo_local_global(const std::string& scenario, unsigned n_max = 16);
std::string pipeline_json(const PipelineReport& r);

}  // namespace stsp
