// stsp: property-suite runner, local-global demo and small utilities.
//
// Exit status: 0 pass, 1 failure, 2 configuration or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stsp/suite.hpp"

using namespace stsp;
using json = nlohmann::ordered_json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kConfig = 2;

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ConfigError:
    case ErrorCode::ParseError:
    case ErrorCode::InvalidDescriptor:
    case ErrorCode::DescriptorMismatch:
      return kConfig;
    default:
      return kFail;
  }
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) raise(ErrorCode::ConfigError, "cannot write " + path);
  f << text;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) raise(ErrorCode::ConfigError, "cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// "1,0,t,0,0,2" in layout order (-n..-1, 1..n)
IndexedVector parse_vector(const RingPtr& ring, int n, const std::string& text) {
  std::vector<RingValue> e;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) e.push_back(parse_value(ring, item));
  if (e.size() != static_cast<std::size_t>(2 * n))
    raise(ErrorCode::ConfigError, "vector '" + text + "' needs " + std::to_string(2 * n) + " entries");
  return IndexedVector::from_entries(ring, n, std::move(e));
}

json vector_json(const IndexedVector& v) {
  json a = json::array();
  for (const auto& e : v.entries()) a.push_back(e.str());
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symplectic Steinberg relation checker"};
  app.require_subcommand(1);

  SuiteConfig cfg;
  auto* verify = app.add_subcommand("verify", "Run the seeded relation suite");
  verify->add_option("--ring", cfg.ring, "Ring spec, e.g. Z/5[t]")->required();
  verify->add_option("--n", cfg.n, "Rank n >= 3")->required();
  verify->add_option("--seed", cfg.seed, "Seed")->required();
  verify->add_option("--samples", cfg.samples, "Samples per relation")->required();
  verify->add_option("--family", cfg.family, "Relation ids or family letters, comma separated");
  verify->add_option("--n-max", cfg.n_max, "Dilation bound");
  verify->add_option("--out", cfg.out, "Report path (default stdout)");

  std::string scenario;
  std::string demo_out;
  unsigned demo_nmax = 16;
  auto* demo = app.add_subcommand("demo", "Local-global pipeline on a curated word");
  demo->add_option("--scenario", scenario, "trace-trivial | nontrivial-phi | dilation-needed")->required();
  demo->add_option("--n-max", demo_nmax, "Dilation bound");
  demo->add_option("--out", demo_out, "Report path (default stdout)");

  std::string ring_spec = "Z", su, sv, sw;
  int rank = 3;
  auto* suslin = app.add_subcommand("decompose-suslin", "Symplectic Suslin decomposition of v along (u, w)");
  suslin->add_option("--ring", ring_spec, "Ring spec");
  suslin->add_option("--n", rank, "Rank n");
  suslin->add_option("--u", su, "u, entries for -n..-1,1..n, comma separated")->required();
  suslin->add_option("--v", sv, "v")->required();
  suslin->add_option("--w", sw, "w")->required();

  std::string rel_id;
  std::uint64_t check_seed = 0;
  auto* check = app.add_subcommand("check", "One seeded instance of a relation, with both phi-images");
  check->add_option("--relation", rel_id, "Relation id")->required();
  check->add_option("--ring", ring_spec, "Ring spec");
  check->add_option("--n", rank, "Rank n");
  check->add_option("--seed", check_seed, "Seed");

  std::string word_text, trace_path, expect_text;
  auto* rp = app.add_subcommand("replay", "Replay a trace file on a word");
  rp->add_option("--ring", ring_spec, "Ring spec");
  rp->add_option("--n", rank, "Rank n");
  rp->add_option("--word", word_text, "Source word, e.g. X(1,2;a)*X(2,-1;b)^-1")->required();
  rp->add_option("--trace", trace_path, "JSON array of steps")->required();
  rp->add_option("--expect", expect_text, "Target word");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kConfig;
  }

  try {
    if (*verify) {
      SuiteReport rep = run_suite(cfg);
      emit(report_json(rep), cfg.out);
      std::cerr << "relations " << rep.records.size() << ", failures " << rep.failures() << ", wall "
                << rep.wall_seconds << " s, threads " << suite_threads() << "\n";
      return rep.failures() == 0 ? kPass : kFail;
    }
    if (*demo) {
      PipelineReport r = demo_local_global(scenario, demo_nmax);
      emit(pipeline_json(r), demo_out);
      return r.as_expected ? kPass : kFail;
    }
    if (*suslin) {
      check_rank(rank);
      const RingPtr ring = parse_ring(ring_spec);
      const auto d = suslin_decompose(parse_vector(ring, rank, su), parse_vector(ring, rank, sv),
                                      parse_vector(ring, rank, sw));
      json j;
      j["ring"] = ring->spec();
      j["A"] = d.A.str();
      json parts = json::array();
      for (const auto& p : d.parts) {
        if (p.v.is_zero()) continue;
        parts.push_back({{"i", p.i}, {"j", p.j}, {"v", vector_json(p.v)}});
      }
      j["parts"] = parts;
      j["sum"] = vector_json(d.sum());
      j["vA"] = vector_json(d.v * d.A);
      j["sum_equals_vA"] = d.sum() == d.v * d.A;
      std::cout << j.dump(2) << "\n";
      return d.sum() == d.v * d.A ? kPass : kFail;
    }
    if (*check) {
      const Relation* rel = find_relation(rel_id);
      if (!rel) raise(ErrorCode::ConfigError, "unknown relation '" + rel_id + "'");
      check_rank(rank);
      Rng rng(check_seed);
      SampleContext ctx{parse_ring(ring_spec), rank, rng};
      Bindings b = rel->sample(ctx);
      CheckResult r = check_relation(*rel, b);
      std::cout << check_json(*rel, check_seed, b, r);
      return r.pass ? kPass : kFail;
    }
    if (*rp) {
      const RingPtr ring = parse_ring(ring_spec);
      const SteinbergWord w = parse_word(ring, rank, word_text);
      const SteinbergWord out = replay(w, parse_trace(ring, rank, slurp(trace_path)));
      std::cout << out.str() << "\n";
      if (expect_text.empty()) return kPass;
      const SteinbergWord target = parse_word(ring, rank, expect_text);
      bool same = out.size() == target.size();
      for (std::size_t k = 0; same && k < out.size(); ++k) same = same_letter(out.letters()[k], target.letters()[k]);
      return same ? kPass : kFail;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kFail;
  }
  return kPass;
}
