#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "../support/oracle.hpp"

using namespace stsp;

namespace {

const std::vector<std::string> kCatalogue = {
    "S0",  "S1",  "S2",  "S3",  "S4",  "S5",  "K1",  "K2",  "K3",  "K4",  "K5",  "K6",
    "K7",  "X0",  "X1",  "X2",  "X3",  "X4",  "X5",  "X6",  "X7",  "X8",  "X9",  "X10",
    "Y0",  "Y1",  "Y2",  "Y3",  "Y4",  "Y5",  "Y6",  "Y7",  "Y8",  "Y9",  "Y10", "Y11",
    "Y12", "Y13", "KL0", "KL1", "KL2", "KL3", "KL4", "KL5", "KL6", "KL7", "T0",  "T1",
    "T2",  "T3",  "T4",  "T5",  "T6",  "Z0",  "Z1",  "Z2",  "Z3",  "Z4",  "Z5",  "Z6",
    "Z7",  "onemore", "commutator", "permutation", "forgotten", "orth", "x=z", "decomposition",
    "conj", "add", "add-corollary", "symm", "self-symm", "5+6"};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE_MESSAGE(f.good(), "missing golden file " << path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string golden(const std::string& name) { return slurp(std::string(STSP_GOLDEN_DIR) + "/" + name); }

SuiteConfig example_config() {
  SuiteConfig c;
  c.ring = "Z/5";
  c.n = 3;
  c.seed = 42;
  c.samples = 50;
  c.family = "S";
  return c;
}

}  // namespace

TEST_CASE("catalogue coverage") {
  std::vector<std::string> ids;
  for (const auto& r : catalogue()) ids.push_back(r.id);
  CHECK(ids == kCatalogue);
  for (const auto& r : catalogue()) {
    CAPTURE(r.id);
    CHECK(static_cast<bool>(r.sample));
    CHECK(static_cast<bool>(r.sides));
    CHECK_FALSE(r.family.empty());
    CHECK_FALSE(r.statement.empty());
    CHECK(find_relation(r.id) == &r);
  }
  CHECK(select_relations("").size() == kCatalogue.size());
  CHECK(select_relations("S").size() == 6);
  CHECK(select_relations("KL").size() == 8);
  CHECK(select_relations("S1,Z3").size() == 2);
  CHECK_THROWS_AS(select_relations("nope"), Error);
}

TEST_CASE("every relation passes on a few samples") {
  SuiteConfig c;
  c.samples = 5;
  for (const char* ring : {"Z", "Z/4", "Z/5[t]"}) {
    CAPTURE(ring);
    auto R = parse_ring(ring);
    for (const auto& r : catalogue()) {
      CAPTURE(r.id);
      auto rec = run_relation(r, R, c);
      CHECK(rec.failures == 0);
      CHECK(rec.samples == 5);
    }
  }
}

TEST_CASE("suite example") {
  auto rep = run_suite(example_config());
  REQUIRE(rep.records.size() == 6);
  for (int k = 0; k < 6; ++k) CHECK(rep.records[k].relation_id == "S" + std::to_string(k));
  CHECK(rep.failures() == 0);
  const std::string text = report_json(rep);
  CHECK(text == report_json(run_suite(example_config())));
  CHECK(text == golden("verify_Z5_n3_seed42_S.json"));
  auto j = nlohmann::json::parse(text);
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["pass"] == true);

  auto bad = example_config();
  bad.samples = 0;
  CHECK_THROWS_AS(run_suite(bad), Error);
  bad = example_config();
  bad.n = 2;
  CHECK_THROWS_AS(validate(bad), Error);
  bad = example_config();
  bad.ring = "Loc(Z/4,2)";
  CHECK_THROWS_AS(validate(bad), Error);
  bad = example_config();
  bad.family = "Q9";
  CHECK_THROWS_AS(validate(bad), Error);
}

TEST_CASE("thread count does not change the report") {
  auto cfg = example_config();
  cfg.family = "K,T";
  cfg.samples = 10;
  setenv("STSP_THREADS", "1", 1);
  auto one = report_json(run_suite(cfg));
  setenv("STSP_THREADS", "4", 1);
  CHECK(suite_threads() == 4);
  auto four = report_json(run_suite(cfg));
  unsetenv("STSP_THREADS");
  CHECK(one == four);
}

TEST_CASE("counterexamples are shrunk") {
  Relation broken;
  broken.id = "broken";
  broken.family = "S";
  broken.statement = "X_12(a) = X_12(a + 1)";
  broken.shrinkable = {"a"};
  broken.sample = [](SampleContext& c) {
    Bindings b;
    return b.set("n", static_cast<long>(c.n)).set("a", random_scalar(c.ring, c.rng));
  };
  broken.sides = [](const Bindings& b) {
    const RingValue& a = b.scalar("a");
    return Sides{SteinbergWord::generator(a.ring(), 3, 1, 2, a), SteinbergWord::generator(a.ring(), 3, 1, 2, a + 1L), {}};
  };
  SuiteConfig c;
  c.samples = 3;
  auto rec = run_relation(broken, integers(), c);
  CHECK(rec.failures == 3);
  REQUIRE(rec.first_counterexample.has_value());
  const auto& ce = *rec.first_counterexample;
  CHECK(ce.sample == 0);
  CHECK(ce.seed == relation_seed(0, "broken"));
  // a moved to 0: the left side is the identity
  auto id = SympMatrix::identity(integers(), 3).rows();
  CHECK(ce.phi_lhs == id);
  CHECK(ce.phi_rhs == transvection_matrix(3, 1, 2, integers()->one()).rows());
}

TEST_CASE("guard rejections are resampled") {
  Relation picky;
  picky.id = "picky";
  picky.family = "S";
  picky.statement = "X_12(a) = X_12(a), a even";
  picky.sample = [](SampleContext& c) {
    Bindings b;
    return b.set("n", 3L).set("a", c.ring->from_integer(c.rng.range(0, 9)));
  };
  picky.guard = [](const Bindings& b) { guard_that(integer_value(b.scalar("a")) % 2 == 0, "a even"); };
  picky.sides = [](const Bindings& b) {
    auto w = SteinbergWord::generator(b.scalar("a").ring(), 3, 1, 2, b.scalar("a"));
    return Sides{w, w, {}};
  };
  SuiteConfig c;
  c.samples = 20;
  auto rec = run_relation(picky, integers(), c);
  CHECK(rec.failures == 0);
  CHECK(rec.resampled > 0);
}

TEST_CASE("trace json round-trip") {
  auto R = parse_ring("Z/5[t]");
  Rng rng(151);
  for (int k = 0; k < 20; ++k) {
    auto g = random_word(R, 3, rng, 3);
    auto src = g * g.inverse();
    DerivationTrace tr;
    free_reduce(src, {}, &tr);
    auto back = parse_trace(R, 3, trace_json(tr));
    REQUIRE(back.size() == tr.size());
    CHECK(replay(src, back).empty());
    CHECK(trace_json(back) == trace_json(tr));
  }
  CHECK_THROWS_AS(parse_trace(R, 3, "{"), Error);
  CHECK_THROWS_AS(parse_trace(R, 3, "[{\"relation\": 3}]"), Error);
}

TEST_CASE("check json") {
  Rng rng(7);
  SampleContext ctx{integers(), 3, rng};
  const auto& rel = *find_relation("S3");
  auto b = rel.sample(ctx);
  auto j = nlohmann::json::parse(check_json(rel, 7, b, check_relation(rel, b)));
  CHECK(j["relation_id"] == "S3");
  CHECK(j["pass"] == true);
  CHECK(j["phi_lhs"] == j["phi_rhs"]);
  CHECK(j["phi_lhs"].size() == 6);
}

TEST_CASE("demo scenarios") {
  CHECK(demo_scenarios() == std::vector<std::string>{"trace-trivial", "nontrivial-phi", "dilation-needed"});
  auto triv = demo_local_global("trace-trivial");
  CHECK(triv.as_expected);
  REQUIRE(triv.N_found.has_value());
  CHECK(*triv.N_found == 0);
  CHECK(triv.trace_replayed);

  auto gate = demo_local_global("nontrivial-phi");
  CHECK(gate.as_expected);
  CHECK_FALSE(gate.matrix_identity);
  CHECK_FALSE(gate.N_found.has_value());

  auto dil = demo_local_global("dilation-needed");
  CHECK(dil.as_expected);
  REQUIRE(dil.N_found.has_value());
  CHECK(*dil.N_found == 2);
  CHECK(dil.trace_replayed);
  REQUIRE(dil.glue.has_value());
  CHECK(dil.glue->holds());

  auto capped = demo_local_global("dilation-needed", 1);
  CHECK_FALSE(capped.N_found.has_value());
  CHECK_FALSE(capped.as_expected);
  CHECK_THROWS_AS(demo_local_global("nope"), Error);

  for (const auto& s : demo_scenarios()) {
    CAPTURE(s);
    CHECK(pipeline_json(demo_local_global(s)) == golden("demo_" + s + ".json"));
  }
}
