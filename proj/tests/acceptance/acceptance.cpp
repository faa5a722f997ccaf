// Acceptance run: one line per criterion, exit status 1 if any is red.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "../support/oracle.hpp"

using namespace stsp;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0 = no time limit
  std::function<Outcome()> run;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string counted(long checks, long bad) { return std::to_string(checks) + " checks, " + std::to_string(bad) + " failures"; }

const char* const kFormRings[] = {"Z", "Z/4", "Z/5", "Z/5[t]"};

Outcome form_preservation() {
  long checks = 0, bad = 0;
  for (const char* s : kFormRings) {
    const RingPtr R = parse_ring(s);
    const bool dense = R->kind() != RingKind::Polynomial;
    const mpz_class m = R->kind() == RingKind::IntegerMod ? as_integer_mod(*R).modulus() : mpz_class(0);
    for (int n : {3, 4}) {
      Rng rng(fnv1a(s) + static_cast<std::uint64_t>(n));
      for (int k = 0; k < 500; ++k) {
        const auto idx = indices(n);
        const int i = idx[rng.below(idx.size())];
        int j = i;
        while (j == i) j = idx[rng.below(idx.size())];
        const RingValue a = random_scalar(R, rng);
        const SympMatrix T = transvection_matrix(n, i, j, a);
        const IndexedVector u = random_vector(R, n, rng);
        const IndexedVector v = random_orthogonal(u, rng);
        const RingValue b = random_scalar(R, rng);
        const SympMatrix E = esd_matrix(u, v, b);
        checks += 2;
        bad += !is_symplectic(T);
        bad += !is_symplectic(E);
        if (dense) {
          checks += 2;
          bad += !oracle::preserves_form(oracle::from_library(T));
          bad += !(oracle::from_library(E) ==
                   oracle::esd(n, oracle::from_library(u), oracle::from_library(v), integer_value(b), m));
        }
      }
    }
  }
  return {bad == 0, counted(checks, bad)};
}

Outcome catalogue_phi() {
  long checks = 0, bad = 0;
  std::string first;
  for (const char* ring : {"Z", "Z/4"}) {
    SuiteConfig cfg;
    cfg.ring = ring;
    cfg.n = 3;
    cfg.seed = 2024;
    cfg.samples = 200;
    const SuiteReport rep = run_suite(cfg);
    for (const auto& r : rep.records) {
      checks += r.samples;
      bad += r.failures;
      if (r.failures && first.empty()) first = std::string(" first ") + r.relation_id + " over " + ring;
    }
  }
  return {bad == 0, std::to_string(catalogue().size()) + " relations x 200 x {Z, Z/4}, " + counted(checks, bad) + first};
}

Outcome suslin() {
  long checks = 0, bad = 0;
  for (const char* s : kFormRings) {
    const RingPtr R = parse_ring(s);
    for (int n : {3, 4}) {
      Rng rng(fnv1a(s) ^ 0x55u ^ static_cast<std::uint64_t>(n));
      for (int k = 0; k < 500; ++k) {
        const auto u = random_vector(R, n, rng), w = random_vector(R, n, rng);
        const auto v = random_orthogonal(u, rng);
        const auto d = suslin_decompose(u, v, w);
        ++checks;
        bool ok = d.sum() == v * d.A && d.A == symp_form(w, u);
        for (const auto& p : d.parts)
          ok = ok && symp_form(u, p.v).is_zero() && suslin_part(u, v, w, p.j, p.i) == p.v;
        bad += !ok;
      }
    }
  }
  return {bad == 0, counted(checks, bad)};
}

Outcome z_upper() {
  long checks = 0, bad = 0;
  const RingPtr Z = integers();
  Rng rng(4);
  for (int k = 0; k < 200; ++k) {
    const int n = 3 + static_cast<int>(k % 2);
    const SteinbergWord M = random_word(Z, n, rng, 3);
    const RingValue r = k % 3 == 0 ? Z->one() : small_scalar(Z, rng);
    const RingValue s = small_scalar(Z, rng);
    const SympMatrix m = phi(M);
    const IndexedVector u = m.column(1) * r;
    const IndexedVector w = -m.column(-1) * s;
    const Anchor ua = r.is_one() ? Anchor(OrbitVector(M)) : Anchor(u);
    const IndexedVector v = random_orthogonal(u, rng);
    const RingValue A = symp_form(w, u);
    const ZElement z = z_upper_A(ua, v, w);
    ++checks;
    const auto lhs = oracle::from_library(phi(z.word));
    bad += !(lhs == oracle::esd(n, oracle::from_library(u), oracle::from_library(v * A * A), 0));
  }
  return {bad == 0, counted(checks, bad)};
}

Outcome tulenbaev() {
  long checks = 0, bad = 0, blocks = 0;
  for (const char* s : {"B(Z,2)", "B(Z[x],2)"}) {
    const RingPtr B = parse_ring(s);
    const RingPtr Ba = localized_mixed(B);
    const auto& lb = as_localized(*Ba);
    Rng rng(fnv1a(s));
    for (int k = 0; k < 100; ++k) {
      const int n = 3;
      const bool away = k % 2 == 1;
      const OrbitVector u = away ? OrbitVector(random_word_avoiding(Ba, n, rng, 3, n)) : random_orbit(Ba, n, rng);
      const IndexedVector v = random_orthogonal(u.vector(), rng, away ? n : 0);
      auto scalar = [&] { return lb.fraction(random_ideal_element(B, rng), static_cast<unsigned>(rng.below(3))); };
      const RingValue a = scalar(), b = scalar();
      const TulenbaevGenerator x{u, v, a, b, rng.coin()};
      ++checks;
      try {
        const TulenbaevImage img = tulenbaev_T(x);
        bad += !tulenbaev_diagram_holds(img);
        if (away) {
          ++blocks;
          bad += !phi(img.element.word).block_trivial(n);
        }
      } catch (const Error& e) {
        ++bad;
        std::fprintf(stderr, "T failed: %s\n", e.what());
      }
    }
  }
  return {bad == 0, counted(checks, bad) + ", " + std::to_string(blocks) + " block checks"};
}

Outcome direct_system() {
  long checks = 0, bad = 0;
  const RingPtr Zt = parse_ring("Z[t]");
  const RingPtr B = parse_ring("B(Z,2)");
  oracle::Gen g(6);
  for (int k = 0; k < 200; ++k) {
    const oracle::Poly p = g.poly(static_cast<unsigned>(g.range(0, 4)), 30);
    const RingValue x = parse_value(Zt, p.text());
    for (unsigned i = 0; i <= 4; ++i) {
      const RingValue fi = phi_i(Zt, B, i)(x);
      mpq_class inv = 1;
      for (unsigned q = 0; q < i; ++q) inv /= 2;
      ++checks;
      bad += !(oracle::poly(fi) == p.scaled(inv));
      for (unsigned j = i; j <= 4; ++j) {
        ++checks;
        bad += !(phi_i(Zt, B, j)(DirectSystemMap{Zt, integers()->from_integer(2), i, j}.hom()(x)) == fi);
      }
    }
  }
  return {bad == 0, counted(checks, bad)};
}

Outcome dilation_demo() {
  const PipelineReport r = demo_local_global("dilation-needed", 16);
  const RingPtr P = parse_ring(r.ring);
  const unsigned want = oracle::min_dilation(parse_word(P, 3, r.word), 2);
  const bool ok = r.N_found && *r.N_found == want && want <= 16 && r.matrix_identity && r.trace_replayed;
  return {ok, "oracle N = " + std::to_string(want) + ", found N = " + (r.N_found ? std::to_string(*r.N_found) : "none") +
                  ", trace replayed " + (r.trace_replayed ? "yes" : "no")};
}

Outcome determinism() {
  long runs = 0, diffs = 0;
  for (const char* ring : {"Z/5", "Z/5[t]"}) {
    SuiteConfig cfg;
    cfg.ring = ring;
    cfg.n = 3;
    cfg.seed = 42;
    cfg.samples = 20;
    const std::string a = report_json(run_suite(cfg));
    const std::string b = report_json(run_suite(cfg));
    ++runs;
    diffs += a != b;
  }
  for (const auto& s : demo_scenarios()) {
    ++runs;
    diffs += pipeline_json(demo_local_global(s)) != pipeline_json(demo_local_global(s));
  }
  return {diffs == 0, std::to_string(runs) + " report pairs, " + std::to_string(diffs) + " differing"};
}

}  // namespace

int main() {
  const std::vector<Criterion> all = {
      {1, "form preservation", 10, form_preservation},
      {2, "relation catalogue at phi level", 120, catalogue_phi},
      {3, "Suslin decomposition", 0, suslin},
      {4, "Z^A projection", 0, z_upper},
      {5, "Tulenbaev diagram", 60, tulenbaev},
      {6, "direct-system compatibility", 0, direct_system},
      {7, "dilation demo", 0, dilation_demo},
      {8, "determinism", 0, determinism},
  };
  int red = 0;
  for (const auto& c : all) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double dt = seconds_since(t0);
    const bool in_time = c.limit_s == 0 || dt < c.limit_s;
    const bool pass = o.pass && in_time;
    red += !pass;
    char timing[96];
    if (c.limit_s > 0)
      std::snprintf(timing, sizeof timing, "%.2f s (limit %.0f s)", dt, c.limit_s);
    else
      std::snprintf(timing, sizeof timing, "%.2f s", dt);
    std::printf("[%s] AC%d %s: %s; %s\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), timing);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(all.size()) - red, all.size());
  return red == 0 ? 0 : 1;
}
