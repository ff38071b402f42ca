// Acceptance suite: reproduces the worked examples exactly and runs the
// exhaustive property sweeps, one verdict line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "arflab/arf.hpp"
#include "arflab/duplication.hpp"
#include "arflab/enumerate.hpp"
#include "arflab/sweep.hpp"
#include "arflab/valuation.hpp"
#include "support/oracles.hpp"

using arflab::NumericalSemigroup;
using arflab::SemigroupIdeal;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  std::function<Verdict()> run;
};

std::string plural(long long n, const char* what) {
  return std::to_string(n) + " " + what + (n == 1 ? "" : "s");
}

// Shared state: the big serial sweep feeds criteria 3, 5, 7, 8 and 9.
std::optional<arflab::SweepChecks> grid_result;
double grid_seconds = 0.0;

arflab::GridConfig grid_config() {
  arflab::GridConfig config;
  config.max_genus = 10;
  return config;
}

Verdict example1_reproduction() {
  const auto s = NumericalSemigroup::from_generators({3, 7, 8});
  const auto e = SemigroupIdeal::from_generators(s, {3, 7, 8});
  const auto d = arflab::duplicate(s, e, 3).result;
  bool ok = d.small_elements() == std::vector<int>{0, 6, 9, 12};
  ok = ok && d.conductor() == 14;
  ok = ok && d.minimal_generators() == std::vector<int>{6, 9, 14, 16, 17, 19};
  ok = ok && arflab::is_arf(d);
  ok = ok && arflab::duplication_arf_predicate(s, e, 3).value;
  return {ok, "duplication " + d.to_string() + ", generators recovered exactly"};
}

Verdict example2_reproduction() {
  const auto s = NumericalSemigroup::from_generators({5, 8, 11, 12, 14});
  const auto e = SemigroupIdeal::from_generators(s, {5, 8, 11, 12, 14});
  const auto d = arflab::duplicate(s, e, 5).result;
  bool ok = d.small_elements() == std::vector<int>{0, 10, 15, 16, 20, 21, 22};
  ok = ok && d.conductor() == 24;
  const auto closed = arflab::arf_closure(d);
  ok = ok && closed.small_elements() == std::vector<int>{0, 10} && closed.conductor() == 15;
  const auto half = closed.quotient(2);
  ok = ok && half.contains(9) && !s.contains(9);
  return {ok, "duplication " + d.to_string() + ", closure " + closed.to_string() +
                  ", closure/2 contains 9"};
}

Verdict oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  grid_result = arflab::run_grid_checks_serial(grid_config());
  grid_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok =
      grid_result->instances > 0 && grid_result->oracle_mismatches == 0 && grid_seconds <= 300.0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%lld instances, %lld mismatches, serial sweep %.1f s (limit 300 s)",
                grid_result->instances, grid_result->oracle_mismatches, grid_seconds);
  return {ok, buf};
}

Verdict arf_quotients() {
  long long checked = 0, failures = 0;
  for (const auto& s : arflab::arf_semigroups_up_to_conductor(40)) {
    for (int d = 1; d <= 8; ++d) {
      ++checked;
      if (!arflab::is_arf(s.quotient(d))) ++failures;
    }
  }
  return {failures == 0 && checked > 0,
          plural(checked, "quotient") + " of Arf semigroups with conductor <= 40, " +
              plural(failures, "failure")};
}

Verdict necessity() {
  const auto& r = *grid_result;
  const bool ok = r.base_necessity_failures == 0 && r.ideal_necessity_failures == 0;
  return {ok, "Arf duplications forced an Arf base and a closed ideal; " +
                  plural(r.base_necessity_failures + r.ideal_necessity_failures, "failure")};
}

Verdict closure_inclusion() {
  auto config = grid_config();
  config.closure_checks = true;
  const auto r = arflab::run_grid_checks_parallel(config);
  bool ok = r.closure_instances > 0 && r.inclusion_failures == 0;
  ok = ok && r.condition1_equality_failures == 0 && r.condition2_equality_failures == 0;
  ok = ok && r.spotlight_seen && r.spotlight_strict;
  // The spotlight instance keeps 15 and 16 on both sides; the first element
  // gained by the closure is 17.
  ok = ok && r.spotlight_witness.has_value() && *r.spotlight_witness == 17;
  {
    const auto s = NumericalSemigroup::from_generators({5, 8, 11, 12, 14});
    const auto e = SemigroupIdeal::from_generators(s, {5, 8, 11, 12, 14});
    const auto rep = arflab::closure_inclusion_report(s, e, 5);
    ok = ok && rep.lhs.contains(15) && rep.rhs.contains(15) && !rep.equality_holds;
  }
  return {ok, std::to_string(r.closure_instances) + " instances, " +
                  plural(r.inclusion_failures, "inclusion failure") + ", " +
                  plural(r.condition1_equality_failures + r.condition2_equality_failures,
                         "equality failure") +
                  ", strict witness at 17 (15 sits on both sides)"};
}

Verdict multiples_of_m() {
  const auto& r = *grid_result;
  std::string detail = plural(r.multiples_checked, "Arf instance") + " with small minimum, " +
                       plural(r.multiples_failures, "failure");
  if (r.multiples_failures > 0) {
    // Name one counterexample: the claim breaks for m >= 5, where the
    // trailing 2-steps of the duplication sit strictly below its conductor.
    const auto s = arflab::semigroup_from_sequence({5});
    const auto e = SemigroupIdeal::unit_ideal(s);
    const auto d = arflab::duplicate(s, e, 5).result;
    detail += "; e.g. 12 in " + d.to_string() + " = dup({0, 5, →}, E = S, m = 5), an Arf " +
              "duplication with conductor 14";
  }
  return {r.multiples_checked > 0 && r.multiples_failures == 0, detail};
}

Verdict distance_sequences() {
  const auto& r = *grid_result;
  return {r.distance_checked > 0 && r.distance_failures == 0,
          plural(r.distance_checked, "predicted sequence") + ", mismatches: " +
              std::to_string(r.distance_failures)};
}

Verdict conductor_identity() {
  const auto& r = *grid_result;
  return {r.conductor_checked > 0 && r.conductor_failures == 0,
          plural(r.conductor_checked, "closed ideal") + " past the conductor, " +
              plural(r.conductor_failures, "failure")};
}

Verdict valuation_lab() {
  const auto start = std::chrono::steady_clock::now();
  long long checked = 0, failures = 0;

  const auto check_instance = [&](const NumericalSemigroup& s, const SemigroupIdeal& e, int m) {
    ++checked;
    const auto d = arflab::duplicate(s, e, m).result;
    const int bound = d.conductor() + m;
    const auto ring = arflab::make_branch_ring(s, bound, m);
    const auto b = arflab::TruncatedSeries::monomial(m, ring.truncation);
    if (!arflab::verify_double_valuation(ring, e, b, bound)) ++failures;
    const bool ring_arf = arflab::ring_arf_check(ring, e, b);
    if (ring_arf != arflab::duplication_arf_predicate(s, e, m).value) ++failures;
  };

  {
    const auto s = NumericalSemigroup::from_generators({3, 7, 8});
    check_instance(s, SemigroupIdeal::from_generators(s, {3, 7, 8}), 3);
    const auto s2 = NumericalSemigroup::from_generators({5, 8, 11, 12, 14});
    check_instance(s2, SemigroupIdeal::from_generators(s2, {5, 8, 11, 12, 14}), 5);
  }

  // Reservoir-sample 20 grid instances with a fixed seed.
  std::mt19937 rng(20240117);
  struct Sample {
    NumericalSemigroup s;
    SemigroupIdeal e;
    int m;
  };
  std::vector<Sample> samples;
  long long seen = 0;
  const auto config = grid_config();
  for (const auto& s : arflab::semigroups_up_to_genus(config.max_genus)) {
    for (const auto& e : arflab::grid_ideals(s, config)) {
      for (int m : arflab::grid_odd_m(s)) {
        ++seen;
        if (samples.size() < 20) {
          samples.push_back({s, e, m});
        } else {
          const long long slot = static_cast<long long>(rng() % seen);
          if (slot < 20) samples[static_cast<std::size_t>(slot)] = {s, e, m};
        }
      }
    }
  }
  for (const auto& sample : samples) check_instance(sample.s, sample.e, sample.m);

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = failures == 0 && checked == 22 && secs <= 60.0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%lld instances (2 worked + 20 sampled of %lld), %lld failures, %.1f s "
                "(limit 60 s)",
                checked, seen, failures, secs);
  return {ok, buf};
}

Verdict closure_oracle() {
  long long checked = 0, mismatches = 0;
  for (const auto& s : arflab::semigroups_up_to_genus(10)) {
    ++checked;
    if (arflab::arf_closure(s) != arflab::testing::arf_closure_via_chain(s)) ++mismatches;
  }
  return {mismatches == 0, plural(checked, "semigroup") + " of genus <= 10, discrepancies "
                               "between fixpoint and chain: " + std::to_string(mismatches)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked example 1 reproduced exactly", example1_reproduction},
      {2, "worked example 2 reproduced exactly", example2_reproduction},
      {3, "predicate matches the brute-force check on the full grid", oracle_equivalence},
      {4, "quotients of Arf semigroups stay Arf", arf_quotients},
      {5, "Arf duplication forces Arf base and closed ideal", necessity},
      {6, "closure inclusion and its equality conditions", closure_inclusion},
      {7, "small-minimum Arf branch is m-divisible below the conductor", multiples_of_m},
      {8, "predicted distance sequences match computed ones", distance_sequences},
      {9, "conductor identity 2*min(E) + m - 1 past the conductor", conductor_identity},
      {10, "quadratic extension values equal the duplication", valuation_lab},
      {11, "fixpoint closure equals the blow-up chain", closure_oracle},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict verdict;
    try {
      verdict = criterion.run();
    } catch (const std::exception& ex) {
      verdict = {false, std::string("exception: ") + ex.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%2d] %s  %-58s %s (%.2f s)\n", criterion.id,
                verdict.pass ? "PASS" : "FAIL", criterion.name.c_str(), verdict.detail.c_str(),
                secs);
    if (!verdict.pass) ++failures;
  }
  if (failures == 0)
    std::printf("all %zu criteria passed\n", criteria.size());
  else
    std::printf("%d criteria FAILED\n", failures);
  return failures;
}
