// Command-line surface: semigroup inspection, numerical duplication,
// the open-question explorer, and the valuation verifier.
//
// Exit codes: 0 computed/verified, 1 property violation, 2 invalid input.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arflab/arf.hpp"
#include "arflab/duplication.hpp"
#include "arflab/errors.hpp"
#include "arflab/record.hpp"
#include "arflab/valuation.hpp"

namespace {

using arflab::NumericalSemigroup;
using arflab::SemigroupIdeal;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitBadInput = 2;

void print_row(const std::string& key, const std::string& value) {
  std::cout << "  " << key;
  for (std::size_t i = key.size(); i < 22; ++i) std::cout << ' ';
  std::cout << value << "\n";
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string yesno(bool b) { return b ? "true" : "false"; }

int cmd_ns_info(const std::vector<int>& gens, bool as_json) {
  const NumericalSemigroup s = NumericalSemigroup::from_generators(gens);
  const bool arf = arflab::is_arf(s);
  std::optional<arflab::MultiplicitySequence> seq;
  if (arf) seq = arflab::multiplicity_sequence(s);

  if (as_json) {
    nlohmann::json j{{"command", "ns info"},
                     {"version", arflab::kArflabVersion},
                     {"parameters", {{"gens", gens}}},
                     {"minimal_generators", s.minimal_generators()},
                     {"multiplicity", s.multiplicity()},
                     {"frobenius", s.frobenius()},
                     {"conductor", s.conductor()},
                     {"genus", s.genus()},
                     {"small_elements", s.small_elements()},
                     {"display", s.to_string()},
                     {"is_arf", arf},
                     {"multiplicity_sequence", seq ? nlohmann::json(seq->prefix) : nullptr}};
    std::cout << j.dump() << "\n";
    return kExitOk;
  }

  std::cout << "numerical semigroup " << s.to_string() << "\n";
  print_row("generators", join(s.minimal_generators()));
  print_row("multiplicity", std::to_string(s.multiplicity()));
  print_row("frobenius", std::to_string(s.frobenius()));
  print_row("conductor", std::to_string(s.conductor()));
  print_row("genus", std::to_string(s.genus()));
  print_row("small elements", "{" + join(s.small_elements()) + "}");
  print_row("is_arf", yesno(arf));
  if (seq) print_row("mult. sequence", seq->to_string());
  return kExitOk;
}

int cmd_dup(const std::vector<int>& gens, const std::vector<int>& ideal_gens, int m,
            const std::string& mode, bool as_json) {
  const NumericalSemigroup s = NumericalSemigroup::from_generators(gens);
  const SemigroupIdeal e = SemigroupIdeal::from_generators(s, ideal_gens);
  const arflab::DuplicationInstance instance = arflab::duplicate(s, e, m);
  const NumericalSemigroup& d = instance.result;

  arflab::ReportRecord record;
  record.command = "dup";
  record.parameters = {{"gens", gens}, {"ideal_gens", ideal_gens}, {"m", m}, {"mode", mode}};
  record.sgens = s.minimal_generators();
  record.ideal_small = e.small_part();
  record.m = m;
  record.dup_small = d.small_elements();
  record.dup_conductor = d.conductor();

  int exit_code = kExitOk;
  if (!as_json) {
    std::cout << "duplication of " << s.to_string() << " along " << e.to_string() << " with m = "
              << m << "\n";
    print_row("result", d.to_string());
    print_row("generators", join(d.minimal_generators()));
    print_row("conductor", std::to_string(d.conductor()));
  }

  if (mode == "compute") {
    if (!as_json) print_row("is_arf", yesno(arflab::is_arf(d)));
  } else if (mode == "predicate") {
    const arflab::PredicateResult pred = arflab::duplication_arf_predicate(s, e, m);
    const bool oracle = arflab::is_arf(d);
    record.predicate = pred.value;
    record.oracle = oracle;
    if (!pred.value) record.reason = arflab::arf_reason_name(pred.reason);
    if (!as_json) {
      print_row("predicate", yesno(pred.value));
      if (!pred.value) print_row("reason", arflab::arf_reason_name(pred.reason));
      print_row("oracle", yesno(oracle));
      print_row("agreement", yesno(pred.value == oracle));
    }
    if (pred.value != oracle) {
      std::cerr << "error: the predicate disagrees with the brute-force check\n";
      exit_code = kExitViolation;
    }
  } else {  // closure-report
    const arflab::ClosureInclusionReport report = arflab::closure_inclusion_report(s, e, m);
    record.equality = report.equality_holds;
    record.witness = report.witness;
    if (!as_json) {
      print_row("lhs", report.lhs.to_string());
      print_row("rhs", report.rhs.to_string());
      print_row("inclusion", yesno(report.inclusion_holds));
      print_row("equality", yesno(report.equality_holds));
      if (report.witness) print_row("witness", std::to_string(*report.witness));
    }
    if (!report.inclusion_holds) {
      std::cerr << "error: closure inclusion failed; this signals a bug\n";
      exit_code = kExitViolation;
    }
  }

  if (as_json) std::cout << to_json(record).dump() << "\n";
  return exit_code;
}

int cmd_explore(int max_genus, int max_m, int ideal_budget, const std::string& out_path) {
  std::ofstream out(out_path);
  if (!out) arflab::fail(arflab::errc::invalid_input, "cannot open " + out_path);

  const arflab::ExploreConfig config{max_genus, max_m, ideal_budget};
  const nlohmann::json parameters = {
      {"max_genus", max_genus}, {"max_m", max_m}, {"ideal_budget", ideal_budget}};
  long long total = 0, equality = 0, strict = 0;
  arflab::explore_open_question(config, [&](const arflab::ExploreRecord& rec) {
    out << to_json(arflab::make_report_record("explore", parameters, rec)).dump() << "\n";
    ++total;
    if (rec.equality)
      ++equality;
    else
      ++strict;
  });
  std::cout << "explored " << total << " instances: equality " << equality << ", strict "
            << strict << ", inclusion violations 0\n";
  std::cout << "records written to " << out_path << "\n";
  return kExitOk;
}

int cmd_val_verify(const std::vector<int>& gens, const std::vector<int>& ideal_gens, int b_exp,
                   int bound, bool as_json) {
  const NumericalSemigroup s = NumericalSemigroup::from_generators(gens);
  const SemigroupIdeal e = SemigroupIdeal::from_generators(s, ideal_gens);
  if (b_exp % 2 == 0)
    arflab::fail(arflab::errc::even_m, "the order of b must be odd, got " + std::to_string(b_exp));
  const arflab::BranchRing ring = arflab::make_branch_ring(s, bound, b_exp);
  const arflab::TruncatedSeries b =
      arflab::TruncatedSeries::monomial(b_exp, ring.truncation);

  const NumericalSemigroup computed = arflab::value_semigroup_of_quotient(ring, e, b, bound);
  const NumericalSemigroup expected = arflab::duplicate(s, e, b_exp).result;
  bool match = true;
  for (int x = 0; x <= bound; ++x)
    if (computed.contains(x) != expected.contains(x)) match = false;
  const bool ring_arf = arflab::is_arf(computed);
  const bool predicate = arflab::duplication_arf_predicate(s, e, b_exp).value;

  if (as_json) {
    nlohmann::json j{{"command", "val verify"},
                     {"version", arflab::kArflabVersion},
                     {"parameters",
                      {{"gens", gens}, {"ideal_gens", ideal_gens}, {"b_exp", b_exp}, {"bound", bound}}},
                     {"computed_values", computed.elements_up_to(bound)},
                     {"expected_small", expected.small_elements()},
                     {"expected_conductor", expected.conductor()},
                     {"truncation", ring.truncation},
                     {"match", match},
                     {"ring_arf", ring_arf},
                     {"predicate", predicate}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "quadratic extension of k[[t^S]] for S = " << s.to_string() << ", v(b) = "
              << b_exp << "\n";
    print_row("computed values", computed.to_string());
    print_row("expected", expected.to_string());
    print_row("certified on", "[0, " + std::to_string(bound) + "], truncation " +
                                  std::to_string(ring.truncation));
    print_row("match", yesno(match));
    print_row("ring_arf", yesno(ring_arf));
    print_row("predicate", yesno(predicate));
  }
  return match ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical semigroups, Arf closures, numerical duplication, and truncated"
               " power-series valuation checks"};
  app.require_subcommand(1);

  std::vector<int> gens, ideal_gens;
  int m = 1, b_exp = 1, bound = 40;
  int max_genus = 4, max_m = 9, ideal_budget = -1;
  std::string mode = "compute", out_path = "explore.jsonl";
  bool as_json = false;

  CLI::App* ns = app.add_subcommand("ns", "numerical semigroup commands");
  ns->require_subcommand(1);
  CLI::App* info = ns->add_subcommand("info", "invariants of a semigroup given by generators");
  info->add_option("--gens", gens, "comma-separated generators")->delimiter(',')->required();
  info->add_flag("--json", as_json, "emit one JSON record");

  CLI::App* dup = app.add_subcommand("dup", "numerical duplication of S along an ideal");
  dup->add_option("--gens", gens, "generators of S")->delimiter(',')->required();
  dup->add_option("--ideal-gens", ideal_gens, "ideal generators (elements of S)")
      ->delimiter(',')
      ->required();
  dup->add_option("-m,--m", m, "odd element of S")->required();
  dup->add_option("--mode", mode, "compute | predicate | closure-report")
      ->check(CLI::IsMember({"compute", "predicate", "closure-report"}));
  dup->add_flag("--json", as_json, "emit one JSON record");

  CLI::App* explore = app.add_subcommand("explore", "sweep (S, E, m) instances to a JSONL file");
  explore->add_option("--max-genus", max_genus, "genus bound for S")->required();
  explore->add_option("--max-m", max_m, "bound on the odd member m")->required();
  explore->add_option("--ideal-budget", ideal_budget,
                      "bound on ideal minima (default: conductor + 2 per semigroup)");
  explore->add_option("--out", out_path, "output path")->required();

  CLI::App* val = app.add_subcommand("val", "valuation laboratory");
  val->require_subcommand(1);
  CLI::App* verify = val->add_subcommand(
      "verify", "compare the quadratic extension's value set with the duplication");
  verify->add_option("--gens", gens, "generators of S")->delimiter(',')->required();
  verify->add_option("--ideal-gens", ideal_gens, "ideal generators")->delimiter(',')->required();
  verify->add_option("--b-exp", b_exp, "order of b (odd)")->required();
  verify->add_option("--bound", bound, "certify values up to this bound")->required();
  verify->add_flag("--json", as_json, "emit one JSON record");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (info->parsed()) return cmd_ns_info(gens, as_json);
    if (dup->parsed()) return cmd_dup(gens, ideal_gens, m, mode, as_json);
    if (explore->parsed()) return cmd_explore(max_genus, max_m, ideal_budget, out_path);
    if (verify->parsed()) return cmd_val_verify(gens, ideal_gens, b_exp, bound, as_json);
  } catch (const arflab::error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return err.code() == arflab::errc::inclusion_violation ? kExitViolation : kExitBadInput;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
