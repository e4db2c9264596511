#include "cli/run.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "acsl/errors.hpp"
#include "acsl/manifolds.hpp"
#include "cli/json_io.hpp"
#include "cli/suites.hpp"

namespace acsl::cli {

using nlohmann::json;

namespace {

struct Flags {
  std::string input;
  std::optional<std::int64_t> k;
  std::string suite;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::uint64_t max_terms = kDefaultOracleTerms;
};

void write_error(std::ostream& err, std::string_view kind, const std::string& message) {
  err << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
}

CouplingLevel resolve_level(const Flags& flags, const LoadedInput& input) {
  if (flags.k) return CouplingLevel(*flags.k);
  if (input.k) return CouplingLevel(*input.k);
  throw Error(ErrorKind::parse, "k is required (--k or \"k\" in the input)");
}

const FramedLink& require_link(const LoadedInput& input) {
  if (const auto* link = std::get_if<FramedLink>(&input.object)) return *link;
  throw Error(ErrorKind::parse, "this command takes a link (\"linking\" or \"pd\"), not homology data");
}

const HomologyData& require_homology(const LoadedInput& input) {
  if (const auto* h = std::get_if<HomologyData>(&input.object)) return *h;
  throw Error(ErrorKind::parse, "this command takes homology data {genus, N, q_self}");
}

json result_header(std::string_view command, const CouplingLevel& k, const LoadedInput& input) {
  json out{{"command", command}, {"k", k.value()}};
  if (!input.warnings.empty()) out["warnings"] = input.warnings;
  return out;
}

Invariant evaluate_link(const FramedLink& link, const CouplingLevel& k, unsigned threads) {
  if (link.surgery_count() == 0) return s3_expectation(link, k);
  return surgery_expectation(SurgeryPresentation{link, k}, GaussSumOptions{threads});
}

json command_s3(const Flags& flags) {
  const LoadedInput input = load_link_json(flags.input);
  const CouplingLevel k = resolve_level(flags, input);
  const FramedLink& link = require_link(input);
  json out = result_header("s3", k, input);
  out.update(to_json(s3_expectation(link, k)));
  out["link"] = to_json(link);
  return out;
}

json command_surgery(const Flags& flags, unsigned threads) {
  const LoadedInput input = load_link_json(flags.input);
  const CouplingLevel k = resolve_level(flags, input);
  const SurgeryPresentation p{require_link(input), k};
  json out = result_header("surgery", k, input);
  out.update(to_json(surgery_expectation(p, GaussSumOptions{threads})));
  out["terms"] = *colour_vector_count(p);
  if (*colour_vector_count(p) <= flags.max_terms) {
    const auto oracle = oracle_expectation(p, flags.max_terms);
    out["oracle"] = json::array({oracle.real(), oracle.imag()});
  }
  return out;
}

json command_closed_form(const Flags& flags, bool genus_zero_only) {
  const LoadedInput input = load_link_json(flags.input);
  const CouplingLevel k = resolve_level(flags, input);
  const HomologyData& h = require_homology(input);
  json out = result_header(genus_zero_only ? "s1xs2" : "s1xsigma", k, input);
  out.update(to_json(genus_zero_only ? s1xs2_expectation(h, k) : s1xsigma_expectation(h, k)));
  out["homology"] = to_json(h);
  return out;
}

json command_satellite(const Flags& flags, unsigned threads) {
  const LoadedInput input = load_link_json(flags.input);
  const CouplingLevel k = resolve_level(flags, input);
  const FramedLink& link = require_link(input);
  const FramedLink expanded = simplicial_satellite(link, k);
  const Invariant before = evaluate_link(link, k, threads);
  const Invariant after = evaluate_link(expanded, k, threads);
  json out = result_header("satellite", k, input);
  out["link"] = to_json(expanded);
  out["before"] = to_json(before);
  out["after"] = to_json(after);
  out["equal"] = before == after;
  return out;
}

json command_check(const Flags& flags, unsigned threads, bool& all_passed) {
  SuiteOptions options;
  options.suite = flags.suite;
  options.seed = flags.seed;
  options.trials = flags.trials;
  options.max_terms = flags.max_terms;
  options.threads = threads;
  if (flags.k) {
    options.levels = {CouplingLevel(*flags.k).value()};
  }
  const SuiteReport report = run_suite(options);
  all_passed = report.failed == 0;
  return json{{"command", "check"},      {"suite", report.suite},   {"seed", flags.seed},
              {"levels", options.levels}, {"trials", report.trials}, {"passed", report.passed},
              {"failed", report.failed},  {"skipped", report.skipped}, {"failures", report.failures},
              {"status", all_passed ? "pass" : "fail"}};
}

}  // namespace

unsigned threads_from_environment() {
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ACSL_THREADS")) {
    const long requested = std::strtol(env, nullptr, 10);
    if (requested >= 1) threads = static_cast<unsigned>(requested);
  }
  return threads;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Abelian Chern-Simons link invariants with exact cyclotomic arithmetic", "acsl"};
  app.require_subcommand(1);
  Flags flags;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", flags.input, "JSON input file")->required();
    sub->add_option("--k", flags.k, "coupling level (nonzero integer)");
  };
  CLI::App* s3 = app.add_subcommand("s3", "expectation value in S^3");
  add_input(s3);
  CLI::App* surgery = app.add_subcommand("surgery", "expectation value in the manifold of a surgery presentation");
  add_input(surgery);
  surgery->add_option("--max-terms", flags.max_terms, "float oracle term cap");
  CLI::App* s1xs2 = app.add_subcommand("s1xs2", "closed form in S^1 x S^2 from homology data");
  add_input(s1xs2);
  CLI::App* s1xsigma = app.add_subcommand("s1xsigma", "closed form in S^1 x Sigma_g from homology data");
  add_input(s1xsigma);
  CLI::App* satellite = app.add_subcommand("satellite", "simplicial satellite and invariant comparison");
  add_input(satellite);
  CLI::App* check = app.add_subcommand("check", "run a randomized property suite");
  check->add_option("--suite", flags.suite, "property suite")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  check->add_option("--k", flags.k, "coupling level (default: cycle through 1, 2, 3)");
  check->add_option("--trials", flags.trials, "number of randomized trials");
  check->add_option("--seed", flags.seed, "random seed");
  check->add_option("--max-terms", flags.max_terms, "float oracle term cap");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, "usage", e.what());
    return kExitInputError;
  }

  const unsigned threads = threads_from_environment();
  try {
    json result;
    bool passed = true;
    if (s3->parsed()) {
      result = command_s3(flags);
    } else if (surgery->parsed()) {
      result = command_surgery(flags, threads);
    } else if (s1xs2->parsed()) {
      result = command_closed_form(flags, true);
    } else if (s1xsigma->parsed()) {
      result = command_closed_form(flags, false);
    } else if (satellite->parsed()) {
      result = command_satellite(flags, threads);
    } else {
      result = command_check(flags, threads, passed);
    }
    out << result.dump() << '\n';
    return passed ? kExitOk : kExitCheckFailed;
  } catch (const Error& e) {
    write_error(err, to_string(e.kind()), e.what());
    return e.kind() == ErrorKind::denominator_zero ? kExitDenominatorZero : kExitInputError;
  } catch (const std::exception& e) {
    write_error(err, "internal", e.what());
    return kExitCheckFailed;
  }
}

}  // namespace acsl::cli
