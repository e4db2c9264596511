#include "cli/suites.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "acsl/errors.hpp"
#include "acsl/manifolds.hpp"
#include "cli/random_links.hpp"

namespace acsl::cli {

namespace {

constexpr std::size_t kMaxReportedFailures = 10;

enum class Verdict { pass, fail, skip };

struct TrialResult {
  Verdict verdict = Verdict::pass;
  std::string detail;
};

TrialResult fail(std::string detail) { return {Verdict::fail, std::move(detail)}; }

std::size_t pick_index(Rng& rng, std::size_t size) {
  return static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(size) - 1));
}

TrialResult periodicity_trial(Rng& rng, const CouplingLevel& k, const SuiteOptions& opts) {
  const std::int64_t period = k.colour_modulus();
  const FramedLink link = random_link(rng, static_cast<std::size_t>(uniform(rng, 1, 4)), 3, period);
  const std::size_t i = pick_index(rng, link.size());
  FramedLink shifted = link;
  shifted.charges[i] += uniform(rng, 0, 1) == 0 ? -period : period;
  if (s3_expectation(link, k) != s3_expectation(shifted, k)) {
    return fail("S^3 invariant changed under q_" + std::to_string(i) + " -> q + 2|k|");
  }

  // Same property for an observed component inside a surgery presentation.
  SurgeryPresentation p = random_presentation(rng, static_cast<std::size_t>(uniform(rng, 1, 2)),
                                              static_cast<std::size_t>(uniform(rng, 1, 2)), 3, period, k);
  std::vector<std::size_t> observed;
  for (std::size_t j = 0; j < p.link.size(); ++j) {
    if (p.link.is_observed(j)) observed.push_back(j);
  }
  SurgeryPresentation moved = p;
  moved.link.charges[observed[pick_index(rng, observed.size())]] += period;
  GaussSumOptions gs{opts.threads};
  if (evaluate(p, gs) != evaluate(moved, gs)) return fail("surgery invariant changed under q -> q + 2|k|");
  return {};
}

TrialResult satellite_trial(Rng& rng, const CouplingLevel& k, const SuiteOptions& opts) {
  const FramedLink link = random_link(rng, static_cast<std::size_t>(uniform(rng, 1, 3)), 3, 4);
  const Invariant before = s3_expectation(link, k);
  if (s3_expectation(simplicial_satellite(link, k), k) != before) {
    return fail("simplicial satellite changed the S^3 invariant");
  }
  const std::size_t j = pick_index(rng, link.size());
  const int sign = uniform(rng, 0, 1) == 0 ? -1 : 1;
  if (s3_expectation(satellite_expand(link, j, sign), k) != before) {
    return fail("satellite_expand(" + std::to_string(j) + "," + std::to_string(sign) + ") changed the invariant");
  }

  SurgeryPresentation p = random_presentation(rng, 1, static_cast<std::size_t>(uniform(rng, 1, 2)), 3, 4, k);
  std::size_t observed = 0;
  while (!p.link.is_observed(observed)) ++observed;
  SurgeryPresentation expanded{satellite_expand(p.link, observed, sign), p.k};
  GaussSumOptions gs{opts.threads};
  if (evaluate(p, gs) != evaluate(expanded, gs)) return fail("satellite inside a surgery presentation changed the invariant");
  return {};
}

TrialResult kirby_trial(Rng& rng, const CouplingLevel& k, const SuiteOptions& opts) {
  SurgeryPresentation p = random_presentation(rng, static_cast<std::size_t>(uniform(rng, 1, 3)),
                                              static_cast<std::size_t>(uniform(rng, 0, 2)), 3,
                                              k.colour_modulus(), k);
  GaussSumOptions gs{opts.threads};
  const Outcome reference = evaluate(p, gs);
  const auto length = uniform(rng, 1, 5);
  std::string history;
  for (std::int64_t step = 0; step < length; ++step) {
    const auto move = random_kirby_move(rng, p, 5);
    if (!move) break;
    p = apply(p, *move);
    history += move->describe() + " ";
    const Outcome now = evaluate(p, gs);
    if (now != reference) {
      return fail("after " + history + "invariant " + now.describe() + " != " + reference.describe());
    }
  }
  return {};
}

TrialResult oracle_trial(Rng& rng, const CouplingLevel& k, const SuiteOptions& opts) {
  const SurgeryPresentation p = random_presentation(rng, static_cast<std::size_t>(uniform(rng, 0, 3)),
                                                    static_cast<std::size_t>(uniform(rng, 0, 3)), 3,
                                                    k.colour_modulus(), k);
  const auto terms = colour_vector_count(p);
  if (!terms || *terms > opts.max_terms) return {Verdict::skip, {}};
  const Outcome exact = evaluate(p, GaussSumOptions{opts.threads});
  const OracleSums sums = oracle_gauss_sums(p, opts.max_terms);
  if (exact.denominator_zero) {
    if (std::abs(sums.denominator) >= 1e-6) return fail("exact denominator is zero but float denominator is not");
    return {};
  }
  const auto diff = std::abs(exact.invariant->numeric - sums.numerator / sums.denominator);
  if (!(diff < 1e-9)) return fail("exact/float disagreement " + std::to_string(diff));
  return {};
}

TrialResult manifolds_trial(Rng& rng, const CouplingLevel& k, const SuiteOptions& opts) {
  const FramedLink observed = random_link(rng, static_cast<std::size_t>(uniform(rng, 1, 3)), 3,
                                          k.colour_modulus());
  GaussSumOptions gs{opts.threads};
  std::vector<std::int64_t> core(observed.size());
  for (auto& c : core) c = uniform(rng, -3, 3);
  const Outcome surgery = evaluate(s1xs2_presentation(observed, core, k), gs);
  const Invariant closed = s1xs2_expectation(s1xs2_homology(observed, core), k);
  if (surgery.denominator_zero || *surgery.invariant != closed) {
    return fail("S^1 x S^2: surgery " + surgery.describe() + " vs closed form " + closed.value.to_string());
  }

  std::vector<std::array<std::int64_t, 3>> rings(observed.size());
  for (auto& row : rings) {
    for (auto& c : row) c = uniform(rng, -3, 3);
  }
  const Outcome t3 = evaluate(t3_presentation(observed, rings, k), gs);
  const Invariant t3_closed = s1xsigma_expectation(t3_homology(observed, rings), k);
  if (t3.denominator_zero || *t3.invariant != t3_closed) {
    return fail("T^3: surgery " + t3.describe() + " vs closed form " + t3_closed.value.to_string());
  }
  return {};
}

using Trial = std::function<TrialResult(Rng&, const CouplingLevel&, const SuiteOptions&)>;

const std::map<std::string, Trial>& trials() {
  static const std::map<std::string, Trial> table{
      {"periodicity", periodicity_trial}, {"satellite", satellite_trial}, {"kirby", kirby_trial},
      {"oracle", oracle_trial},           {"manifolds", manifolds_trial},
  };
  return table;
}

}  // namespace

std::string Outcome::describe() const {
  if (denominator_zero) return "DenominatorZero";
  if (!invariant) return "none";
  return invariant->is_zero ? "0" : invariant->value.to_string();
}

Outcome evaluate(const SurgeryPresentation& p, const GaussSumOptions& options) {
  try {
    return Outcome{false, surgery_expectation(p, options)};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::denominator_zero) throw;
    return Outcome{true, std::nullopt};
  }
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"periodicity", "satellite", "kirby", "oracle", "manifolds"};
  return names;
}

SuiteReport run_suite(const SuiteOptions& options) {
  const auto it = trials().find(options.suite);
  if (it == trials().end()) throw Error(ErrorKind::invalid_argument, "unknown suite '" + options.suite + "'");
  if (options.levels.empty()) throw Error(ErrorKind::invalid_argument, "no coupling levels given");

  Rng rng(options.seed);
  SuiteReport report{options.suite, options.trials, 0, 0, 0, {}};
  for (std::size_t t = 0; t < options.trials; ++t) {
    const CouplingLevel k(options.levels[t % options.levels.size()]);
    const TrialResult result = it->second(rng, k, options);
    switch (result.verdict) {
      case Verdict::pass: ++report.passed; break;
      case Verdict::skip: ++report.skipped; break;
      case Verdict::fail:
        ++report.failed;
        if (report.failures.size() < kMaxReportedFailures) {
          report.failures.push_back("trial " + std::to_string(t) + " (k=" + std::to_string(k.value()) +
                                    "): " + result.detail);
        }
        break;
    }
  }
  return report;
}

}  // namespace acsl::cli
