#include "qcdesign/cli/verify.hpp"

#include <random>

#include "qcdesign/design.hpp"
#include "qcdesign/oracle.hpp"
#include "qcdesign/parallel.hpp"
#include "qcdesign/search.hpp"
#include "qcdesign/theory.hpp"

namespace qcd::cli {

namespace {

std::string digits(const std::vector<Z4>& xs) {
  std::string s;
  for (auto x : xs) s += static_cast<char>('0' + x);
  return s;
}

}  // namespace

std::string VerifyCase::describe() const {
  std::string s = std::string(family_name(spec.family)) + " n=" + std::to_string(spec.n()) +
                  " lambda=" + lambda.to_string() + " u=" + digits(spec.u) + " v=" + digits(spec.v);
  if (spec.branch) s += " u0v0=" + to_string(*spec.branch);
  for (const auto& f : failures) s += "\n  " + f;
  return s;
}

VerifyCase check_case(const GeneratorSpec& spec, bool check_projectivity) {
  VerifyCase c;
  c.spec = spec;
  c.lambda = lambda_profile(frequencies(spec.u, spec.v));
  c.theory = theory_spectrum(spec.family, c.lambda, spec.branch);

  const auto design = build_design(spec);
  const int q = design.factors();
  c.oracle = spectrum_bruteforce(design);
  const auto m = spectrum_metrics(c.oracle, q);
  c.resolution = m.resolution;
  c.wlp = m.wlp;

  if (c.theory != c.oracle) {
    c.failures.push_back("spectrum: theory " + c.theory.to_string() + " vs oracle " + c.oracle.to_string());
  }

  Rational total(1);
  for (const auto& a : m.wlp) total += a;
  const Rational expected((std::int64_t{1} << q) / design.runs());
  if (total != expected) {
    c.failures.push_back("parseval: 1 + sum A = " + to_string(total) + ", expected " + to_string(expected));
  }

  if (check_projectivity) {
    const int p = projectivity(design);
    c.projectivity = p;
    if (m.resolution) {
      const auto floor_r = floor_of(*m.resolution);
      const auto ceil_r = *m.resolution == Rational(floor_r) ? floor_r : floor_r + 1;
      if (p < ceil_r - 1) {
        c.failures.push_back("projectivity " + std::to_string(p) + " below ceil(R) - 1 = " +
                             std::to_string(ceil_r - 1));
      }
    }
    if (const auto bound = projectivity_bound(spec.n(), spec.family); bound && p > *bound) {
      c.failures.push_back("projectivity " + std::to_string(p) + " exceeds bound " + std::to_string(*bound));
    }
  }
  return c;
}

std::vector<GeneratorSpec> sample_specs(const VerifyOptions& options) {
  std::vector<GeneratorSpec> out;
  if (options.sample <= 0) return out;
  if (options.sample_n.empty() || options.families.empty()) {
    throw std::invalid_argument("sampling needs at least one n and one family");
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> z4(0, 3);
  std::uniform_int_distribution<std::size_t> pick_n(0, options.sample_n.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_family(0, options.families.size() - 1);
  for (int i = 0; i < options.sample; ++i) {
    GeneratorSpec s;
    s.family = options.families[pick_family(rng)];
    const int n = options.sample_n[pick_n(rng)];
    for (int j = 0; j < n; ++j) {
      s.u.push_back(static_cast<Z4>(z4(rng)));
      s.v.push_back(static_cast<Z4>(z4(rng)));
    }
    if (is_odd_run(s.family)) s.branch = BranchPair{static_cast<Z4>(z4(rng)), static_cast<Z4>(z4(rng))};
    out.push_back(std::move(s));
  }
  return out;
}

VerifySummary verify(const VerifyOptions& options) {
  if (options.n_max < 0) throw std::invalid_argument("n-max must be nonnegative");
  std::vector<GeneratorSpec> specs;
  for (auto family : options.families) {
    std::vector<std::optional<BranchPair>> branches{std::nullopt};
    if (is_odd_run(family)) {
      branches.clear();
      if (options.all_branch_pairs) {
        for (auto b : all_branch_pairs()) branches.emplace_back(b);
      } else {
        for (auto b : branch_representatives(family)) branches.emplace_back(b);
      }
    }
    for (int n = 1; n <= options.n_max; ++n) {
      for_each_lambda(n, [&](const LambdaProfile& lambda) {
        for (const auto& b : branches) specs.push_back(spec_from_lambda(family, lambda, b));
      });
    }
  }
  VerifySummary summary;
  for (int n = 1; n <= options.n_max; ++n) summary.lambdas_per_n.push_back(composition_count(n));
  summary.exhaustive_cases = static_cast<std::int64_t>(specs.size());
  for (auto& s : sample_specs(options)) specs.push_back(std::move(s));
  summary.sampled_cases = static_cast<std::int64_t>(specs.size()) - summary.exhaustive_cases;
  summary.cases = static_cast<std::int64_t>(specs.size());

  std::vector<std::optional<VerifyCase>> failed(specs.size());
  parallel_for(specs.size(), [&](std::size_t i) {
    auto c = check_case(specs[i], options.check_projectivity);
    if (!c.failures.empty()) failed[i] = std::move(c);
  });
  for (auto& f : failed) {
    if (!f) continue;
    for (const auto& msg : f->failures) {
      if (msg.starts_with("spectrum")) ++summary.spectrum_mismatches;
      else if (msg.starts_with("parseval")) ++summary.parseval_failures;
      else ++summary.projectivity_failures;
    }
    if (!summary.first_failure) summary.first_failure = std::move(f);
  }
  return summary;
}

}  // namespace qcd::cli
