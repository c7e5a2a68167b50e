#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcdesign/generator.hpp"
#include "qcdesign/spectrum.hpp"

namespace qcd::cli {

struct VerifyOptions {
  int n_max = 3;
  std::vector<Family> families{kAllFamilies.begin(), kAllFamilies.end()};
  /// Random raw (u, v) cases on top of the exhaustive sweep.
  int sample = 0;
  std::uint64_t seed = 1;
  std::vector<int> sample_n{4, 5};
  /// All 16 branch pairs instead of one per table column class.
  bool all_branch_pairs = false;
  bool check_projectivity = true;
};

/// One checked design.
struct VerifyCase {
  GeneratorSpec spec;
  LambdaProfile lambda;
  WordSpectrum theory;
  WordSpectrum oracle;
  std::optional<Rational> resolution;
  std::vector<Rational> wlp;
  std::optional<int> projectivity;
  std::vector<std::string> failures;  ///< empty when every check passed

  std::string describe() const;
};

struct VerifySummary {
  std::int64_t cases = 0;
  std::int64_t exhaustive_cases = 0;
  std::int64_t sampled_cases = 0;
  /// Lambda profiles swept per family, index n - 1 (C(n+9, 9) each).
  std::vector<std::int64_t> lambdas_per_n;
  std::int64_t spectrum_mismatches = 0;
  std::int64_t parseval_failures = 0;
  std::int64_t projectivity_failures = 0;
  std::optional<VerifyCase> first_failure;

  bool ok() const { return !first_failure; }
};

/// Runs theory and oracle on one spec and applies every check.
VerifyCase check_case(const GeneratorSpec& spec, bool check_projectivity = true);

/// Exhaustive sweep over every lambda with n <= n_max (and branch classes for
/// the odd-run families), then the seeded sample. Deterministic for a seed.
VerifySummary verify(const VerifyOptions& options);

/// Seeded random raw generators: uniform (u_j, v_j) with n drawn from sample_n.
std::vector<GeneratorSpec> sample_specs(const VerifyOptions& options);

}  // namespace qcd::cli
