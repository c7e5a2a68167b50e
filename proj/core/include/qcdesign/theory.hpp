#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qcdesign/generator.hpp"
#include "qcdesign/rational.hpp"
#include "qcdesign/spectrum.hpp"

namespace qcd {

/// Closed-form word spectra of QC designs. Every result here is a function of
/// the lambda profile and, for the branched families, the pair (u0, v0).

struct LValues {
  std::array<int, 10> l{};

  /// l_i for i in [1, 10].
  int operator()(int i) const { return l.at(static_cast<std::size_t>(i - 1)); }
  friend bool operator==(const LValues&, const LValues&) = default;
};

LValues l_values(const LambdaProfile& lambda);

/// Aliasing-index constants. Every index is 2^(-e) with e = floor of a
/// half-integer combination of lambdas.
struct IndexConstants {
  Rational rho1, rho2, xi1, xi2, xi;

  // Branched families only (engaged when a branch pair was supplied).
  bool branched = false;
  int delta1 = 0, delta2 = 0, eps1 = 0, eps2 = 0, eps = 0;
  Rational theta1, theta2, omega1, omega2, omega0, omega;
  Rational k11, k12, k21, k22;
};

IndexConstants index_constants(const LambdaProfile& lambda,
                               std::optional<BranchPair> branch = std::nullopt);

/// Words of one type x = x1x2x3x4 in the unbranched sixteenth fraction.
struct WordClassReport {
  std::array<bool, 4> x{};
  std::vector<WordEntry> words;
};

WordClassReport theorem1_words(const LambdaProfile& lambda, const std::array<bool, 4>& x);

/// Full spectrum of D (SixteenthEven).
WordSpectrum theorem2_spectrum(const LambdaProfile& lambda);
/// Full spectrum of D(1) (EighthEven).
WordSpectrum theorem3_spectrum(const LambdaProfile& lambda);
/// Full spectrum of D0 (SixteenthOdd) from the tabulated N(u0v0, wl, ai).
WordSpectrum table1_spectrum(const LambdaProfile& lambda, BranchPair branch);
/// Full spectrum of D0(1) (EighthOdd).
WordSpectrum table2_spectrum(const LambdaProfile& lambda, BranchPair branch);

/// Dispatches on the family. Throws std::invalid_argument when the branch
/// pair is missing for an odd-run family or supplied for an even-run one.
WordSpectrum theory_spectrum(Family family, const LambdaProfile& lambda,
                             std::optional<BranchPair> branch = std::nullopt);

/// Column class of a branch pair in the D0 table (10 classes: 00, 01/03, 02,
/// 10/30, 11/33, 12/32, 13/31, 20, 21/23, 22), as an index 0..9.
int table1_column(BranchPair branch);
/// Column class in the D0(1) table (14 classes: 00, 01/03, 02, 10, 11, 12,
/// 13, 20, 21/23, 22, 30, 31, 32, 33), as an index 0..13.
int table2_column(BranchPair branch);

/// One representative per column class, in column order.
std::vector<BranchPair> table1_representatives();
std::vector<BranchPair> table2_representatives();
/// Representatives for the odd-run family, empty for even-run families.
std::vector<BranchPair> branch_representatives(Family family);

/// Upper bound on the projectivity of the sixteenth-fraction families, or
/// nullopt for eighth fractions where no closed form is known.
std::optional<int> projectivity_bound(int n, Family family);

}  // namespace qcd
