#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcdesign/design.hpp"
#include "qcdesign/spectrum.hpp"

namespace qcd {

/// Brute-force evaluation of a design from its explicit run matrix.
///
/// The 2^q sign-pattern table costs 8 * 2^q bytes, so the default cap of
/// q = 20 bounds it at 8 MiB. Raise it through OracleOptions when needed.
inline constexpr int kDefaultFactorCap = 20;

struct OracleOptions {
  int factor_cap = kDefaultFactorCap;
};

/// J(S) for every column subset S, indexed by the subset mask (index 0 holds
/// N). Computed by tallying row sign patterns (+1 -> bit 0, -1 -> bit 1) and
/// applying the Walsh-Hadamard transform, so that
///   J(S) = sum_p freq[p] * (-1)^popcount(p & S).
/// Throws std::length_error if q exceeds the cap.
std::vector<std::int64_t> j_characteristics(const DesignMatrix& design,
                                            const OracleOptions& options = {});

/// J(S) straight from the definition: sum over runs of the product of the
/// entries in S.
std::int64_t j_characteristic_direct(const DesignMatrix& design, ColumnMask subset);

/// One contribution (|S|, |J(S)|/N) per subset with J(S) != 0.
WordSpectrum spectrum_bruteforce(const DesignMatrix& design, const OracleOptions& options = {});

/// Same, from a J table already computed for the design.
WordSpectrum spectrum_from_j(const std::vector<std::int64_t>& j, int q, std::int64_t runs);

/// Largest p such that every p-column projection contains all 2^p level
/// combinations. Levels are checked for p = 1, 2, ... and the search stops at
/// the first deficient projection.
int projectivity(const DesignMatrix& design);

/// True iff the projection onto the given columns contains every combination.
bool projection_is_full(const DesignMatrix& design, ColumnMask subset);

struct DesignMetrics {
  std::optional<Rational> resolution;  ///< empty = Unbounded (no words)
  std::vector<Rational> wlp;
  int projectivity = 0;
  WordSpectrum spectrum;
};

DesignMetrics metrics(const DesignMatrix& design, const OracleOptions& options = {});

/// Type of a column collection relative to the check columns F1..F4 (F5).
struct SubsetType {
  std::array<bool, 4> x{};   ///< membership of F1..F4
  std::optional<bool> x5;    ///< membership of F5; engaged for odd-run designs
  std::vector<int> s1;       ///< j with both Fj1 and Fj2
  std::vector<int> s2;       ///< j with Fj2 only
  std::vector<int> s3;       ///< j with Fj1 only

  /// "x1x2x3x4", e.g. "0101".
  std::string x_string() const;
  int check_count() const;   ///< X = x1 + x2 + x3 + x4
  int pair_weight() const;   ///< m = 2 n1 + n2 + n3
  int length() const;        ///< m + X (+ x5)

  friend bool operator==(const SubsetType&, const SubsetType&) = default;
};

/// Reads a subset of the labelled columns. Throws std::invalid_argument on a
/// label not produced by build_design or an empty subset.
SubsetType classify_subset(const std::vector<std::string>& labels, ColumnMask subset);

/// Inverse of classify_subset for the given labels.
ColumnMask subset_mask(const std::vector<std::string>& labels, const SubsetType& type);

/// Parses "0101" into the x bits.
std::array<bool, 4> parse_type_bits(const std::string& text);

}  // namespace qcd
