#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcd {

/// The four QC design families.
///
///   SixteenthEven  D        2^((2n+4)-4)   runs 4^n
///   EighthEven     D(1)     2^((2n+3)-3)   runs 4^n, F1 dropped
///   SixteenthOdd   D0       2^((2n+5)-4)   runs 2*4^n, branched
///   EighthOdd      D0(1)    2^((2n+4)-3)   runs 2*4^n, branched, F1 dropped
enum class Family { SixteenthEven, EighthEven, SixteenthOdd, EighthOdd };

inline constexpr std::array<Family, 4> kAllFamilies = {
    Family::SixteenthEven, Family::EighthEven, Family::SixteenthOdd, Family::EighthOdd};

constexpr bool is_odd_run(Family f) {
  return f == Family::SixteenthOdd || f == Family::EighthOdd;
}
constexpr bool is_eighth(Family f) {
  return f == Family::EighthEven || f == Family::EighthOdd;
}

/// Number of runs N for a family with n free coordinates.
std::int64_t run_count(Family family, int n);
/// Number of two-level factors q.
int factor_count(Family family, int n);
/// Number of generators k in the 2^(q-k) label (4 or 3).
int generator_count(Family family);

/// CLI spelling: "sixteenth-even", "eighth-even", ...
std::string_view family_name(Family family);
/// Throws std::invalid_argument on an unknown name.
Family parse_family(std::string_view name);

/// Z4 element, always reduced into [0, 3].
using Z4 = std::uint8_t;

/// The branch pair (u0, v0) of the odd-run families, written "u0v0", e.g. "12".
struct BranchPair {
  Z4 u0 = 0;
  Z4 v0 = 0;

  friend bool operator==(const BranchPair&, const BranchPair&) = default;
  friend auto operator<=>(const BranchPair&, const BranchPair&) = default;
};

std::string to_string(BranchPair pair);
/// Parses the two-digit juxtaposition "u0v0". Throws std::invalid_argument.
BranchPair parse_branch_pair(std::string_view text);

/// All 16 branch pairs in order 00, 01, ..., 33.
std::array<BranchPair, 16> all_branch_pairs();

/// Generator data for one QC design.
struct GeneratorSpec {
  Family family = Family::SixteenthEven;
  std::vector<Z4> u;
  std::vector<Z4> v;
  std::optional<BranchPair> branch;  ///< present iff the family is odd-run

  int n() const { return static_cast<int>(u.size()); }

  /// Throws std::invalid_argument if the invariants do not hold.
  void validate() const;
};

/// f[k][s] = #{ j : u_j = k, v_j = s }.
struct FrequencyTable {
  std::array<std::array<int, 4>, 4> f{};

  int total() const;
  friend bool operator==(const FrequencyTable&, const FrequencyTable&) = default;
};

FrequencyTable frequencies(std::span<const Z4> u, std::span<const Z4> v);

/// (lambda_1, ..., lambda_10), stored zero-based.
class LambdaProfile {
 public:
  LambdaProfile() = default;
  explicit LambdaProfile(const std::array<int, 10>& values);

  /// lambda_i for i in [1, 10].
  int operator()(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }
  const std::array<int, 10>& values() const { return values_; }
  int n() const;

  /// Ten juxtaposed digits, e.g. "0011000000". Entries above 9 fall back to
  /// a comma-separated list.
  std::string to_string() const;
  /// Accepts either the juxtaposed or the comma-separated form.
  static LambdaProfile parse(std::string_view text);

  friend bool operator==(const LambdaProfile&, const LambdaProfile&) = default;
  friend auto operator<=>(const LambdaProfile&, const LambdaProfile&) = default;

 private:
  std::array<int, 10> values_{};
};

LambdaProfile lambda_profile(const FrequencyTable& table);

/// Canonical (u, v) with the given lambda profile. Each class i contributes
/// lambda_i positions of its representative pair, class 1 first:
/// (1,0) (0,1) (1,2) (2,1) (1,1) (1,3) (0,2) (2,0) (2,2) (0,0).
/// Throws std::invalid_argument for the all-zero profile.
struct GeneratorPair {
  std::vector<Z4> u;
  std::vector<Z4> v;
};
GeneratorPair realize_lambda(const LambdaProfile& lambda);

/// The representative (u_j, v_j) of lambda class i (1-based).
std::pair<Z4, Z4> lambda_class_representative(int i);

/// Convenience: spec for family with the canonical realization of lambda.
GeneratorSpec spec_from_lambda(Family family, const LambdaProfile& lambda,
                               std::optional<BranchPair> branch = std::nullopt);

}  // namespace qcd
