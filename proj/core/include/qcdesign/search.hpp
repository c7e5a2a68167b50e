#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcdesign/generator.hpp"
#include "qcdesign/oracle.hpp"
#include "qcdesign/spectrum.hpp"

namespace qcd {

enum class Criterion { MaxResolution, MinAberration, MaxProjectivity };

/// "resolution", "aberration", "projectivity".
std::string_view criterion_name(Criterion c);
Criterion parse_criterion(std::string_view name);

/// All compositions of n into 10 nonnegative parts, lexicographically
/// ascending (0,...,0,n) first. There are C(n+9, 9) of them.
std::vector<LambdaProfile> enumerate_lambdas(int n);

/// Visits the same sequence without materializing it.
void for_each_lambda(int n, const std::function<void(const LambdaProfile&)>& visit);

/// C(n + 9, 9).
std::int64_t composition_count(int n);

/// One point of the search space with its theory metrics.
struct Candidate {
  LambdaProfile lambda;
  std::optional<BranchPair> branch;
  SpectrumMetrics metrics;
  std::optional<int> projectivity;  ///< oracle value, filled on demand

  /// "0011000000" or "0011000000/12".
  std::string key() const;
};

struct SearchOptions {
  int max_n = 8;
  /// Enumerate all 16 branch pairs instead of one per table column class.
  bool all_branch_pairs = false;
  OracleOptions oracle;
};

struct SearchResult {
  Family family = Family::SixteenthEven;
  int n = 0;
  Criterion criterion = Criterion::MinAberration;
  LambdaProfile lambda;
  std::optional<BranchPair> branch;
  std::optional<Rational> resolution;
  std::vector<Rational> wlp;
  int projectivity = 0;  ///< oracle projectivity of the realized design
  /// The MinAberration optimum is among the MaxResolution optima.
  bool criteria_coincide = false;
  /// Every candidate tied with the optimum under the criterion, in tie-break order.
  std::vector<Candidate> ties;
  std::int64_t candidates_evaluated = 0;
};

/// Theory metrics for every candidate of (n, family), in enumeration order:
/// lambda ascending, then branch pair ascending.
std::vector<Candidate> evaluate_candidates(int n, Family family, const SearchOptions& options = {});

/// Exhaustive optimization. MaxResolution compares exact R (no words beats
/// any finite R); MinAberration compares WLPs lexicographically; MaxProjectivity
/// realizes designs and uses the oracle. Ties go to the smallest lambda, then
/// the smallest branch pair. Throws std::out_of_range for n outside
/// [1, options.max_n].
SearchResult optimize(int n, Family family, Criterion criterion, const SearchOptions& options = {});

/// Strict "a is better than b" under the criterion (projectivity must be
/// filled for MaxProjectivity).
bool strictly_better(const Candidate& a, const Candidate& b, Criterion criterion);

/// True if no candidate strictly beats `best` under the criterion.
bool is_optimal(const Candidate& best, const std::vector<Candidate>& all, Criterion criterion);

/// Largest projectivity any 2^(q-k) design can have: q - 5 for sixteenth
/// fractions, q - 4 for eighth fractions (an orthogonal array of index unity
/// with one more unit of strength does not exist).
enum class Fraction { Sixteenth, Eighth };
int orthogonal_array_ceiling(int q, Fraction fraction);
Fraction fraction_of(Family family);

}  // namespace qcd
