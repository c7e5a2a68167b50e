#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcdesign/generator.hpp"
#include "qcdesign/rational.hpp"
#include "qcdesign/search.hpp"

namespace qcd {

/// Published optimal designs (sixteenth and eighth fractions) with the
/// regular minimum-aberration designs they are compared against.
enum class PublishedTable { T3, T4, T5, T6 };

/// 3, 4, 5, 6. Throws std::invalid_argument otherwise.
PublishedTable published_table_from_number(int which);
int published_table_number(PublishedTable table);

struct PublishedRow {
  std::string design;           ///< "2^{10-4}"
  Family family;
  int n;
  std::string lambda;           ///< "0001110000"
  std::optional<BranchPair> branch;
  Rational resolution;
  std::vector<std::int64_t> a;  ///< A_4 onward
  int projectivity;             ///< QC design
  // Regular minimum-aberration design of the same size.
  int regular_resolution;
  std::string regular_a;        ///< "same" or "better"
  int regular_projectivity;
};

/// The seven sixteenth-fraction (Fraction::Sixteenth) or eighth-fraction rows.
const std::vector<PublishedRow>& published_rows(Fraction fraction);

/// The larger eighth-fraction design quoted as an extension of the tables.
const PublishedRow& published_extension_row();

struct ReportRow {
  PublishedRow published;
  SearchResult result;
  std::optional<int> projectivity_bound;  ///< closed form, sixteenth only
  int oa_ceiling = 0;

  bool lambda_exact = false;     ///< our tie-break picked the published design
  bool lambda_in_ties = false;   ///< published design tied with ours, same spectrum
  bool resolution_match = false;
  bool wlp_match = false;        ///< A_4 onward, and A_1..A_3 all zero
  bool projectivity_match = false;
  bool bound_match = true;       ///< projectivity equals the closed-form bound
  bool certified = false;        ///< no candidate strictly beats the optimum

  /// Row check for the table it was produced for.
  bool pass(PublishedTable table) const;
};

/// Runs the searches behind a published table (T5/T6 reuse the optima of
/// T3/T4) and compares every row with the embedded values.
std::vector<ReportRow> reproduce_table(PublishedTable which, const SearchOptions& options = {});

/// Same check for a single published row.
ReportRow reproduce_row(const PublishedRow& row, const SearchOptions& options = {});

}  // namespace qcd
