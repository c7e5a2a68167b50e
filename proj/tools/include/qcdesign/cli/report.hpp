#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qcdesign/rational.hpp"
#include "qcdesign/reference.hpp"
#include "qcdesign/search.hpp"

namespace qcd::cli {

enum class ReportFormat { Md, Json, Csv };
ReportFormat parse_report_format(std::string_view name);

/// Rectangular text report rendered as a Markdown table or CSV.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> headers) : headers_(std::move(headers)) {}
  void add(std::vector<std::string> row);
  std::string markdown() const;
  std::string csv() const;

 private:
  std::vector<std::string> headers_;
  std::vector<std::vector<std::string>> rows_;
};

/// "9/2 (4.5)", or "Unbounded".
std::string resolution_text(const std::optional<Rational>& r);
/// "(0, 6, 6, 2, 1, 0, 0, 0)" over A_first..A_q (first is 1-based).
std::string wlp_text(const std::vector<Rational>& wlp, int first = 1);
/// First index shown: 4 when A_1..A_3 vanish (the usual convention), else 1.
int wlp_display_start(const std::vector<Rational>& wlp);
/// "2^{10-4}".
std::string design_label(Family family, int n);

nlohmann::json search_to_json(const SearchResult& r);
std::string search_to_markdown(const SearchResult& r, std::size_t max_ties = 20);
std::string search_to_csv(const SearchResult& r);

nlohmann::json table_to_json(PublishedTable table, const std::vector<ReportRow>& rows);
std::string table_to_markdown(PublishedTable table, const std::vector<ReportRow>& rows);
std::string table_to_csv(PublishedTable table, const std::vector<ReportRow>& rows);

}  // namespace qcd::cli
