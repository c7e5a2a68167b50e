#include "qcdesign/cli/report.hpp"

#include <algorithm>
#include <stdexcept>

#include "qcdesign/generator.hpp"

namespace qcd::cli {

using nlohmann::json;

ReportFormat parse_report_format(std::string_view name) {
  if (name == "md") return ReportFormat::Md;
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  throw std::invalid_argument("report must be md, json or csv");
}

void TextTable::add(std::vector<std::string> row) {
  if (row.size() != headers_.size()) throw std::logic_error("TextTable row width");
  rows_.push_back(std::move(row));
}

std::string TextTable::markdown() const {
  std::vector<std::size_t> width(headers_.size());
  for (std::size_t c = 0; c < headers_.size(); ++c) width[c] = std::max<std::size_t>(3, headers_[c].size());
  for (const auto& r : rows_) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s = "|";
    for (std::size_t c = 0; c < cells.size(); ++c) {
      s += ' ' + cells[c] + std::string(width[c] - cells[c].size(), ' ') + " |";
    }
    return s + '\n';
  };
  std::string out = line(headers_);
  out += '|';
  for (auto w : width) out += std::string(w + 2, '-') + '|';
  out += '\n';
  for (const auto& r : rows_) out += line(r);
  return out;
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

std::string branch_text(const std::optional<BranchPair>& b) { return b ? to_string(*b) : "-"; }

json rationals(const std::vector<Rational>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

}  // namespace

std::string TextTable::csv() const {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out += ',';
      out += csv_cell(cells[c]);
    }
    out += '\n';
  };
  line(headers_);
  for (const auto& r : rows_) line(r);
  return out;
}

std::string resolution_text(const std::optional<Rational>& r) {
  if (!r) return "Unbounded";
  if (r->denominator() == 1) return to_string(*r);
  return to_string(*r) + " (" + to_decimal(*r) + ")";
}

std::string wlp_text(const std::vector<Rational>& wlp, int first) {
  std::string s = "(";
  for (std::size_t k = static_cast<std::size_t>(first - 1); k < wlp.size(); ++k) {
    if (s.size() > 1) s += ", ";
    s += to_string(wlp[k]);
  }
  return s + ")";
}

int wlp_display_start(const std::vector<Rational>& wlp) {
  for (std::size_t k = 0; k < 3 && k < wlp.size(); ++k) {
    if (wlp[k] != Rational(0)) return 1;
  }
  return wlp.size() >= 4 ? 4 : 1;
}

std::string design_label(Family family, int n) {
  return "2^{" + std::to_string(factor_count(family, n)) + "-" + std::to_string(generator_count(family)) + "}";
}

namespace {

json candidate_json(const Candidate& c) {
  json j{{"lambda", c.lambda.to_string()},
         {"u0v0", c.branch ? json(to_string(*c.branch)) : json(nullptr)},
         {"resolution", resolution_to_string(c.metrics.resolution)},
         {"wlp", rationals(c.metrics.wlp)}};
  if (c.projectivity) j["projectivity"] = *c.projectivity;
  return j;
}

const PublishedRow* regular_reference(Family family, int n) {
  for (auto f : {Fraction::Sixteenth, Fraction::Eighth}) {
    for (const auto& row : published_rows(f)) {
      if (row.family == family && row.n == n) return &row;
    }
  }
  return nullptr;
}

}  // namespace

json search_to_json(const SearchResult& r) {
  json j;
  j["schema"] = "qcdesign/1";
  j["family"] = family_name(r.family);
  j["n"] = r.n;
  j["design"] = design_label(r.family, r.n);
  j["N"] = run_count(r.family, r.n);
  j["q"] = factor_count(r.family, r.n);
  j["criterion"] = criterion_name(r.criterion);
  j["lambda"] = r.lambda.to_string();
  j["u0v0"] = r.branch ? json(to_string(*r.branch)) : json(nullptr);
  j["resolution"] = resolution_to_string(r.resolution);
  j["resolution_decimal"] = r.resolution ? json(to_decimal(*r.resolution)) : json(nullptr);
  j["wlp"] = rationals(r.wlp);
  j["projectivity"] = r.projectivity;
  j["criteria_coincide"] = r.criteria_coincide;
  j["candidates_evaluated"] = r.candidates_evaluated;
  json ties = json::array();
  for (const auto& c : r.ties) ties.push_back(candidate_json(c));
  j["ties"] = std::move(ties);
  if (const auto* ref = regular_reference(r.family, r.n)) {
    j["regular_reference"] = {{"resolution", ref->regular_resolution},
                              {"A", ref->regular_a},
                              {"projectivity", ref->regular_projectivity}};
  } else {
    j["regular_reference"] = nullptr;
  }
  return j;
}

std::string search_to_markdown(const SearchResult& r, std::size_t max_ties) {
  const int start = wlp_display_start(r.wlp);
  TextTable t({"field", "value"});
  t.add({"design", design_label(r.family, r.n) + ", " + std::string(family_name(r.family)) + ", n = " +
                       std::to_string(r.n) + ", N = " + std::to_string(run_count(r.family, r.n))});
  t.add({"criterion", std::string(criterion_name(r.criterion))});
  t.add({"lambda", r.lambda.to_string()});
  t.add({"u0v0", branch_text(r.branch)});
  t.add({"R", resolution_text(r.resolution)});
  t.add({"A (A" + std::to_string(start) + " onward)", wlp_text(r.wlp, start)});
  t.add({"projectivity", std::to_string(r.projectivity)});
  t.add({"criteria coincide", r.criteria_coincide ? "yes" : "no"});
  t.add({"candidates", std::to_string(r.candidates_evaluated)});
  if (const auto* ref = regular_reference(r.family, r.n)) {
    t.add({"regular MA design", "R = " + std::to_string(ref->regular_resolution) + ", A " + ref->regular_a +
                                    ", projectivity " + std::to_string(ref->regular_projectivity)});
  }
  std::string ties;
  for (std::size_t i = 0; i < r.ties.size() && i < max_ties; ++i) {
    if (i) ties += ' ';
    ties += r.ties[i].key();
  }
  if (r.ties.size() > max_ties) ties += " ... (" + std::to_string(r.ties.size() - max_ties) + " more)";
  t.add({"ties (" + std::to_string(r.ties.size()) + ")", ties});
  return t.markdown();
}

std::string search_to_csv(const SearchResult& r) {
  TextTable t({"family", "n", "criterion", "rank", "lambda", "u0v0", "resolution", "wlp", "projectivity"});
  int rank = 0;
  for (const auto& c : r.ties) {
    std::string wlp;
    for (const auto& a : c.metrics.wlp) wlp += (wlp.empty() ? "" : " ") + to_string(a);
    t.add({std::string(family_name(r.family)), std::to_string(r.n), std::string(criterion_name(r.criterion)),
           std::to_string(++rank), c.lambda.to_string(), branch_text(c.branch),
           resolution_to_string(c.metrics.resolution), wlp,
           c.projectivity ? std::to_string(*c.projectivity) : ""});
  }
  return t.csv();
}

namespace {

bool projectivity_table(PublishedTable t) { return t == PublishedTable::T5 || t == PublishedTable::T6; }

std::string published_design_text(const PublishedRow& p) {
  return p.branch ? p.lambda + "/" + to_string(*p.branch) : p.lambda;
}

std::string lambda_check(const ReportRow& r) {
  if (r.lambda_exact) return "exact";
  if (r.lambda_in_ties) return "tied with published " + published_design_text(r.published);
  return "differs from published " + published_design_text(r.published);
}

TextTable build_table(PublishedTable table, const std::vector<ReportRow>& rows) {
  if (projectivity_table(table)) {
    TextTable t({"design", "lambda", "u0v0", "projectivity", "published", "bound", "OA ceiling", "regular MA",
                 "check"});
    for (const auto& r : rows) {
      t.add({r.published.design, r.result.lambda.to_string(), branch_text(r.result.branch),
             std::to_string(r.result.projectivity), std::to_string(r.published.projectivity),
             r.projectivity_bound ? std::to_string(*r.projectivity_bound) : "-", std::to_string(r.oa_ceiling),
             std::to_string(r.published.regular_projectivity), r.pass(table) ? "PASS" : "FAIL"});
    }
    return t;
  }
  TextTable t({"design", "lambda", "u0v0", "R", "A (A4 onward)", "regular R", "regular A", "published design",
               "check"});
  for (const auto& r : rows) {
    t.add({r.published.design, r.result.lambda.to_string(), branch_text(r.result.branch),
           resolution_text(r.result.resolution), wlp_text(r.result.wlp, 4),
           std::to_string(r.published.regular_resolution), r.published.regular_a, lambda_check(r),
           r.pass(table) ? "PASS" : "FAIL"});
  }
  return t;
}

}  // namespace

json table_to_json(PublishedTable table, const std::vector<ReportRow>& rows) {
  json out;
  out["schema"] = "qcdesign/1";
  out["table"] = published_table_number(table);
  json arr = json::array();
  bool all = true;
  for (const auto& r : rows) {
    json j;
    j["design"] = r.published.design;
    j["family"] = family_name(r.published.family);
    j["n"] = r.published.n;
    j["lambda"] = r.result.lambda.to_string();
    j["u0v0"] = r.result.branch ? json(to_string(*r.result.branch)) : json(nullptr);
    j["resolution"] = resolution_to_string(r.result.resolution);
    j["resolution_decimal"] = r.result.resolution ? json(to_decimal(*r.result.resolution)) : json(nullptr);
    j["wlp"] = rationals(r.result.wlp);
    j["projectivity"] = r.result.projectivity;
    j["projectivity_bound"] = r.projectivity_bound ? json(*r.projectivity_bound) : json(nullptr);
    j["oa_ceiling"] = r.oa_ceiling;
    j["criteria_coincide"] = r.result.criteria_coincide;
    j["ties"] = r.result.ties.size();
    j["published"] = {{"lambda", r.published.lambda},
                  {"u0v0", r.published.branch ? json(to_string(*r.published.branch)) : json(nullptr)},
                  {"resolution", to_string(r.published.resolution)},
                  {"A", r.published.a},
                  {"projectivity", r.published.projectivity},
                  {"regular_resolution", r.published.regular_resolution},
                  {"regular_A", r.published.regular_a},
                  {"regular_projectivity", r.published.regular_projectivity}};
    j["flags"] = {{"lambda_exact", r.lambda_exact},       {"lambda_in_ties", r.lambda_in_ties},
                  {"resolution", r.resolution_match},     {"wlp", r.wlp_match},
                  {"projectivity", r.projectivity_match}, {"bound", r.bound_match},
                  {"certified_optimal", r.certified}};
    j["pass"] = r.pass(table);
    all = all && r.pass(table);
    arr.push_back(std::move(j));
  }
  out["rows"] = std::move(arr);
  out["pass"] = all;
  return out;
}

std::string table_to_markdown(PublishedTable table, const std::vector<ReportRow>& rows) {
  const auto passed = std::count_if(rows.begin(), rows.end(), [&](const ReportRow& r) { return r.pass(table); });
  std::string title = projectivity_table(table) ? "Projectivities of the optimal QC designs, table "
                                                : "QC designs with maximum resolution and MA, table ";
  return "## " + title + std::to_string(published_table_number(table)) + "\n\n" + build_table(table, rows).markdown() +
         "\n" + std::to_string(passed) + "/" + std::to_string(rows.size()) + " rows PASS\n";
}

std::string table_to_csv(PublishedTable table, const std::vector<ReportRow>& rows) {
  return build_table(table, rows).csv();
}

}  // namespace qcd::cli
