#include "qcdesign/cli/app.hpp"

#include <charconv>
#include <iostream>
#include <map>
#include <memory>

#include <CLI11.hpp>

#include "qcdesign/cli/document.hpp"
#include "qcdesign/cli/report.hpp"
#include "qcdesign/cli/verify.hpp"
#include "qcdesign/oracle.hpp"
#include "qcdesign/reference.hpp"
#include "qcdesign/search.hpp"
#include "qcdesign/theory.hpp"

namespace qcd::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Z4> parse_z4_list(const std::string& text, const char* flag) {
  std::vector<Z4> out;
  for (const auto& item : split(text, ',')) {
    int x = -1;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
    if (ec != std::errc() || ptr != item.data() + item.size() || x < 0 || x > 3) {
      throw UsageError(std::string(flag) + ": '" + item + "' is not a Z4 digit (0..3)");
    }
    out.push_back(static_cast<Z4>(x));
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> out;
  for (const auto& item : split(text, ',')) {
    int x = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw UsageError(std::string(flag) + ": '" + item + "' is not an integer");
    }
    out.push_back(x);
  }
  return out;
}

std::vector<Family> parse_families(const std::string& text) {
  if (text == "all") return {kAllFamilies.begin(), kAllFamilies.end()};
  std::vector<Family> out;
  for (const auto& name : split(text, ',')) out.push_back(parse_family(name));
  return out;
}

const std::vector<std::string> kFamilyNames = {"sixteenth-even", "eighth-even", "sixteenth-odd", "eighth-odd"};

// Flags that describe one design, either a file or generator data.
struct DesignFlags {
  std::string design_path;
  std::string family;
  int n = 0;
  std::string u, v, u0v0, lambda;

  void add(CLI::App* cmd, bool allow_file) {
    if (allow_file) cmd->add_option("--design", design_path, "design file (JSON document or CSV)");
    cmd->add_option("--family", family, "design family")->check(CLI::IsMember(kFamilyNames));
    cmd->add_option("--n", n, "number of generator coordinates")->check(CLI::PositiveNumber);
    cmd->add_option("--u", u, "first generator row, comma-separated Z4 digits");
    cmd->add_option("--v", v, "second generator row, comma-separated Z4 digits");
    cmd->add_option("--u0v0", u0v0, "branch pair for odd-run families, e.g. 12");
    cmd->add_option("--lambda", lambda, "lambda profile instead of --u/--v, e.g. 0011000000");
  }

  bool has_generator_flags() const {
    return !family.empty() || n != 0 || !u.empty() || !v.empty() || !u0v0.empty() || !lambda.empty();
  }

  GeneratorSpec spec() const {
    if (family.empty()) throw UsageError("--family is required");
    const Family f = parse_family(family);
    std::optional<BranchPair> branch;
    if (!u0v0.empty()) branch = parse_branch_pair(u0v0);
    if (is_odd_run(f) && !branch) throw UsageError("--u0v0 is required for " + family);
    if (!is_odd_run(f) && branch) throw UsageError("--u0v0 only applies to odd-run families");
    GeneratorSpec s;
    if (!lambda.empty()) {
      if (!u.empty() || !v.empty()) throw UsageError("give either --lambda or --u/--v, not both");
      s = spec_from_lambda(f, LambdaProfile::parse(lambda), branch);
    } else {
      if (u.empty() || v.empty()) throw UsageError("--u and --v (or --lambda) are required");
      s.family = f;
      s.u = parse_z4_list(u, "--u");
      s.v = parse_z4_list(v, "--v");
      s.branch = branch;
    }
    if (n != 0 && s.n() != n) {
      throw UsageError("--n " + std::to_string(n) + " does not match generator length " + std::to_string(s.n()));
    }
    s.validate();
    return s;
  }

  DesignDocument load() const {
    if (!design_path.empty()) {
      if (has_generator_flags()) throw UsageError("--design cannot be combined with generator flags");
      return read_document(design_path);
    }
    return make_document(spec());
  }
};

json design_summary(const DesignDocument& doc) {
  json j;
  j["N"] = doc.design.runs();
  j["q"] = doc.design.factors();
  if (doc.spec) {
    j["family"] = family_name(doc.spec->family);
    j["n"] = doc.spec->n();
    j["lambda"] = lambda_profile(frequencies(doc.spec->u, doc.spec->v)).to_string();
    j["u0v0"] = doc.spec->branch ? json(to_string(*doc.spec->branch)) : json(nullptr);
  }
  return j;
}

std::string design_heading(const DesignDocument& doc) {
  std::string s = "N = " + std::to_string(doc.design.runs()) + ", q = " + std::to_string(doc.design.factors());
  if (doc.spec) {
    s = std::string(family_name(doc.spec->family)) + ", n = " + std::to_string(doc.spec->n()) + ", " + s +
        ", lambda = " + lambda_profile(frequencies(doc.spec->u, doc.spec->v)).to_string();
    if (doc.spec->branch) s += ", u0v0 = " + to_string(*doc.spec->branch);
  } else {
    s = "external design, " + s;
  }
  return s;
}

WordSpectrum theory_for(const DesignDocument& doc) {
  const auto& s = *doc.spec;
  return theory_spectrum(s.family, lambda_profile(frequencies(s.u, s.v)), s.branch);
}

// ---- build ---------------------------------------------------------------

struct BuildCmd {
  DesignFlags flags;
  std::string out_path = "-";
  std::string format;

  int run(std::ostream& out) const {
    const auto doc = make_document(flags.spec());
    std::optional<FileFormat> requested;
    if (!format.empty()) requested = parse_format(format);
    const auto fmt = format_for(out_path, requested);
    if (out_path == "-") {
      out << render_document(doc, fmt);
    } else {
      write_document(doc, out_path, fmt);
      out << "wrote " << doc.design.runs() << "x" << doc.design.factors() << " design to " << out_path << "\n";
    }
    return kExitOk;
  }
};

// ---- metrics -------------------------------------------------------------

struct MetricsCmd {
  DesignFlags flags;
  std::string method = "auto";
  std::string report = "md";

  int run(std::ostream& out, std::ostream& err) const {
    const auto doc = flags.load();
    std::string m = method;
    if (m == "auto") m = doc.spec ? "both" : "oracle";
    if ((m == "theory" || m == "both") && !doc.spec) {
      throw UsageError("theory needs generator data; this design has none (use --method oracle)");
    }
    const int q = doc.design.factors();

    std::optional<WordSpectrum> theory;
    std::optional<DesignMetrics> oracle;
    if (m == "theory" || m == "both") theory = theory_for(doc);
    if (m == "oracle" || m == "both") oracle = metrics(doc.design);

    bool ok = true;
    std::vector<std::string> problems;
    if (theory && oracle && *theory != oracle->spectrum) {
      ok = false;
      problems.push_back("theory " + theory->to_string() + " != oracle " + oracle->spectrum.to_string());
    }
    const WordSpectrum& spectrum = oracle ? oracle->spectrum : *theory;
    const auto sm = spectrum_metrics(spectrum, q);
    if (doc.metrics) {
      const auto embedded = metrics_from_json(*doc.metrics);
      if (!(embedded == sm)) {
        ok = false;
        problems.push_back("embedded metrics differ from the recomputed ones");
      }
    }

    const auto fmt = parse_report_format(report);
    if (fmt == ReportFormat::Json) {
      json j;
      j["schema"] = kSchema;
      j["design"] = design_summary(doc);
      j["method"] = m;
      if (theory) j["theory"] = metrics_to_json(spectrum_metrics(*theory, q), *theory, std::nullopt);
      if (oracle) {
        j["oracle"] = metrics_to_json(SpectrumMetrics{oracle->resolution, oracle->wlp}, oracle->spectrum,
                                      oracle->projectivity);
      }
      j["agree"] = ok;
      out << j.dump(2) << "\n";
    } else if (fmt == ReportFormat::Md) {
      TextTable t({"metric", "value"});
      t.add({"design", design_heading(doc)});
      t.add({"method", m});
      t.add({"R", resolution_text(sm.resolution)});
      t.add({"A (A1 onward)", wlp_text(sm.wlp)});
      if (oracle) t.add({"projectivity", std::to_string(oracle->projectivity)});
      t.add({"spectrum", spectrum.to_string()});
      if (m == "both") t.add({"theory vs oracle", ok ? "agree" : "MISMATCH"});
      out << t.markdown();
    } else {
      throw UsageError("metrics supports --report md or json");
    }
    for (const auto& p : problems) err << "mismatch: " << p << "\n";
    return ok ? kExitOk : kExitMismatch;
  }
};

// ---- spectrum ------------------------------------------------------------

struct SpectrumCmd {
  DesignFlags flags;
  std::string method = "auto";
  bool by_type = false;
  std::string report = "md";

  // Word spectrum per type key, e.g. "0101" or "0101|1" with the F5 bit.
  std::map<std::string, WordSpectrum> oracle_by_type(const DesignDocument& doc) const {
    const auto j = j_characteristics(doc.design);
    const auto runs = doc.design.runs();
    std::map<std::string, WordSpectrum> groups;
    for (std::size_t mask = 1; mask < j.size(); ++mask) {
      if (j[mask] == 0) continue;
      const auto type = classify_subset(doc.design.labels(), mask);
      std::string key = type.x_string();
      if (type.x5) key += *type.x5 ? "|1" : "|0";
      const auto absj = j[mask] < 0 ? -j[mask] : j[mask];
      groups[key].add(type.length(), Rational(absj, runs), 1);
    }
    return groups;
  }

  std::map<std::string, WordSpectrum> theory_by_type(const DesignDocument& doc) const {
    if (doc.spec->family != Family::SixteenthEven) {
      throw UsageError("per-type theory spectra exist for sixteenth-even only; use --method oracle");
    }
    const auto lambda = lambda_profile(frequencies(doc.spec->u, doc.spec->v));
    std::map<std::string, WordSpectrum> groups;
    for (unsigned bits = 0; bits < 16; ++bits) {
      const std::array<bool, 4> x{(bits & 8u) != 0, (bits & 4u) != 0, (bits & 2u) != 0, (bits & 1u) != 0};
      const auto report = theorem1_words(lambda, x);
      WordSpectrum s(report.words);
      if (!s.empty()) groups[SubsetType{x, std::nullopt, {}, {}, {}}.x_string()] = s;
    }
    return groups;
  }

  int run(std::ostream& out) const {
    const auto doc = flags.load();
    std::string m = method;
    if (m == "auto") m = doc.spec ? "theory" : "oracle";
    if (m == "theory" && !doc.spec) throw UsageError("theory needs generator data (use --method oracle)");

    std::map<std::string, WordSpectrum> groups;
    if (by_type) {
      groups = m == "theory" ? theory_by_type(doc) : oracle_by_type(doc);
    } else {
      groups[""] = m == "theory" ? theory_for(doc) : spectrum_bruteforce(doc.design);
    }

    const auto fmt = parse_report_format(report);
    if (fmt == ReportFormat::Json) {
      json j;
      j["schema"] = kSchema;
      j["design"] = design_summary(doc);
      j["method"] = m;
      auto entries = [](const WordSpectrum& s) {
        json a = json::array();
        for (const auto& e : s.entries()) a.push_back({{"length", e.length}, {"ai", to_string(e.ai)}, {"count", e.count}});
        return a;
      };
      if (by_type) {
        json t = json::object();
        for (const auto& [key, s] : groups) t[key] = entries(s);
        j["types"] = std::move(t);
      } else {
        j["spectrum"] = entries(groups[""]);
      }
      out << j.dump(2) << "\n";
      return kExitOk;
    }
    std::vector<std::string> headers{"length", "ai", "count"};
    if (by_type) headers.insert(headers.begin(), "type");
    TextTable t(headers);
    for (const auto& [key, s] : groups) {
      for (const auto& e : s.entries()) {
        std::vector<std::string> row{std::to_string(e.length), to_string(e.ai), std::to_string(e.count)};
        if (by_type) row.insert(row.begin(), key);
        t.add(std::move(row));
      }
    }
    out << (fmt == ReportFormat::Csv ? t.csv() : t.markdown());
    return kExitOk;
  }
};

// ---- search --------------------------------------------------------------

struct SearchCmd {
  int n = 0;
  std::string family;
  std::string criterion = "aberration";
  bool all_branches = false;
  int max_n = 8;
  std::string report = "md";

  int run(std::ostream& out) const {
    SearchOptions options;
    options.max_n = max_n;
    options.all_branch_pairs = all_branches;
    const auto result = optimize(n, parse_family(family), parse_criterion(criterion), options);
    switch (parse_report_format(report)) {
      case ReportFormat::Json: out << search_to_json(result).dump(2) << "\n"; break;
      case ReportFormat::Md: out << search_to_markdown(result); break;
      case ReportFormat::Csv: out << search_to_csv(result); break;
    }
    return kExitOk;
  }
};

// ---- tables --------------------------------------------------------------

struct TablesCmd {
  int which = 0;
  std::string report = "md";

  int run(std::ostream& out) const {
    const auto table = published_table_from_number(which);
    const auto rows = reproduce_table(table);
    switch (parse_report_format(report)) {
      case ReportFormat::Json: out << table_to_json(table, rows).dump(2) << "\n"; break;
      case ReportFormat::Md: out << table_to_markdown(table, rows); break;
      case ReportFormat::Csv: out << table_to_csv(table, rows); break;
    }
    const bool all = std::all_of(rows.begin(), rows.end(), [&](const ReportRow& r) { return r.pass(table); });
    return all ? kExitOk : kExitMismatch;
  }
};

// ---- verify --------------------------------------------------------------

struct VerifyCmd {
  int n_max = 3;
  std::string families = "all";
  int sample = 0;
  std::uint64_t seed = 1;
  std::string sample_n = "4,5";
  bool all_branches = false;
  bool no_projectivity = false;
  std::string report = "md";

  int run(std::ostream& out) const {
    VerifyOptions o;
    o.n_max = n_max;
    o.families = parse_families(families);
    o.sample = sample;
    o.seed = seed;
    o.sample_n = parse_int_list(sample_n, "--sample-n");
    for (int x : o.sample_n) {
      if (x < 1 || x > 8) throw UsageError("--sample-n values must lie in 1..8");
    }
    o.all_branch_pairs = all_branches;
    o.check_projectivity = !no_projectivity;
    const auto s = verify(o);

    const auto fmt = parse_report_format(report);
    if (fmt == ReportFormat::Json) {
      json j{{"schema", kSchema},
             {"cases", s.cases},
             {"exhaustive", s.exhaustive_cases},
             {"sampled", s.sampled_cases},
             {"lambdas_per_n", s.lambdas_per_n},
             {"spectrum_mismatches", s.spectrum_mismatches},
             {"parseval_failures", s.parseval_failures},
             {"projectivity_failures", s.projectivity_failures},
             {"pass", s.ok()}};
      j["first_failure"] = s.first_failure ? json(s.first_failure->describe()) : json(nullptr);
      out << j.dump(2) << "\n";
    } else {
      TextTable t({"check", "value"});
      t.add({"cases", std::to_string(s.cases) + " (" + std::to_string(s.exhaustive_cases) + " exhaustive, " +
                          std::to_string(s.sampled_cases) + " sampled)"});
      std::string per_n;
      for (std::size_t i = 0; i < s.lambdas_per_n.size(); ++i) {
        per_n += (i ? " + " : "") + std::to_string(s.lambdas_per_n[i]);
      }
      t.add({"lambda profiles per family (n = 1.." + std::to_string(o.n_max) + ")", per_n.empty() ? "0" : per_n});
      t.add({"spectrum mismatches", std::to_string(s.spectrum_mismatches)});
      t.add({"parseval failures", std::to_string(s.parseval_failures)});
      t.add({"projectivity failures", o.check_projectivity ? std::to_string(s.projectivity_failures) : "skipped"});
      t.add({"result", s.ok() ? "PASS" : "FAIL"});
      out << (fmt == ReportFormat::Csv ? t.csv() : t.markdown());
      if (s.first_failure) out << "\nfirst counterexample: " << s.first_failure->describe() << "\n";
    }
    return s.ok() ? kExitOk : kExitMismatch;
  }
};

// ---- bound ---------------------------------------------------------------

struct BoundCmd {
  int n = 0;
  std::string family;
  std::string report = "md";

  int run(std::ostream& out) const {
    const Family f = parse_family(family);
    const auto bound = projectivity_bound(n, f);
    const int q = factor_count(f, n);
    const int ceiling = orthogonal_array_ceiling(q, fraction_of(f));
    if (parse_report_format(report) == ReportFormat::Json) {
      json j{{"schema", kSchema}, {"family", family}, {"n", n}, {"design", design_label(f, n)},
             {"oa_ceiling", ceiling}};
      j["bound"] = bound ? json(*bound) : json(nullptr);
      if (!bound) j["note"] = "no closed-form bound for eighth fractions";
      out << j.dump(2) << "\n";
    } else {
      out << design_label(f, n) << " " << family << ": projectivity bound "
          << (bound ? std::to_string(*bound) : "none (no closed form for eighth fractions)")
          << ", orthogonal-array ceiling " << ceiling << "\n";
    }
    return kExitOk;
  }
};

const std::vector<std::string> kReports = {"md", "json", "csv"};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quaternary-code fractional factorial designs: construction, metrics and optimal-design search",
               "qcdesign"};
  app.set_version_flag("--version", "qcdesign 0.1.0");
  app.require_subcommand(1);

  BuildCmd build;
  auto* b = app.add_subcommand("build", "write the binary image of a quaternary code");
  build.flags.add(b, false);
  b->add_option("--out", build.out_path, "output path, - for stdout");
  b->add_option("--format", build.format, "json or csv (default: from extension)")
      ->check(CLI::IsMember({"json", "csv"}));

  MetricsCmd met;
  auto* m = app.add_subcommand("metrics", "resolution, wordlength pattern and projectivity");
  met.flags.add(m, true);
  m->add_option("--method", met.method, "theory, oracle or both (default: both when possible)")
      ->check(CLI::IsMember({"auto", "theory", "oracle", "both"}));
  m->add_option("--report", met.report)->check(CLI::IsMember({"md", "json"}));

  SpectrumCmd spec;
  auto* s = app.add_subcommand("spectrum", "word spectrum (length, aliasing index, count)");
  spec.flags.add(s, true);
  s->add_option("--method", spec.method, "theory or oracle")->check(CLI::IsMember({"auto", "theory", "oracle"}));
  s->add_flag("--by-type", spec.by_type, "group words by check-column type");
  s->add_option("--report", spec.report)->check(CLI::IsMember(kReports));

  SearchCmd search;
  auto* se = app.add_subcommand("search", "exhaustive optimal-design search over lambda profiles");
  se->add_option("--n", search.n, "number of generator coordinates")->required();
  se->add_option("--family", search.family)->required()->check(CLI::IsMember(kFamilyNames));
  se->add_option("--criterion", search.criterion)
      ->check(CLI::IsMember({"resolution", "aberration", "projectivity"}));
  se->add_flag("--all-branches", search.all_branches, "enumerate all 16 branch pairs");
  se->add_option("--max-n", search.max_n, "upper end of the search range");
  se->add_option("--report", search.report)->check(CLI::IsMember(kReports));

  TablesCmd tables;
  auto* t = app.add_subcommand("tables", "reproduce the published optimal-design tables");
  t->add_option("--which", tables.which, "3, 4, 5 or 6")->required()->check(CLI::IsMember({3, 4, 5, 6}));
  t->add_option("--report", tables.report)->check(CLI::IsMember(kReports));

  VerifyCmd ver;
  auto* v = app.add_subcommand("verify", "check closed-form spectra against brute force");
  v->add_option("--n-max", ver.n_max, "exhaustive sweep up to this n");
  v->add_option("--families", ver.families, "comma-separated families or all");
  v->add_option("--sample", ver.sample, "number of random raw generators");
  v->add_option("--seed", ver.seed);
  v->add_option("--sample-n", ver.sample_n, "comma-separated n values for sampling");
  v->add_flag("--all-branches", ver.all_branches, "all 16 branch pairs instead of one per class");
  v->add_flag("--no-projectivity", ver.no_projectivity, "skip projectivity checks");
  v->add_option("--report", ver.report)->check(CLI::IsMember(kReports));

  BoundCmd bound;
  auto* bo = app.add_subcommand("bound", "closed-form projectivity bound");
  bo->add_option("--n", bound.n)->required()->check(CLI::PositiveNumber);
  bo->add_option("--family", bound.family)->required()->check(CLI::IsMember(kFamilyNames));
  bo->add_option("--report", bound.report)->check(CLI::IsMember({"md", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*b) return build.run(out);
    if (*m) return met.run(out, err);
    if (*s) return spec.run(out);
    if (*se) return search.run(out);
    if (*t) return tables.run(out);
    if (*v) return ver.run(out);
    if (*bo) return bound.run(out);
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"qcdesign"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qcd::cli
