#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qcdesign/cli/app.hpp"
#include "qcdesign/cli/document.hpp"
#include "qcdesign/cli/report.hpp"
#include "qcdesign/cli/verify.hpp"

using namespace qcd;
using namespace qcd::cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "qcdesign_test_cli";
  fs::create_directories(dir);
  return dir / name;
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream f(p);
  f << text;
}

}  // namespace

TEST_CASE("build emits the expected shapes") {
  auto r = invoke({"build", "--family", "sixteenth-even", "--n", "3", "--u", "2,1,1", "--v", "1,1,3", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  auto j = json::parse(r.out);
  CHECK(j["schema"] == "qcdesign/1");
  CHECK(j["N"] == 64);
  CHECK(j["q"] == 10);
  CHECK(j["rows"].size() == 64);

  r = invoke({"build", "--family", "sixteenth-odd", "--n", "2", "--u", "1,2", "--v", "2,1", "--u0v0", "11", "--format",
           "json"});
  REQUIRE(r.code == kExitOk);
  j = json::parse(r.out);
  CHECK(j["N"] == 32);
  CHECK(j["q"] == 9);
  CHECK(j["u0v0"] == "11");

  r = invoke({"build", "--family", "sixteenth-even", "--n", "1", "--u", "0", "--v", "0", "--format", "csv"});
  REQUIRE(r.code == kExitOk);
  const auto d = design_from_csv(r.out);
  CHECK(d.runs() == 4);
  CHECK(d.factors() == 6);
}

TEST_CASE("documents round trip through JSON and CSV") {
  const auto doc = make_document(GeneratorSpec{Family::EighthOdd, {1, 2}, {2, 1}, BranchPair{1, 2}});
  CHECK(document_from_json(to_json(doc)) == doc);
  CHECK(design_from_csv(to_csv(doc.design)) == doc.design);

  const auto path = scratch("eo.json");
  write_document(doc, path, FileFormat::Json);
  CHECK(read_document(path) == doc);
  const auto csv = scratch("eo.csv");
  write_document(doc, csv, format_for(csv, std::nullopt));
  CHECK(read_document(csv).design == doc.design);
  CHECK_FALSE(read_document(csv).spec);
}

TEST_CASE("documents with inconsistent content are rejected") {
  auto j = to_json(make_document(GeneratorSpec{Family::SixteenthEven, {1, 2}, {2, 1}, std::nullopt}));
  auto bad = j;
  bad["schema"] = "qcdesign/0";
  CHECK_THROWS_AS(document_from_json(bad), DocumentError);
  bad = j;
  bad["rows"][3][0] = 0;
  CHECK_THROWS_AS(document_from_json(bad), DocumentError);
  bad = j;
  bad["rows"][3][0] = -static_cast<int>(bad["rows"][3][0]);
  CHECK_THROWS_AS(document_from_json(bad), DocumentError);
  CHECK_THROWS_AS(design_from_csv("A,B\n1,2\n"), DocumentError);
}

TEST_CASE("metrics: theory and oracle agree on the examples") {
  auto r = invoke({"metrics", "--family", "sixteenth-even", "--n", "3", "--u", "2,1,1", "--v", "1,1,3", "--report", "json"});
  REQUIRE(r.code == kExitOk);
  auto j = json::parse(r.out);
  CHECK(j["agree"] == true);
  CHECK(j["oracle"]["resolution"] == "9/2");
  CHECK(j["theory"]["wlp"] == json::array({"0", "0", "0", "2", "8", "4", "0", "1", "0", "0"}));
  CHECK(j["oracle"]["projectivity"] == 5);

  r = invoke({"metrics", "--family", "eighth-odd", "--n", "6", "--lambda", "0020220000", "--u0v0", "20", "--report",
           "json"});
  REQUIRE(r.code == kExitOk);
  j = json::parse(r.out);
  CHECK(j["oracle"]["resolution"] == "71/8");
  CHECK(j["agree"] == true);
}

TEST_CASE("metrics on a file with embedded metrics") {
  const auto spec = GeneratorSpec{Family::SixteenthOdd, {1, 2}, {2, 1}, BranchPair{1, 1}};
  auto doc = make_document(spec);
  const auto m = metrics(doc.design);
  doc.metrics = metrics_to_json(SpectrumMetrics{m.resolution, m.wlp}, m.spectrum, m.projectivity);
  const auto good = scratch("good.json");
  write_document(doc, good, FileFormat::Json);
  CHECK(invoke({"metrics", "--design", good.string()}).code == kExitOk);

  auto tampered = to_json(doc);
  tampered["metrics"]["resolution"] = "5";
  const auto bad = scratch("tampered.json");
  write_text(bad, tampered.dump());
  const auto r = invoke({"metrics", "--design", bad.string()});
  CHECK(r.code == kExitMismatch);
  CHECK(r.err.find("mismatch") != std::string::npos);

  auto floaty = to_json(doc);
  floaty["metrics"]["resolution"] = 4.5;
  const auto fl = scratch("float.json");
  write_text(fl, floaty.dump());
  CHECK(invoke({"metrics", "--design", fl.string()}).code == kExitUsage);
}

TEST_CASE("metrics on a full factorial CSV") {
  const auto path = scratch("ff.csv");
  write_text(path, "X1,X2\n1,1\n1,-1\n-1,1\n-1,-1\n");
  const auto r = invoke({"metrics", "--design", path.string(), "--method", "oracle", "--report", "json"});
  REQUIRE(r.code == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["oracle"]["resolution"] == "Unbounded");
  CHECK(j["oracle"]["projectivity"] == 2);
}

TEST_CASE("spectrum by type") {
  const auto r = invoke({"spectrum", "--family", "sixteenth-even", "--n", "3", "--u", "2,1,1", "--v", "1,1,3", "--by-type",
                      "--method", "theory", "--report", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("1100") != std::string::npos);
}

TEST_CASE("tables") {
  auto r = invoke({"tables", "--which", "4"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("7/7 rows PASS") != std::string::npos);

  r = invoke({"tables", "--which", "6", "--report", "json"});
  REQUIRE(r.code == kExitOk);
  const auto j = json::parse(r.out);
  std::vector<int> p;
  for (const auto& row : j["rows"]) p.push_back(row["projectivity"]);
  CHECK(p == std::vector<int>{3, 4, 5, 6, 7, 7, 7});
}

TEST_CASE("search") {
  const auto r = invoke({"search", "--n", "6", "--family", "eighth-odd", "--criterion", "resolution", "--report", "json"});
  REQUIRE(r.code == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["lambda"] == "0020220000");
  CHECK(j["u0v0"] == "20");
  CHECK(j["resolution"] == "71/8");
  CHECK(invoke({"search", "--n", "2", "--family", "sixteenth-even", "--report", "csv"}).code == kExitOk);
}

TEST_CASE("verify") {
  const auto r = invoke({"verify", "--n-max", "2", "--sample", "4", "--seed", "9", "--report", "json"});
  REQUIRE(r.code == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["lambdas_per_n"] == json::array({10, 55}));
  CHECK(j["sampled"] == 4);

  VerifyOptions o;
  o.n_max = 1;
  o.sample = 5;
  o.seed = 3;
  const auto a = sample_specs(o);
  const auto b = sample_specs(o);
  REQUIRE(a.size() == 5);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(build_design(a[i]) == build_design(b[i]));
}

TEST_CASE("bound") {
  auto r = invoke({"bound", "--n", "3", "--family", "sixteenth-even", "--report", "json"});
  REQUIRE(r.code == kExitOk);
  CHECK(json::parse(r.out)["bound"] == 5);
  r = invoke({"bound", "--n", "3", "--family", "eighth-even", "--report", "json"});
  REQUIRE(r.code == kExitOk);
  CHECK(json::parse(r.out)["bound"].is_null());
}

TEST_CASE("usage errors exit 1") {
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"frobnicate"}).code == kExitUsage);
  CHECK(invoke({"build", "--family", "quarter", "--n", "2"}).code == kExitUsage);
  CHECK(invoke({"build", "--family", "sixteenth-even", "--n", "2", "--u", "1,4", "--v", "1,1"}).code == kExitUsage);
  CHECK(invoke({"search", "--n", "12", "--family", "sixteenth-even"}).code == kExitUsage);
  CHECK(invoke({"metrics", "--design", scratch("missing.json").string()}).code == kExitUsage);
  CHECK(invoke({"tables", "--which", "2"}).code == kExitUsage);
  CHECK(invoke({"build", "--help"}).code == kExitOk);
}

TEST_CASE("report helpers") {
  CHECK(resolution_text(Rational(9, 2)) == "9/2 (4.5)");
  CHECK(design_label(Family::SixteenthEven, 3) == "2^{10-4}");
  CHECK(design_label(Family::EighthOdd, 6) == "2^{16-3}");
  CHECK(parse_report_format("csv") == ReportFormat::Csv);
}
