#include <doctest.h>

#include <cstdlib>
#include <set>
#include <stdexcept>

#include "qcdesign/design.hpp"
#include "qcdesign/oracle.hpp"
#include "qcdesign/reference.hpp"
#include "qcdesign/search.hpp"
#include "qcdesign/theory.hpp"

using namespace qcd;

namespace {

// Stars and bars by direct recursion, independent of the library enumerator.
std::int64_t count_compositions(int parts, int total) {
  if (parts == 1) return 1;
  std::int64_t c = 0;
  for (int k = 0; k <= total; ++k) c += count_compositions(parts - 1, total - k);
  return c;
}

std::string signature(const SearchResult& r) {
  std::string s = r.lambda.to_string() + "/" + (r.branch ? to_string(*r.branch) : "-") + " R=" +
                  resolution_to_string(r.resolution) + " p=" + std::to_string(r.projectivity) + " ties=";
  for (const auto& t : r.ties) s += t.key() + ",";
  return s;
}

}  // namespace

TEST_CASE("lambda enumeration counts and order") {
  CHECK(enumerate_lambdas(1).size() == 10);
  CHECK(enumerate_lambdas(2).size() == 55);
  CHECK(enumerate_lambdas(3).size() == 220);
  CHECK(composition_count(4) == 715);
  for (int n = 1; n <= 5; ++n) CHECK(composition_count(n) == count_compositions(10, n));

  const auto all = enumerate_lambdas(3);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto s = all[i].to_string();
    CHECK(all[i].n() == 3);
    CHECK(seen.insert(s).second);
    if (i > 0) CHECK(all[i - 1].to_string() < s);
  }
  std::int64_t visited = 0;
  for_each_lambda(4, [&](const LambdaProfile&) { ++visited; });
  CHECK(visited == 715);
}

TEST_CASE("criterion names") {
  for (auto c : {Criterion::MaxResolution, Criterion::MinAberration, Criterion::MaxProjectivity}) {
    CHECK(parse_criterion(criterion_name(c)) == c);
  }
  CHECK_THROWS_AS(parse_criterion("speed"), std::invalid_argument);
}

TEST_CASE("published optima") {
  auto r = optimize(2, Family::SixteenthEven, Criterion::MinAberration);
  CHECK(r.lambda.to_string() == "0011000000");
  CHECK(*r.resolution == Rational(4));
  CHECK(r.criteria_coincide);

  r = optimize(3, Family::SixteenthOdd, Criterion::MaxResolution);
  CHECK(r.lambda.to_string() == "0001110000");
  CHECK(to_string(*r.branch) == "12");
  CHECK(*r.resolution == Rational(11, 2));
  CHECK(r.projectivity == 6);

  r = optimize(6, Family::EighthOdd, Criterion::MaxResolution);
  CHECK(r.lambda.to_string() == "0020220000");
  CHECK(to_string(*r.branch) == "20");
  CHECK(*r.resolution == Rational(71, 8));
}

TEST_CASE("search is deterministic across thread counts") {
  std::vector<std::string> runs;
  for (const char* threads : {"1", "4", "7"}) {
    setenv("QCDESIGN_THREADS", threads, 1);
    runs.push_back(signature(optimize(4, Family::SixteenthOdd, Criterion::MinAberration)));
    runs.push_back(signature(optimize(3, Family::EighthOdd, Criterion::MaxProjectivity)));
  }
  unsetenv("QCDESIGN_THREADS");
  for (std::size_t i = 2; i < runs.size(); ++i) CHECK(runs[i] == runs[i % 2]);
}

TEST_CASE("class representatives lose nothing against all sixteen branch pairs") {
  SearchOptions every;
  every.all_branch_pairs = true;
  for (auto family : {Family::SixteenthOdd, Family::EighthOdd}) {
    for (int n = 2; n <= 3; ++n) {
      const auto reps = optimize(n, family, Criterion::MinAberration);
      const auto full = optimize(n, family, Criterion::MinAberration, every);
      CHECK(reps.resolution == full.resolution);
      CHECK(reps.wlp == full.wlp);
      CHECK(reps.projectivity == full.projectivity);
      CHECK(full.candidates_evaluated == 16 * composition_count(n));
    }
  }
}

TEST_CASE("branch pairs in one table column give the same spectrum") {
  for (const auto& l : enumerate_lambdas(2)) {
    for (auto a : all_branch_pairs()) {
      for (auto b : all_branch_pairs()) {
        if (table1_column(a) == table1_column(b)) {
          const auto sa = spectrum_bruteforce(build_design(spec_from_lambda(Family::SixteenthOdd, l, a)));
          const auto sb = spectrum_bruteforce(build_design(spec_from_lambda(Family::SixteenthOdd, l, b)));
          CHECK(sa == sb);
        }
        if (table2_column(a) == table2_column(b)) {
          CHECK(theory_spectrum(Family::EighthOdd, l, a) == theory_spectrum(Family::EighthOdd, l, b));
        }
      }
    }
  }
}

TEST_CASE("ties share metrics with the winner") {
  const auto r = optimize(5, Family::SixteenthEven, Criterion::MinAberration);
  REQUIRE(!r.ties.empty());
  CHECK(r.ties.front().lambda == r.lambda);
  for (const auto& t : r.ties) {
    CHECK(t.metrics.wlp == r.wlp);
    CHECK(t.metrics.resolution == r.resolution);
    CHECK(*t.projectivity == r.projectivity);
  }
}

TEST_CASE("optimality certificate") {
  const auto all = evaluate_candidates(3, Family::SixteenthEven);
  REQUIRE(all.size() == 220);
  const auto r = optimize(3, Family::SixteenthEven, Criterion::MinAberration);
  const Candidate* best = nullptr;
  const Candidate* worst = nullptr;
  for (const auto& c : all) {
    if (c.lambda == r.lambda) best = &c;
    if (c.lambda.to_string() == "0000000003") worst = &c;
  }
  REQUIRE(best);
  REQUIRE(worst);
  CHECK(is_optimal(*best, all, Criterion::MinAberration));
  CHECK(is_optimal(*best, all, Criterion::MaxResolution));
  CHECK_FALSE(is_optimal(*worst, all, Criterion::MinAberration));
  CHECK(strictly_better(*best, *worst, Criterion::MaxResolution));
  CHECK_FALSE(strictly_better(*worst, *best, Criterion::MaxResolution));
}

TEST_CASE("n outside the supported range") {
  CHECK_THROWS_AS(optimize(0, Family::SixteenthEven, Criterion::MinAberration), std::out_of_range);
  SearchOptions small;
  small.max_n = 3;
  CHECK_THROWS_AS(optimize(4, Family::SixteenthEven, Criterion::MinAberration, small), std::out_of_range);
}

TEST_CASE("orthogonal array ceiling") {
  CHECK(orthogonal_array_ceiling(10, Fraction::Sixteenth) == 5);
  CHECK(orthogonal_array_ceiling(9, Fraction::Eighth) == 5);
  CHECK(orthogonal_array_ceiling(8, Fraction::Sixteenth) == 3);
  CHECK(fraction_of(Family::EighthOdd) == Fraction::Eighth);
  CHECK(fraction_of(Family::SixteenthOdd) == Fraction::Sixteenth);
  // No optimum exceeds the ceiling.
  for (const auto& row : published_rows(Fraction::Sixteenth)) {
    CHECK(row.projectivity <= orthogonal_array_ceiling(factor_count(row.family, row.n), Fraction::Sixteenth));
  }
}

TEST_CASE("single table rows reproduce") {
  const auto& t3 = published_rows(Fraction::Sixteenth);
  const auto r12 = reproduce_row(t3[4]);
  CHECK(r12.published.design == "2^{12-4}");
  CHECK(r12.lambda_exact);
  CHECK(r12.pass(PublishedTable::T3));

  const auto r11 = reproduce_row(t3[3]);
  CHECK(r11.result.projectivity == 6);
  CHECK(r11.published.regular_projectivity == 4);
  CHECK(r11.pass(PublishedTable::T5));

  const auto& t4 = published_rows(Fraction::Eighth);
  const auto r13 = reproduce_row(t4[6]);
  CHECK(r13.result.projectivity == 7);
  CHECK(r13.published.regular_projectivity == 6);
  CHECK(r13.pass(PublishedTable::T6));
  CHECK(*r13.result.resolution == Rational(31, 4));

  CHECK(published_table_number(published_table_from_number(5)) == 5);
  CHECK_THROWS_AS(published_table_from_number(2), std::invalid_argument);
}
