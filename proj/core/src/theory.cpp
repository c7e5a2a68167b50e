#include "qcdesign/theory.hpp"

#include <stdexcept>

namespace qcd {

LValues l_values(const LambdaProfile& lam) {
  const int a1 = lam(1), a2 = lam(2), a3 = lam(3), a4 = lam(4), a5 = lam(5);
  const int a6 = lam(6), a7 = lam(7), a8 = lam(8), a9 = lam(9);
  const int s1234 = a1 + a2 + a3 + a4;
  LValues out;
  out.l = {
      2 * (a4 + a8 + a9) + a1 + a3 + a5 + a6,
      2 * (a3 + a7 + a9) + a2 + a4 + a5 + a6,
      2 * (a2 + a8 + a9) + a1 + a3 + a5 + a6,
      2 * (a1 + a7 + a9) + a2 + a4 + a5 + a6,
      2 * (a1 + a3 + a5 + a6),
      2 * (a2 + a4 + a5 + a6),
      2 * s1234,
      2 * (a7 + a8) + s1234,
      2 * (a5 + a7 + a8) + s1234,
      2 * (a6 + a7 + a8) + s1234,
  };
  return out;
}

namespace {

// 1 / 2^floor(sum / 2)
Rational halved_index(int sum) {
  return inverse_power_of_two(static_cast<int>(floor_of(Rational(sum, 2))));
}

bool odd_z4(Z4 k) { return k == 1 || k == 3; }

}  // namespace

IndexConstants index_constants(const LambdaProfile& lam, std::optional<BranchPair> branch) {
  IndexConstants c;
  c.rho1 = halved_index(lam(1) + lam(3) + lam(5) + lam(6));
  c.rho2 = halved_index(lam(2) + lam(4) + lam(5) + lam(6));
  c.xi1 = halved_index(lam(1) + lam(3));
  c.xi2 = halved_index(lam(2) + lam(4));
  c.xi = halved_index(lam(1) + lam(2) + lam(3) + lam(4) + 1);

  c.k11 = (lam(1) + lam(3) + lam(5) + lam(6) > 0) ? Rational(1, 2) : Rational(0);
  c.k12 = Rational(1) - c.k11;
  c.k21 = (lam(1) + lam(3) + lam(5) + lam(6) > 0) ? Rational(1) : Rational(0);
  c.k22 = Rational(2) - c.k21;

  if (branch) {
    const auto [u0, v0] = *branch;
    c.branched = true;
    c.delta1 = odd_z4(u0) ? 1 : 0;
    c.delta2 = odd_z4(v0) ? 1 : 0;
    c.eps1 = (odd_z4(u0) && (v0 == 0 || v0 == 2)) ? 1 : 0;
    c.eps2 = ((u0 == 0 || u0 == 2) && odd_z4(v0)) ? 1 : 0;
    c.eps = c.eps1 + c.eps2;
    c.theta1 = halved_index(lam(1) + lam(3) + lam(5) + lam(6) + c.delta1);
    c.theta2 = halved_index(lam(2) + lam(4) + lam(5) + lam(6) + c.delta2);
    c.omega1 = halved_index(lam(1) + lam(3) + c.eps1);
    c.omega2 = halved_index(lam(2) + lam(4) + c.eps2);
    c.omega0 = c.omega1 * c.omega2;
    c.omega = halved_index(lam(1) + lam(2) + lam(3) + lam(4) + c.eps + 1);
  }
  return c;
}

namespace {

std::int64_t words_for_weight(const Rational& weight, const Rational& ai) {
  const Rational count = weight / (ai * ai);
  if (count.denominator() != 1) {
    throw std::logic_error("non-integral word count " + to_string(count));
  }
  return count.numerator();
}

void add_group(std::vector<WordEntry>& out, std::int64_t count, const Rational& ai, int length) {
  if (count > 0) out.push_back({length, ai, count});
}

}  // namespace

WordClassReport theorem1_words(const LambdaProfile& lam, const std::array<bool, 4>& x) {
  const auto l = l_values(lam);
  const auto c = index_constants(lam);
  const bool twisted = lam(5) + lam(6) > 0;
  const bool plain = lam(1) + lam(2) + lam(3) + lam(4) > 0;

  WordClassReport report;
  report.x = x;
  auto& w = report.words;
  const auto is = [&](const char* bits) {
    for (std::size_t k = 0; k < 4; ++k) {
      if (x[k] != (bits[k] == '1')) return false;
    }
    return true;
  };
  const auto inv_sq = [](const Rational& r) { return words_for_weight(Rational(1), r); };

  if (is("0000")) {
    // no words
  } else if (is("0100") || is("1000")) {
    add_group(w, inv_sq(c.rho1), c.rho1, l(1) + 1);
  } else if (is("0001") || is("0010")) {
    add_group(w, inv_sq(c.rho2), c.rho2, l(2) + 1);
  } else if (is("0111") || is("1011")) {
    add_group(w, inv_sq(c.rho1), c.rho1, l(3) + 3);
  } else if (is("1101") || is("1110")) {
    add_group(w, inv_sq(c.rho2), c.rho2, l(4) + 3);
  } else if (is("1100")) {
    add_group(w, 1, Rational(1), l(5) + 2);
  } else if (is("0011")) {
    add_group(w, 1, Rational(1), l(6) + 2);
  } else if (is("1111")) {
    add_group(w, 1, Rational(1), l(7) + 4);
  } else {
    // 0101, 1010 (case i) and 0110, 1001 (case j)
    const bool case_i = is("0101") || is("1010");
    if (!twisted) {
      const Rational ai = c.xi1 * c.xi2;
      add_group(w, inv_sq(ai), ai, l(8) + 2);
    } else if (!plain) {
      add_group(w, 1, Rational(1), case_i ? l(10) + 2 : l(9) + 2);
    } else {
      const auto half = inv_sq(c.xi) / 2;
      add_group(w, half, c.xi, l(9) + 2);
      add_group(w, half, c.xi, l(10) + 2);
    }
  }
  return report;
}

WordSpectrum theorem2_spectrum(const LambdaProfile& lam) {
  const auto l = l_values(lam);
  const auto c = index_constants(lam);
  WordSpectrum s;
  const auto half_of = [](std::int64_t weight, const Rational& ai) {
    return words_for_weight(Rational(weight), ai) / 2;
  };
  s.add(l(1) + 1, c.rho1, half_of(4, c.rho1));
  s.add(l(3) + 3, c.rho1, half_of(4, c.rho1));
  s.add(l(2) + 1, c.rho2, half_of(4, c.rho2));
  s.add(l(4) + 3, c.rho2, half_of(4, c.rho2));
  s.add(l(5) + 2, Rational(1), 1);
  s.add(l(6) + 2, Rational(1), 1);
  s.add(l(7) + 4, Rational(1), 1);
  if (lam(5) + lam(6) == 0) {
    const Rational ai = c.xi1 * c.xi2;
    s.add(l(8) + 2, ai, words_for_weight(Rational(4), ai));
  } else {
    s.add(l(9) + 2, c.xi, half_of(4, c.xi));
    s.add(l(10) + 2, c.xi, half_of(4, c.xi));
  }
  return s;
}

WordSpectrum theorem3_spectrum(const LambdaProfile& lam) {
  const auto l = l_values(lam);
  const auto c = index_constants(lam);
  WordSpectrum s;
  const auto half_of = [](std::int64_t weight, const Rational& ai) {
    return words_for_weight(Rational(weight), ai) / 2;
  };
  s.add(l(1) + 1, c.rho1, half_of(2, c.rho1));
  s.add(l(3) + 3, c.rho1, half_of(2, c.rho1));
  s.add(l(2) + 1, c.rho2, words_for_weight(Rational(2), c.rho2));
  s.add(l(6) + 2, Rational(1), 1);
  if (lam(5) + lam(6) == 0) {
    const Rational ai = c.xi1 * c.xi2;
    s.add(l(8) + 2, ai, words_for_weight(Rational(2), ai));
  } else {
    s.add(l(9) + 2, c.xi, half_of(2, c.xi));
    s.add(l(10) + 2, c.xi, half_of(2, c.xi));
  }
  return s;
}

namespace {

enum class Index { Theta1, Theta2, One, Omega0, Omega };
// Rows marked Omega0 apply iff lambda5 + lambda6 == 0, rows marked Omega iff
// lambda5 + lambda6 > 0; both apply for u0, v0 both odd.
enum class Gate { Always, Omega0Rows, OmegaRows };

// Cell of the branched tables: a constant (in halves) or one of the k's.
enum class Cell : std::uint8_t { C0, C1, C2, C4, Half, K11, K12, K21, K22 };

template <std::size_t Cols>
struct TableRow {
  int l_index;
  int offset;
  Index ai;
  Gate gate;
  std::array<Cell, Cols> cells;
};

using enum Cell;

// Columns: 00, 01/03, 02, 10/30, 11/33, 12/32, 13/31, 20, 21/23, 22
constexpr std::array<TableRow<10>, 20> kTable1 = {{
    {1, 1, Index::Theta1, Gate::Always, {C2, C2, C2, C1, C1, C1, C1, C0, C0, C0}},
    {1, 2, Index::Theta1, Gate::Always, {C0, C0, C0, C1, C1, C1, C1, C2, C2, C2}},
    {2, 1, Index::Theta2, Gate::Always, {C2, C1, C0, C2, C1, C0, C1, C2, C1, C0}},
    {2, 2, Index::Theta2, Gate::Always, {C0, C1, C2, C0, C1, C2, C1, C0, C1, C2}},
    {3, 3, Index::Theta1, Gate::Always, {C2, C0, C2, C1, C1, C1, C1, C0, C2, C0}},
    {3, 4, Index::Theta1, Gate::Always, {C0, C2, C0, C1, C1, C1, C1, C2, C0, C2}},
    {4, 3, Index::Theta2, Gate::Always, {C2, C1, C0, C0, C1, C2, C1, C2, C1, C0}},
    {4, 4, Index::Theta2, Gate::Always, {C0, C1, C2, C2, C1, C0, C1, C0, C1, C2}},
    {5, 2, Index::One, Gate::Always, {C1, C1, C1, C0, C0, C0, C0, C1, C1, C1}},
    {5, 3, Index::One, Gate::Always, {C0, C0, C0, C1, C1, C1, C1, C0, C0, C0}},
    {6, 2, Index::One, Gate::Always, {C1, C0, C1, C1, C0, C1, C0, C1, C0, C1}},
    {6, 3, Index::One, Gate::Always, {C0, C1, C0, C0, C1, C0, C1, C0, C1, C0}},
    {7, 4, Index::One, Gate::Always, {C1, C0, C1, C0, C1, C0, C1, C1, C0, C1}},
    {7, 5, Index::One, Gate::Always, {C0, C1, C0, C1, C0, C1, C0, C0, C1, C0}},
    {8, 2, Index::Omega0, Gate::Omega0Rows, {C4, C2, C0, C2, C0, C2, C0, C0, C2, C4}},
    {8, 3, Index::Omega0, Gate::Omega0Rows, {C0, C2, C4, C2, C0, C2, C0, C4, C2, C0}},
    {9, 2, Index::Omega, Gate::OmegaRows, {C2, C1, C0, C1, C0, C1, C2, C0, C1, C2}},
    {9, 3, Index::Omega, Gate::OmegaRows, {C0, C1, C2, C1, C2, C1, C0, C2, C1, C0}},
    {10, 2, Index::Omega, Gate::OmegaRows, {C2, C1, C0, C1, C2, C1, C0, C0, C1, C2}},
    {10, 3, Index::Omega, Gate::OmegaRows, {C0, C1, C2, C1, C0, C1, C2, C2, C1, C0}},
}};

// Columns: 00, 01/03, 02, 10, 11, 12, 13, 20, 21/23, 22, 30, 31, 32, 33
constexpr std::array<TableRow<14>, 14> kTable2 = {{
    {1, 1, Index::Theta1, Gate::Always,
     {C1, C1, C1, K11, K11, K11, K11, C0, C0, C0, K12, K12, K12, K12}},
    {1, 2, Index::Theta1, Gate::Always,
     {C0, C0, C0, K12, K12, K12, K12, C1, C1, C1, K11, K11, K11, K11}},
    {2, 1, Index::Theta2, Gate::Always,
     {C2, C1, C0, C2, C1, C0, C1, C2, C1, C0, C2, C1, C0, C1}},
    {2, 2, Index::Theta2, Gate::Always,
     {C0, C1, C2, C0, C1, C2, C1, C0, C1, C2, C0, C1, C2, C1}},
    {3, 3, Index::Theta1, Gate::Always,
     {C1, C0, C1, K11, K12, K11, K12, C0, C1, C0, K12, K11, K12, K11}},
    {3, 4, Index::Theta1, Gate::Always,
     {C0, C1, C0, K12, K11, K12, K11, C1, C0, C1, K11, K12, K11, K12}},
    {6, 2, Index::One, Gate::Always,
     {C1, C0, C1, C1, C0, C1, C0, C1, C0, C1, C1, C0, C1, C0}},
    {6, 3, Index::One, Gate::Always,
     {C0, C1, C0, C0, C1, C0, C1, C0, C1, C0, C0, C1, C0, C1}},
    {8, 2, Index::Omega0, Gate::Omega0Rows,
     {C2, C1, C0, K21, C0, K22, C0, C0, C1, C2, K22, C0, K21, C0}},
    {8, 3, Index::Omega0, Gate::Omega0Rows,
     {C0, C1, C2, K22, C0, K21, C0, C2, C1, C0, K21, C0, K22, C0}},
    {9, 2, Index::Omega, Gate::OmegaRows,
     {C1, Half, C0, Half, C0, Half, C1, C0, Half, C1, Half, C1, Half, C0}},
    {9, 3, Index::Omega, Gate::OmegaRows,
     {C0, Half, C1, Half, C1, Half, C0, C1, Half, C0, Half, C0, Half, C1}},
    {10, 2, Index::Omega, Gate::OmegaRows,
     {C1, Half, C0, Half, C1, Half, C0, C0, Half, C1, Half, C0, Half, C1}},
    {10, 3, Index::Omega, Gate::OmegaRows,
     {C0, Half, C1, Half, C0, Half, C1, C1, Half, C0, Half, C1, Half, C0}},
}};

Rational cell_value(Cell cell, const IndexConstants& c) {
  switch (cell) {
    case C0: return Rational(0);
    case C1: return Rational(1);
    case C2: return Rational(2);
    case C4: return Rational(4);
    case Half: return Rational(1, 2);
    case K11: return c.k11;
    case K12: return c.k12;
    case K21: return c.k21;
    case K22: return c.k22;
  }
  return Rational(0);
}

Rational index_value(Index ai, const IndexConstants& c) {
  switch (ai) {
    case Index::Theta1: return c.theta1;
    case Index::Theta2: return c.theta2;
    case Index::One: return Rational(1);
    case Index::Omega0: return c.omega0;
    case Index::Omega: return c.omega;
  }
  return Rational(1);
}

template <std::size_t Cols, std::size_t Rows>
WordSpectrum branched_spectrum(const std::array<TableRow<Cols>, Rows>& table, int column,
                               const LambdaProfile& lam, BranchPair branch) {
  const auto l = l_values(lam);
  const auto c = index_constants(lam, branch);
  const bool twisted = lam(5) + lam(6) > 0;
  const bool both_odd = odd_z4(branch.u0) && odd_z4(branch.v0);
  WordSpectrum s;
  for (const auto& row : table) {
    if (!both_odd) {
      if (row.gate == Gate::Omega0Rows && twisted) continue;
      if (row.gate == Gate::OmegaRows && !twisted) continue;
    }
    const Rational weight = cell_value(row.cells[static_cast<std::size_t>(column)], c);
    if (weight == Rational(0)) continue;
    const Rational ai = index_value(row.ai, c);
    s.add(l(row.l_index) + row.offset, ai, words_for_weight(weight, ai));
  }
  return s;
}

}  // namespace

int table1_column(BranchPair b) {
  static constexpr std::array<std::array<int, 4>, 4> kColumn = {{
      {0, 1, 2, 1},   // 00 01 02 03
      {3, 4, 5, 6},   // 10 11 12 13
      {7, 8, 9, 8},   // 20 21 22 23
      {3, 6, 5, 4},   // 30 31 32 33
  }};
  if (b.u0 > 3 || b.v0 > 3) throw std::invalid_argument("branch pair outside Z4");
  return kColumn[b.u0][b.v0];
}

int table2_column(BranchPair b) {
  static constexpr std::array<std::array<int, 4>, 4> kColumn = {{
      {0, 1, 2, 1},       // 00 01 02 03
      {3, 4, 5, 6},       // 10 11 12 13
      {7, 8, 9, 8},       // 20 21 22 23
      {10, 11, 12, 13},   // 30 31 32 33
  }};
  if (b.u0 > 3 || b.v0 > 3) throw std::invalid_argument("branch pair outside Z4");
  return kColumn[b.u0][b.v0];
}

std::vector<BranchPair> table1_representatives() {
  return {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {2, 2}};
}

std::vector<BranchPair> table2_representatives() {
  return {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {1, 3},
          {2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}, {3, 2}, {3, 3}};
}

std::vector<BranchPair> branch_representatives(Family family) {
  switch (family) {
    case Family::SixteenthOdd: return table1_representatives();
    case Family::EighthOdd: return table2_representatives();
    default: return {};
  }
}

WordSpectrum table1_spectrum(const LambdaProfile& lambda, BranchPair branch) {
  return branched_spectrum(kTable1, table1_column(branch), lambda, branch);
}

WordSpectrum table2_spectrum(const LambdaProfile& lambda, BranchPair branch) {
  return branched_spectrum(kTable2, table2_column(branch), lambda, branch);
}

WordSpectrum theory_spectrum(Family family, const LambdaProfile& lambda,
                             std::optional<BranchPair> branch) {
  if (lambda.n() < 1) throw std::invalid_argument("lambda must sum to n >= 1");
  if (is_odd_run(family) != branch.has_value()) {
    throw std::invalid_argument(is_odd_run(family) ? "odd-run families require u0v0"
                                                   : "u0v0 is only valid for odd-run families");
  }
  switch (family) {
    case Family::SixteenthEven: return theorem2_spectrum(lambda);
    case Family::EighthEven: return theorem3_spectrum(lambda);
    case Family::SixteenthOdd: return table1_spectrum(lambda, *branch);
    case Family::EighthOdd: return table2_spectrum(lambda, *branch);
  }
  return {};
}

std::optional<int> projectivity_bound(int n, Family family) {
  if (n < 1) throw std::invalid_argument("projectivity_bound: n must be positive");
  const int j = n % 3;
  switch (family) {
    case Family::SixteenthEven:
      return j == 0 ? 4 * n / 3 + 1 : 4 * (n - j) / 3 + 3;
    case Family::SixteenthOdd:
      if (j == 0) return 4 * n / 3 + 2;
      if (j == 1) return 4 * (n - 1) / 3 + 3;
      return 4 * (n - 2) / 3 + 4;
    default:
      return std::nullopt;
  }
}

}  // namespace qcd
