#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcdesign/generator.hpp"

namespace qcd {

/// Column subset of a design; bit c refers to column c in label order.
using ColumnMask = std::uint64_t;

/// N x q array over {+1, -1} with labelled columns, stored row-major.
class DesignMatrix {
 public:
  DesignMatrix() = default;
  DesignMatrix(std::vector<std::string> labels, std::int64_t runs);
  DesignMatrix(std::vector<std::string> labels, std::vector<std::int8_t> entries);

  std::int64_t runs() const { return runs_; }
  int factors() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::int8_t at(std::int64_t row, int col) const {
    return entries_[static_cast<std::size_t>(row * factors() + col)];
  }
  void set(std::int64_t row, int col, std::int8_t value);

  std::span<const std::int8_t> row(std::int64_t r) const {
    return {entries_.data() + r * factors(), static_cast<std::size_t>(factors())};
  }
  const std::vector<std::int8_t>& entries() const { return entries_; }

  /// Sign pattern of a row: bit c set iff column c is -1.
  std::uint64_t row_pattern(std::int64_t r) const;

  /// Index of a column label, or -1.
  int column_index(std::string_view label) const;

  /// Copy without the given column.
  DesignMatrix drop_column(int col) const;

  bool rows_distinct() const;

  friend bool operator==(const DesignMatrix&, const DesignMatrix&) = default;

 private:
  std::vector<std::string> labels_;
  std::int64_t runs_ = 0;
  std::vector<std::int8_t> entries_;
};

/// Gray map on Z4 with symbols +1/-1: 0->(1,1) 1->(1,-1) 2->(-1,-1) 3->(-1,1).
constexpr std::pair<std::int8_t, std::int8_t> gray_pair(unsigned k) {
  switch (k & 3u) {
    case 0: return {1, 1};
    case 1: return {1, -1};
    case 2: return {-1, -1};
    default: return {-1, 1};
  }
}

/// Column labels F1..F4, [F5], F11, F12, ..., Fn1, Fn2 (F1 absent for eighths).
std::vector<std::string> design_labels(Family family, int n);

/// Binary image of the QC generated by the spec. Row index is
/// a0 * 4^n + sum_j a_j * 4^(n-j), so a_n varies fastest and a0 (odd-run
/// families only) is outermost. Throws std::invalid_argument on a bad spec.
DesignMatrix build_design(const GeneratorSpec& spec);

/// Full 2^q factorial with columns X1..Xq (used as a reference design).
DesignMatrix full_factorial(int q);

}  // namespace qcd
