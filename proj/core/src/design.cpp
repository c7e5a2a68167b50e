#include "qcdesign/design.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcd {

DesignMatrix::DesignMatrix(std::vector<std::string> labels, std::int64_t runs)
    : labels_(std::move(labels)),
      runs_(runs),
      entries_(static_cast<std::size_t>(runs) * labels_.size(), 1) {
  if (labels_.size() > 64) throw std::invalid_argument("at most 64 columns are supported");
}

DesignMatrix::DesignMatrix(std::vector<std::string> labels, std::vector<std::int8_t> entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
  if (labels_.empty() || labels_.size() > 64) {
    throw std::invalid_argument("design must have between 1 and 64 columns");
  }
  if (entries_.size() % labels_.size() != 0) {
    throw std::invalid_argument("entry count is not a multiple of the column count");
  }
  for (auto e : entries_) {
    if (e != 1 && e != -1) throw std::invalid_argument("design entries must be +1 or -1");
  }
  runs_ = static_cast<std::int64_t>(entries_.size() / labels_.size());
}

void DesignMatrix::set(std::int64_t row, int col, std::int8_t value) {
  if (value != 1 && value != -1) throw std::invalid_argument("design entries must be +1 or -1");
  entries_[static_cast<std::size_t>(row * factors() + col)] = value;
}

std::uint64_t DesignMatrix::row_pattern(std::int64_t r) const {
  std::uint64_t p = 0;
  const auto values = row(r);
  for (std::size_t c = 0; c < values.size(); ++c) {
    if (values[c] < 0) p |= std::uint64_t{1} << c;
  }
  return p;
}

int DesignMatrix::column_index(std::string_view label) const {
  for (std::size_t c = 0; c < labels_.size(); ++c) {
    if (labels_[c] == label) return static_cast<int>(c);
  }
  return -1;
}

DesignMatrix DesignMatrix::drop_column(int col) const {
  if (col < 0 || col >= factors()) throw std::out_of_range("drop_column: no such column");
  auto labels = labels_;
  labels.erase(labels.begin() + col);
  std::vector<std::int8_t> out;
  out.reserve(static_cast<std::size_t>(runs_) * labels.size());
  for (std::int64_t r = 0; r < runs_; ++r) {
    const auto values = row(r);
    for (int c = 0; c < factors(); ++c) {
      if (c != col) out.push_back(values[static_cast<std::size_t>(c)]);
    }
  }
  return DesignMatrix(std::move(labels), std::move(out));
}

bool DesignMatrix::rows_distinct() const {
  std::vector<std::uint64_t> patterns(static_cast<std::size_t>(runs_));
  for (std::int64_t r = 0; r < runs_; ++r) patterns[static_cast<std::size_t>(r)] = row_pattern(r);
  std::sort(patterns.begin(), patterns.end());
  return std::adjacent_find(patterns.begin(), patterns.end()) == patterns.end();
}

std::vector<std::string> design_labels(Family family, int n) {
  std::vector<std::string> labels;
  for (int k = is_eighth(family) ? 2 : 1; k <= 4; ++k) labels.push_back("F" + std::to_string(k));
  if (is_odd_run(family)) labels.emplace_back("F5");
  for (int j = 1; j <= n; ++j) {
    labels.push_back("F" + std::to_string(j) + "1");
    labels.push_back("F" + std::to_string(j) + "2");
  }
  return labels;
}

DesignMatrix build_design(const GeneratorSpec& spec) {
  spec.validate();
  const int n = spec.n();
  if (2 * n + 1 > 40) throw std::invalid_argument("n too large to materialize");
  const bool odd = is_odd_run(spec.family);
  const bool drop_f1 = is_eighth(spec.family);
  const std::int64_t even_runs = std::int64_t{1} << (2 * n);
  const std::int64_t runs = odd ? 2 * even_runs : even_runs;

  DesignMatrix d(design_labels(spec.family, n), runs);
  std::vector<unsigned> a(static_cast<std::size_t>(n));

  for (std::int64_t r = 0; r < runs; ++r) {
    // Decode the row index into (a0, a_1..a_n), a_n least significant.
    std::int64_t rest = r;
    for (int j = n - 1; j >= 0; --j) {
      a[static_cast<std::size_t>(j)] = static_cast<unsigned>(rest & 3);
      rest >>= 2;
    }
    const unsigned a0 = static_cast<unsigned>(rest);

    unsigned au = 0;
    unsigned av = 0;
    if (odd) {
      au = a0 * spec.branch->u0;
      av = a0 * spec.branch->v0;
    }
    for (int j = 0; j < n; ++j) {
      au += a[static_cast<std::size_t>(j)] * spec.u[static_cast<std::size_t>(j)];
      av += a[static_cast<std::size_t>(j)] * spec.v[static_cast<std::size_t>(j)];
    }

    int col = 0;
    const auto [f1, f2] = gray_pair(au);
    const auto [f3, f4] = gray_pair(av);
    if (!drop_f1) d.set(r, col++, f1);
    d.set(r, col++, f2);
    d.set(r, col++, f3);
    d.set(r, col++, f4);
    if (odd) d.set(r, col++, a0 == 0 ? 1 : -1);
    for (int j = 0; j < n; ++j) {
      const auto [g1, g2] = gray_pair(a[static_cast<std::size_t>(j)]);
      d.set(r, col++, g1);
      d.set(r, col++, g2);
    }
  }
  return d;
}

DesignMatrix full_factorial(int q) {
  if (q < 1 || q > 24) throw std::invalid_argument("full_factorial: q out of range");
  std::vector<std::string> labels;
  for (int c = 1; c <= q; ++c) labels.push_back("X" + std::to_string(c));
  const std::int64_t runs = std::int64_t{1} << q;
  DesignMatrix d(std::move(labels), runs);
  for (std::int64_t r = 0; r < runs; ++r) {
    for (int c = 0; c < q; ++c) {
      d.set(r, c, ((r >> (q - 1 - c)) & 1) ? -1 : 1);
    }
  }
  return d;
}

}  // namespace qcd
