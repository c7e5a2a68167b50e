#include "qcdesign/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>

#include "qcdesign/parallel.hpp"

namespace qcd {

namespace {

void walsh_hadamard(std::vector<std::int64_t>& data) {
  const std::size_t size = data.size();
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const auto a = data[i];
        const auto b = data[i + half];
        data[i] = a + b;
        data[i + half] = a - b;
      }
    }
  }
}

std::vector<std::uint64_t> distinct_patterns(const DesignMatrix& design) {
  std::vector<std::uint64_t> patterns(static_cast<std::size_t>(design.runs()));
  for (std::int64_t r = 0; r < design.runs(); ++r) {
    patterns[static_cast<std::size_t>(r)] = design.row_pattern(r);
  }
  std::sort(patterns.begin(), patterns.end());
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
  return patterns;
}

// Checks every p-subset whose smallest column is `first`, depth-first. Each
// node carries the partial level index of every distinct run pattern.
class ProjectionChecker {
 public:
  ProjectionChecker(const std::vector<std::uint64_t>& patterns, int q, int p)
      : patterns_(patterns),
        q_(q),
        p_(p),
        levels_(static_cast<std::size_t>(p + 1), std::vector<std::uint32_t>(patterns.size(), 0)),
        seen_(std::size_t{1} << p, 0) {}

  bool all_full_from(int first) { return descend(first, 1); }

 private:
  bool descend(int col, int depth) {
    const auto& parent = levels_[static_cast<std::size_t>(depth - 1)];
    auto& index = levels_[static_cast<std::size_t>(depth)];
    for (std::size_t i = 0; i < parent.size(); ++i) {
      index[i] = (parent[i] << 1) | static_cast<std::uint32_t>((patterns_[i] >> col) & 1u);
    }
    if (depth == p_) return full(index);
    for (int next = col + 1; next <= q_ - (p_ - depth); ++next) {
      if (!descend(next, depth + 1)) return false;
    }
    return true;
  }

  bool full(const std::vector<std::uint32_t>& index) {
    ++stamp_;
    std::size_t hit = 0;
    const std::size_t need = seen_.size();
    for (auto k : index) {
      if (seen_[k] != stamp_) {
        seen_[k] = stamp_;
        if (++hit == need) return true;
      }
    }
    return false;
  }

  const std::vector<std::uint64_t>& patterns_;
  int q_;
  int p_;
  std::vector<std::vector<std::uint32_t>> levels_;  // levels_[0] stays zero
  std::vector<std::uint32_t> seen_;
  std::uint32_t stamp_ = 0;
};

}  // namespace

std::vector<std::int64_t> j_characteristics(const DesignMatrix& design,
                                            const OracleOptions& options) {
  const int q = design.factors();
  if (q > options.factor_cap || q > 40) {
    throw std::length_error("j_characteristics: q = " + std::to_string(q) +
                            " exceeds the factor cap " + std::to_string(options.factor_cap));
  }
  std::vector<std::int64_t> table(std::size_t{1} << q, 0);
  for (std::int64_t r = 0; r < design.runs(); ++r) ++table[design.row_pattern(r)];
  walsh_hadamard(table);
  return table;
}

std::int64_t j_characteristic_direct(const DesignMatrix& design, ColumnMask subset) {
  std::int64_t sum = 0;
  for (std::int64_t r = 0; r < design.runs(); ++r) {
    int product = 1;
    for (int c = 0; c < design.factors(); ++c) {
      if ((subset >> c) & 1u) product *= design.at(r, c);
    }
    sum += product;
  }
  return sum;
}

WordSpectrum spectrum_from_j(const std::vector<std::int64_t>& j, int q, std::int64_t runs) {
  WordSpectrum spectrum;
  // Tally by (length, |J|) first; merging rationals per subset is slow.
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> tally(
      static_cast<std::size_t>(q + 1));
  for (std::size_t s = 1; s < j.size(); ++s) {
    if (j[s] == 0) continue;
    const auto magnitude = std::llabs(j[s]);
    auto& bucket = tally[static_cast<std::size_t>(std::popcount(s))];
    auto it = std::find_if(bucket.begin(), bucket.end(),
                           [&](const auto& e) { return e.first == magnitude; });
    if (it == bucket.end()) {
      bucket.emplace_back(magnitude, 1);
    } else {
      ++it->second;
    }
  }
  for (int len = 1; len <= q; ++len) {
    for (const auto& [magnitude, count] : tally[static_cast<std::size_t>(len)]) {
      spectrum.add(len, Rational(magnitude, runs), count);
    }
  }
  return spectrum;
}

WordSpectrum spectrum_bruteforce(const DesignMatrix& design, const OracleOptions& options) {
  return spectrum_from_j(j_characteristics(design, options), design.factors(), design.runs());
}

bool projection_is_full(const DesignMatrix& design, ColumnMask subset) {
  const int p = std::popcount(subset);
  if (p == 0) return true;
  if (p > 30) return false;
  std::vector<char> seen(std::size_t{1} << p, 0);
  std::size_t hit = 0;
  for (std::int64_t r = 0; r < design.runs(); ++r) {
    std::size_t k = 0;
    for (int c = 0; c < design.factors(); ++c) {
      if ((subset >> c) & 1u) k = (k << 1) | (design.at(r, c) < 0 ? 1u : 0u);
    }
    if (!seen[k]) {
      seen[k] = 1;
      ++hit;
    }
  }
  return hit == seen.size();
}

int projectivity(const DesignMatrix& design) {
  const int q = design.factors();
  const auto patterns = distinct_patterns(design);
  for (int p = 1; p <= q; ++p) {
    if (p > 30 || (std::size_t{1} << p) > patterns.size()) return p - 1;
    const int firsts = q - p + 1;
    std::vector<char> ok(static_cast<std::size_t>(firsts), 1);
    parallel_for(static_cast<std::size_t>(firsts), [&](std::size_t first) {
      ProjectionChecker checker(patterns, q, p);
      ok[first] = checker.all_full_from(static_cast<int>(first)) ? 1 : 0;
    });
    if (std::find(ok.begin(), ok.end(), 0) != ok.end()) return p - 1;
  }
  return q;
}

DesignMetrics metrics(const DesignMatrix& design, const OracleOptions& options) {
  DesignMetrics m;
  m.spectrum = spectrum_bruteforce(design, options);
  auto sm = spectrum_metrics(m.spectrum, design.factors());
  m.resolution = sm.resolution;
  m.wlp = std::move(sm.wlp);
  m.projectivity = projectivity(design);
  return m;
}

std::string SubsetType::x_string() const {
  std::string s;
  for (bool b : x) s.push_back(b ? '1' : '0');
  return s;
}

int SubsetType::check_count() const {
  return static_cast<int>(std::count(x.begin(), x.end(), true));
}

int SubsetType::pair_weight() const {
  return static_cast<int>(2 * s1.size() + s2.size() + s3.size());
}

int SubsetType::length() const {
  return pair_weight() + check_count() + (x5.value_or(false) ? 1 : 0);
}

namespace {

struct LabelRef {
  int check = 0;  // 1..5 for F1..F5, 0 otherwise
  int j = 0;
  int half = 0;   // 1 or 2
};

LabelRef parse_label(const std::string& label) {
  if (label.size() < 2 || label[0] != 'F') {
    throw std::invalid_argument("unknown column label '" + label + "'");
  }
  for (std::size_t i = 1; i < label.size(); ++i) {
    if (label[i] < '0' || label[i] > '9') {
      throw std::invalid_argument("unknown column label '" + label + "'");
    }
  }
  if (label.size() == 2) {
    const int k = label[1] - '0';
    if (k < 1 || k > 5) throw std::invalid_argument("unknown column label '" + label + "'");
    return {k, 0, 0};
  }
  const int half = label.back() - '0';
  const int j = std::stoi(label.substr(1, label.size() - 2));
  if ((half != 1 && half != 2) || j < 1 || label[1] == '0') {
    throw std::invalid_argument("unknown column label '" + label + "'");
  }
  return {0, j, half};
}

}  // namespace

SubsetType classify_subset(const std::vector<std::string>& labels, ColumnMask subset) {
  if (subset == 0) throw std::invalid_argument("classify_subset: empty subset");
  if (labels.size() < 64 && (subset >> labels.size()) != 0) {
    throw std::invalid_argument("classify_subset: subset refers to a missing column");
  }
  SubsetType t;
  bool has_f5 = false;
  int n = 0;
  std::vector<LabelRef> refs;
  refs.reserve(labels.size());
  for (const auto& label : labels) {
    refs.push_back(parse_label(label));
    has_f5 = has_f5 || refs.back().check == 5;
    n = std::max(n, refs.back().j);
  }
  if (has_f5) t.x5 = false;
  std::vector<int> halves(static_cast<std::size_t>(n + 1), 0);
  for (std::size_t c = 0; c < labels.size(); ++c) {
    if (!((subset >> c) & 1u)) continue;
    const auto& ref = refs[c];
    if (ref.check >= 1 && ref.check <= 4) {
      t.x[static_cast<std::size_t>(ref.check - 1)] = true;
    } else if (ref.check == 5) {
      t.x5 = true;
    } else {
      halves[static_cast<std::size_t>(ref.j)] |= ref.half;
    }
  }
  for (int j = 1; j <= n; ++j) {
    switch (halves[static_cast<std::size_t>(j)]) {
      case 3: t.s1.push_back(j); break;
      case 2: t.s2.push_back(j); break;
      case 1: t.s3.push_back(j); break;
      default: break;
    }
  }
  return t;
}

ColumnMask subset_mask(const std::vector<std::string>& labels, const SubsetType& type) {
  ColumnMask mask = 0;
  auto set = [&](const std::string& label) {
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw std::invalid_argument("subset_mask: no column " + label);
    mask |= ColumnMask{1} << (it - labels.begin());
  };
  for (int k = 0; k < 4; ++k) {
    if (type.x[static_cast<std::size_t>(k)]) set("F" + std::to_string(k + 1));
  }
  if (type.x5.value_or(false)) set("F5");
  for (int j : type.s1) {
    set("F" + std::to_string(j) + "1");
    set("F" + std::to_string(j) + "2");
  }
  for (int j : type.s2) set("F" + std::to_string(j) + "2");
  for (int j : type.s3) set("F" + std::to_string(j) + "1");
  return mask;
}

std::array<bool, 4> parse_type_bits(const std::string& text) {
  if (text.size() != 4) throw std::invalid_argument("type must have four bits");
  std::array<bool, 4> x{};
  for (std::size_t k = 0; k < 4; ++k) {
    if (text[k] != '0' && text[k] != '1') throw std::invalid_argument("type must be binary");
    x[k] = text[k] == '1';
  }
  return x;
}

}  // namespace qcd
