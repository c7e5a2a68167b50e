#include "qcdesign/generator.hpp"

#include <stdexcept>

namespace qcd {

std::int64_t run_count(Family family, int n) {
  const std::int64_t even = std::int64_t{1} << (2 * n);
  return is_odd_run(family) ? 2 * even : even;
}

int factor_count(Family family, int n) {
  switch (family) {
    case Family::SixteenthEven: return 2 * n + 4;
    case Family::EighthEven: return 2 * n + 3;
    case Family::SixteenthOdd: return 2 * n + 5;
    case Family::EighthOdd: return 2 * n + 4;
  }
  return 0;
}

int generator_count(Family family) { return is_eighth(family) ? 3 : 4; }

std::string_view family_name(Family family) {
  switch (family) {
    case Family::SixteenthEven: return "sixteenth-even";
    case Family::EighthEven: return "eighth-even";
    case Family::SixteenthOdd: return "sixteenth-odd";
    case Family::EighthOdd: return "eighth-odd";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (auto f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string to_string(BranchPair pair) {
  return {static_cast<char>('0' + pair.u0), static_cast<char>('0' + pair.v0)};
}

BranchPair parse_branch_pair(std::string_view text) {
  if (text.size() != 2 || text[0] < '0' || text[0] > '3' || text[1] < '0' || text[1] > '3') {
    throw std::invalid_argument("u0v0 must be two Z4 digits, got '" + std::string(text) + "'");
  }
  return {static_cast<Z4>(text[0] - '0'), static_cast<Z4>(text[1] - '0')};
}

std::array<BranchPair, 16> all_branch_pairs() {
  std::array<BranchPair, 16> out{};
  for (Z4 i = 0; i < 16; ++i) out[i] = {static_cast<Z4>(i / 4), static_cast<Z4>(i % 4)};
  return out;
}

void GeneratorSpec::validate() const {
  if (u.empty()) throw std::invalid_argument("n must be positive");
  if (u.size() != v.size()) throw std::invalid_argument("u and v must have the same length");
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] > 3 || v[j] > 3) throw std::invalid_argument("generator entries must lie in Z4");
  }
  if (is_odd_run(family) && !branch) {
    throw std::invalid_argument("odd-run families require u0v0");
  }
  if (!is_odd_run(family) && branch) {
    throw std::invalid_argument("u0v0 is only valid for odd-run families");
  }
  if (branch && (branch->u0 > 3 || branch->v0 > 3)) {
    throw std::invalid_argument("u0v0 entries must lie in Z4");
  }
}

int FrequencyTable::total() const {
  int sum = 0;
  for (const auto& row : f)
    for (int c : row) sum += c;
  return sum;
}

FrequencyTable frequencies(std::span<const Z4> u, std::span<const Z4> v) {
  if (u.size() != v.size()) throw std::invalid_argument("frequencies: length mismatch");
  FrequencyTable t;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] > 3 || v[j] > 3) throw std::invalid_argument("frequencies: entry outside Z4");
    ++t.f[u[j]][v[j]];
  }
  return t;
}

LambdaProfile::LambdaProfile(const std::array<int, 10>& values) : values_(values) {
  for (int x : values_) {
    if (x < 0) throw std::invalid_argument("lambda entries must be nonnegative");
  }
}

int LambdaProfile::n() const {
  int sum = 0;
  for (int x : values_) sum += x;
  return sum;
}

std::string LambdaProfile::to_string() const {
  bool compact = true;
  for (int x : values_) compact = compact && x <= 9;
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (compact) {
      out.push_back(static_cast<char>('0' + values_[i]));
    } else {
      if (i) out.push_back(',');
      out += std::to_string(values_[i]);
    }
  }
  return out;
}

LambdaProfile LambdaProfile::parse(std::string_view text) {
  std::array<int, 10> values{};
  if (text.find(',') == std::string_view::npos) {
    if (text.size() != 10) throw std::invalid_argument("lambda must have 10 digits");
    for (std::size_t i = 0; i < 10; ++i) {
      if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("lambda digit expected");
      values[i] = text[i] - '0';
    }
    return LambdaProfile(values);
  }
  std::size_t i = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    if (i >= 10) throw std::invalid_argument("lambda must have 10 entries");
    const auto field = text.substr(pos, next - pos);
    if (field.empty()) throw std::invalid_argument("empty lambda entry");
    int x = 0;
    for (char c : field) {
      if (c < '0' || c > '9') throw std::invalid_argument("lambda entry must be a nonnegative integer");
      x = 10 * x + (c - '0');
    }
    values[i++] = x;
    pos = next + 1;
  }
  if (i != 10) throw std::invalid_argument("lambda must have 10 entries");
  return LambdaProfile(values);
}

LambdaProfile lambda_profile(const FrequencyTable& t) {
  const auto& f = t.f;
  return LambdaProfile({
      f[1][0] + f[3][0],
      f[0][1] + f[0][3],
      f[1][2] + f[3][2],
      f[2][1] + f[2][3],
      f[1][1] + f[3][3],
      f[1][3] + f[3][1],
      f[0][2],
      f[2][0],
      f[2][2],
      f[0][0],
  });
}

std::pair<Z4, Z4> lambda_class_representative(int i) {
  static constexpr std::array<std::pair<Z4, Z4>, 10> kReps = {{
      {1, 0}, {0, 1}, {1, 2}, {2, 1}, {1, 1}, {1, 3}, {0, 2}, {2, 0}, {2, 2}, {0, 0},
  }};
  if (i < 1 || i > 10) throw std::out_of_range("lambda class index must be in [1, 10]");
  return kReps[static_cast<std::size_t>(i - 1)];
}

GeneratorPair realize_lambda(const LambdaProfile& lambda) {
  if (lambda.n() == 0) throw std::invalid_argument("realize_lambda: all-zero profile");
  GeneratorPair out;
  for (int i = 1; i <= 10; ++i) {
    const auto [a, b] = lambda_class_representative(i);
    for (int c = 0; c < lambda(i); ++c) {
      out.u.push_back(a);
      out.v.push_back(b);
    }
  }
  return out;
}

GeneratorSpec spec_from_lambda(Family family, const LambdaProfile& lambda,
                               std::optional<BranchPair> branch) {
  auto [u, v] = realize_lambda(lambda);
  GeneratorSpec spec{family, std::move(u), std::move(v), branch};
  spec.validate();
  return spec;
}

}  // namespace qcd
