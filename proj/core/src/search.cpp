#include "qcdesign/search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qcdesign/design.hpp"
#include "qcdesign/parallel.hpp"
#include "qcdesign/theory.hpp"

namespace qcd {

std::string_view criterion_name(Criterion c) {
  switch (c) {
    case Criterion::MaxResolution: return "resolution";
    case Criterion::MinAberration: return "aberration";
    case Criterion::MaxProjectivity: return "projectivity";
  }
  return "?";
}

Criterion parse_criterion(std::string_view name) {
  for (auto c : {Criterion::MaxResolution, Criterion::MinAberration, Criterion::MaxProjectivity}) {
    if (criterion_name(c) == name) return c;
  }
  throw std::invalid_argument("unknown criterion '" + std::string(name) + "'");
}

namespace {

void compose(int pos, int left, std::array<int, 10>& parts,
             const std::function<void(const LambdaProfile&)>& visit) {
  if (pos == 9) {
    parts[9] = left;
    visit(LambdaProfile(parts));
    return;
  }
  for (int x = 0; x <= left; ++x) {
    parts[static_cast<std::size_t>(pos)] = x;
    compose(pos + 1, left - x, parts, visit);
  }
}

}  // namespace

void for_each_lambda(int n, const std::function<void(const LambdaProfile&)>& visit) {
  if (n < 1) throw std::invalid_argument("enumerate_lambdas: n must be positive");
  std::array<int, 10> parts{};
  compose(0, n, parts, visit);
}

std::vector<LambdaProfile> enumerate_lambdas(int n) {
  std::vector<LambdaProfile> out;
  out.reserve(static_cast<std::size_t>(composition_count(n)));
  for_each_lambda(n, [&](const LambdaProfile& l) { out.push_back(l); });
  return out;
}

std::int64_t composition_count(int n) {
  std::int64_t c = 1;
  for (int i = 1; i <= 9; ++i) c = c * (n + i) / i;
  return c;
}

std::string Candidate::key() const {
  auto s = lambda.to_string();
  if (branch) s += "/" + to_string(*branch);
  return s;
}

std::vector<Candidate> evaluate_candidates(int n, Family family, const SearchOptions& options) {
  std::vector<std::optional<BranchPair>> branches;
  if (is_odd_run(family)) {
    if (options.all_branch_pairs) {
      for (auto b : all_branch_pairs()) branches.emplace_back(b);
    } else {
      for (auto b : branch_representatives(family)) branches.emplace_back(b);
    }
  } else {
    branches.emplace_back(std::nullopt);
  }

  const auto lambdas = enumerate_lambdas(n);
  const int q = factor_count(family, n);
  std::vector<Candidate> out(lambdas.size() * branches.size());
  parallel_for(lambdas.size(), [&](std::size_t i) {
    for (std::size_t b = 0; b < branches.size(); ++b) {
      auto& c = out[i * branches.size() + b];
      c.lambda = lambdas[i];
      c.branch = branches[b];
      c.metrics = spectrum_metrics(theory_spectrum(family, c.lambda, c.branch), q);
    }
  });
  return out;
}

namespace {

// <0 if a is better, >0 if b is better, 0 if tied under the criterion.
int compare(const Candidate& a, const Candidate& b, Criterion criterion) {
  switch (criterion) {
    case Criterion::MaxResolution: {
      const auto& ra = a.metrics.resolution;
      const auto& rb = b.metrics.resolution;
      if (!ra && !rb) return 0;
      if (!ra) return -1;  // no words at all beats any finite resolution
      if (!rb) return 1;
      if (*ra == *rb) return 0;
      return *ra > *rb ? -1 : 1;
    }
    case Criterion::MinAberration: {
      const auto& wa = a.metrics.wlp;
      const auto& wb = b.metrics.wlp;
      const std::size_t len = std::max(wa.size(), wb.size());
      for (std::size_t k = 0; k < len; ++k) {
        const Rational x = k < wa.size() ? wa[k] : Rational(0);
        const Rational y = k < wb.size() ? wb[k] : Rational(0);
        if (x != y) return x < y ? -1 : 1;
      }
      return 0;
    }
    case Criterion::MaxProjectivity: {
      if (!a.projectivity || !b.projectivity) {
        throw std::logic_error("projectivity comparison on an unevaluated candidate");
      }
      if (*a.projectivity == *b.projectivity) return 0;
      return *a.projectivity > *b.projectivity ? -1 : 1;
    }
  }
  return 0;
}

// The criterion that breaks ties of the primary one: resolution and
// aberration refine each other, projectivity falls back to resolution.
Criterion secondary_of(Criterion c) {
  return c == Criterion::MaxResolution ? Criterion::MinAberration : Criterion::MaxResolution;
}

// Primary criterion, then the secondary one, then (when both sides carry it)
// projectivity. Zero means the metrics are indistinguishable.
int compare_metrics(const Candidate& a, const Candidate& b, Criterion criterion) {
  if (int c = compare(a, b, criterion); c != 0) return c;
  if (int c = compare(a, b, secondary_of(criterion)); c != 0) return c;
  if (criterion == Criterion::MaxProjectivity) {
    return compare(a, b, Criterion::MinAberration);
  }
  if (a.projectivity && b.projectivity) return compare(a, b, Criterion::MaxProjectivity);
  return 0;
}

// Deterministic total order: metrics first, then lambda, then branch pair.
bool precedes(const Candidate& a, const Candidate& b, Criterion criterion) {
  const int c = compare_metrics(a, b, criterion);
  if (c != 0) return c < 0;
  if (a.lambda != b.lambda) return a.lambda < b.lambda;
  return a.branch < b.branch;
}

// Smallest complete-word length minus one bounds projectivity from above:
// the columns of a complete word never show all level combinations.
int projectivity_ceiling(const Candidate& c, Family family, int n) {
  int ceiling = factor_count(family, n);
  const auto spectrum = theory_spectrum(family, c.lambda, c.branch);
  for (const auto& e : spectrum.entries()) {
    if (e.ai == Rational(1)) ceiling = std::min(ceiling, e.length - 1);
  }
  int log_runs = 0;
  while ((std::int64_t{1} << (log_runs + 1)) <= run_count(family, n)) ++log_runs;
  return std::min(ceiling, log_runs);
}

int oracle_projectivity(const Candidate& c, Family family) {
  return projectivity(build_design(spec_from_lambda(family, c.lambda, c.branch)));
}

std::vector<Candidate> fill_projectivity(std::vector<Candidate> all, Family family, int n) {
  // Evaluate in order of decreasing ceiling and stop once no remaining
  // candidate can reach the best value found.
  std::vector<int> ceiling(all.size());
  parallel_for(all.size(), [&](std::size_t i) { ceiling[i] = projectivity_ceiling(all[i], family, n); });
  std::vector<std::size_t> order(all.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ceiling[a] > ceiling[b]; });

  int best = -1;
  std::size_t pos = 0;
  while (pos < order.size() && ceiling[order[pos]] >= best) {
    // Evaluate one ceiling level as a batch.
    const int level = ceiling[order[pos]];
    std::size_t end = pos;
    while (end < order.size() && ceiling[order[end]] == level) ++end;
    parallel_for(end - pos, [&](std::size_t k) {
      auto& c = all[order[pos + k]];
      c.projectivity = oracle_projectivity(c, family);
    });
    for (std::size_t k = pos; k < end; ++k) best = std::max(best, *all[order[k]].projectivity);
    pos = end;
  }
  std::vector<Candidate> evaluated;
  for (auto& c : all) {
    if (c.projectivity) evaluated.push_back(std::move(c));
  }
  return evaluated;
}

const Candidate& best_of(const std::vector<Candidate>& all, Criterion criterion) {
  return *std::min_element(all.begin(), all.end(), [&](const Candidate& a, const Candidate& b) {
    return precedes(a, b, criterion);
  });
}

}  // namespace

bool strictly_better(const Candidate& a, const Candidate& b, Criterion criterion) {
  return compare(a, b, criterion) < 0;
}

bool is_optimal(const Candidate& best, const std::vector<Candidate>& all, Criterion criterion) {
  return std::none_of(all.begin(), all.end(),
                      [&](const Candidate& c) { return strictly_better(c, best, criterion); });
}

SearchResult optimize(int n, Family family, Criterion criterion, const SearchOptions& options) {
  if (n < 1 || n > options.max_n) {
    throw std::out_of_range("n = " + std::to_string(n) + " outside the search range [1, " +
                            std::to_string(options.max_n) + "]");
  }
  auto all = evaluate_candidates(n, family, options);
  const auto candidate_count = static_cast<std::int64_t>(all.size());

  // MinAberration ranks by resolution second, so its winner has the largest R
  // among the MA optima; the two optimum sets meet iff that R is the maximum.
  const bool coincide = compare(best_of(all, Criterion::MinAberration),
                                best_of(all, Criterion::MaxResolution),
                                Criterion::MaxResolution) == 0;

  if (criterion == Criterion::MaxProjectivity) {
    all = fill_projectivity(std::move(all), family, n);
  } else {
    // Designs indistinguishable by spectrum can still differ in projectivity.
    const Candidate top = best_of(all, criterion);
    std::vector<std::size_t> tied;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (compare_metrics(all[i], top, criterion) == 0) tied.push_back(i);
    }
    parallel_for(tied.size(), [&](std::size_t k) {
      auto& c = all[tied[k]];
      c.projectivity = oracle_projectivity(c, family);
    });
    std::vector<Candidate> finalists;
    for (auto i : tied) finalists.push_back(all[i]);
    all.swap(finalists);
  }

  const Candidate best = best_of(all, criterion);
  SearchResult r;
  r.family = family;
  r.n = n;
  r.criterion = criterion;
  r.lambda = best.lambda;
  r.branch = best.branch;
  r.resolution = best.metrics.resolution;
  r.wlp = best.metrics.wlp;
  r.projectivity = *best.projectivity;
  r.criteria_coincide = coincide;
  r.candidates_evaluated = candidate_count;
  for (const auto& c : all) {
    if (compare_metrics(c, best, criterion) == 0) r.ties.push_back(c);
  }
  std::sort(r.ties.begin(), r.ties.end(),
            [&](const Candidate& a, const Candidate& b) { return precedes(a, b, criterion); });
  return r;
}

int orthogonal_array_ceiling(int q, Fraction fraction) {
  if (q < 1) throw std::invalid_argument("q must be positive");
  return std::max(0, q - (fraction == Fraction::Sixteenth ? 5 : 4));
}

Fraction fraction_of(Family family) {
  return is_eighth(family) ? Fraction::Eighth : Fraction::Sixteenth;
}

}  // namespace qcd
