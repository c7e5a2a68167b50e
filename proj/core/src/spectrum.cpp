#include "qcdesign/spectrum.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qcd {

WordSpectrum::WordSpectrum(std::vector<WordEntry> entries) {
  for (const auto& e : entries) add(e);
}

void WordSpectrum::add(int length, const Rational& ai, std::int64_t count) {
  if (count == 0) return;
  if (count < 0) throw std::invalid_argument("word counts must be nonnegative");
  if (length < 1) throw std::invalid_argument("word length must be positive");
  if (ai <= Rational(0) || ai > Rational(1)) throw std::invalid_argument("aliasing index must lie in (0, 1]");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{length, ai},
                             [](const WordEntry& e, const std::pair<int, Rational>& key) {
                               return e.length != key.first ? e.length < key.first
                                                            : e.ai < key.second;
                             });
  if (it != entries_.end() && it->length == length && it->ai == ai) {
    it->count += count;
  } else {
    entries_.insert(it, WordEntry{length, ai, count});
  }
}

void WordSpectrum::merge(const WordSpectrum& other) {
  for (const auto& e : other.entries_) add(e);
}

std::int64_t WordSpectrum::total_words() const {
  std::int64_t total = 0;
  for (const auto& e : entries_) total += e.count;
  return total;
}

int WordSpectrum::max_length() const {
  return entries_.empty() ? 0 : entries_.back().length;
}

std::string WordSpectrum::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ", ";
    const auto& e = entries_[i];
    os << '(' << e.length << ',' << qcd::to_string(e.ai) << ',' << e.count << ')';
  }
  os << '}';
  return os.str();
}

SpectrumMetrics spectrum_metrics(const WordSpectrum& spectrum, int q) {
  SpectrumMetrics m;
  m.wlp.assign(static_cast<std::size_t>(q), Rational(0));
  for (const auto& e : spectrum.entries()) {
    if (e.length > q) throw std::invalid_argument("word length exceeds the factor count");
    m.wlp[static_cast<std::size_t>(e.length - 1)] += Rational(e.count) * e.ai * e.ai;
  }
  if (!spectrum.empty()) {
    const int r = spectrum.entries().front().length;
    Rational worst(0);
    for (const auto& e : spectrum.entries()) {
      if (e.length == r) worst = std::max(worst, e.ai);
    }
    m.resolution = Rational(r + 1) - worst;
  }
  return m;
}

std::string resolution_to_string(const std::optional<Rational>& resolution) {
  return resolution ? to_string(*resolution) : std::string("Unbounded");
}

std::vector<Rational> to_rational_vector(const std::vector<std::int64_t>& values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (auto v : values) out.emplace_back(v);
  return out;
}

}  // namespace qcd
