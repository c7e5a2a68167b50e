#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcdesign/rational.hpp"

namespace qcd {

/// count words of the given length, each with aliasing index ai.
struct WordEntry {
  int length = 0;
  Rational ai;
  std::int64_t count = 0;

  friend bool operator==(const WordEntry&, const WordEntry&) = default;
};

/// Multiset of (length, aliasing index, count), kept sorted by (length, ai)
/// with equal keys merged and zero counts dropped.
class WordSpectrum {
 public:
  WordSpectrum() = default;
  explicit WordSpectrum(std::vector<WordEntry> entries);

  void add(int length, const Rational& ai, std::int64_t count);
  void add(const WordEntry& e) { add(e.length, e.ai, e.count); }
  void merge(const WordSpectrum& other);

  const std::vector<WordEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::int64_t total_words() const;
  int max_length() const;

  /// "{(len,ai,count), ...}"
  std::string to_string() const;

  friend bool operator==(const WordSpectrum&, const WordSpectrum&) = default;

 private:
  std::vector<WordEntry> entries_;
};

/// Generalized resolution and WLP. resolution is empty when there is no word.
struct SpectrumMetrics {
  std::optional<Rational> resolution;
  std::vector<Rational> wlp;  ///< A_1..A_q stored zero-based

  friend bool operator==(const SpectrumMetrics&, const SpectrumMetrics&) = default;
};

/// r = shortest word length, R = r + 1 - max ai at length r,
/// A_k = sum of count * ai^2 over words of length k.
/// Throws std::invalid_argument if a word is longer than q.
SpectrumMetrics spectrum_metrics(const WordSpectrum& spectrum, int q);

/// "Unbounded" or the exact rational.
std::string resolution_to_string(const std::optional<Rational>& resolution);

/// Integer WLP convenience for comparisons against tabulated values.
std::vector<Rational> to_rational_vector(const std::vector<std::int64_t>& values);

}  // namespace qcd
