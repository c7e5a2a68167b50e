#include "qcdesign/rational.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace qcd {

Rational inverse_power_of_two(int exponent) {
  if (exponent < 0 || exponent > 62) {
    throw std::out_of_range("inverse_power_of_two: exponent out of range");
  }
  return Rational(1, std::int64_t{1} << exponent);
}

int dyadic_exponent(const Rational& value) {
  if (value.numerator() != 1) return -1;
  const auto den = value.denominator();
  if ((den & (den - 1)) != 0) return -1;
  int e = 0;
  for (auto d = den; d > 1; d >>= 1) ++e;
  return e;
}

std::string to_string(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

std::string to_decimal(const Rational& value) {
  // Dyadic denominators terminate; print enough digits and trim zeros.
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f",
                static_cast<double>(value.numerator()) / static_cast<double>(value.denominator()));
  std::string out(buf);
  while (!out.empty() && out.back() == '0') out.pop_back();
  if (!out.empty() && out.back() == '.') out.pop_back();
  if (out == "-0") out = "0";
  return out;
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw std::invalid_argument("not an exact rational: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const auto num = parse_int(text.substr(0, slash), text);
  const auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::int64_t floor_of(const Rational& value) {
  const auto num = value.numerator();
  const auto den = value.denominator();  // always positive after normalization
  auto q = num / den;
  if ((num % den != 0) && (num < 0)) --q;
  return q;
}

}  // namespace qcd
