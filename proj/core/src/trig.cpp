#include "qcdesign/trig.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qcd {

namespace {

// A term sign * 2^(half_exponent / 2).
struct Term {
  int sign = 1;
  int half_exponent = 0;
};

// phi(x; a) with the check-column arguments shifted by (du, dv). The
// prefactor 2^((m+X)/2 - 2n) enters as half-exponent (m + X) - 4n and every
// sin/cos factor as sign(.) * 2^(-1/2).
class PhiEvaluator {
 public:
  PhiEvaluator(const SubsetType& type, const GeneratorSpec& spec)
      : type_(type), spec_(spec), n_(spec.n()) {
    if (n_ > 12) throw std::invalid_argument("trig evaluation limited to n <= 12");
    for (int j : type.s1) check_index(j);
    for (int j : type.s2) check_index(j);
    for (int j : type.s3) check_index(j);
  }

  // Sum of phi over all a in Z4^n, returned as (integer sum of signs, common half exponent).
  std::pair<std::int64_t, int> sum(unsigned du, unsigned dv) const {
    const int m = type_.pair_weight();
    const int X = type_.check_count();
    const int factors = X + m;
    const int half_exponent = (m + X) - 4 * n_ - factors;

    std::int64_t total = 0;
    std::vector<unsigned> a(static_cast<std::size_t>(n_), 0);
    const std::int64_t points = std::int64_t{1} << (2 * n_);
    for (std::int64_t idx = 0; idx < points; ++idx) {
      std::int64_t rest = idx;
      for (int j = n_ - 1; j >= 0; --j) {
        a[static_cast<std::size_t>(j)] = static_cast<unsigned>(rest & 3);
        rest >>= 2;
      }
      unsigned au = du;
      unsigned av = dv;
      for (int j = 0; j < n_; ++j) {
        au += a[static_cast<std::size_t>(j)] * spec_.u[static_cast<std::size_t>(j)];
        av += a[static_cast<std::size_t>(j)] * spec_.v[static_cast<std::size_t>(j)];
      }
      int sign = 1;
      if (type_.x[0]) sign *= scaled_sin(au);
      if (type_.x[1]) sign *= scaled_cos(au);
      if (type_.x[2]) sign *= scaled_sin(av);
      if (type_.x[3]) sign *= scaled_cos(av);
      sign *= psi_sign(a);
      total += sign;
    }
    return {total, half_exponent};
  }

 private:
  void check_index(int j) const {
    if (j < 1 || j > n_) throw std::invalid_argument("subset index outside 1..n");
  }

  int psi_sign(const std::vector<unsigned>& a) const {
    int sign = 1;
    for (int j : type_.s1) {
      const auto aj = a[static_cast<std::size_t>(j - 1)];
      sign *= scaled_sin(aj) * scaled_cos(aj);
    }
    for (int j : type_.s2) sign *= scaled_cos(a[static_cast<std::size_t>(j - 1)]);
    for (int j : type_.s3) sign *= scaled_sin(a[static_cast<std::size_t>(j - 1)]);
    return sign;
  }

  const SubsetType& type_;
  const GeneratorSpec& spec_;
  int n_;
};

Rational to_rational(std::int64_t signs, int half_exponent) {
  if (half_exponent % 2 != 0) {
    throw std::logic_error("trig sum left an odd power of sqrt(2)");
  }
  const int e = half_exponent / 2;
  if (e >= 0) return Rational(signs * (std::int64_t{1} << e));
  return Rational(signs, std::int64_t{1} << (-e));
}

}  // namespace

Rational trig_V(const SubsetType& type, const GeneratorSpec& spec) {
  spec.validate();
  if (is_odd_run(spec.family)) throw std::invalid_argument("trig_V: odd-run family, use trig_GH");
  if (is_eighth(spec.family) && type.x[0]) {
    throw std::invalid_argument("trig_V: F1 is absent from eighth-fraction designs");
  }
  if (type.check_count() == 0 && type.pair_weight() == 0) {
    throw std::invalid_argument("trig_V: empty collection");
  }
  PhiEvaluator phi(type, spec);
  const auto [signs, half_exponent] = phi.sum(0, 0);
  return to_rational(signs, half_exponent);
}

Rational trig_GH(const SubsetType& type, const GeneratorSpec& spec) {
  spec.validate();
  if (!is_odd_run(spec.family)) throw std::invalid_argument("trig_GH: even-run family, use trig_V");
  if (is_eighth(spec.family) && type.x[0]) {
    throw std::invalid_argument("trig_GH: F1 is absent from eighth-fraction designs");
  }
  const bool x5 = type.x5.value_or(false);
  if (type.check_count() == 0 && type.pair_weight() == 0 && !x5) {
    throw std::invalid_argument("trig_GH: empty collection");
  }
  PhiEvaluator phi(type, spec);
  const auto [g_signs, g_exp] = phi.sum(0, 0);
  const auto [h_signs, h_exp] = phi.sum(spec.branch->u0, spec.branch->v0);
  // G and H carry the extra factor 1/2.
  const Rational g = to_rational(g_signs, g_exp) / 2;
  const Rational h = to_rational(h_signs, h_exp) / 2;
  const Rational value = x5 ? g - h : g + h;
  return value < Rational(0) ? -value : value;
}

Rational trig_aliasing_index(const SubsetType& type, const GeneratorSpec& spec) {
  if (is_odd_run(spec.family)) return trig_GH(type, spec);
  const Rational v = trig_V(type, spec);
  return v < Rational(0) ? -v : v;
}

}  // namespace qcd
