#pragma once

#include "qcdesign/generator.hpp"
#include "qcdesign/oracle.hpp"
#include "qcdesign/rational.hpp"

namespace qcd {

// Independent route to an aliasing index: evaluate the trigonometric sum
// for a collection of type x directly from (u, v), never touching the run
// matrix. sqrt(2) sin(pi/4 + pi k/2) and sqrt(2) cos(pi/4 + pi k/2) are
// always +1 or -1, so each factor is tracked as a sign plus a power of
// sqrt(2) and the result is an exact dyadic rational.

/// sqrt(2) * sin(pi/4 + pi k/2) for k in Z4.
constexpr int scaled_sin(unsigned k) {
  return (k & 3u) < 2 ? 1 : -1;
}
/// sqrt(2) * cos(pi/4 + pi k/2) for k in Z4.
constexpr int scaled_cos(unsigned k) {
  const unsigned r = k & 3u;
  return (r == 0 || r == 3) ? 1 : -1;
}

/// Signed V(x) for the even-run families (SixteenthEven, EighthEven).
/// |V(x)| is the aliasing index of the collection. Throws
/// std::invalid_argument for odd-run specs or a type that uses F1 on an
/// eighth-fraction spec.
Rational trig_V(const SubsetType& type, const GeneratorSpec& spec);

/// |G(x) + (-1)^x5 H(x)| for the odd-run families.
/// Throws std::invalid_argument for even-run specs.
Rational trig_GH(const SubsetType& type, const GeneratorSpec& spec);

/// Dispatches on the family; returns the aliasing index.
Rational trig_aliasing_index(const SubsetType& type, const GeneratorSpec& spec);

}  // namespace qcd
