#pragma once

#include <optional>
#include <string>

#include "bwd/field.hpp"
#include "bwd/polynomial.hpp"
#include "bwd/subset.hpp"

namespace bwd {

// f = num / den in lowest terms with den monic. The degree is
// max(deg num, deg den).
class RationalFunction {
 public:
  // Cancels the gcd and scales the denominator monic.
  // Throws ZeroDenominator when den is zero.
  static RationalFunction normalize(const Field& field, const Polynomial& num,
                                    const Polynomial& den);
  static RationalFunction polynomial(const Field& field, const Polynomial& num);
  static RationalFunction identity(const Field& field);
  static RationalFunction inversion(const Field& field);  // X^{-1}

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  int degree() const { return degree_; }
  bool is_polynomial() const { return den_.degree() == 0; }

  bool operator==(const RationalFunction&) const = default;

 private:
  Polynomial num_;
  Polynomial den_;
  int degree_ = 0;
};

// f(x), or std::nullopt when x is a pole. Poles contribute nothing to sums,
// image sets, or representation counts anywhere in the library.
std::optional<Element> eval(const Field& field, const RationalFunction& f, Element x);

struct ExceptionalityResult {
  bool exceptional = false;
  // Some lambda with Tr(f(x) - lambda x) constant on the non-pole points.
  std::optional<Element> witness;
};

// Decides whether f has the Artin-Schreier-plus-linear shape
// g^p - g + lambda X + mu that the decomposition theorem excludes.
//
// A denominator that is not a p-th power (nonzero derivative) gives f a pole
// whose order is prime to p, which g^p - g + lambda X + mu can never have, so
// such f is never exceptional. Otherwise f is exceptional iff some lambda makes
// x -> Tr(f(x) - lambda x) constant on the non-pole points; this is exact for
// polynomials and is the operative definition for rational f. O(q^2) worst
// case. Throws DegenerateFunction if f has no non-pole points.
ExceptionalityResult is_exceptional(const Field& field, const RationalFunction& f);

struct ImageResult {
  FSubset image;
  std::size_t poles = 0;
  // (|U| - poles) - |f(U)|: non-pole inputs lost to collisions.
  std::size_t collisions = 0;
};

ImageResult apply_to_set(const Field& field, const RationalFunction& f, const FSubset& set);

// "num" or "num/den", each a coefficient list accepted by parse_polynomial.
RationalFunction parse_rational(const Field& field, const std::string& text);
std::string to_string(const RationalFunction& f);

}  // namespace bwd
