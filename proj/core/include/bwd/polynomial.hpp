#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bwd/field.hpp"

namespace bwd {

// Polynomial over a Field, coefficients low degree first with no trailing
// zeros; the zero polynomial has no coefficients. Like Element, a Polynomial
// does not know its field.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Element> coeffs);

  static Polynomial constant(Element c);
  static Polynomial monomial(Element c, std::size_t degree);
  static Polynomial x() { return monomial(Field::one(), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Element>& coeffs() const { return coeffs_; }
  Element coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Element{}; }
  Element leading() const { return coeffs_.empty() ? Element{} : coeffs_.back(); }

  bool operator==(const Polynomial&) const = default;

 private:
  void trim();

  std::vector<Element> coeffs_;
};

Polynomial poly_add(const Field& f, const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Field& f, const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Field& f, const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Field& f, const Polynomial& a, Element c);
// Quotient and remainder; throws ZeroDenominator when b is zero.
std::pair<Polynomial, Polynomial> poly_divmod(const Field& f, const Polynomial& a,
                                              const Polynomial& b);
// Monic gcd (zero when both inputs are zero).
Polynomial poly_gcd(const Field& f, Polynomial a, Polynomial b);
Polynomial poly_monic(const Field& f, const Polynomial& a);
Polynomial poly_derivative(const Field& f, const Polynomial& a);
Element poly_eval(const Field& f, const Polynomial& a, Element x);

// Sum of a_i X^(p^i) for the given coefficients a_0, a_1, ...
Polynomial linearized(const Field& f, const std::vector<Element>& coeffs);

// "c0,c1,...": comma-separated element indices low degree first. A leading
// minus sign denotes the additive inverse. Throws ConfigError.
Polynomial parse_polynomial(const Field& f, const std::string& text);
std::string to_string(const Polynomial& a);

}  // namespace bwd
