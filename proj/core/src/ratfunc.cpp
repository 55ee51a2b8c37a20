#include "bwd/ratfunc.hpp"

#include <algorithm>

#include "bwd/error.hpp"

namespace bwd {

RationalFunction RationalFunction::normalize(const Field& field, const Polynomial& num,
                                             const Polynomial& den) {
  if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  RationalFunction f;
  if (num.is_zero()) {
    f.num_ = Polynomial{};
    f.den_ = Polynomial::constant(Field::one());
  } else {
    const Polynomial g = poly_gcd(field, num, den);
    Polynomial n = poly_divmod(field, num, g).first;
    Polynomial d = poly_divmod(field, den, g).first;
    const Element scale = field.inv(d.leading());
    f.num_ = poly_scale(field, n, scale);
    f.den_ = poly_scale(field, d, scale);
  }
  f.degree_ = std::max(std::max(f.num_.degree(), f.den_.degree()), 0);
  return f;
}

RationalFunction RationalFunction::polynomial(const Field& field, const Polynomial& num) {
  return normalize(field, num, Polynomial::constant(Field::one()));
}

RationalFunction RationalFunction::identity(const Field& field) {
  return polynomial(field, Polynomial::x());
}

RationalFunction RationalFunction::inversion(const Field& field) {
  return normalize(field, Polynomial::constant(Field::one()), Polynomial::x());
}

std::optional<Element> eval(const Field& field, const RationalFunction& f, Element x) {
  const Element d = poly_eval(field, f.den(), x);
  if (d.index == 0) return std::nullopt;
  return field.div(poly_eval(field, f.num(), x), d);
}

ExceptionalityResult is_exceptional(const Field& field, const RationalFunction& f) {
  if (f.den().degree() > 0 && !poly_derivative(field, f.den()).is_zero()) return {};

  std::vector<Element> xs;
  std::vector<Element> values;
  for (std::uint32_t i = 0; i < field.q(); ++i) {
    if (auto v = eval(field, f, Element{i})) {
      xs.push_back(Element{i});
      values.push_back(*v);
    }
  }
  if (xs.empty()) throw DegenerateFunction("rational function has no non-pole points");

  for (std::uint32_t l = 0; l < field.q(); ++l) {
    const Element lambda{l};
    auto shifted_trace = [&](std::size_t i) {
      return field.trace(field.sub(values[i], field.mul(lambda, xs[i])));
    };
    const std::uint32_t first = shifted_trace(0);
    bool constant = true;
    for (std::size_t i = 1; i < xs.size() && constant; ++i) constant = shifted_trace(i) == first;
    if (constant) return {true, lambda};
  }
  return {};
}

ImageResult apply_to_set(const Field& field, const RationalFunction& f, const FSubset& set) {
  ImageResult out;
  std::vector<Element> values;
  values.reserve(set.size());
  for (Element x : set) {
    if (auto v = eval(field, f, x)) {
      values.push_back(*v);
    } else {
      ++out.poles;
    }
  }
  const std::size_t hits = values.size();
  out.image = FSubset(field.q(), std::move(values));
  out.collisions = hits - out.image.size();
  return out;
}

RationalFunction parse_rational(const Field& field, const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    return RationalFunction::polynomial(field, parse_polynomial(field, text));
  }
  if (text.find('/', slash + 1) != std::string::npos) {
    throw ConfigError("rational function '" + text + "' has more than one '/'");
  }
  const Polynomial num = parse_polynomial(field, text.substr(0, slash));
  const Polynomial den = parse_polynomial(field, text.substr(slash + 1));
  if (den.is_zero()) throw ConfigError("rational function '" + text + "' has zero denominator");
  return RationalFunction::normalize(field, num, den);
}

std::string to_string(const RationalFunction& f) {
  if (f.is_polynomial()) return to_string(f.num());
  return to_string(f.num()) + "/" + to_string(f.den());
}

}  // namespace bwd
