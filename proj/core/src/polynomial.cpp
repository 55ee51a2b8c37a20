#include "bwd/polynomial.hpp"

#include <charconv>
#include <sstream>

#include "bwd/error.hpp"

namespace bwd {

Polynomial::Polynomial(std::vector<Element> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().index == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(Element c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(Element c, std::size_t degree) {
  std::vector<Element> coeffs(degree + 1);
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial poly_add(const Field& f, const Polynomial& a, const Polynomial& b) {
  const std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Element> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
  return Polynomial(std::move(out));
}

Polynomial poly_sub(const Field& f, const Polynomial& a, const Polynomial& b) {
  const std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Element> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
  return Polynomial(std::move(out));
}

Polynomial poly_mul(const Field& f, const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Element> out(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].index == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
    }
  }
  return Polynomial(std::move(out));
}

Polynomial poly_scale(const Field& f, const Polynomial& a, Element c) {
  std::vector<Element> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.mul(a.coeffs()[i], c);
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> poly_divmod(const Field& f, const Polynomial& a,
                                              const Polynomial& b) {
  if (b.is_zero()) throw ZeroDenominator("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<Element> rem = a.coeffs();
  std::vector<Element> quot(a.coeffs().size() - b.coeffs().size() + 1);
  const Element lead_inv = f.inv(b.leading());
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Element factor = f.mul(rem[k + db], lead_inv);
    quot[k] = factor;
    if (factor.index == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) {
      rem[k + i] = f.sub(rem[k + i], f.mul(factor, b.coeffs()[i]));
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_monic(const Field& f, const Polynomial& a) {
  if (a.is_zero()) return a;
  return poly_scale(f, a, f.inv(a.leading()));
}

Polynomial poly_gcd(const Field& f, Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = poly_divmod(f, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(f, a);
}

Polynomial poly_derivative(const Field& f, const Polynomial& a) {
  if (a.coeffs().size() <= 1) return {};
  std::vector<Element> out(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
    out[i - 1] = f.scale(a.coeffs()[i], static_cast<std::uint32_t>(i % f.p()));
  }
  return Polynomial(std::move(out));
}

Element poly_eval(const Field& f, const Polynomial& a, Element x) {
  Element acc{};
  for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = f.add(f.mul(acc, x), a.coeffs()[i]);
  return acc;
}

Polynomial linearized(const Field& f, const std::vector<Element>& coeffs) {
  Polynomial out;
  std::size_t power = 1;
  for (const Element c : coeffs) {
    out = poly_add(f, out, Polynomial::monomial(c, power));
    power *= f.p();
  }
  return out;
}

Polynomial parse_polynomial(const Field& f, const std::string& text) {
  std::vector<Element> coeffs;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    bool negative = false;
    std::size_t pos = 0;
    while (pos < token.size() && token[pos] == ' ') ++pos;
    if (pos < token.size() && token[pos] == '-') {
      negative = true;
      ++pos;
    }
    std::uint64_t value = 0;
    const char* begin = token.data() + pos;
    const char* end = token.data() + token.size();
    while (end > begin && end[-1] == ' ') --end;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || begin == end) {
      throw ConfigError("bad polynomial coefficient '" + token + "' in '" + text + "'");
    }
    if (value >= f.q()) {
      throw ConfigError("coefficient " + std::to_string(value) + " out of range for q = " +
                        std::to_string(f.q()));
    }
    const Element c{static_cast<std::uint32_t>(value)};
    coeffs.push_back(negative ? f.neg(c) : c);
  }
  if (coeffs.empty()) throw ConfigError("empty polynomial '" + text + "'");
  return Polynomial(std::move(coeffs));
}

std::string to_string(const Polynomial& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a.coeffs()[i].index);
  }
  return out;
}

}  // namespace bwd
