#include "bwd/field.hpp"

#include <algorithm>
#include <sstream>

#include "bwd/error.hpp"

namespace bwd {

namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Remainder of num modulo a monic divisor, coefficients mod p.
Coeffs poly_rem(Coeffs num, const Coeffs& monic_div, std::uint32_t p) {
  const std::size_t dd = monic_div.size() - 1;
  trim(num);
  while (num.size() > dd) {
    const std::uint64_t lead = num.back();
    const std::size_t shift = num.size() - 1 - dd;
    if (lead != 0) {
      for (std::size_t i = 0; i < dd; ++i) {
        const std::uint64_t sub = (lead * monic_div[i]) % p;
        num[shift + i] = static_cast<std::uint32_t>((num[shift + i] + p - sub) % p);
      }
    }
    num.pop_back();
    trim(num);
  }
  return num;
}

// Monic polynomial of degree `degree` whose lower coefficients are the base-p
// digits of `counter`, constant term least significant.
Coeffs monic_from_counter(std::uint64_t counter, std::uint32_t degree, std::uint32_t p) {
  Coeffs c(degree + 1, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    c[i] = static_cast<std::uint32_t>(counter % p);
    counter /= p;
  }
  c[degree] = 1;
  return c;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// No monic factor of degree 1..n/2 means irreducible.
bool is_irreducible(const Coeffs& f, std::uint32_t p) {
  const std::uint32_t n = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= n / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t k = 0; k < count; ++k) {
      if (poly_rem(f, monic_from_counter(k, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t value) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) {
      out.push_back(d);
      while (value % d == 0) value /= d;
    }
  }
  if (value > 1) out.push_back(value);
  return out;
}

Field Field::build(std::uint32_t p, std::uint32_t n) {
  if (!is_prime(p)) throw NonPrime("p = " + std::to_string(p) + " is not prime");
  if (n == 0) throw BadArgument("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxFieldSize) {
      throw FieldTooLarge("field size " + std::to_string(p) + "^" + std::to_string(n) +
                          " exceeds 2^20");
    }
  }

  Field field;
  field.params_.p = p;
  field.params_.n = n;
  field.params_.q = static_cast<std::uint32_t>(q);
  field.p_powers_.resize(n + 1);
  field.p_powers_[0] = 1;
  for (std::uint32_t i = 1; i <= n; ++i) field.p_powers_[i] = field.p_powers_[i - 1] * p;
  if (n > 1) field.find_modulus();
  field.build_tables();
  return field;
}

void Field::find_modulus() {
  const std::uint32_t p = params_.p;
  const std::uint32_t n = params_.n;
  // Lexicographic order with the constant term compared first: the constant
  // term is the most significant digit of the enumeration counter.
  const std::uint64_t total = ipow(p, n);
  for (std::uint64_t k = 0; k < total; ++k) {
    Coeffs c(n + 1, 0);
    std::uint64_t rest = k;
    for (std::uint32_t i = n; i-- > 0;) {
      c[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    c[n] = 1;
    if (c[0] == 0) continue;  // divisible by X
    if (is_irreducible(c, p)) {
      params_.modulus = std::move(c);
      return;
    }
  }
  // An irreducible polynomial of every degree exists over every prime field.
  throw Error("internal: no irreducible polynomial found");
}

std::vector<std::uint32_t> Field::digits(Element a) const {
  std::vector<std::uint32_t> d(params_.n, 0);
  std::uint32_t rest = a.index;
  for (std::uint32_t i = 0; i < params_.n; ++i) {
    d[i] = rest % params_.p;
    rest /= params_.p;
  }
  return d;
}

Element Field::from_digits(std::span<const std::uint32_t> digits) const {
  std::uint32_t index = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    index = index * params_.p + digits[i] % params_.p;
  }
  return Element{index};
}

Element Field::mul_poly(Element a, Element b) const {
  const std::uint32_t p = params_.p;
  if (params_.n == 1) {
    return Element{static_cast<std::uint32_t>(std::uint64_t{a.index} * b.index % p)};
  }
  const auto da = digits(a);
  const auto db = digits(b);
  Coeffs prod(2 * params_.n - 1, 0);
  for (std::size_t i = 0; i < da.size(); ++i) {
    if (da[i] == 0) continue;
    for (std::size_t j = 0; j < db.size(); ++j) {
      if (db[j] == 0) continue;
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p);
    }
  }
  const Coeffs rem = poly_rem(std::move(prod), params_.modulus, p);
  return from_digits(rem);
}

void Field::build_tables() {
  const std::uint32_t q = params_.q;
  const std::uint32_t order = q - 1;

  auto pow_slow = [this](Element a, std::uint64_t e) {
    Element result = one();
    while (e > 0) {
      if (e & 1) result = mul_poly(result, a);
      a = mul_poly(a, a);
      e >>= 1;
    }
    return result;
  };

  const auto factors = prime_factors(order);
  for (std::uint32_t g = 1; g < q; ++g) {
    bool primitive = true;
    for (std::uint64_t r : factors) {
      if (pow_slow(Element{g}, order / r) == one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = Element{g};
      break;
    }
  }

  exp_table_.assign(order, 0);
  dlog_table_.assign(q, 0);
  Element cur = one();
  for (std::uint32_t k = 0; k < order; ++k) {
    exp_table_[k] = cur.index;
    dlog_table_[cur.index] = k;
    cur = mul_poly(cur, generator_);
  }

  trace_table_.assign(q, 0);
  if (params_.n == 1) {
    for (std::uint32_t a = 0; a < q; ++a) trace_table_[a] = a;
    return;
  }
  // Tr is GF(p)-linear: tabulate Tr(X^i) from the definition, then extend.
  std::vector<std::uint32_t> basis_trace(params_.n, 0);
  for (std::uint32_t i = 0; i < params_.n; ++i) {
    const Element x{p_powers_[i]};
    Element sum = zero();
    Element frob = x;
    for (std::uint32_t j = 0; j < params_.n; ++j) {
      sum = add(sum, frob);
      frob = pow(frob, params_.p);
    }
    basis_trace[i] = sum.index;  // lies in the prime subfield
  }
  for (std::uint32_t a = 0; a < q; ++a) {
    std::uint64_t t = 0;
    std::uint32_t rest = a;
    for (std::uint32_t i = 0; i < params_.n; ++i) {
      t += std::uint64_t{rest % params_.p} * basis_trace[i];
      rest /= params_.p;
    }
    trace_table_[a] = static_cast<std::uint32_t>(t % params_.p);
  }
}

Element Field::from_int(std::int64_t value) const {
  const std::int64_t p = params_.p;
  return Element{static_cast<std::uint32_t>(((value % p) + p) % p)};
}

Element Field::element(std::uint64_t index) const {
  if (index >= params_.q) {
    throw BadArgument("element index " + std::to_string(index) + " out of range for q = " +
                      std::to_string(params_.q));
  }
  return Element{static_cast<std::uint32_t>(index)};
}

Element Field::add(Element a, Element b) const {
  const std::uint32_t p = params_.p;
  if (params_.n == 1) return Element{(a.index + b.index) % p};
  if (p == 2) return Element{a.index ^ b.index};
  std::uint32_t x = a.index, y = b.index, out = 0;
  for (std::uint32_t i = 0; i < params_.n && (x | y) != 0; ++i) {
    out += ((x % p + y % p) % p) * p_powers_[i];
    x /= p;
    y /= p;
  }
  return Element{out};
}

Element Field::neg(Element a) const {
  const std::uint32_t p = params_.p;
  if (params_.n == 1) return Element{(p - a.index) % p};
  if (p == 2) return a;
  std::uint32_t x = a.index, out = 0;
  for (std::uint32_t i = 0; i < params_.n && x != 0; ++i) {
    out += ((p - x % p) % p) * p_powers_[i];
    x /= p;
  }
  return Element{out};
}

Element Field::sub(Element a, Element b) const { return add(a, neg(b)); }

Element Field::scale(Element a, std::uint32_t c) const {
  const std::uint32_t p = params_.p;
  c %= p;
  if (params_.n == 1) return Element{static_cast<std::uint32_t>(std::uint64_t{a.index} * c % p)};
  std::uint32_t x = a.index, out = 0;
  for (std::uint32_t i = 0; i < params_.n && x != 0; ++i) {
    out += static_cast<std::uint32_t>(std::uint64_t{x % p} * c % p) * p_powers_[i];
    x /= p;
  }
  return Element{out};
}

Element Field::mul(Element a, Element b) const {
  if (params_.n == 1) {
    return Element{static_cast<std::uint32_t>(std::uint64_t{a.index} * b.index % params_.p)};
  }
  if (a.index == 0 || b.index == 0) return zero();
  const std::uint32_t order = params_.q - 1;
  std::uint32_t k = dlog_table_[a.index] + dlog_table_[b.index];
  if (k >= order) k -= order;
  return Element{exp_table_[k]};
}

Element Field::inv(Element a) const {
  if (a.index == 0) throw DivisionByZero("inverse of zero");
  const std::uint32_t order = params_.q - 1;
  return Element{exp_table_[(order - dlog_table_[a.index]) % order]};
}

std::uint32_t Field::dlog(Element a) const {
  if (a.index == 0) throw DivisionByZero("discrete logarithm of zero");
  return dlog_table_[a.index];
}

Element Field::pow(Element a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.index == 0) return zero();
  const std::uint64_t order = params_.q - 1;
  const std::uint64_t k = (std::uint64_t{dlog_table_[a.index]} * (e % order)) % order;
  return Element{exp_table_[k]};
}

std::string Field::describe() const {
  std::ostringstream out;
  out << "GF(" << params_.p;
  if (params_.n > 1) out << "^" << params_.n;
  out << ") q=" << params_.q << " generator=" << generator_.index;
  if (!params_.modulus.empty()) {
    out << " modulus=";
    for (std::size_t i = 0; i < params_.modulus.size(); ++i) {
      if (i) out << ",";
      out << params_.modulus[i];
    }
  }
  return out.str();
}

}  // namespace bwd
