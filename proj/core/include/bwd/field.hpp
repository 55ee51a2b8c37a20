#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bwd {

// An element of GF(p^n), stored as its canonical index in [0, q). The base-p
// digits of the index, least significant first, are the coefficients of the
// residue polynomial modulo the field's defining polynomial.
//
// Elements carry no reference to their field. Passing an element of one Field
// to another Field's methods is a caller error the type cannot detect.
struct Element {
  std::uint32_t index = 0;

  constexpr auto operator<=>(const Element&) const = default;
};

inline constexpr std::uint32_t kMaxFieldSize = 1u << 20;

struct FieldParams {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  // Monic defining polynomial, low degree first, length n + 1. Empty for n == 1.
  std::vector<std::uint32_t> modulus;
  std::uint32_t q = 0;
};

bool is_prime(std::uint64_t value);

// Prime factors of value without multiplicity, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t value);

// Fully tabulated finite field. Immutable after construction and safe to share
// between threads.
class Field {
 public:
  // Builds GF(p^n) with the lexicographically smallest monic irreducible
  // modulus (coefficients compared from the constant term up) and the
  // smallest-index primitive element as generator.
  // Throws NonPrime, FieldTooLarge, or BadArgument (n == 0).
  static Field build(std::uint32_t p, std::uint32_t n = 1);

  const FieldParams& params() const { return params_; }
  std::uint32_t p() const { return params_.p; }
  std::uint32_t n() const { return params_.n; }
  std::uint32_t q() const { return params_.q; }
  bool is_prime_field() const { return params_.n == 1; }

  bool contains(Element a) const { return a.index < params_.q; }

  static constexpr Element zero() { return Element{0}; }
  static constexpr Element one() { return Element{1}; }
  Element generator() const { return generator_; }

  // Image of an integer in the prime subfield.
  Element from_int(std::int64_t value) const;
  // Element by index; throws BadArgument when index >= q.
  Element element(std::uint64_t index) const;

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  // Throws DivisionByZero for a == 0.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const;
  // Multiplication by the scalar c in GF(p).
  Element scale(Element a, std::uint32_t c) const;

  // Schoolbook product of residue polynomials reduced mod the modulus. Used to
  // build the tables; mul() agrees with it everywhere.
  Element mul_poly(Element a, Element b) const;

  // Absolute trace to GF(p), as an integer in [0, p).
  std::uint32_t trace(Element a) const { return trace_table_[a.index]; }
  // Discrete logarithm to the canonical generator, in [0, q - 1).
  // Throws DivisionByZero for a == 0.
  std::uint32_t dlog(Element a) const;
  // generator^k for any k.
  Element exp(std::uint64_t k) const { return Element{exp_table_[k % (params_.q - 1)]}; }

  std::vector<std::uint32_t> digits(Element a) const;
  Element from_digits(std::span<const std::uint32_t> digits) const;

  std::string describe() const;

 private:
  Field() = default;

  void find_modulus();
  void build_tables();

  FieldParams params_;
  std::vector<std::uint32_t> p_powers_;
  Element generator_{};
  std::vector<std::uint32_t> exp_table_;
  std::vector<std::uint32_t> dlog_table_;
  std::vector<std::uint32_t> trace_table_;
};

}  // namespace bwd
