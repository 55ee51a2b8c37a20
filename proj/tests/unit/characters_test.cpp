#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bwd/characters.hpp"
#include "bwd/checks.hpp"
#include "bwd/polynomial.hpp"
#include "bwd/rng.hpp"
#include "oracles.hpp"

using bwd::AdditiveCharacter;
using bwd::Complex;
using bwd::Element;
using bwd::Field;
using bwd::MultiplicativeCharacter;

namespace {

void expect_close(Complex a, Complex b, double tol = 1e-12) {
  EXPECT_LE(std::abs(a - b), tol) << a << " vs " << b;
}

}  // namespace

TEST(AdditiveCharacter, SpecExamples) {
  const Field f = Field::build(5);
  expect_close(bwd::eval_additive(f, AdditiveCharacter{Element{0}}, Element{3}), {1, 0});
  expect_close(bwd::eval_additive(f, AdditiveCharacter{Element{1}}, Element{0}), {1, 0});
  const double t = 2 * std::numbers::pi / 5;
  expect_close(bwd::eval_additive(f, AdditiveCharacter{Element{1}}, Element{1}),
               {std::cos(t), std::sin(t)});
}

TEST(AdditiveCharacter, PrimeFieldMatchesExponential) {
  const std::uint32_t p = 31;
  const Field f = Field::build(p);
  for (std::uint32_t a = 0; a < p; ++a) {
    const auto table = bwd::tabulate(f, AdditiveCharacter{Element{a}});
    for (std::uint32_t x = 0; x < p; ++x) {
      expect_close(table[x], oracle::e_p(std::uint64_t{a} * x, p));
    }
  }
}

TEST(AdditiveCharacter, HomomorphismOverExtension) {
  const Field f = Field::build(3, 2);
  for (std::uint32_t a = 0; a < f.q(); ++a) {
    const AdditiveCharacter psi{Element{a}};
    EXPECT_EQ(psi.trivial(), a == 0);
    for (std::uint32_t x = 0; x < f.q(); ++x) {
      for (std::uint32_t y = 0; y < f.q(); ++y) {
        expect_close(bwd::eval_additive(f, psi, f.add(Element{x}, Element{y})),
                     bwd::eval_additive(f, psi, Element{x}) * bwd::eval_additive(f, psi, Element{y}),
                     1e-10);
      }
    }
  }
}

TEST(MultiplicativeCharacter, SpecExamples) {
  const Field f5 = Field::build(5);
  const auto quad = bwd::quadratic_character(f5);
  EXPECT_EQ(quad.j, 2u);
  expect_close(bwd::eval_multiplicative(f5, quad, Element{4}), {1, 0});
  for (std::uint64_t j = 0; j < 8; ++j) {
    expect_close(bwd::eval_multiplicative(f5, MultiplicativeCharacter{j}, Element{1}), {1, 0});
    expect_close(bwd::eval_multiplicative(f5, MultiplicativeCharacter{j}, Element{0}), {0, 0});
  }
  for (std::uint32_t x = 1; x < 5; ++x) {
    expect_close(bwd::eval_multiplicative(f5, MultiplicativeCharacter{0}, Element{x}), {1, 0});
  }
  EXPECT_TRUE(MultiplicativeCharacter{4}.trivial(f5));
  EXPECT_FALSE(MultiplicativeCharacter{2}.trivial(f5));
}

TEST(MultiplicativeCharacter, QuadraticIsLegendre) {
  for (std::uint32_t p : {7u, 11u, 101u}) {
    const Field f = Field::build(p);
    const auto quad = bwd::quadratic_character(f);
    for (std::uint32_t x = 0; x < p; ++x) {
      expect_close(bwd::eval_multiplicative(f, quad, Element{x}),
                   {static_cast<double>(oracle::legendre(x, p)), 0}, 1e-9);
    }
  }
}

TEST(MultiplicativeCharacter, Multiplicative) {
  const Field f = Field::build(2, 4);
  for (std::uint64_t j = 0; j < f.q() - 1; ++j) {
    const MultiplicativeCharacter chi{j};
    for (std::uint32_t x = 1; x < f.q(); ++x) {
      EXPECT_NEAR(std::abs(bwd::eval_multiplicative(f, chi, Element{x})), 1.0, 1e-12);
      for (std::uint32_t y = 1; y < f.q(); ++y) {
        expect_close(bwd::eval_multiplicative(f, chi, f.mul(Element{x}, Element{y})),
                     bwd::eval_multiplicative(f, chi, Element{x}) *
                         bwd::eval_multiplicative(f, chi, Element{y}),
                     1e-10);
      }
    }
  }
}

TEST(Orthogonality, StockFields) {
  for (const auto& [p, n] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}, {7u, 1u}, {2u, 3u},
                             {3u, 2u}, {2u, 4u}, {5u, 2u}, {3u, 3u}, {7u, 2u}, {101u, 1u}, {11u, 2u}}) {
    const Field f = Field::build(p, n);
    EXPECT_LE(bwd::checks::max_additive_orthogonality_residual(f), 1e-9 * f.q());
    EXPECT_LE(bwd::checks::max_multiplicative_orthogonality_residual(f), 1e-9 * f.q());
  }
}

TEST(WeilSum, MatchesDirectSumAndBound) {
  const std::uint32_t p = 101;
  const Field f = Field::build(p);
  bwd::Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 2 + trial % 4;
    std::vector<Element> c(k + 1);
    std::vector<std::uint64_t> raw(k + 1);
    for (int i = 0; i <= k; ++i) {
      raw[i] = bwd::uniform_below(rng, p);
      c[i] = Element{static_cast<std::uint32_t>(raw[i])};
    }
    if (raw[k] == 0) raw[k] = 1, c[k] = Element{1};
    Complex direct{0, 0};
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t v = 0;
      for (int i = k; i >= 0; --i) v = (v * x + raw[i]) % p;
      direct += oracle::e_p(v, p);
    }
    const Complex got =
        bwd::checks::weil_sum(f, bwd::Polynomial(c), AdditiveCharacter{Element{1}});
    expect_close(got, direct, 1e-9);
    EXPECT_LE(std::abs(got), (k - 1) * std::sqrt(double(p)) + 1e-9 * p);
  }
}
