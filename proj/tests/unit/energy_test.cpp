#include <gtest/gtest.h>

#include "bwd/checks.hpp"
#include "bwd/energy.hpp"
#include "bwd/polynomial.hpp"
#include "bwd/ratfunc.hpp"
#include "bwd/rng.hpp"
#include "bwd/sets.hpp"
#include "convert.hpp"
#include "oracles.hpp"

using bwd::Element;
using bwd::Field;
using bwd::FSubset;
using testing_support::indices;

namespace {

using Entries = std::vector<std::pair<Element, std::uint64_t>>;

FSubset random_set(const Field& f, bwd::Rng& rng, std::uint32_t max_size) {
  return bwd::random_subset(f, static_cast<std::uint32_t>(bwd::uniform_below(rng, max_size + 1)),
                            rng());
}

}  // namespace

TEST(RepCounts, SumExamples) {
  const Field f = Field::build(5);
  EXPECT_EQ(bwd::rep_sum(f, FSubset::of(f, {0}), FSubset::of(f, {0})).entries(),
            (Entries{{Element{0}, 1}}));
  const auto r = bwd::rep_sum(f, FSubset::of(f, {1, 2}), FSubset::of(f, {3}));
  EXPECT_EQ(r.entries(), (Entries{{Element{0}, 1}, {Element{4}, 1}}));
  EXPECT_EQ(r.total, 2u);
  const auto whole = bwd::rep_sum(f, FSubset::whole(f), FSubset::whole(f));
  for (std::uint32_t x = 0; x < 5; ++x) EXPECT_EQ(whole[Element{x}], 5u);
}

TEST(RepCounts, DiffExamples) {
  const Field f = Field::build(7);
  const auto u = FSubset::of(f, {1, 3, 4});
  EXPECT_EQ(bwd::rep_diff(f, u, u)[Element{0}], 3u);
  EXPECT_EQ(bwd::rep_diff(f, FSubset::of(f, {5}), FSubset::of(f, {2})).entries(),
            (Entries{{Element{3}, 1}}));
  const auto whole = bwd::rep_diff(f, FSubset::whole(f), FSubset::whole(f));
  for (std::uint32_t x = 0; x < 7; ++x) EXPECT_EQ(whole[Element{x}], 7u);
}

TEST(RepCounts, FunctionExamples) {
  const Field f = Field::build(7);
  EXPECT_EQ(bwd::rep_f(f, bwd::RationalFunction::identity(f), FSubset::of(f, {1})).entries(),
            (Entries{{Element{2}, 1}}));
  const auto poles = bwd::rep_f(f, bwd::RationalFunction::inversion(f), FSubset::of(f, {0}));
  EXPECT_TRUE(poles.entries().empty());
  EXPECT_EQ(poles.total, 0u);
  const auto sq = bwd::RationalFunction::polynomial(
      f, bwd::Polynomial({Element{0}, Element{0}, Element{1}}));
  EXPECT_EQ(bwd::rep_f(f, sq, FSubset::of(f, {1, 6})).entries(), (Entries{{Element{2}, 4}}));
}

TEST(RepCounts, ProductAgainstDefinition) {
  const Field f = Field::build(13);
  const auto u = FSubset::of(f, {0, 2, 5, 7});
  const auto v = FSubset::of(f, {1, 3, 12});
  const auto r = bwd::rep_product(f, u, v);
  for (std::uint64_t x = 0; x < 13; ++x) {
    std::uint64_t count = 0;
    for (auto a : indices(u))
      for (auto b : indices(v)) count += a * b % 13 == x;
    EXPECT_EQ(r[Element{static_cast<std::uint32_t>(x)}], count);
  }
}

TEST(Energy, SpecExamples) {
  const Field f5 = Field::build(5);
  EXPECT_EQ(bwd::energy(f5, FSubset::whole(f5)), 125u);
  const Field f17 = Field::build(17);
  EXPECT_EQ(bwd::energy(f17, bwd::interval(f17, 0, 4)), 44u);
  EXPECT_EQ(bwd::energy(f17, FSubset::of(f17, {9})), 1u);

  // E(B, C) with B = C is E(B); B = {0} forces b1 = b2 and then c1 = c2.
  const auto c = FSubset::of(f17, {1, 2, 5, 11});
  EXPECT_EQ(bwd::cross_energy(f17, c, c).value, bwd::energy(f17, c));
  EXPECT_EQ(bwd::cross_energy(f17, FSubset::of(f17, {0}), c).value, c.size());
  EXPECT_EQ(bwd::cross_energy(f5, FSubset::whole(f5), FSubset::whole(f5)).value, 125u);

  EXPECT_EQ(bwd::multiplicative_energy(f17, FSubset::of(f17, {1})).value, 1u);
  for (std::uint32_t d : {1u, 2u, 4u, 8u, 16u}) {
    EXPECT_EQ(bwd::multiplicative_energy(f17, bwd::mult_subgroup(f17, d)).value,
              std::uint64_t{d} * d * d);
  }
}

// The literal count for {0, 1}: products 0 arise from three ordered pairs and
// 1 from one, so 3^2 + 1^2 = 10 quadruples.
TEST(Energy, MultiplicativeWithZero) {
  const Field f = Field::build(7);
  const auto u = FSubset::of(f, {0, 1});
  EXPECT_EQ(oracle::multiplicative_energy(indices(u), 7), 10u);
  EXPECT_EQ(bwd::multiplicative_energy(f, u).value, 10u);
}

TEST(Energy, ArithmeticProgressionClosedForm) {
  const Field f = Field::build(1009);
  for (std::uint64_t n = 1; n <= 20; ++n) {
    EXPECT_EQ(bwd::energy(f, bwd::interval(f, 0, static_cast<std::uint32_t>(n))),
              (2 * n * n * n + n) / 3);
  }
}

TEST(Energy, MatchesEnumerationOracle) {
  bwd::Rng rng(2024);
  for (std::uint32_t p : {101u, 257u, 1009u}) {
    const Field f = Field::build(p);
    for (int t = 0; t < 15; ++t) {
      const auto u = random_set(f, rng, 40);
      const auto e = bwd::energy(f, u);
      EXPECT_EQ(e, oracle::additive_energy(indices(u), p));
      EXPECT_EQ(e, bwd::checks::energy_by_enumeration(f, u));
      if (!u.empty()) {
        EXPECT_GE(e, u.size() * u.size());
        EXPECT_LE(e, u.size() * u.size() * u.size());
      }
      const auto v = random_set(f, rng, 25);
      EXPECT_EQ(bwd::cross_energy(f, u, v).value, oracle::cross_energy(indices(u), indices(v), p));
      EXPECT_EQ(bwd::multiplicative_energy(f, v).value,
                oracle::multiplicative_energy(indices(v), p));
    }
  }
}

TEST(Energy, Identities) {
  bwd::Rng rng(99);
  const Field f = Field::build(3, 4);
  for (int t = 0; t < 30; ++t) {
    const auto u = random_set(f, rng, 40);
    const auto v = random_set(f, rng, 40);
    const auto e = bwd::energy(f, u);
    EXPECT_EQ(bwd::rep_diff(f, u, u).sum_of_squares(), bwd::rep_sum(f, u, u).sum_of_squares());
    EXPECT_EQ(e, bwd::checks::energy_by_enumeration(f, u));
    if (!u.empty()) {
      const double size = static_cast<double>(u.size());
      EXPECT_GE(static_cast<double>(e) * bwd::sumset(f, u, u).size(), size * size * size * size);
    }
    const double cross = static_cast<double>(bwd::cross_energy(f, u, v).value);
    EXPECT_LE(cross * cross,
              static_cast<double>(e) * static_cast<double>(bwd::energy(f, v)) * (1 + 1e-12));
    EXPECT_EQ(bwd::rep_sum(f, u, v).total, u.size() * v.size());
  }
}

TEST(Energy, FunctionEnergyDominatesImageEnergy) {
  const Field f = Field::build(257);
  bwd::Rng rng(5);
  const auto inv = bwd::RationalFunction::inversion(f);
  for (int t = 0; t < 10; ++t) {
    const auto u = random_set(f, rng, 60);
    const auto image = bwd::apply_to_set(f, inv, u).image;
    EXPECT_EQ(bwd::f_energy(f, inv, u).value, bwd::energy(f, image));  // injective
  }
}

TEST(Energy, Report) {
  const Field f = Field::build(7);
  const auto r = bwd::additive_energy(f, FSubset::of(f, {1, 2}), "A");
  EXPECT_EQ(r.kind, bwd::EnergyKind::additive);
  EXPECT_EQ(r.operands, "A");
  EXPECT_EQ(r.value, 6u);
  EXPECT_EQ(bwd::to_string(bwd::EnergyKind::multiplicative), "multiplicative");
}
