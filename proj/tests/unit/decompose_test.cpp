#include <gtest/gtest.h>

#include <cmath>

#include "bwd/decompose.hpp"
#include "bwd/energy.hpp"
#include "bwd/error.hpp"
#include "bwd/polynomial.hpp"
#include "bwd/rng.hpp"
#include "bwd/sets.hpp"
#include "convert.hpp"
#include "oracles.hpp"

using bwd::Element;
using bwd::Field;
using bwd::FSubset;
using bwd::RationalFunction;
using testing_support::indices;

namespace {

long double direct_m(long double z, long double q) {
  const long double l = std::max(std::log(z), 1.0L);
  const long double first = std::sqrt(q) / (std::sqrt(z) * std::pow(l, 2.75L));
  const long double second = std::pow(z, 0.8L) / (std::pow(q, 0.4L) * std::pow(l, 3.1L));
  return std::min(first, second);
}

bool power_of_two(std::uint64_t v) { return v && (v & (v - 1)) == 0; }

// Certificate recomputed from the definition over GF(p).
void expect_certificate(const Field& f, const FSubset& a, const bwd::ExtractionTrace& t) {
  const auto r = oracle::rep_diff(indices(t.popular), indices(a), f.p());
  for (const auto x : t.extracted) {
    const auto it = r.find(x.index);
    const std::uint64_t count = it == r.end() ? 0 : it->second;
    EXPECT_GE(count, t.certified_u) << "x=" << x.index;
  }
}

bwd::Polynomial linearized_example(const Field& f) { return bwd::linearized(f, {Element{4}, Element{1}}); }

}  // namespace

TEST(MOfZ, Examples) {
  const double e = std::exp(1.0);
  EXPECT_NEAR(bwd::m_of_z(e, e * e), 1.0, 1e-12);
  EXPECT_THROW(bwd::m_of_z(1.0, 7), bwd::BadArgument);
  EXPECT_THROW(bwd::m_of_z(0.5, 7), bwd::BadArgument);
  EXPECT_THROW(bwd::m_of_z(5, 1), bwd::BadArgument);
  for (double q : {101.0, 1009.0, 65537.0, 1048576.0}) {
    for (double z : {2.0, 10.0, std::sqrt(q), q / 3, q}) {
      const long double want = direct_m(z, q);
      EXPECT_NEAR(bwd::m_of_z(z, q), static_cast<double>(want), 1e-12 * static_cast<double>(want));
    }
  }
  EXPECT_DOUBLE_EQ(bwd::clamped_log(2.0), 1.0);
  EXPECT_DOUBLE_EQ(bwd::clamped_log(100.0), std::log(100.0));
}

// At table-sized q the threshold quantity stays below one.
TEST(MOfZ, AtMostOneAtDeskScale) {
  for (double q : {257.0, 1009.0, 4099.0, 65537.0, 1048576.0}) {
    for (double z = 2; z <= q; z *= 1.5) EXPECT_LE(bwd::m_of_z(z, q), 1.0) << z << " " << q;
  }
}

TEST(Extraction, IntervalCertificate) {
  const Field f = Field::build(1009);
  const auto a = bwd::interval(f, 0, 64);
  const auto t = bwd::extract_subset(f, a, RationalFunction::inversion(f));
  EXPECT_TRUE(power_of_two(t.rho));
  EXPECT_LE(t.rho, a.size());
  EXPECT_FALSE(t.extracted.empty());
  EXPECT_TRUE(bwd::set_difference(t.extracted, a).empty());
  EXPECT_TRUE(bwd::richness_certificate_holds(f, a, t));
  expect_certificate(f, a, t);
}

TEST(Extraction, RandomCertificates) {
  bwd::Rng rng(31);
  for (std::uint32_t p : {257u, 1009u, 4099u}) {
    const Field f = Field::build(p);
    const auto lo = static_cast<std::uint32_t>(std::ceil(std::pow(double(p), 0.55)));
    for (int t = 0; t < 5; ++t) {
      const auto size = static_cast<std::uint32_t>(bwd::uniform_between(rng, 2, 2 * lo));
      const auto a = bwd::random_subset(f, size, rng());
      const auto trace = bwd::extract_subset(f, a, RationalFunction::inversion(f));
      EXPECT_TRUE(power_of_two(trace.rho));
      // P counted from the definition.
      std::uint64_t points = 0;
      for (const auto x : a)
        for (const auto y : a) points += trace.popular.contains(f.add(x, y));
      EXPECT_EQ(points, trace.point_count);
      expect_certificate(f, a, trace);
    }
  }
}

TEST(Extraction, Errors) {
  const Field f = Field::build(101);
  EXPECT_THROW(bwd::extract_subset(f, FSubset::of(f, {3}), RationalFunction::inversion(f)),
               bwd::SetTooSmall);
  const Field f9 = Field::build(3, 2);
  const auto lin = RationalFunction::polynomial(f9, linearized_example(f9));
  EXPECT_THROW(bwd::extract_subset(f9, FSubset::whole(f9), lin), bwd::ExceptionalFunction);
  EXPECT_THROW(bwd::partition(f9, FSubset::whole(f9), lin), bwd::ExceptionalFunction);
}

TEST(Partition, LiteralThresholdIsTrivial) {
  const Field f = Field::build(4099);
  const auto a = bwd::set_union(bwd::interval(f, 1, 32),
                                bwd::geometric_progression(f, Element{3}, 32));
  const auto r = bwd::partition(f, a, RationalFunction::inversion(f));
  EXPECT_TRUE(r.trivial);
  EXPECT_EQ(r.low_energy, a);
  EXPECT_TRUE(r.structured.empty());
  EXPECT_TRUE(r.iterations.empty());
  EXPECT_EQ(r.low_energy_value, bwd::energy(f, a));
  EXPECT_LE(r.m_value, 1.0);
  EXPECT_TRUE(std::isfinite(r.low_energy_constant(a.size())));
}

TEST(Partition, OverrideApGp) {
  const Field f = Field::build(4099);
  const auto a = bwd::set_union(bwd::interval(f, 1, 32),
                                bwd::geometric_progression(f, Element{3}, 32));
  bwd::PartitionOptions opts;
  opts.threshold = 0.25 * static_cast<double>(bwd::energy(f, a));
  const auto inv = RationalFunction::inversion(f);
  const auto r = bwd::partition(f, a, inv, opts);
  EXPECT_FALSE(r.trivial);
  EXPECT_TRUE(bwd::disjoint(r.low_energy, r.structured));
  EXPECT_EQ(bwd::set_union(r.low_energy, r.structured), a);
  EXPECT_LE(r.iterations.size(), a.size());
  EXPECT_LE(static_cast<double>(r.low_energy_value), *opts.threshold);
  EXPECT_EQ(r.low_energy_value, bwd::energy(f, r.low_energy));
  EXPECT_EQ(r.image_energy, bwd::energy(f, bwd::apply_to_set(f, inv, r.structured).image));
  EXPECT_LE(static_cast<double>(r.image_energy), r.aggregate_bound * (1 + 1e-12));
  EXPECT_TRUE(std::isfinite(r.low_energy_constant(a.size())));
  EXPECT_TRUE(std::isfinite(r.image_energy_constant(a.size())));

  // Pieces are disjoint and tile T.
  FSubset tiled = FSubset::empty(f.q());
  for (const auto& piece : r.pieces) {
    EXPECT_TRUE(bwd::disjoint(tiled, piece));
    tiled = bwd::set_union(tiled, piece);
  }
  EXPECT_EQ(tiled, r.structured);
}

TEST(Partition, WholeFieldTerminates) {
  const Field f = Field::build(101);
  const auto a = FSubset::whole(f);
  bwd::PartitionOptions opts;
  opts.threshold = 0;
  const auto r = bwd::partition(f, a, RationalFunction::inversion(f), opts);
  EXPECT_LE(r.iterations.size(), a.size());
  EXPECT_EQ(bwd::set_union(r.low_energy, r.structured), a);
  EXPECT_TRUE(r.low_energy.empty());
}

TEST(Partition, ImmediateExitAndSmallSets) {
  const Field f = Field::build(101);
  const auto a = bwd::random_subset(f, 20, 3);
  bwd::PartitionOptions opts;
  opts.threshold = static_cast<double>(bwd::energy(f, a));
  const auto r = bwd::partition(f, a, RationalFunction::inversion(f), opts);
  EXPECT_EQ(r.low_energy, a);
  EXPECT_TRUE(r.iterations.empty());

  const auto tiny = bwd::partition(f, FSubset::of(f, {5}), RationalFunction::inversion(f));
  EXPECT_TRUE(tiny.trivial);
  EXPECT_TRUE(std::isnan(tiny.m_value));

  opts.threshold = -1;
  EXPECT_THROW(bwd::partition(f, a, RationalFunction::inversion(f), opts), bwd::BadArgument);
}

TEST(Partition, RandomRunsValidWithCertificates) {
  bwd::Rng rng(8);
  for (std::uint32_t p : {257u, 1009u}) {
    const Field f = Field::build(p);
    const auto inv = RationalFunction::inversion(f);
    for (int t = 0; t < 6; ++t) {
      const auto a = bwd::random_subset(f, static_cast<std::uint32_t>(bwd::uniform_between(rng, 2, 90)), rng());
      bwd::PartitionOptions opts;
      opts.threshold = 0.05 * static_cast<double>(bwd::energy(f, a));
      const auto r = bwd::partition(f, a, inv, opts);
      EXPECT_EQ(bwd::set_union(r.low_energy, r.structured), a);
      EXPECT_TRUE(bwd::disjoint(r.low_energy, r.structured));
      EXPECT_LE(static_cast<double>(r.low_energy_value), *opts.threshold);
      FSubset remaining = a;
      for (std::size_t i = 0; i < r.iterations.size(); ++i) {
        const auto& it = r.iterations[i];
        EXPECT_EQ(it.remaining_size, remaining.size());
        EXPECT_EQ(it.remaining_energy, bwd::energy(f, remaining));
        if (it.trace) expect_certificate(f, remaining, *it.trace);
        remaining = bwd::set_difference(remaining, r.pieces[i]);
      }
      EXPECT_EQ(remaining, r.low_energy);
    }
  }
}
