#pragma once

#include <cstdint>
#include <vector>

#include "bwd/field.hpp"
#include "bwd/subset.hpp"

namespace bwd {

// {start, ..., start + len - 1} mod p. Prime fields only, len <= p.
FSubset interval(const Field& field, std::int64_t start, std::uint32_t len);

// {base^1, ..., base^len}.
FSubset geometric_progression(const Field& field, Element base, std::uint32_t len);

// The multiplicative subgroup of order d; d must divide q - 1.
FSubset mult_subgroup(const Field& field, std::uint32_t d);

// GF(p)-span of the basis vectors.
FSubset add_subspace(const Field& field, const std::vector<Element>& basis);

// `size` distinct elements drawn uniformly without replacement: a partial
// Fisher-Yates shuffle of 0..q-1 driven by std::mt19937_64(seed) through
// uniform_below(). Same (q, size, seed) gives the same set everywhere.
FSubset random_subset(const Field& field, std::uint32_t size, std::uint64_t seed);

struct GaraevConstruction {
  FSubset set;
  // Start of the chosen covering interval J0 (smallest start among ties).
  std::uint32_t window_start = 0;
  std::uint32_t window_count = 0;
};

// A = J0 ∩ J^{-1} for J = {1..lambda}, where J0 is the covering interval of
// length <= lambda that holds the most inverses. Prime fields only, with
// 1 <= lambda < p; throws BadLambda otherwise.
GaraevConstruction garaev_construction(const Field& field, std::uint32_t lambda);
FSubset garaev_set(const Field& field, std::uint32_t lambda);

// {u^{-1} : u in U, u != 0}.
FSubset inverse_set(const Field& field, const FSubset& set);

}  // namespace bwd
