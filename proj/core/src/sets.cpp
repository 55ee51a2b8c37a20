#include "bwd/sets.hpp"

#include <algorithm>
#include <numeric>

#include "bwd/error.hpp"
#include "bwd/rng.hpp"

namespace bwd {

FSubset interval(const Field& field, std::int64_t start, std::uint32_t len) {
  if (!field.is_prime_field()) throw BadArgument("intervals are defined over prime fields only");
  if (len > field.p()) throw BadArgument("interval longer than the field");
  std::vector<Element> elems;
  elems.reserve(len);
  const Element first = field.from_int(start);
  for (std::uint32_t i = 0; i < len; ++i) elems.push_back(field.add(first, field.from_int(i)));
  return FSubset(field.q(), std::move(elems));
}

FSubset geometric_progression(const Field& field, Element base, std::uint32_t len) {
  std::vector<Element> elems;
  Element cur = base;
  for (std::uint32_t i = 0; i < len; ++i) {
    elems.push_back(cur);
    cur = field.mul(cur, base);
  }
  return FSubset(field.q(), std::move(elems));
}

FSubset mult_subgroup(const Field& field, std::uint32_t d) {
  const std::uint32_t order = field.q() - 1;
  if (d == 0 || order % d != 0) {
    throw BadArgument("subgroup order " + std::to_string(d) + " does not divide q - 1 = " +
                      std::to_string(order));
  }
  std::vector<Element> elems;
  const std::uint32_t step = order / d;
  for (std::uint32_t k = 0; k < d; ++k) elems.push_back(field.exp(std::uint64_t{k} * step));
  return FSubset(field.q(), std::move(elems));
}

FSubset add_subspace(const Field& field, const std::vector<Element>& basis) {
  std::vector<Element> span{Field::zero()};
  for (const Element b : basis) {
    std::vector<Element> next;
    next.reserve(span.size() * field.p());
    for (std::uint32_t c = 0; c < field.p(); ++c) {
      const Element shift = field.scale(b, c);
      for (const Element s : span) next.push_back(field.add(s, shift));
    }
    span = FSubset(field.q(), std::move(next)).elements();
  }
  return FSubset(field.q(), std::move(span));
}

FSubset random_subset(const Field& field, std::uint32_t size, std::uint64_t seed) {
  if (size > field.q()) throw BadArgument("random subset larger than the field");
  std::vector<std::uint32_t> pool(field.q());
  std::iota(pool.begin(), pool.end(), 0u);
  Rng rng(seed);
  std::vector<Element> out;
  out.reserve(size);
  for (std::uint32_t i = 0; i < size; ++i) {
    const auto j = i + uniform_below(rng, field.q() - i);
    std::swap(pool[i], pool[j]);
    out.push_back(Element{pool[i]});
  }
  return FSubset(field.q(), std::move(out));
}

GaraevConstruction garaev_construction(const Field& field, std::uint32_t lambda) {
  const std::uint32_t p = field.p();
  if (!field.is_prime_field()) throw BadLambda("construction requires a prime field");
  if (lambda < 1 || lambda >= p) {
    throw BadLambda("lambda = " + std::to_string(lambda) + " outside [1, p)");
  }
  std::vector<char> is_inverse(p, 0);
  for (std::uint32_t j = 1; j <= lambda; ++j) is_inverse[field.inv(Element{j}).index] = 1;

  const std::uint32_t windows = (p + lambda - 1) / lambda;
  std::uint32_t best_start = 0;
  std::uint32_t best_count = 0;
  for (std::uint32_t w = 0; w < windows; ++w) {
    const std::uint32_t start = w * lambda;
    const std::uint32_t stop = std::min(start + lambda, p);
    std::uint32_t count = 0;
    for (std::uint32_t x = start; x < stop; ++x) count += is_inverse[x];
    if (count > best_count) {
      best_count = count;
      best_start = start;
    }
  }
  // Pigeonhole: lambda inverses spread over `windows` windows.
  if (best_count * windows < lambda) throw Error("internal: pigeonhole bound violated");

  std::vector<Element> elems;
  const std::uint32_t stop = std::min(best_start + lambda, p);
  for (std::uint32_t x = best_start; x < stop; ++x) {
    if (is_inverse[x]) elems.push_back(Element{x});
  }
  return {FSubset(field.q(), std::move(elems)), best_start, windows};
}

FSubset garaev_set(const Field& field, std::uint32_t lambda) {
  return garaev_construction(field, lambda).set;
}

FSubset inverse_set(const Field& field, const FSubset& set) {
  std::vector<Element> out;
  for (const Element x : set) {
    if (x.index != 0) out.push_back(field.inv(x));
  }
  return FSubset(field.q(), std::move(out));
}

}  // namespace bwd
