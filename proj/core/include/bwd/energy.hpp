#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bwd/field.hpp"
#include "bwd/ratfunc.hpp"
#include "bwd/subset.hpp"

namespace bwd {

// Representation function stored densely over GF(q).
struct RepCounts {
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;

  std::uint64_t operator[](Element x) const { return counts[x.index]; }
  // Nonzero entries in index order.
  std::vector<std::pair<Element, std::uint64_t>> entries() const;
  std::uint64_t sum_of_squares() const;
};

// r_{U,V}(x) = #{(u, v) : u + v = x}.
RepCounts rep_sum(const Field& field, const FSubset& u, const FSubset& v);
// r_{U,-V}(x) = #{(u, v) : u - v = x}.
RepCounts rep_diff(const Field& field, const FSubset& u, const FSubset& v);
// r_U(f; x) = #{(u, v) in U^2 : f(u) + f(v) = x}, pairs with a pole skipped.
RepCounts rep_f(const Field& field, const RationalFunction& f, const FSubset& u);
// #{(u, v) : u v = x}.
RepCounts rep_product(const Field& field, const FSubset& u, const FSubset& v);

enum class EnergyKind { additive, multiplicative, cross, f_energy };

struct EnergyReport {
  std::uint64_t value = 0;
  EnergyKind kind = EnergyKind::additive;
  std::string operands;
};

std::string to_string(EnergyKind kind);

// E(U): quadruples with u1 + u2 = u3 + u4.
EnergyReport additive_energy(const Field& field, const FSubset& u, std::string operands = "U");
// E(B, C): quadruples with b1 + c1 = b2 + c2.
EnergyReport cross_energy(const Field& field, const FSubset& b, const FSubset& c,
                          std::string operands = "B,C");
// E^x(U): quadruples with u1 u2 = u3 u4, zeros counted literally.
EnergyReport multiplicative_energy(const Field& field, const FSubset& u,
                                   std::string operands = "U");
// Sum over x of r_U(f; x)^2, which dominates E(f(U)).
EnergyReport f_energy(const Field& field, const RationalFunction& f, const FSubset& u,
                      std::string operands = "U");

// Shorthand for additive_energy(...).value.
std::uint64_t energy(const Field& field, const FSubset& u);

}  // namespace bwd
