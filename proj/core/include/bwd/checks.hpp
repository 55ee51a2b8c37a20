#pragma once

#include <cstdint>

#include "bwd/characters.hpp"
#include "bwd/field.hpp"
#include "bwd/polynomial.hpp"
#include "bwd/ratfunc.hpp"
#include "bwd/subset.hpp"

// Exhaustive and brute-force reference checks shared by the verification
// suites. They deliberately avoid the fast paths they are compared against.
namespace bwd::checks {

struct AxiomReport {
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
};

// Ring axioms over all pairs and triples, inverses, table/polynomial
// multiplication agreement, generator order, trace linearity and balance,
// and the Frobenius automorphism. O(q^3).
AxiomReport field_axioms(const Field& field);

// max |sum_x psi_a(x)| over a != 0, and max |sum_{x != 0} chi_j(x)| over j != 0.
double max_additive_orthogonality_residual(const Field& field);
double max_multiplicative_orthogonality_residual(const Field& field);

// sum_x psi(f(x)) over the whole field.
Complex weil_sum(const Field& field, const Polynomial& f, AdditiveCharacter psi);

// max_c #{x : f(x) = c}.
std::uint64_t max_fiber(const Field& field, const RationalFunction& f);

// E(U) by enumerating all |U|^4 quadruples.
std::uint64_t energy_by_enumeration(const Field& field, const FSubset& u);

}  // namespace bwd::checks
