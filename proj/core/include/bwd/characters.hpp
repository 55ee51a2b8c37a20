#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "bwd/field.hpp"

namespace bwd {

using Complex = std::complex<double>;

// psi_a(x) = exp(2 pi i Tr(a x) / p). Trivial iff a == 0.
struct AdditiveCharacter {
  Element a{};

  bool trivial() const { return a.index == 0; }
};

// chi_j(g^k) = exp(2 pi i j k / (q - 1)) for the field's canonical generator
// g, and chi_j(0) = 0. The exponent j is read modulo q - 1.
struct MultiplicativeCharacter {
  std::uint64_t j = 0;

  bool trivial(const Field& field) const { return j % (field.q() - 1) == 0; }
};

Complex eval_additive(const Field& field, AdditiveCharacter psi, Element x);
Complex eval_multiplicative(const Field& field, MultiplicativeCharacter chi, Element x);

// Character values at every field element, indexed by Element::index.
std::vector<Complex> tabulate(const Field& field, AdditiveCharacter psi);
std::vector<Complex> tabulate(const Field& field, MultiplicativeCharacter chi);

// The quadratic character, j = (q - 1) / 2. Requires odd q.
MultiplicativeCharacter quadratic_character(const Field& field);

}  // namespace bwd
