#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bwd/characters.hpp"
#include "bwd/field.hpp"
#include "bwd/subset.hpp"

namespace bwd {

// Complex weights supported on a set, sorted by element.
struct WeightVector {
  std::vector<std::pair<Element, Complex>> entries;

  static WeightVector constant(const FSubset& support, Complex value = {1.0, 0.0});
  Complex at(Element x) const;
};

// ||w||_sigma for sigma > 0; pass infinity for the max norm.
double weight_norm(const WeightVector& w, double sigma);

struct BoundValue {
  std::string name;
  double value = 0;
  double ratio = 0;  // |sum| / value
};

struct SumResult {
  Complex value;
  double magnitude = 0;
  std::uint64_t terms = 0;
  std::vector<BoundValue> bounds;

  const BoundValue* bound(const std::string& name) const;
};

enum class SumMethod { kLiteral, kConvolution };

// S_psi(A, B, C) = sum psi(ab + ac + bc). The convolution path evaluates
// sum_{a,b} psi(ab) G(a + b) with G(y) = sum_c psi(cy), in O(AB + |A+B| C).
SumResult sum_S(const Field& field, const FSubset& a, const FSubset& b, const FSubset& c,
                AdditiveCharacter psi, SumMethod method = SumMethod::kConvolution);

// T_chi(A, B, C) = sum chi(ab + ac + bc), chi(0) = 0.
SumResult sum_T(const Field& field, const FSubset& a, const FSubset& b, const FSubset& c,
                MultiplicativeCharacter chi);

// sum chi(ab + ac + bc) psi(ab + ac + bc).
SumResult sum_mixed(const Field& field, const FSubset& a, const FSubset& b, const FSubset& c,
                    MultiplicativeCharacter chi, AdditiveCharacter psi);

// K = sum_{a,b} alpha_a beta_b |sum_c gamma_c psi(ac + b/c)|^2.
// Throws EmptyC when C is empty and BadArgument when 0 is in C.
SumResult kloosterman_K(const Field& field, const FSubset& a, const FSubset& b, const FSubset& c,
                        const WeightVector& alpha, const WeightVector& beta,
                        const WeightVector& gamma, AdditiveCharacter psi);

// {ab + ac + bc}.
FSubset convolution_set(const Field& field, const FSubset& a, const FSubset& b, const FSubset& c);

// Inputs to the right-hand sides; absent quantities drop the bounds that
// need them. Implied constants are taken as 1.
struct BoundInputs {
  double a = 0, b = 0, c = 0, q = 0;
  std::optional<double> energy_b, energy_c;          // E(B), E(C)
  std::optional<double> energy_b_inv, energy_c_inv;  // E(B^{-1}), E(C^{-1})
  std::optional<double> alpha_l1, alpha_l2, beta_l1, beta_l2, gamma_inf;
};

// Sizes and the four energies of the given sets (zero dropped for inverses).
BoundInputs bound_inputs(const Field& field, const FSubset& a, const FSubset& b,
                         const FSubset& c);

// Named right-hand sides: bilin1, bilin2 = A sqrt(BCq); lemma41, lemma42;
// thm12, thm13 (via M); thm14; thm15 (needs the weight norms).
std::map<std::string, double> bound_evaluators(const BoundInputs& in);

struct DegeneracyReport {
  // Largest #{(b1, c1) : b1 + c1 = b2 + c2, 1/b1 + 1/c1 = 1/b2 + 1/c2} over
  // all (b2, c2) in B x C.
  std::uint64_t max_count = 0;
  Element worst_b{}, worst_c{};
  // The same maximum restricted to b2 + c2 != 0 and to b2 + c2 == 0.
  std::uint64_t max_count_nonzero_sum = 0;
  std::uint64_t max_count_zero_sum = 0;
};

// Requires B, C in GF(q)^*; throws BadArgument otherwise.
DegeneracyReport degeneracy_pairs(const Field& field, const FSubset& b, const FSubset& c);

}  // namespace bwd
