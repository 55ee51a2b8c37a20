#include "bwd/characters.hpp"

#include <numbers>

#include "bwd/error.hpp"

namespace bwd {

namespace {

Complex unit_root(std::uint64_t numerator, std::uint64_t denominator) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(numerator) /
                       static_cast<double>(denominator);
  return std::polar(1.0, angle);
}

}  // namespace

Complex eval_additive(const Field& field, AdditiveCharacter psi, Element x) {
  return unit_root(field.trace(field.mul(psi.a, x)), field.p());
}

Complex eval_multiplicative(const Field& field, MultiplicativeCharacter chi, Element x) {
  if (x.index == 0) return {0.0, 0.0};
  const std::uint64_t order = field.q() - 1;
  const std::uint64_t k = (chi.j % order) * field.dlog(x) % order;
  return unit_root(k, order);
}

std::vector<Complex> tabulate(const Field& field, AdditiveCharacter psi) {
  std::vector<Complex> roots(field.p());
  for (std::uint32_t k = 0; k < field.p(); ++k) roots[k] = unit_root(k, field.p());
  std::vector<Complex> out(field.q());
  for (std::uint32_t x = 0; x < field.q(); ++x) {
    out[x] = roots[field.trace(field.mul(psi.a, Element{x}))];
  }
  return out;
}

std::vector<Complex> tabulate(const Field& field, MultiplicativeCharacter chi) {
  std::vector<Complex> out(field.q(), Complex{0.0, 0.0});
  for (std::uint32_t x = 1; x < field.q(); ++x) {
    out[x] = eval_multiplicative(field, chi, Element{x});
  }
  return out;
}

MultiplicativeCharacter quadratic_character(const Field& field) {
  if (field.p() == 2) throw BadArgument("no quadratic character in characteristic 2");
  return MultiplicativeCharacter{(field.q() - 1) / 2};
}

}  // namespace bwd
