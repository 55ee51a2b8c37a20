#include "bwd/checks.hpp"

#include <algorithm>
#include <vector>

namespace bwd::checks {

AxiomReport field_axioms(const Field& field) {
  AxiomReport r;
  auto check = [&r](bool ok) {
    ++r.checks;
    if (!ok) ++r.violations;
  };
  const std::uint32_t q = field.q();
  const Element zero = Field::zero();
  const Element one = Field::one();

  for (std::uint32_t i = 0; i < q; ++i) {
    const Element a{i};
    check(field.add(a, zero) == a);
    check(field.mul(a, one) == a);
    check(field.add(a, field.neg(a)) == zero);
    if (i != 0) check(field.mul(a, field.inv(a)) == one);
    for (std::uint32_t j = 0; j < q; ++j) {
      const Element b{j};
      check(field.add(a, b) == field.add(b, a));
      check(field.mul(a, b) == field.mul(b, a));
      check(field.mul(a, b) == field.mul_poly(a, b));
      check(field.trace(field.add(a, b)) == (field.trace(a) + field.trace(b)) % field.p());
      for (std::uint32_t k = 0; k < q; ++k) {
        const Element c{k};
        check(field.add(field.add(a, b), c) == field.add(a, field.add(b, c)));
        check(field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c)));
        check(field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c)));
      }
    }
  }

  // Generator has order exactly q - 1.
  Element power = one;
  for (std::uint32_t k = 1; k < q - 1; ++k) {
    power = field.mul_poly(power, field.generator());
    check(power != one);
  }
  check(field.mul_poly(power, field.generator()) == one);

  // Every residue is a trace value exactly q / p times.
  std::vector<std::uint32_t> hits(field.p(), 0);
  for (std::uint32_t i = 0; i < q; ++i) ++hits[field.trace(Element{i})];
  for (const std::uint32_t h : hits) check(h == q / field.p());

  // Frobenius x -> x^p is additive, multiplicative, bijective, and fixes
  // exactly the prime subfield.
  std::vector<char> seen(q, 0);
  std::uint32_t fixed = 0;
  for (std::uint32_t i = 0; i < q; ++i) {
    const Element a{i};
    const Element fa = field.pow(a, field.p());
    seen[fa.index] = 1;
    if (fa == a) {
      ++fixed;
      check(i < field.p());
    }
    const Element b{(i * 7 + 3) % q};
    check(field.pow(field.add(a, b), field.p()) == field.add(fa, field.pow(b, field.p())));
    check(field.pow(field.mul(a, b), field.p()) == field.mul(fa, field.pow(b, field.p())));
  }
  check(fixed == field.p());
  check(std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; }));
  return r;
}

double max_additive_orthogonality_residual(const Field& field) {
  double worst = 0;
  for (std::uint32_t a = 1; a < field.q(); ++a) {
    Complex s{0.0, 0.0};
    for (std::uint32_t x = 0; x < field.q(); ++x) {
      s += eval_additive(field, AdditiveCharacter{Element{a}}, Element{x});
    }
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

double max_multiplicative_orthogonality_residual(const Field& field) {
  double worst = 0;
  for (std::uint64_t j = 1; j < field.q() - 1; ++j) {
    Complex s{0.0, 0.0};
    for (std::uint32_t x = 1; x < field.q(); ++x) {
      s += eval_multiplicative(field, MultiplicativeCharacter{j}, Element{x});
    }
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

Complex weil_sum(const Field& field, const Polynomial& f, AdditiveCharacter psi) {
  Complex s{0.0, 0.0};
  for (std::uint32_t x = 0; x < field.q(); ++x) {
    s += eval_additive(field, psi, poly_eval(field, f, Element{x}));
  }
  return s;
}

std::uint64_t max_fiber(const Field& field, const RationalFunction& f) {
  std::vector<std::uint64_t> fiber(field.q(), 0);
  for (std::uint32_t x = 0; x < field.q(); ++x) {
    if (auto v = eval(field, f, Element{x})) ++fiber[v->index];
  }
  return *std::max_element(fiber.begin(), fiber.end());
}

std::uint64_t energy_by_enumeration(const Field& field, const FSubset& u) {
  std::uint64_t count = 0;
  for (const Element a : u) {
    for (const Element b : u) {
      const Element s = field.add(a, b);
      for (const Element c : u) {
        for (const Element d : u) count += field.add(c, d) == s;
      }
    }
  }
  return count;
}

}  // namespace bwd::checks
