#include "bwd/energy.hpp"

#include <optional>

namespace bwd {

std::vector<std::pair<Element, std::uint64_t>> RepCounts::entries() const {
  std::vector<std::pair<Element, std::uint64_t>> out;
  for (std::uint32_t i = 0; i < counts.size(); ++i) {
    if (counts[i] != 0) out.emplace_back(Element{i}, counts[i]);
  }
  return out;
}

std::uint64_t RepCounts::sum_of_squares() const {
  std::uint64_t s = 0;
  for (const std::uint64_t c : counts) s += c * c;
  return s;
}

namespace {

template <typename Op>
RepCounts tally(const Field& field, const FSubset& u, const FSubset& v, Op op) {
  RepCounts r;
  r.counts.assign(field.q(), 0);
  for (const Element a : u) {
    for (const Element b : v) ++r.counts[op(a, b).index];
  }
  r.total = std::uint64_t{u.size()} * v.size();
  return r;
}

}  // namespace

RepCounts rep_sum(const Field& field, const FSubset& u, const FSubset& v) {
  return tally(field, u, v, [&](Element a, Element b) { return field.add(a, b); });
}

RepCounts rep_diff(const Field& field, const FSubset& u, const FSubset& v) {
  return tally(field, u, v, [&](Element a, Element b) { return field.sub(a, b); });
}

RepCounts rep_product(const Field& field, const FSubset& u, const FSubset& v) {
  return tally(field, u, v, [&](Element a, Element b) { return field.mul(a, b); });
}

RepCounts rep_f(const Field& field, const RationalFunction& f, const FSubset& u) {
  std::vector<Element> values;
  for (const Element x : u) {
    if (auto v = eval(field, f, x)) values.push_back(*v);
  }
  RepCounts r;
  r.counts.assign(field.q(), 0);
  for (const Element a : values) {
    for (const Element b : values) ++r.counts[field.add(a, b).index];
  }
  r.total = std::uint64_t{values.size()} * values.size();
  return r;
}

std::string to_string(EnergyKind kind) {
  switch (kind) {
    case EnergyKind::additive: return "additive";
    case EnergyKind::multiplicative: return "multiplicative";
    case EnergyKind::cross: return "cross";
    case EnergyKind::f_energy: return "f-energy";
  }
  return "unknown";
}

EnergyReport additive_energy(const Field& field, const FSubset& u, std::string operands) {
  return {rep_diff(field, u, u).sum_of_squares(), EnergyKind::additive, std::move(operands)};
}

EnergyReport cross_energy(const Field& field, const FSubset& b, const FSubset& c,
                          std::string operands) {
  // b1 + c1 = b2 + c2  <=>  b1 - b2 = c2 - c1.
  const RepCounts rb = rep_diff(field, b, b);
  const RepCounts rc = rep_diff(field, c, c);
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < rb.counts.size(); ++i) value += rb.counts[i] * rc.counts[i];
  return {value, EnergyKind::cross, std::move(operands)};
}

EnergyReport multiplicative_energy(const Field& field, const FSubset& u, std::string operands) {
  return {rep_product(field, u, u).sum_of_squares(), EnergyKind::multiplicative,
          std::move(operands)};
}

EnergyReport f_energy(const Field& field, const RationalFunction& f, const FSubset& u,
                      std::string operands) {
  return {rep_f(field, f, u).sum_of_squares(), EnergyKind::f_energy, std::move(operands)};
}

std::uint64_t energy(const Field& field, const FSubset& u) {
  return additive_energy(field, u).value;
}

}  // namespace bwd
