#include "bwd/charsums.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bwd/decompose.hpp"
#include "bwd/energy.hpp"
#include "bwd/error.hpp"
#include "bwd/sets.hpp"

namespace bwd {

namespace {

Element convolution(const Field& field, Element a, Element b, Element c) {
  return field.add(field.mul(a, b), field.mul(c, field.add(a, b)));
}

// Literal triple loop over a tabulated character, in sorted set order.
Complex triple_sum(const Field& field, const FSubset& a, const FSubset& b, const FSubset& c,
                   const std::vector<Complex>& table) {
  Complex total{0.0, 0.0};
  for (const Element x : a) {
    Complex outer{0.0, 0.0};
    for (const Element y : b) {
      for (const Element z : c) outer += table[convolution(field, x, y, z).index];
    }
    total += outer;
  }
  return total;
}

SumResult make_result(Complex value, std::uint64_t terms) {
  SumResult r;
  r.value = value;
  r.magnitude = std::abs(value);
  r.terms = terms;
  return r;
}

void attach(SumResult& r, const std::map<std::string, double>& table,
            std::initializer_list<const char*> names) {
  for (const char* name : names) {
    const auto it = table.find(name);
    if (it == table.end()) continue;
    r.bounds.push_back({name, it->second, r.magnitude / it->second});
  }
}

std::uint64_t triple_count(const FSubset& a, const FSubset& b, const FSubset& c) {
  return std::uint64_t{a.size()} * b.size() * c.size();
}

std::optional<double> m_or_none(double z, double q) {
  if (z <= 1.0 || q < 2.0) return std::nullopt;
  return m_of_z(z, q);
}

}  // namespace

WeightVector WeightVector::constant(const FSubset& support, Complex value) {
  WeightVector w;
  for (const Element x : support) w.entries.emplace_back(x, value);
  return w;
}

Complex WeightVector::at(Element x) const {
  const auto it = std::lower_bound(entries.begin(), entries.end(), x,
                                   [](const auto& e, Element key) { return e.first < key; });
  if (it == entries.end() || it->first != x) return {0.0, 0.0};
  return it->second;
}

double weight_norm(const WeightVector& w, double sigma) {
  if (std::isinf(sigma)) {
    double m = 0;
    for (const auto& [x, v] : w.entries) m = std::max(m, std::abs(v));
    return m;
  }
  if (!(sigma > 0)) throw BadArgument("norm exponent must be positive");
  double s = 0;
  for (const auto& [x, v] : w.entries) s += std::pow(std::abs(v), sigma);
  return std::pow(s, 1.0 / sigma);
}

const BoundValue* SumResult::bound(const std::string& name) const {
  for (const auto& b : bounds) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

SumResult sum_S(const Field& field, const FSubset& a, const FSubset& b, const FSubset& c,
                AdditiveCharacter psi, SumMethod method) {
  const auto table = tabulate(field, psi);
  Complex value{0.0, 0.0};
  if (method == SumMethod::kLiteral) {
    value = triple_sum(field, a, b, c, table);
  } else {
    // ab + ac + bc = ab + c (a + b).
    std::vector<Complex> inner(field.q());
    std::vector<char> ready(field.q(), 0);
    for (const Element x : a) {
      Complex outer{0.0, 0.0};
      for (const Element y : b) {
        const Element s = field.add(x, y);
        if (!ready[s.index]) {
          Complex g{0.0, 0.0};
          for (const Element z : c) g += table[field.mul(z, s).index];
          inner[s.index] = g;
          ready[s.index] = 1;
        }
        outer += table[field.mul(x, y).index] * inner[s.index];
      }
      value += outer;
    }
  }
  SumResult r = make_result(value, triple_count(a, b, c));
  if (!psi.trivial()) {
    BoundInputs in;
    in.a = a.size();
    in.b = b.size();
    in.c = c.size();
    in.q = field.q();
    in.energy_b = static_cast<double>(energy(field, b));
    in.energy_c = static_cast<double>(energy(field, c));
    attach(r, bound_evaluators(in), {"bilin1", "lemma41"});
  }
  return r;
}

SumResult sum_T(const Field& field, const FSubset& a, const FSubset& b, const FSubset& c,
                MultiplicativeCharacter chi) {
  const auto table = tabulate(field, chi);
  SumResult r = make_result(triple_sum(field, a, b, c, table), triple_count(a, b, c));
  if (!chi.trivial(field)) {
    BoundInputs in;
    in.a = a.size();
    in.b = b.size();
    in.c = c.size();
    in.q = field.q();
    in.energy_b_inv = static_cast<double>(energy(field, inverse_set(field, b)));
    in.energy_c_inv = static_cast<double>(energy(field, inverse_set(field, c)));
    attach(r, bound_evaluators(in), {"bilin2", "lemma42"});
  }
  return r;
}

SumResult sum_mixed(const Field& field, const FSubset& a, const FSubset& b, const FSubset& c,
                    MultiplicativeCharacter chi, AdditiveCharacter psi) {
  auto table = tabulate(field, chi);
  const auto add_table = tabulate(field, psi);
  for (std::size_t i = 0; i < table.size(); ++i) table[i] *= add_table[i];
  SumResult r = make_result(triple_sum(field, a, b, c, table), triple_count(a, b, c));
  if (!chi.trivial(field) && !psi.trivial()) {
    BoundInputs in;
    in.a = a.size();
    in.b = b.size();
    in.c = c.size();
    in.q = field.q();
    attach(r, bound_evaluators(in), {"thm14"});
  }
  return r;
}

SumResult kloosterman_K(const Field& field, const FSubset& a, const FSubset& b, const FSubset& c,
                        const WeightVector& alpha, const WeightVector& beta,
                        const WeightVector& gamma, AdditiveCharacter psi) {
  if (c.empty()) throw EmptyC("Kloosterman form needs a nonempty C");
  if (c.contains(Field::zero())) throw BadArgument("C must avoid zero");
  const auto table = tabulate(field, psi);
  std::vector<Element> c_inv;
  std::vector<Complex> c_weight;
  for (const Element z : c) {
    c_inv.push_back(field.inv(z));
    c_weight.push_back(gamma.at(z));
  }
  Complex total{0.0, 0.0};
  for (const Element x : a) {
    const Complex wa = alpha.at(x);
    Complex row{0.0, 0.0};
    for (const Element y : b) {
      Complex inner{0.0, 0.0};
      for (std::size_t k = 0; k < c.size(); ++k) {
        const Element arg = field.add(field.mul(x, c[k]), field.mul(y, c_inv[k]));
        inner += c_weight[k] * table[arg.index];
      }
      row += beta.at(y) * std::norm(inner);
    }
    total += wa * row;
  }
  SumResult r = make_result(total, triple_count(a, b, c));
  if (!psi.trivial()) {
    BoundInputs in;
    in.a = a.size();
    in.b = b.size();
    in.c = c.size();
    in.q = field.q();
    in.alpha_l1 = weight_norm(alpha, 1.0);
    in.alpha_l2 = weight_norm(alpha, 2.0);
    in.beta_l1 = weight_norm(beta, 1.0);
    in.beta_l2 = weight_norm(beta, 2.0);
    in.gamma_inf = weight_norm(gamma, std::numeric_limits<double>::infinity());
    attach(r, bound_evaluators(in), {"thm15"});
  }
  return r;
}

FSubset convolution_set(const Field& field, const FSubset& a, const FSubset& b, const FSubset& c) {
  std::vector<char> hit(field.q(), 0);
  for (const Element x : a) {
    for (const Element y : b) {
      for (const Element z : c) hit[convolution(field, x, y, z).index] = 1;
    }
  }
  std::vector<Element> out;
  for (std::uint32_t i = 0; i < field.q(); ++i) {
    if (hit[i]) out.push_back(Element{i});
  }
  return FSubset(field.q(), std::move(out));
}

BoundInputs bound_inputs(const Field& field, const FSubset& a, const FSubset& b,
                         const FSubset& c) {
  BoundInputs in;
  in.a = a.size();
  in.b = b.size();
  in.c = c.size();
  in.q = field.q();
  in.energy_b = static_cast<double>(energy(field, b));
  in.energy_c = static_cast<double>(energy(field, c));
  in.energy_b_inv = static_cast<double>(energy(field, inverse_set(field, b)));
  in.energy_c_inv = static_cast<double>(energy(field, inverse_set(field, c)));
  return in;
}

std::map<std::string, double> bound_evaluators(const BoundInputs& in) {
  std::map<std::string, double> out;
  const double sq = std::sqrt(in.q);
  out["bilin1"] = in.a * std::sqrt(in.b * in.c * in.q);
  out["bilin2"] = out["bilin1"];
  if (in.energy_b && in.energy_c) {
    out["lemma41"] = std::sqrt(in.a) * std::pow(*in.energy_b, 0.25) *
                     std::pow(*in.energy_c, 0.25) * sq;
  }
  if (in.energy_b_inv && in.energy_c_inv) {
    out["lemma42"] = std::sqrt(in.a) * std::pow(*in.energy_b_inv, 0.25) *
                         std::pow(*in.energy_c_inv, 0.25) * sq +
                     std::sqrt(in.a) * in.b * in.c;
  }
  const auto m_b = m_or_none(in.b, in.q);
  const auto m_c = m_or_none(in.c, in.q);
  if (m_b) out["thm12"] = std::sqrt(in.a) * std::pow(in.b, 1.5) * sq / std::sqrt(*m_b);
  if (m_b && m_c) {
    out["thm13"] = std::sqrt(in.a) * std::pow(in.b * in.c, 0.75) * sq /
                   std::pow(std::max(*m_b, *m_c), 0.25);
  }
  out["thm14"] = std::sqrt(in.a * in.b * in.c * in.q) + std::sqrt(in.a) * in.b * in.c * std::pow(in.q, 0.25);
  if (m_c && in.alpha_l1 && in.alpha_l2 && in.beta_l1 && in.beta_l2 && in.gamma_inf) {
    out["thm15"] = (*in.alpha_l1 * *in.beta_l2 + *in.alpha_l2 * *in.beta_l1) *
                   (*in.gamma_inf) * (*in.gamma_inf) * sq * std::pow(in.c, 1.5) / std::sqrt(*m_c);
  }
  return out;
}

DegeneracyReport degeneracy_pairs(const Field& field, const FSubset& b, const FSubset& c) {
  if (b.contains(Field::zero()) || c.contains(Field::zero())) {
    throw BadArgument("degeneracy count needs B, C inside GF(q)^*");
  }
  // Group ordered pairs by (b + c, 1/b + 1/c); each pair's count is its group size.
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> groups;
  auto key = [&](Element x, Element y) {
    return std::make_pair(field.add(x, y).index, field.add(field.inv(x), field.inv(y)).index);
  };
  for (const Element x : b) {
    for (const Element y : c) ++groups[key(x, y)];
  }
  DegeneracyReport report;
  for (const Element x : b) {
    for (const Element y : c) {
      const std::uint64_t n = groups[key(x, y)];
      if (n > report.max_count) {
        report.max_count = n;
        report.worst_b = x;
        report.worst_c = y;
      }
      if (field.add(x, y).index == 0) {
        report.max_count_zero_sum = std::max(report.max_count_zero_sum, n);
      } else {
        report.max_count_nonzero_sum = std::max(report.max_count_nonzero_sum, n);
      }
    }
  }
  return report;
}

}  // namespace bwd
