#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>

#include "bwd/characters.hpp"
#include "bwd/charsums.hpp"
#include "bwd/checks.hpp"
#include "bwd/decompose.hpp"
#include "bwd/energy.hpp"
#include "bwd/error.hpp"
#include "bwd/harness.hpp"
#include "bwd/polynomial.hpp"
#include "bwd/ratfunc.hpp"
#include "bwd/rng.hpp"
#include "bwd/set_spec.hpp"
#include "bwd/sets.hpp"

namespace bwd {

namespace {

struct FieldSize {
  std::uint32_t p, n;
};

// q in {2,3,4,5,7,8,9,16,25,27,49,101,121}.
constexpr FieldSize kStockFields[] = {{2, 1}, {3, 1}, {2, 2},  {5, 1},  {7, 1},   {2, 3}, {3, 2},
                                      {2, 4}, {5, 2}, {3, 3}, {7, 2}, {101, 1}, {11, 2}};

// Collects records and, when enabled, stamps each with the time since the
// previous one.
class Recorder {
 public:
  Recorder(std::string suite, bool timed) : suite_(std::move(suite)), timed_(timed) {}

  void add(std::string instance, double lhs, double rhs, bool pass, bool hard) {
    push(make_record(suite_, std::move(instance), lhs, rhs, pass, hard));
  }
  void push(VerificationRecord r) {
    r.suite = suite_;
    if (timed_) {
      const auto now = Clock::now();
      r.runtime_ms = std::chrono::duration<double, std::milli>(now - last_).count();
      last_ = now;
    }
    records_.push_back(std::move(r));
  }
  std::vector<VerificationRecord> take() { return std::move(records_); }

 private:
  using Clock = std::chrono::steady_clock;
  std::string suite_;
  bool timed_;
  Clock::time_point last_ = Clock::now();
  std::vector<VerificationRecord> records_;
};

Rng suite_rng(const ExperimentConfig& cfg, const std::string& suite) {
  // The suite name enters through its characters, not std::hash, so streams
  // agree across standard libraries.
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(cfg.seed),
                                   static_cast<std::uint32_t>(cfg.seed >> 32)};
  for (const char ch : suite) words.push_back(static_cast<unsigned char>(ch));
  std::seed_seq seq(words.begin(), words.end());
  return Rng(seq);
}

std::string q_name(const Field& f) { return "q=" + std::to_string(f.q()); }

AdditiveCharacter config_psi(const Field& f, const ExperimentConfig& cfg) {
  const std::uint32_t a = cfg.psi % f.q();
  return AdditiveCharacter{Element{a == 0 ? 1u : a}};
}

MultiplicativeCharacter config_chi(const Field& f, const ExperimentConfig& cfg) {
  const std::uint64_t j = cfg.chi % (f.q() - 1);
  return MultiplicativeCharacter{j == 0 ? 1u : j};
}

FSubset random_set(const Field& f, Rng& rng, std::uint32_t lo, std::uint32_t hi) {
  hi = std::min(hi, f.q());
  lo = std::min(lo, hi);
  const auto size = static_cast<std::uint32_t>(uniform_between(rng, lo, hi));
  return random_subset(f, size, rng());
}

Polynomial random_polynomial(const Field& f, Rng& rng, int degree) {
  std::vector<Element> c(degree + 1);
  for (auto& e : c) e = Element{static_cast<std::uint32_t>(uniform_below(rng, f.q()))};
  c.back() = Element{static_cast<std::uint32_t>(uniform_between(rng, 1, f.q() - 1))};
  return Polynomial(std::move(c));
}

std::uint32_t set_floor(const Field& f) {
  return static_cast<std::uint32_t>(std::ceil(std::pow(static_cast<double>(f.q()), 0.55)));
}

// ---------------------------------------------------------------------------

void field_axioms_suite(const ExperimentConfig&, Recorder& rec) {
  for (const auto [p, n] : kStockFields) {
    const Field f = Field::build(p, n);
    const auto report = checks::field_axioms(f);
    rec.add(q_name(f) + " axioms checks=" + std::to_string(report.checks),
            static_cast<double>(report.violations), 0, report.violations == 0, true);
  }
}

void characters_suite(const ExperimentConfig& cfg, Recorder& rec) {
  for (const auto [p, n] : kStockFields) {
    const Field f = Field::build(p, n);
    const double tol = 1e-9 * f.q();
    const double add = checks::max_additive_orthogonality_residual(f);
    rec.add(q_name(f) + " additive orthogonality", add, tol, add <= tol, true);
    const double mul = checks::max_multiplicative_orthogonality_residual(f);
    rec.add(q_name(f) + " multiplicative orthogonality", mul, tol, mul <= tol, true);
  }

  const Field f = Field::build(cfg.p, cfg.n);
  const AdditiveCharacter psi = config_psi(f, cfg);
  Rng rng = suite_rng(cfg, "characters");
  for (std::uint32_t t = 0; t < cfg.trials; ++t) {
    int k = 0;
    do {
      k = static_cast<int>(uniform_between(rng, 2, 5));
    } while (k % static_cast<int>(f.p()) == 0);
    const Polynomial poly = random_polynomial(f, rng, k);
    const double lhs = std::abs(checks::weil_sum(f, poly, psi));
    const double rhs = (k - 1) * std::sqrt(static_cast<double>(f.q()));
    rec.add(q_name(f) + " weil f=" + to_string(poly), lhs, rhs, lhs <= rhs + 1e-9 * f.q(), true);
  }
}

void energy_oracle_suite(const ExperimentConfig& cfg, Recorder& rec) {
  const Field f = Field::build(cfg.p, cfg.n);
  Rng rng = suite_rng(cfg, "energy-oracle");
  for (std::uint32_t t = 0; t < cfg.trials; ++t) {
    const FSubset u = random_set(f, rng, 0, 40);
    const std::string tag = q_name(f) + " trial=" + std::to_string(t) + " U=" + std::to_string(u.size());
    const auto e = energy(f, u);
    const auto oracle = checks::energy_by_enumeration(f, u);
    rec.add(tag + " enumeration", static_cast<double>(e), static_cast<double>(oracle), e == oracle,
            true);
    if (!u.empty()) {
      const double floor = std::pow(static_cast<double>(u.size()), 4) / sumset(f, u, u).size();
      rec.add(tag + " E>=U^4/|U+U|", floor, static_cast<double>(e), floor <= e * (1 + 1e-12), true);
    }
    const FSubset v = random_set(f, rng, 1, 40);
    const auto cross = cross_energy(f, u, v).value;
    const double cs = std::sqrt(static_cast<double>(e) * static_cast<double>(energy(f, v)));
    rec.add(tag + " cauchy-schwarz", static_cast<double>(cross), cs, cross <= cs * (1 + 1e-12),
            true);
  }
  if (f.is_prime_field()) {
    for (std::uint32_t len = 1; len <= 20 && 2 * len - 1 <= f.p(); ++len) {
      const auto e = energy(f, interval(f, 0, len));
      const std::uint64_t closed = (2ull * len * len * len + len) / 3;
      rec.add(q_name(f) + " progression n=" + std::to_string(len), static_cast<double>(e),
              static_cast<double>(closed), e == closed, true);
    }
  }
}

void ratfunc_suite(const ExperimentConfig& cfg, Recorder& rec) {
  const Field f = Field::build(cfg.p, cfg.n);
  const RationalFunction g = parse_rational(f, cfg.function);
  if (g.degree() >= 1) {
    const auto fiber = checks::max_fiber(f, g);
    rec.add(q_name(f) + " fiber f=" + to_string(g), static_cast<double>(fiber), g.degree(),
            fiber <= static_cast<std::uint64_t>(g.degree()), true);
  }

  Rng rng = suite_rng(cfg, "ratfunc");
  for (std::uint32_t t = 0; t < cfg.trials; ++t) {
    const auto [p, n] = kStockFields[uniform_below(rng, std::size(kStockFields))];
    const Field small = Field::build(p, n);
    const Polynomial num = random_polynomial(small, rng, static_cast<int>(uniform_between(rng, 1, 5)));
    const int den_degree = static_cast<int>(uniform_between(rng, 0, 5 - num.degree()));
    const Polynomial den = random_polynomial(small, rng, den_degree);
    const RationalFunction h = RationalFunction::normalize(small, num, den);
    if (h.degree() < 1) continue;
    const auto fiber = checks::max_fiber(small, h);
    rec.add(q_name(small) + " fiber f=" + to_string(h), static_cast<double>(fiber), h.degree(),
            fiber <= static_cast<std::uint64_t>(h.degree()), true);
  }

  for (const std::uint32_t p : {3u, 5u, 7u}) {
    const Field small = Field::build(p);
    // X^p - X + 3X + 1
    std::vector<Element> c(p + 1, Element{0});
    c[0] = small.one();
    c[1] = small.from_int(2);
    c[p] = small.one();
    const auto artin = RationalFunction::polynomial(small, Polynomial(c));
    const auto verdict = is_exceptional(small, artin);
    const bool witness_ok = verdict.witness && *verdict.witness == small.from_int(3);
    rec.add("q=" + std::to_string(p) + " exceptional X^p+2X+1", verdict.exceptional ? 1 : 0, 1,
            verdict.exceptional && witness_ok, true);
    // On the witness the character sum degenerates to full size.
    if (verdict.witness) {
      const auto table = tabulate(small, AdditiveCharacter{small.one()});
      Complex sum{0, 0};
      for (std::uint32_t x = 0; x < p; ++x) {
        const Element e{x};
        sum += table[small.sub(*eval(small, artin, e), small.mul(*verdict.witness, e)).index];
      }
      rec.add("q=" + std::to_string(p) + " degenerate weil sum", std::abs(sum), p,
              std::abs(std::abs(sum) - p) <= 1e-9 * p, true);
    }
    const auto square = RationalFunction::polynomial(small, Polynomial::monomial(small.one(), 2));
    rec.add("q=" + std::to_string(p) + " exceptional X^2", is_exceptional(small, square).exceptional,
            0, !is_exceptional(small, square).exceptional, true);
    const auto inv = RationalFunction::inversion(small);
    rec.add("q=" + std::to_string(p) + " exceptional X^-1", is_exceptional(small, inv).exceptional, 0,
            !is_exceptional(small, inv).exceptional, true);
  }
}

void extraction_suite(const ExperimentConfig& cfg, Recorder& rec) {
  const Field f = Field::build(cfg.p, cfg.n);
  const RationalFunction g = parse_rational(f, cfg.function);
  Rng rng = suite_rng(cfg, "extraction");
  const std::uint32_t lo = std::max<std::uint32_t>(2, set_floor(f));
  for (std::uint32_t t = 0; t < cfg.trials; ++t) {
    const FSubset a = random_set(f, rng, lo, std::max(lo, f.q() / 2));
    const ExtractionTrace trace = extract_subset(f, a, g);
    const std::string tag = q_name(f) + " trial=" + std::to_string(t) + " A=" + std::to_string(a.size());
    const bool certified = richness_certificate_holds(f, a, trace);
    rec.add(tag + " certificate u=" + std::to_string(trace.certified_u), certified ? 0 : 1, 0,
            certified, true);
    // |U| measured against A / log A, the shape of the lower bound.
    const double log_a = clamped_log(static_cast<double>(a.size()));
    rec.add(tag + " U size", static_cast<double>(trace.extracted.size()), a.size() / log_a, true,
            false);
  }
}

void check_partition(const Field& f, const FSubset& a, const DecompositionResult& r,
                     const std::string& tag, Recorder& rec) {
  const bool valid =
      disjoint(r.low_energy, r.structured) && set_union(r.low_energy, r.structured) == a;
  rec.add(tag + " valid", valid ? 0 : 1, 0, valid, true);
  rec.add(tag + " iterations", static_cast<double>(r.iterations.size()),
          static_cast<double>(a.size()), r.iterations.size() <= a.size(), true);
  bool certificates = true;
  FSubset remaining = a;
  for (std::size_t i = 0; i < r.iterations.size(); ++i) {
    const auto& it = r.iterations[i];
    if (it.trace) certificates = certificates && richness_certificate_holds(f, remaining, *it.trace);
    remaining = set_difference(remaining, r.pieces[i]);
  }
  rec.add(tag + " certificates", certificates ? 0 : 1, 0, certificates, true);
  if (!r.trivial) {
    rec.add(tag + " exit E(S)<=threshold", static_cast<double>(r.low_energy_value), r.threshold,
            static_cast<double>(r.low_energy_value) <= r.threshold, true);
  }
  rec.add(tag + " aggregate", static_cast<double>(r.image_energy), r.aggregate_bound,
          static_cast<double>(r.image_energy) <= r.aggregate_bound * (1 + 1e-12), true);
  rec.add(tag + " c1", r.low_energy_constant(a.size()), 1, true, false);
  rec.add(tag + " c2", r.image_energy_constant(a.size()), 1, true, false);
}

void partition_suite(const ExperimentConfig& cfg, Recorder& rec) {
  const Field f = Field::build(cfg.p, cfg.n);
  const RationalFunction g = parse_rational(f, cfg.function);
  Rng rng = suite_rng(cfg, "partition");
  const std::uint32_t lo = std::max<std::uint32_t>(2, set_floor(f));
  std::vector<FSubset> instances;
  for (const auto& spec : cfg.sets) instances.push_back(parse_set_spec(f, spec));
  for (std::uint32_t t = 0; t < cfg.trials; ++t) {
    instances.push_back(random_set(f, rng, lo, std::max(lo, std::min(f.q(), 2 * lo))));
  }
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const FSubset& a = instances[i];
    const std::string tag = q_name(f) + " set=" + std::to_string(i) + " A=" + std::to_string(a.size());
    check_partition(f, a, partition(f, a, g), tag + " literal", rec);
    PartitionOptions options;
    options.threshold = cfg.threshold_fraction * static_cast<double>(energy(f, a));
    check_partition(f, a, partition(f, a, g, options), tag + " override", rec);
  }
}

void charsum_suite(const ExperimentConfig& cfg, Recorder& rec) {
  const Field f = Field::build(cfg.p, cfg.n);
  const AdditiveCharacter psi = config_psi(f, cfg);
  const MultiplicativeCharacter chi = config_chi(f, cfg);
  Rng rng = suite_rng(cfg, "charsum-bounds");
  const std::uint32_t cap = std::min<std::uint32_t>(30, f.q() - 1);
  for (std::uint32_t t = 0; t < cfg.trials; ++t) {
    const FSubset a = nonzero_part(random_set(f, rng, 1, cap));
    const FSubset b = nonzero_part(random_set(f, rng, 1, cap));
    const FSubset c = nonzero_part(random_set(f, rng, 1, cap));
    const std::string tag = q_name(f) + " trial=" + std::to_string(t) + " A=" +
                            std::to_string(a.size()) + " B=" + std::to_string(b.size()) +
                            " C=" + std::to_string(c.size());
    const double terms = static_cast<double>(a.size()) * b.size() * c.size();

    const SumResult s = sum_S(f, a, b, c, psi);
    const SumResult literal = sum_S(f, a, b, c, psi, SumMethod::kLiteral);
    const double gap = std::abs(s.value - literal.value);
    rec.add(tag + " S fast=literal", gap, 1e-9 * terms, gap <= 1e-9 * std::max(terms, 1.0), true);
    if (const auto* bilin = s.bound("bilin1")) {
      rec.add(tag + " S<=A(BCq)^1/2", s.magnitude, bilin->value,
              s.magnitude <= bilin->value * (1 + 1e-12), true);
    }
    // |S|^2 <= A q E(B,C) and E(B,C)^2 <= E(B) E(C).
    const double cross = static_cast<double>(cross_energy(f, b, c).value);
    const double step = std::sqrt(a.size() * f.q() * cross);
    rec.add(tag + " S<=(AqE(B,C))^1/2", s.magnitude, step, s.magnitude <= step * (1 + 1e-9), true);
    if (const auto* l41 = s.bound("lemma41")) {
      rec.add(tag + " lemma41 chain", step, l41->value, step <= l41->value * (1 + 1e-12), true);
    }

    const SumResult tsum = sum_T(f, a, b, c, chi);
    for (const auto& bound : tsum.bounds) {
      rec.add(tag + " T " + bound.name, tsum.magnitude, bound.value, true, false);
    }
    const SumResult mixed = sum_mixed(f, a, b, c, chi, psi);
    for (const auto& bound : mixed.bounds) {
      rec.add(tag + " mixed " + bound.name, mixed.magnitude, bound.value, true, false);
    }
    const SumResult k = kloosterman_K(f, a, b, c, WeightVector::constant(a),
                                      WeightVector::constant(b), WeightVector::constant(c), psi);
    for (const auto& bound : k.bounds) {
      rec.add(tag + " K " + bound.name, k.magnitude, bound.value, true, false);
    }
    const auto in = bound_inputs(f, a, b, c);
    const auto rhs = bound_evaluators(in);
    for (const char* name : {"thm12", "thm13"}) {
      if (auto it = rhs.find(name); it != rhs.end()) {
        rec.add(tag + " S " + name, s.magnitude, it->second, true, false);
      }
    }

    const DegeneracyReport deg = degeneracy_pairs(f, b, c);
    rec.add(tag + " degeneracy", static_cast<double>(deg.max_count), 2, deg.max_count <= 2, true);
    rec.add(tag + " degeneracy b+c!=0", static_cast<double>(deg.max_count_nonzero_sum), 2,
            deg.max_count_nonzero_sum <= 2, true);
    const double zero_cap = static_cast<double>(std::min(b.size(), c.size()));
    rec.add(tag + " degeneracy b+c=0", static_cast<double>(deg.max_count_zero_sum), zero_cap,
            deg.max_count_zero_sum <= zero_cap, true);

    const FSubset conv = convolution_set(f, a, a, a);
    const double floor =
        std::min<double>(f.p(), std::pow(static_cast<double>(a.size()), 1.5));
    rec.add(tag + " |C(A,A,A)|", static_cast<double>(conv.size()), floor, true, false);
  }

  if (f.is_prime_field()) {
    const auto len =
        static_cast<std::uint32_t>(std::floor(0.1 * std::sqrt(static_cast<double>(f.p())))) + 1;
    const FSubset a = interval(f, 0, len);
    const SumResult s = sum_S(f, a, a, a, AdditiveCharacter{f.one()});
    const double target = 0.98 * std::pow(static_cast<double>(a.size()), 3);
    rec.add(q_name(f) + " lower bound interval len=" + std::to_string(len), s.magnitude, target,
            s.magnitude >= target, true);
  }
}

void lemmas_suite(const ExperimentConfig& cfg, Recorder& rec) {
  const Field f = Field::build(cfg.p, cfg.n);
  const RationalFunction g = parse_rational(f, cfg.function);
  Rng rng = suite_rng(cfg, "lemmas");
  const std::uint32_t cap = std::min<std::uint32_t>(40, f.q());
  for (std::uint32_t t = 0; t < cfg.trials; ++t) {
    const FSubset w = random_set(f, rng, 1, cap);
    const FSubset x = random_set(f, rng, 1, cap);
    const FSubset y = random_set(f, rng, 1, cap);
    const FSubset z = random_set(f, rng, 1, cap);
    rec.push(verify_lemma_prodsum(f, w, x, y, z, g));

    const std::uint32_t lo = std::max<std::uint32_t>(2, set_floor(f));
    const FSubset a = random_set(f, rng, lo, std::max(lo, std::min(f.q(), 2 * lo)));
    const ExtractionTrace trace = extract_subset(f, a, g);
    if (trace.certified_u > 0) {
      rec.push(verify_lemma_rich(f, a, trace.popular, trace.extracted, trace.certified_u, g));
    }

    // A random disjoint family: deal a random set into random piles.
    const FSubset pool = random_set(f, rng, 1, std::min<std::uint32_t>(120, f.q()));
    const auto piles = static_cast<std::size_t>(uniform_between(rng, 1, 6));
    std::vector<std::vector<Element>> parts(piles);
    for (const Element e : pool) parts[uniform_below(rng, piles)].push_back(e);
    std::vector<FSubset> family;
    for (auto& part : parts) family.emplace_back(f.q(), std::move(part));
    rec.push(verify_union_energy(f, family));
  }
}

void constructions_suite(const ExperimentConfig& cfg, Recorder& rec) {
  const Field f = Field::build(cfg.p);
  for (const std::uint32_t lambda : cfg.lambdas) {
    const FSubset a = garaev_set(f, lambda);
    const std::string tag = "p=" + std::to_string(f.p()) + " lambda=" + std::to_string(lambda);
    const double floor = std::floor(static_cast<double>(lambda) * lambda / f.p());
    rec.add(tag + " |A|>=floor(lambda^2/p)", static_cast<double>(a.size()), floor,
            a.size() >= floor, true);
    const auto doubling = sumset(f, a, a).size();
    rec.add(tag + " |A+A|<=2lambda-1", static_cast<double>(doubling), 2.0 * lambda - 1,
            doubling <= 2 * lambda - 1, true);
    if (!a.empty()) {
      const double e = static_cast<double>(energy(f, a));
      const double low = std::pow(static_cast<double>(a.size()), 4) / doubling;
      rec.add(tag + " E(A)>=A^4/|A+A|", low, e, low <= e * (1 + 1e-12), true);
    }
  }

  // Linearized permutation X^3 + aX over GF(9) with -a a non-square.
  const Field f9 = Field::build(3, 2);
  const MultiplicativeCharacter quad = quadratic_character(f9);
  for (std::uint32_t ai = 1; ai < f9.q(); ++ai) {
    const Element a{ai};
    if (eval_multiplicative(f9, quad, f9.neg(a)).real() > 0) continue;
    const Polynomial lin = linearized(f9, {a, f9.one()});
    const auto h = RationalFunction::polynomial(f9, lin);
    const std::string tag = "q=9 linearized X^3+" + std::to_string(ai) + "X";
    std::uint64_t additive_failures = 0;
    for (std::uint32_t x = 0; x < f9.q(); ++x) {
      for (std::uint32_t y = 0; y < f9.q(); ++y) {
        const Element lhs = f9.add(poly_eval(f9, lin, Element{x}), poly_eval(f9, lin, Element{y}));
        additive_failures += lhs != poly_eval(f9, lin, f9.add(Element{x}, Element{y}));
      }
    }
    rec.add(tag + " additive", static_cast<double>(additive_failures), 0, additive_failures == 0,
            true);
    const auto image = apply_to_set(f9, h, FSubset::whole(f9)).image.size();
    rec.add(tag + " permutation", static_cast<double>(image), f9.q(), image == f9.q(), true);
    const auto verdict = is_exceptional(f9, h);
    rec.add(tag + " exceptional", verdict.exceptional ? 1 : 0, 1, verdict.exceptional, true);
  }
}

using SuiteFn = void (*)(const ExperimentConfig&, Recorder&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> table{
      {"field-axioms", field_axioms_suite}, {"characters", characters_suite},
      {"energy-oracle", energy_oracle_suite}, {"ratfunc", ratfunc_suite},
      {"extraction", extraction_suite},     {"partition", partition_suite},
      {"charsum-bounds", charsum_suite},    {"lemmas", lemmas_suite},
      {"constructions", constructions_suite},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "field-axioms", "characters", "energy-oracle", "ratfunc",      "extraction",
      "partition",    "charsum-bounds", "lemmas",    "constructions"};
  return names;
}

std::vector<VerificationRecord> run_suite(const std::string& name, const ExperimentConfig& config) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw ConfigError("unknown suite '" + name + "'");
  Recorder rec(name, config.record_runtime);
  it->second(config, rec);
  return rec.take();
}

}  // namespace bwd
