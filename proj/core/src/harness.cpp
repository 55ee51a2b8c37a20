#include "bwd/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "bwd/energy.hpp"
#include "bwd/error.hpp"

namespace bwd {

VerificationRecord make_record(std::string suite, std::string instance, double lhs, double rhs,
                               bool pass, bool hard) {
  VerificationRecord r;
  r.suite = std::move(suite);
  r.instance = std::move(instance);
  r.lhs = lhs;
  r.rhs = rhs;
  r.ratio = rhs > 0 ? lhs / rhs : 0.0;
  r.pass = hard ? pass : true;
  r.hard = hard;
  return r;
}

ProdsumCount count_prodsum(const Field& field, const FSubset& w, const FSubset& x,
                           const FSubset& y, const FSubset& z, const RationalFunction& f) {
  const RepCounts yz = rep_sum(field, y, z);
  ProdsumCount out;
  for (const Element a : w) {
    for (const Element b : x) {
      if (auto v = eval(field, f, field.add(a, b))) out.solutions += yz[*v];
    }
  }
  const double product = static_cast<double>(w.size()) * x.size() * y.size() * z.size();
  out.main_term = product / field.q();
  const double scale = std::sqrt(product * field.q());
  out.discrepancy =
      scale > 0 ? std::abs(static_cast<double>(out.solutions) - out.main_term) / scale : 0.0;
  return out;
}

VerificationRecord verify_lemma_prodsum(const Field& field, const FSubset& w, const FSubset& x,
                                        const FSubset& y, const FSubset& z,
                                        const RationalFunction& f) {
  const ProdsumCount c = count_prodsum(field, w, x, y, z, f);
  const double product = static_cast<double>(w.size()) * x.size() * y.size() * z.size();
  return make_record("lemmas", "prodsum W=" + std::to_string(w.size()) + " X=" +
                                   std::to_string(x.size()) + " Y=" + std::to_string(y.size()) +
                                   " Z=" + std::to_string(z.size()),
                     std::abs(static_cast<double>(c.solutions) - c.main_term),
                     std::sqrt(product * field.q()), true, false);
}

VerificationRecord verify_lemma_rich(const Field& field, const FSubset& a, const FSubset& s,
                                     const FSubset& u_set, std::uint64_t u,
                                     const RationalFunction& f, double tau) {
  if (u == 0) throw BadArgument("richness u must be positive");
  const RepCounts richness = rep_diff(field, s, a);
  for (const Element x : u_set) {
    if (richness[x] < u) {
      throw BadArgument("richness precondition fails at x = " + std::to_string(x.index));
    }
  }
  const double k = std::max(f.degree(), 1);
  const double as_u = static_cast<double>(a.size()) * s.size() * u_set.size();
  const double tau_min = 2.0 * k * as_u / (static_cast<double>(u) * field.q());
  if (tau == 0) tau = tau_min;
  if (tau < tau_min) throw BadArgument("tau below 2kASU/(uq)");

  const RepCounts r = rep_f(field, f, u_set);
  std::uint64_t heavy = 0;
  for (const std::uint64_t c : r.counts) heavy += c > 0 && static_cast<double>(c) >= tau;
  const double rhs = tau > 0 ? as_u * field.q() / (static_cast<double>(u) * u * tau * tau) : 0.0;
  return make_record("lemmas", "rich A=" + std::to_string(a.size()) + " S=" +
                                   std::to_string(s.size()) + " U=" +
                                   std::to_string(u_set.size()) + " u=" + std::to_string(u),
                     static_cast<double>(heavy), rhs, true, false);
}

VerificationRecord verify_union_energy(const Field& field, const std::vector<FSubset>& family) {
  FSubset all = FSubset::empty(field.q());
  long double quarter_sum = 0;
  for (const auto& piece : family) {
    all = set_union(all, piece);
    quarter_sum += std::pow(static_cast<long double>(energy(field, piece)), 0.25L);
  }
  const std::uint64_t total = energy(field, all);
  const long double bound = std::pow(quarter_sum, 4.0L);
  const bool pass = static_cast<long double>(total) <= bound * (1.0L + 1e-12L);
  return make_record("lemmas", "union n=" + std::to_string(family.size()) + " size=" +
                                   std::to_string(all.size()),
                     std::pow(static_cast<double>(total), 0.25),
                     static_cast<double>(quarter_sum), pass, true);
}

SuiteSummary summarize(const std::vector<VerificationRecord>& records) {
  SuiteSummary s;
  s.records = records.size();
  for (const auto& r : records) {
    if (r.hard && !r.pass) ++s.hard_failures;
    if (!r.hard) s.max_report_ratio = std::max(s.max_report_ratio, r.ratio);
  }
  return s;
}

namespace {

std::string number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_csv(std::vector<VerificationRecord> records, std::ostream& out) {
  std::stable_sort(records.begin(), records.end(),
                   [](const auto& x, const auto& y) { return x.suite < y.suite; });
  out << "suite,instance,lhs,rhs,ratio,pass,runtime_ms\n";
  for (const auto& r : records) {
    out << csv_field(r.suite) << ',' << csv_field(r.instance) << ',' << number(r.lhs) << ','
        << number(r.rhs) << ',' << number(r.ratio) << ',' << (r.pass ? 1 : 0) << ','
        << number(r.runtime_ms) << '\n';
  }
}

void emit_csv(const std::vector<VerificationRecord>& records, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file '" + path + "'");
  write_csv(records, out);
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace bwd
