#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bwd/field.hpp"
#include "bwd/ratfunc.hpp"
#include "bwd/subset.hpp"

namespace bwd {

// One checked or measured quantity. Hard records assert lhs <= rhs (or an
// exact identity) and fail the run when violated; report-only records carry
// an observed ratio for an inequality with an unknown constant and always
// pass.
struct VerificationRecord {
  std::string suite;
  std::string instance;
  double lhs = 0;
  double rhs = 0;
  double ratio = 0;  // lhs / rhs when rhs > 0, else 0
  bool pass = true;
  bool hard = true;
  double runtime_ms = 0;
};

VerificationRecord make_record(std::string suite, std::string instance, double lhs, double rhs,
                               bool pass, bool hard);

// J = #{(w, x, y, z) : f(w + x) = y + z} against the main term WXYZ / q.
// lhs = |J - WXYZ/q|, rhs = sqrt(WXYZ q); report-only.
struct ProdsumCount {
  std::uint64_t solutions = 0;
  double main_term = 0;
  double discrepancy = 0;  // |J - main| / sqrt(WXYZ q)
};
ProdsumCount count_prodsum(const Field& field, const FSubset& w, const FSubset& x,
                           const FSubset& y, const FSubset& z, const RationalFunction& f);
VerificationRecord verify_lemma_prodsum(const Field& field, const FSubset& w, const FSubset& x,
                                        const FSubset& y, const FSubset& z,
                                        const RationalFunction& f);

// #{x : r_U(f; x) >= tau} against A S U q / (u^2 tau^2); report-only. tau
// defaults to the smallest admissible value 2 k A S U / (u q). Throws
// BadArgument if some x in U has r_{S,-A}(x) < u, or tau is too small.
VerificationRecord verify_lemma_rich(const Field& field, const FSubset& a, const FSubset& s,
                                     const FSubset& u_set, std::uint64_t u,
                                     const RationalFunction& f, double tau = 0);

// E(union)^(1/4) <= sum E(A_i)^(1/4), exact energies; hard.
VerificationRecord verify_union_energy(const Field& field, const std::vector<FSubset>& family);

struct ExperimentConfig {
  std::uint32_t p = 1009;
  std::uint32_t n = 1;
  std::vector<std::string> sets;      // extra instances, set-spec strings
  std::string function = "1/0,1";    // X^{-1}
  std::uint64_t chi = 1;
  std::uint32_t psi = 1;
  std::vector<std::string> suites;
  std::uint32_t trials = 10;
  std::uint64_t seed = 1;
  std::string output;
  // Fraction of E(A) used as the override threshold in partition runs.
  double threshold_fraction = 0.25;
  std::vector<std::uint32_t> lambdas{100, 200, 300};
  // Off by default: wall-clock times would break byte-identical reruns.
  bool record_runtime = false;
};

// Throws ConfigError naming the offending key.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

const std::vector<std::string>& suite_names();

// Runs a named suite deterministically from config.seed. Throws ConfigError
// for unknown names.
std::vector<VerificationRecord> run_suite(const std::string& name, const ExperimentConfig& config);

struct SuiteSummary {
  std::size_t records = 0;
  std::size_t hard_failures = 0;
  double max_report_ratio = 0;
};
SuiteSummary summarize(const std::vector<VerificationRecord>& records);

// CSV with header suite,instance,lhs,rhs,ratio,pass,runtime_ms; numbers with
// 12 significant digits. Records are stably ordered by suite name.
void write_csv(std::vector<VerificationRecord> records, std::ostream& out);
void emit_csv(const std::vector<VerificationRecord>& records, const std::string& path);

}  // namespace bwd
