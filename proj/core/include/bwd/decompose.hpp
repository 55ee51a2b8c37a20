#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bwd/field.hpp"
#include "bwd/ratfunc.hpp"
#include "bwd/subset.hpp"

namespace bwd {

// Logarithms are natural, clamped below at log_floor; dyadic classes are
// [base^j, base^(j+1)).
struct ThresholdParams {
  double log_floor = 1.0;
  std::uint32_t dyadic_base = 2;
};

// max(ln z, params.log_floor).
double clamped_log(double z, const ThresholdParams& params = {});

// M(Z) = min{ q^(1/2) / (Z^(1/2) L^(11/4)), Z^(4/5) / (q^(2/5) L^(31/10)) }
// with L = clamped_log(Z). Throws BadArgument for Z <= 1 or q < 2.
double m_of_z(double z, double q, const ThresholdParams& params = {});

enum class ExtractionCase { kColumns, kRows };  // "Case I" and "Case II"

// Everything the constructive extraction decided, so that callers can
// re-check it from scratch.
struct ExtractionTrace {
  std::uint64_t rho = 0;         // popular dyadic level of r_{A,A}
  FSubset popular;               // S = {x : rho <= r_{A,A}(x) < 2 rho}
  std::uint64_t point_count = 0; // P = #{(a, b) in A^2 : a + b in S}
  std::uint64_t column_level = 0;  // s
  std::size_t column_count = 0;    // V
  ExtractionCase branch = ExtractionCase::kColumns;
  std::uint64_t row_level = 0;   // t (rows branch only)
  FSubset extracted;             // U
  // Every x in U has r_{S,-A}(x) >= certified_u.
  std::uint64_t certified_u = 0;
};

// Constructive dyadic extraction of a subset U of A whose elements are all
// rich in differences S - A. Throws SetTooSmall for |A| < 2 and
// ExceptionalFunction when f has the excluded shape.
ExtractionTrace extract_subset(const Field& field, const FSubset& a, const RationalFunction& f,
                               const ThresholdParams& params = {});

// Independent check of the trace's certificate: recomputes r_{S,-A} on U.
bool richness_certificate_holds(const Field& field, const FSubset& a,
                                const ExtractionTrace& trace);

struct PartitionOptions {
  ThresholdParams params;
  // Replaces A^3 / M(A) as the stopping threshold. M(A) <= 1 for every set at
  // table-sized q, so the literal threshold never lets the loop run; an
  // override exercises the iteration on small fields.
  std::optional<double> threshold;
};

struct IterationRecord {
  std::size_t remaining_size = 0;       // |V_i|
  std::uint64_t remaining_energy = 0;   // E(V_i)
  std::size_t piece_size = 0;           // |Q_i|
  std::uint64_t piece_image_energy = 0; // E(f(Q_i))
  // The extraction was empty, whole, or impossible, so the smallest element
  // of V_i was moved instead.
  bool guarded = false;
  std::optional<ExtractionTrace> trace;
};

struct DecompositionResult {
  FSubset low_energy;   // S
  FSubset structured;   // T, the disjoint union of the pieces
  std::vector<FSubset> pieces;
  std::vector<IterationRecord> iterations;
  double m_value = 0;    // M(|A|); NaN when |A| < 2
  double threshold = 0;  // stopping threshold actually used
  // M(A) <= 1 (or |A| < 2) without an override: S = A, T empty.
  bool trivial = false;
  std::uint64_t low_energy_value = 0;  // E(S)
  std::uint64_t image_energy = 0;      // E(f(T))
  // (sum_i E(f(Q_i))^(1/4))^4, an upper bound for image_energy.
  double aggregate_bound = 0;

  // E(S) M(A) / A^3 and E(f(T)) M(A) / A^3.
  double low_energy_constant(std::size_t set_size) const;
  double image_energy_constant(std::size_t set_size) const;
};

// Iterative partition A = S ⊔ T: peel extracted pieces off V_i until
// E(V_i) <= threshold. At most |A| iterations. Throws ExceptionalFunction.
DecompositionResult partition(const Field& field, const FSubset& a, const RationalFunction& f,
                              const PartitionOptions& options = {});

}  // namespace bwd
