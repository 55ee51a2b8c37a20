#include "bwd/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "bwd/energy.hpp"
#include "bwd/error.hpp"

namespace bwd {

namespace {

std::uint64_t dyadic_level(std::uint64_t value, std::uint32_t base) {
  std::uint64_t level = 1;
  while (level <= value / base) level *= base;
  return level;
}

// Level maximizing level * count (or level^2 * count), smallest level on ties.
template <typename Score>
std::uint64_t popular_level(const std::map<std::uint64_t, std::uint64_t>& histogram,
                            Score score) {
  std::uint64_t best = 0;
  long double best_score = -1;
  for (const auto& [level, count] : histogram) {
    const long double s = score(level, count);
    if (s > best_score) {
      best_score = s;
      best = level;
    }
  }
  return best;
}

ExtractionTrace extract_unchecked(const Field& field, const FSubset& a,
                                  const ThresholdParams& params) {
  const std::uint32_t base = params.dyadic_base;
  ExtractionTrace trace;

  // Popular dyadic set of the sum representation function.
  const RepCounts sums = rep_sum(field, a, a);
  std::map<std::uint64_t, std::uint64_t> sum_hist;
  for (const std::uint64_t r : sums.counts) {
    if (r > 0) ++sum_hist[dyadic_level(r, base)];
  }
  trace.rho = popular_level(sum_hist, [](std::uint64_t level, std::uint64_t count) {
    return static_cast<long double>(level) * level * count;
  });
  std::vector<char> in_popular(field.q(), 0);
  std::vector<Element> popular;
  for (std::uint32_t x = 0; x < field.q(); ++x) {
    if (sums.counts[x] > 0 && dyadic_level(sums.counts[x], base) == trace.rho) {
      in_popular[x] = 1;
      popular.push_back(Element{x});
    }
  }
  trace.popular = FSubset(field.q(), std::move(popular));

  // Columns of the point set P = {(x, y) in A^2 : x + y in S}.
  const auto& elems = a.elements();
  std::vector<std::uint64_t> column(elems.size(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Element y : elems) column[i] += in_popular[field.add(elems[i], y).index];
    trace.point_count += column[i];
  }
  std::map<std::uint64_t, std::uint64_t> column_hist;
  for (const std::uint64_t c : column) {
    if (c > 0) ++column_hist[dyadic_level(c, base)];
  }
  trace.column_level = popular_level(column_hist, [](std::uint64_t level, std::uint64_t count) {
    return static_cast<long double>(level) * count;
  });
  std::vector<Element> rich_columns;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (column[i] > 0 && dyadic_level(column[i], base) == trace.column_level) {
      rich_columns.push_back(elems[i]);
    }
  }
  trace.column_count = rich_columns.size();

  const double log_a = clamped_log(static_cast<double>(a.size()), params);
  if (static_cast<double>(trace.column_count) >=
      static_cast<double>(trace.column_level) / std::sqrt(log_a)) {
    trace.branch = ExtractionCase::kColumns;
    trace.extracted = FSubset(field.q(), std::move(rich_columns));
    trace.certified_u = trace.column_level;
    return trace;
  }

  // Rows of Q = {(x, y) in P : x in V}.
  trace.branch = ExtractionCase::kRows;
  std::vector<std::uint64_t> row(elems.size(), 0);
  for (std::size_t j = 0; j < elems.size(); ++j) {
    for (const Element x : rich_columns) row[j] += in_popular[field.add(x, elems[j]).index];
  }
  std::map<std::uint64_t, std::uint64_t> row_hist;
  for (const std::uint64_t c : row) {
    if (c > 0) ++row_hist[dyadic_level(c, base)];
  }
  trace.row_level = popular_level(row_hist, [](std::uint64_t level, std::uint64_t count) {
    return static_cast<long double>(level) * count;
  });
  std::vector<Element> rich_rows;
  for (std::size_t j = 0; j < elems.size(); ++j) {
    if (row[j] > 0 && dyadic_level(row[j], base) == trace.row_level) rich_rows.push_back(elems[j]);
  }
  trace.extracted = FSubset(field.q(), std::move(rich_rows));
  trace.certified_u = trace.row_level;
  return trace;
}

void require_nonexceptional(const Field& field, const RationalFunction& f) {
  const auto check = is_exceptional(field, f);
  if (check.exceptional) {
    throw ExceptionalFunction("f = " + to_string(f) +
                              " has the excluded form g^p - g + lambda X + mu (lambda = " +
                              std::to_string(check.witness->index) + ")");
  }
}

}  // namespace

double clamped_log(double z, const ThresholdParams& params) {
  return std::max(std::log(z), params.log_floor);
}

double m_of_z(double z, double q, const ThresholdParams& params) {
  if (!(z > 1.0)) throw BadArgument("M(Z) requires Z > 1");
  if (!(q >= 2.0)) throw BadArgument("M(Z) requires q >= 2");
  const double log_z = clamped_log(z, params);
  const double first = std::sqrt(q) / (std::sqrt(z) * std::pow(log_z, 11.0 / 4.0));
  const double second = std::pow(z, 4.0 / 5.0) / (std::pow(q, 2.0 / 5.0) * std::pow(log_z, 3.1));
  return std::min(first, second);
}

ExtractionTrace extract_subset(const Field& field, const FSubset& a, const RationalFunction& f,
                               const ThresholdParams& params) {
  if (a.size() < 2) throw SetTooSmall("extraction needs at least two elements");
  require_nonexceptional(field, f);
  return extract_unchecked(field, a, params);
}

bool richness_certificate_holds(const Field& field, const FSubset& a,
                                const ExtractionTrace& trace) {
  const RepCounts r = rep_diff(field, trace.popular, a);
  return std::all_of(trace.extracted.begin(), trace.extracted.end(),
                     [&](Element x) { return r[x] >= trace.certified_u; });
}

double DecompositionResult::low_energy_constant(std::size_t set_size) const {
  const double a = static_cast<double>(set_size);
  return static_cast<double>(low_energy_value) * m_value / (a * a * a);
}

double DecompositionResult::image_energy_constant(std::size_t set_size) const {
  const double a = static_cast<double>(set_size);
  return static_cast<double>(image_energy) * m_value / (a * a * a);
}

DecompositionResult partition(const Field& field, const FSubset& a, const RationalFunction& f,
                              const PartitionOptions& options) {
  require_nonexceptional(field, f);
  if (options.threshold && !(*options.threshold >= 0.0)) {
    throw BadArgument("partition threshold must be nonnegative");
  }

  DecompositionResult result;
  const double size = static_cast<double>(a.size());
  result.m_value = a.size() >= 2 ? m_of_z(size, field.q(), options.params)
                                 : std::numeric_limits<double>::quiet_NaN();

  if (!options.threshold && (a.size() < 2 || result.m_value <= 1.0)) {
    result.trivial = true;
    result.low_energy = a;
    result.structured = FSubset::empty(field.q());
    result.threshold = a.size() >= 2 ? size * size * size / result.m_value
                                     : std::numeric_limits<double>::infinity();
    result.low_energy_value = energy(field, a);
    return result;
  }
  result.threshold = options.threshold ? *options.threshold : size * size * size / result.m_value;

  FSubset remaining = a;
  std::uint64_t remaining_energy = energy(field, remaining);
  double quarter_sum = 0;
  for (std::size_t iter = 0; iter < a.size(); ++iter) {
    if (static_cast<double>(remaining_energy) <= result.threshold) break;

    IterationRecord record;
    record.remaining_size = remaining.size();
    record.remaining_energy = remaining_energy;

    FSubset piece;
    if (remaining.size() >= 2) {
      ExtractionTrace trace = extract_unchecked(field, remaining, options.params);
      if (!trace.extracted.empty() && trace.extracted.size() < remaining.size()) {
        piece = trace.extracted;
      }
      record.trace = std::move(trace);
    }
    if (piece.empty()) {
      record.guarded = true;
      piece = FSubset(field.q(), {remaining[0]});
    }

    record.piece_size = piece.size();
    record.piece_image_energy = energy(field, apply_to_set(field, f, piece).image);
    quarter_sum += std::pow(static_cast<double>(record.piece_image_energy), 0.25);

    remaining = set_difference(remaining, piece);
    remaining_energy = energy(field, remaining);
    result.structured = set_union(result.structured, piece);
    result.pieces.push_back(std::move(piece));
    result.iterations.push_back(std::move(record));
  }

  if (result.structured.q() == 0) result.structured = FSubset::empty(field.q());
  result.low_energy = std::move(remaining);
  result.low_energy_value = remaining_energy;
  result.image_energy = energy(field, apply_to_set(field, f, result.structured).image);
  result.aggregate_bound = std::pow(quarter_sum, 4.0);
  return result;
}

}  // namespace bwd
