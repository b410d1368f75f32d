#pragma once

#include <optional>
#include <vector>

#include "classalg/algebra.hpp"
#include "classalg/conjugacy.hpp"
#include "classalg/group_algebra.hpp"

namespace classalg {

// One measurement row: how the symmetrized element of g declared at ambient j
// compares to the one declared at the minimal ambient j0, inside G_N.
struct AmbientScalingRow {
  int declared_ambient = 0;  // j
  int group_ambient = 0;     // N
  bool proportional = false;
  Int scalar;  // meaningful when proportional
};

// Measures the scalar relating the symmetrizations of one underlying
// permutation at different declared ambients. Nothing is assumed about the
// scalar; it is read off the expanded elements (coefficients are compared
// termwise). The base ambient j0 is the smallest one containing the support.
inline std::vector<AmbientScalingRow> measure_ambient_scaling(const GroupElement& g,
                                                              int max_declared_ambient,
                                                              int max_group_ambient) {
  const auto moved = g.moved_columns();
  const int j0 = moved.empty() ? 0 : moved.back();
  if (max_declared_ambient < j0) throw range_error("declared ambient range excludes the support");
  std::vector<AmbientScalingRow> rows;
  for (int big = j0; big <= max_group_ambient; ++big) {
    const auto base = group_symmetrization(canonicalize(g.truncated(j0)), big);
    for (int j = j0; j <= std::min(max_declared_ambient, big); ++j) {
      const auto scaled = group_symmetrization(canonicalize(g.truncated(j0).embedded(j)), big);
      AmbientScalingRow row{j, big, false, 0};
      if (base.is_zero()) {
        row.proportional = scaled.is_zero();
      } else {
        std::optional<Int> ratio;
        bool ok = scaled.term_count() == base.term_count();
        if (ok)
          for (const auto& [elem, coeff] : base.terms()) {
            const Int other = scaled.coefficient(elem);
            if (other % coeff != 0 || (ratio && *ratio != other / coeff)) { ok = false; break; }
            ratio = other / coeff;
          }
        row.proportional = ok && ratio.has_value();
        if (row.proportional) row.scalar = *ratio;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

struct SpanIndexReport {
  int group_ambient = 0;
  int class_count = 0;
  int generator_count = 0;
  int rank = 0;
  bool full_rank = false;
  Int index;  // index of the generated lattice in Z^classes, when full rank
};

namespace detail {

// Row reduction over the integers (Hermite form). Returns the pivot values;
// the lattice index is their product when the rank is full.
inline std::vector<Int> hermite_pivots(std::vector<std::vector<Int>> rows, int cols) {
  std::vector<Int> pivots;
  std::size_t top = 0;
  for (int col = 0; col < cols && top < rows.size(); ++col) {
    // euclidean elimination in this column
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][static_cast<std::size_t>(col)] == 0) continue;
        if (best == rows.size() ||
            abs(rows[r][static_cast<std::size_t>(col)]) < abs(rows[best][static_cast<std::size_t>(col)]))
          best = r;
      }
      if (best == rows.size()) break;  // column is zero below top
      std::swap(rows[top], rows[best]);
      bool cleared = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][static_cast<std::size_t>(col)] == 0) continue;
        const Int q = rows[r][static_cast<std::size_t>(col)] / rows[top][static_cast<std::size_t>(col)];
        for (int c2 = 0; c2 < cols; ++c2)
          rows[r][static_cast<std::size_t>(c2)] -= q * rows[top][static_cast<std::size_t>(c2)];
        if (rows[r][static_cast<std::size_t>(col)] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (rows[top][static_cast<std::size_t>(col)] != 0) {
      pivots.push_back(abs(rows[top][static_cast<std::size_t>(col)]));
      ++top;
    }
  }
  return pivots;
}

}  // namespace detail

// The symmetrized elements of all classes with ambient <= N span a sublattice
// of the free abelian group on the classes of G_N (they are class functions).
// Reports its rank and, when full, its index.
inline SpanIndexReport integer_span_index(const FamilyDescriptor& family, int group_ambient,
                                          bool override_guard = false) {
  auto target_classes = class_enumerate(family, group_ambient, override_guard);
  SpanIndexReport report;
  report.group_ambient = group_ambient;
  report.class_count = static_cast<int>(target_classes.size());
  std::vector<std::vector<Int>> rows;
  for (int j = 0; j <= group_ambient; ++j)
    for (const auto& c : class_enumerate(family, j, override_guard)) {
      const auto averaged = group_symmetrization(c, group_ambient);
      std::vector<Int> row;
      row.reserve(target_classes.size());
      for (const auto& target : target_classes) row.push_back(averaged.coefficient(target.rep()));
      rows.push_back(std::move(row));
    }
  report.generator_count = static_cast<int>(rows.size());
  const auto pivots = detail::hermite_pivots(std::move(rows), report.class_count);
  report.rank = static_cast<int>(pivots.size());
  report.full_rank = report.rank == report.class_count;
  if (report.full_rank) {
    report.index = 1;
    for (const auto& p : pivots) report.index *= p;
  }
  return report;
}

}  // namespace classalg
