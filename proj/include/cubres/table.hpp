#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cubres/determinant.hpp"
#include "cubres/matrix.hpp"

namespace cubres {

/// Inclusive integer interval.
struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool empty() const noexcept { return hi < lo; }
  std::size_t size() const noexcept { return empty() ? 0 : static_cast<std::size_t>(hi - lo + 1); }
  bool contains(std::int64_t v) const noexcept { return lo <= v && v <= hi; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

enum class FamilyKind { DiffPlusC, SumPlusC, EvenPowerPlusC };

/// A formula family indexed by c; t is only meaningful for EvenPowerPlusC.
struct FormulaFamily {
  FamilyKind kind = FamilyKind::DiffPlusC;
  std::int64_t t = 1;

  FormulaSpec with_c(std::int64_t c) const;
  std::string name() const;
  friend bool operator==(const FormulaFamily&, const FormulaFamily&) = default;
};

enum class SignClass { Zero, Negative, Positive };

SignClass sign_classify(const ExactInt& v);

class DeterminantTable {
 public:
  DeterminantTable(FormulaFamily family, Prime prime, IntRange n_range, IntRange c_range,
                   std::vector<ExactInt> cells);

  const FormulaFamily& family() const noexcept { return family_; }
  const Prime& prime() const noexcept { return prime_; }
  const IntRange& n_range() const noexcept { return n_range_; }
  const IntRange& c_range() const noexcept { return c_range_; }

  /// Throws std::out_of_range outside the declared ranges.
  const ExactInt& cell(std::int64_t n, std::int64_t c) const;

  /// Row-major over (n, c), both ascending.
  const std::vector<ExactInt>& cells() const noexcept { return cells_; }

  friend bool operator==(const DeterminantTable&, const DeterminantTable&) = default;

 private:
  FormulaFamily family_;
  Prime prime_;
  IntRange n_range_;
  IntRange c_range_;
  std::vector<ExactInt> cells_;
};

/// Computes det(build_matrix(family.with_c(c), p, n)) for every grid cell.
/// `jobs` > 1 spreads cells over worker threads; the result does not depend
/// on it. Rejects empty ranges, n < 1, and p = 3.
DeterminantTable generate_table(const FormulaFamily& family, const Prime& p, IntRange n_range,
                                IntRange c_range, unsigned jobs = 1);

/// n in [1, p].
IntRange default_n_range(const Prime& p);
/// n in [1, p + 10].
IntRange extended_n_range(const Prime& p);
/// c in [0, 2p - 1], two horizontal periods.
IntRange default_c_range(const Prime& p);

}  // namespace cubres
