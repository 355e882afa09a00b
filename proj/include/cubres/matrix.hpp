#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "cubres/residue.hpp"

namespace cubres {

/// Entry argument j - i + c.
struct DiffPlusC {
  std::int64_t c = 0;
  friend bool operator==(const DiffPlusC&, const DiffPlusC&) = default;
};

/// Entry argument j + i + c.
struct SumPlusC {
  std::int64_t c = 0;
  friend bool operator==(const SumPlusC&, const SumPlusC&) = default;
};

/// Entry argument (j - i)^3 + 1.
struct CubeDiffPlusOne {
  friend bool operator==(const CubeDiffPlusOne&, const CubeDiffPlusOne&) = default;
};

/// Entry argument (j - i)^(2t) + c, t >= 1.
struct EvenPowerPlusC {
  std::int64_t t = 1;
  std::int64_t c = 0;
  friend bool operator==(const EvenPowerPlusC&, const EvenPowerPlusC&) = default;
};

using FormulaSpec = std::variant<DiffPlusC, SumPlusC, CubeDiffPlusOne, EvenPowerPlusC>;

/// Human-readable form such as "[(j-i+4)/p]".
std::string describe(const FormulaSpec& formula);

/// True for formulas whose entry depends only on j - i.
bool is_difference_based(const FormulaSpec& formula);

/// The formula argument at 1-based (i, j), reduced into [0, p).
/// Throws std::invalid_argument for i or j < 1 or an EvenPowerPlusC with t < 1.
std::int64_t formula_argument(const FormulaSpec& formula, const Prime& p, std::int64_t i,
                              std::int64_t j);

SymbolValue entry_value(const FormulaSpec& formula, const Prime& p, std::int64_t i,
                        std::int64_t j);

/// Square matrix over {-1, 0, 1} built from one formula and one prime.
/// Indices passed to at() are 1-based, matching the formulas.
class ResidueMatrix {
 public:
  ResidueMatrix(const FormulaSpec& formula, const Prime& p, std::size_t order);

  std::size_t order() const noexcept { return order_; }
  const Prime& prime() const noexcept { return prime_; }
  const FormulaSpec& formula() const noexcept { return formula_; }

  SymbolValue at(std::size_t i, std::size_t j) const;

  /// Row-major entries as plain integers.
  const std::vector<std::int8_t>& entries() const noexcept { return entries_; }

  /// Rows of space-separated entries, one line per row.
  std::string to_text() const;

 private:
  FormulaSpec formula_;
  Prime prime_;
  std::size_t order_;
  std::vector<std::int8_t> entries_;
};

/// Throws std::invalid_argument when n < 1.
ResidueMatrix build_matrix(const FormulaSpec& formula, const Prime& p, std::int64_t n);

/// Same order and same entries; prime and formula are ignored.
bool matrices_equal(const ResidueMatrix& a, const ResidueMatrix& b);

bool is_all_ones(const ResidueMatrix& m);

/// 1-based indices of columns whose entries are all 1.
std::vector<std::size_t> all_ones_columns(const ResidueMatrix& m);

}  // namespace cubres
