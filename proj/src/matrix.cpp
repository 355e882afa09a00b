#include "cubres/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubres {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string signed_term(std::int64_t c) {
  if (c == 0) return "";
  return (c > 0 ? "+" : "") + std::to_string(c);
}

}  // namespace

std::string describe(const FormulaSpec& formula) {
  return std::visit(
      overloaded{
          [](const DiffPlusC& f) { return "[(j-i" + signed_term(f.c) + ")/p]"; },
          [](const SumPlusC& f) { return "[(j+i" + signed_term(f.c) + ")/p]"; },
          [](const CubeDiffPlusOne&) { return std::string("[((j-i)^3+1)/p]"); },
          [](const EvenPowerPlusC& f) {
            return "[((j-i)^" + std::to_string(2 * f.t) + signed_term(f.c) + ")/p]";
          },
      },
      formula);
}

bool is_difference_based(const FormulaSpec& formula) {
  return !std::holds_alternative<SumPlusC>(formula);
}

std::int64_t formula_argument(const FormulaSpec& formula, const Prime& p, std::int64_t i,
                              std::int64_t j) {
  if (i < 1 || j < 1) throw std::invalid_argument("matrix indices are 1-based");
  const std::int64_t m = p.value();
  const std::int64_t diff = reduce_mod(j - i, m);
  return std::visit(
      overloaded{
          [&](const DiffPlusC& f) { return reduce_mod(diff + reduce_mod(f.c, m), m); },
          [&](const SumPlusC& f) {
            return reduce_mod(reduce_mod(i + j, m) + reduce_mod(f.c, m), m);
          },
          [&](const CubeDiffPlusOne&) { return reduce_mod(pow_mod(diff, 3, m) + 1, m); },
          [&](const EvenPowerPlusC& f) {
            if (f.t < 1) throw std::invalid_argument("even-power exponent t must be >= 1");
            const auto exponent = 2 * static_cast<std::uint64_t>(f.t);
            return reduce_mod(pow_mod(diff, exponent, m) + reduce_mod(f.c, m), m);
          },
      },
      formula);
}

SymbolValue entry_value(const FormulaSpec& formula, const Prime& p, std::int64_t i,
                        std::int64_t j) {
  return cubic_residue_symbol(formula_argument(formula, p, i, j), p);
}

ResidueMatrix::ResidueMatrix(const FormulaSpec& formula, const Prime& p, std::size_t order)
    : formula_(formula), prime_(p), order_(order) {
  if (order == 0) throw std::invalid_argument("matrix order must be >= 1");
  entries_.resize(order * order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      const auto v = entry_value(formula, p, static_cast<std::int64_t>(i + 1),
                                 static_cast<std::int64_t>(j + 1));
      entries_[i * order + j] = static_cast<std::int8_t>(to_int(v));
    }
  }
}

SymbolValue ResidueMatrix::at(std::size_t i, std::size_t j) const {
  if (i < 1 || j < 1 || i > order_ || j > order_) {
    throw std::out_of_range("matrix index out of range");
  }
  return symbol_from_int(entries_[(i - 1) * order_ + (j - 1)]);
}

std::string ResidueMatrix::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(entries_[i * order_ + j]);
    }
    out += '\n';
  }
  return out;
}

ResidueMatrix build_matrix(const FormulaSpec& formula, const Prime& p, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("matrix order must be >= 1");
  return ResidueMatrix(formula, p, static_cast<std::size_t>(n));
}

bool matrices_equal(const ResidueMatrix& a, const ResidueMatrix& b) {
  return a.order() == b.order() && a.entries() == b.entries();
}

bool is_all_ones(const ResidueMatrix& m) {
  return std::all_of(m.entries().begin(), m.entries().end(), [](std::int8_t v) { return v == 1; });
}

std::vector<std::size_t> all_ones_columns(const ResidueMatrix& m) {
  std::vector<std::size_t> cols;
  const std::size_t n = m.order();
  for (std::size_t j = 0; j < n; ++j) {
    bool ones = true;
    for (std::size_t i = 0; i < n && ones; ++i) ones = m.entries()[i * n + j] == 1;
    if (ones) cols.push_back(j + 1);
  }
  return cols;
}

}  // namespace cubres
