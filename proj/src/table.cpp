#include "cubres/table.hpp"

#include <stdexcept>

#include "cubres/parallel.hpp"

namespace cubres {

FormulaSpec FormulaFamily::with_c(std::int64_t c) const {
  switch (kind) {
    case FamilyKind::DiffPlusC: return DiffPlusC{c};
    case FamilyKind::SumPlusC: return SumPlusC{c};
    case FamilyKind::EvenPowerPlusC: return EvenPowerPlusC{t, c};
  }
  throw std::logic_error("unknown formula family");
}

std::string FormulaFamily::name() const {
  switch (kind) {
    case FamilyKind::DiffPlusC: return "diff";
    case FamilyKind::SumPlusC: return "sum";
    case FamilyKind::EvenPowerPlusC: return "even-power(t=" + std::to_string(t) + ")";
  }
  return "?";
}

SignClass sign_classify(const ExactInt& v) {
  const int s = sgn(v);
  if (s == 0) return SignClass::Zero;
  return s < 0 ? SignClass::Negative : SignClass::Positive;
}

DeterminantTable::DeterminantTable(FormulaFamily family, Prime prime, IntRange n_range,
                                   IntRange c_range, std::vector<ExactInt> cells)
    : family_(family),
      prime_(prime),
      n_range_(n_range),
      c_range_(c_range),
      cells_(std::move(cells)) {
  if (cells_.size() != n_range_.size() * c_range_.size()) {
    throw std::invalid_argument("table cell count does not match its ranges");
  }
}

const ExactInt& DeterminantTable::cell(std::int64_t n, std::int64_t c) const {
  if (!n_range_.contains(n) || !c_range_.contains(c)) {
    throw std::out_of_range("table cell (" + std::to_string(n) + ", " + std::to_string(c) +
                            ") outside the grid");
  }
  const auto row = static_cast<std::size_t>(n - n_range_.lo);
  const auto col = static_cast<std::size_t>(c - c_range_.lo);
  return cells_[row * c_range_.size() + col];
}

DeterminantTable generate_table(const FormulaFamily& family, const Prime& p, IntRange n_range,
                                IntRange c_range, unsigned jobs) {
  if (n_range.empty() || c_range.empty()) throw std::invalid_argument("table ranges must be nonempty");
  if (n_range.lo < 1) throw std::invalid_argument("table orders start at 1");
  if (!p.is_3k1() && !p.is_3k2()) {
    throw std::invalid_argument("determinant tables need a prime of the form 3k+1 or 3k+2");
  }
  if (family.kind == FamilyKind::EvenPowerPlusC && family.t < 1) {
    throw std::invalid_argument("even-power exponent t must be >= 1");
  }

  const std::size_t width = c_range.size();
  const std::size_t total = n_range.size() * width;
  std::vector<ExactInt> cells(total);

  auto compute = [&](std::size_t idx) {
    const auto n = n_range.lo + static_cast<std::int64_t>(idx / width);
    const auto c = c_range.lo + static_cast<std::int64_t>(idx % width);
    cells[idx] = determinant(build_matrix(family.with_c(c), p, n));
  };

  detail::parallel_for(total, jobs, compute);
  return DeterminantTable(family, p, n_range, c_range, std::move(cells));
}

IntRange default_n_range(const Prime& p) { return {1, p.value()}; }
IntRange extended_n_range(const Prime& p) { return {1, p.value() + 10}; }
IntRange default_c_range(const Prime& p) { return {0, 2 * p.value() - 1}; }

}  // namespace cubres
