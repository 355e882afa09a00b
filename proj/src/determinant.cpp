#include "cubres/determinant.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace cubres {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : n_(rows.size()), data_() {
  data_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("IntMatrix rows must form a square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix::IntMatrix(const ResidueMatrix& m)
    : n_(m.order()), data_(m.entries().begin(), m.entries().end()) {}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < n_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < n_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

namespace {

void require_square(const IntMatrix& m) {
  if (m.order() == 0) throw std::invalid_argument("determinant of an empty matrix");
}

[[noreturn]] void inexact_division() {
  throw std::logic_error("Bareiss elimination produced an inexact division");
}

// Entries are kept within +-2^62 so products stay below 2^124 and every
// numerator fits in 128 bits. Returns nullopt once a minor leaves that range.
std::optional<std::int64_t> bareiss_word(const IntMatrix& m) {
  __extension__ using i128 = __int128;
  constexpr std::int64_t bound = std::int64_t{1} << 62;

  IntMatrix a = m;
  const std::size_t n = a.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) > bound || a(i, j) < -bound) return std::nullopt;
  std::int64_t prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      negate = !negate;
    }
    const i128 pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const i128 lead = a(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        const i128 num = static_cast<i128>(a(i, j)) * pivot - lead * static_cast<i128>(a(k, j));
        i128 q;
        if (num >= -bound && num <= bound) {
          // 64-bit division is much cheaper than the 128-bit one.
          const auto small = static_cast<std::int64_t>(num);
          if (small % prev != 0) inexact_division();
          q = small / prev;
        } else {
          if (num % prev != 0) inexact_division();
          q = num / prev;
        }
        if (q < -bound || q > bound) return std::nullopt;
        a(i, j) = static_cast<std::int64_t>(q);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

ExactInt cofactor(const std::vector<std::int64_t>& a, std::size_t n) {
  if (n == 1) return ExactInt(static_cast<long>(a[0]));
  ExactInt total = 0;
  std::vector<std::int64_t> minor((n - 1) * (n - 1));
  for (std::size_t col = 0; col < n; ++col) {
    if (a[col] == 0) continue;
    std::size_t w = 0;
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) minor[w++] = a[i * n + j];
    ExactInt term = cofactor(minor, n - 1) * static_cast<long>(a[col]);
    if (col % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

}  // namespace

ExactInt determinant_bigint(const IntMatrix& m) {
  require_square(m);
  const std::size_t n = m.order();
  std::vector<ExactInt> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = static_cast<long>(m(i, j));
  auto at = [&](std::size_t i, std::size_t j) -> ExactInt& { return a[i * n + j]; };

  ExactInt prev = 1;
  ExactInt num;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(at(k, k)) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(at(r, k)) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        if (!mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t())) inexact_division();
        mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  ExactInt det = at(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

ExactInt determinant(const IntMatrix& m) {
  require_square(m);
  if (const auto word = bareiss_word(m)) return ExactInt(static_cast<long>(*word));
  return determinant_bigint(m);
}

ExactInt determinant(const ResidueMatrix& m) { return determinant(IntMatrix(m)); }

ExactInt determinant_oracle(const IntMatrix& m) {
  require_square(m);
  if (m.order() > kOracleMaxOrder) {
    throw std::invalid_argument("cofactor oracle is limited to order 7");
  }
  std::vector<std::int64_t> flat(m.order() * m.order());
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j) flat[i * m.order() + j] = m(i, j);
  return cofactor(flat, m.order());
}

}  // namespace cubres
