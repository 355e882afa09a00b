#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <gmpxx.h>

#include "cubres/matrix.hpp"

namespace cubres {

using ExactInt = mpz_class;

/// Dense square integer matrix, row-major, 0-based.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  explicit IntMatrix(const ResidueMatrix& m);

  std::size_t order() const noexcept { return n_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  IntMatrix transposed() const;
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::int64_t> data_;
};

/// Exact determinant by fraction-free Bareiss elimination. Runs in 64-bit
/// words while every intermediate minor fits and restarts over GMP
/// integers otherwise. Throws std::invalid_argument for order 0 and
/// std::logic_error if an elimination division is ever inexact.
ExactInt determinant(const IntMatrix& m);
ExactInt determinant(const ResidueMatrix& m);

/// Bareiss elimination carried out entirely over GMP integers.
ExactInt determinant_bigint(const IntMatrix& m);

/// Cofactor expansion along the first row. Order must be in [1, 7].
ExactInt determinant_oracle(const IntMatrix& m);

inline constexpr std::size_t kOracleMaxOrder = 7;

}  // namespace cubres
