#include <random>
#include <stdexcept>

#include <gmpxx.h>
#include <gtest/gtest.h>

#include "cubres/matrix.hpp"
#include "oracles.hpp"

using namespace cubres;

namespace {

std::vector<std::int8_t> flatten(const std::vector<std::vector<int>>& rows) {
  std::vector<std::int8_t> out;
  for (const auto& row : rows)
    for (const int v : row) out.push_back(static_cast<std::int8_t>(v));
  return out;
}

// The 10x10 matrix [(j-i+4)/11] as printed in the worked example.
const std::vector<std::vector<int>> kM10 = {
    {1, 1, 1, 1, 1, 1, 1, 0, 1, 1}, {1, 1, 1, 1, 1, 1, 1, 1, 0, 1},
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 0}, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {1, 0, 1, 1, 1, 1, 1, 1, 1, 1},
    {1, 1, 0, 1, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 0, 1, 1, 1, 1, 1, 1},
    {1, 1, 1, 1, 0, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 0, 1, 1, 1, 1},
};

}  // namespace

TEST(EntryValue, WorkedEntries) {
  const Prime p7 = make_prime(7);
  EXPECT_EQ(entry_value(DiffPlusC{0}, p7, 1, 2), SymbolValue::One);
  EXPECT_EQ(entry_value(DiffPlusC{0}, p7, 1, 3), SymbolValue::MinusOne);
  EXPECT_EQ(entry_value(DiffPlusC{4}, make_prime(11), 1, 8), SymbolValue::Zero);
  for (const std::int64_t p : {5, 7, 11, 13}) {
    for (std::int64_t k = 1; k < 30; ++k) EXPECT_EQ(entry_value(DiffPlusC{0}, make_prime(p), k, k), SymbolValue::Zero);
  }
}

TEST(EntryValue, RejectsBadIndicesAndExponent) {
  const Prime p = make_prime(7);
  EXPECT_THROW(entry_value(DiffPlusC{0}, p, 0, 1), std::invalid_argument);
  EXPECT_THROW(entry_value(DiffPlusC{0}, p, 1, 0), std::invalid_argument);
  EXPECT_THROW(entry_value(EvenPowerPlusC{0, 1}, p, 1, 1), std::invalid_argument);
}

TEST(EntryValue, SumFormula) {
  const Prime p = make_prime(7);
  // (1 + 1 + 5) = 7 = 0, (1 + 2 + 0) = 3 is a nonresidue mod 7.
  EXPECT_EQ(entry_value(SumPlusC{5}, p, 1, 1), SymbolValue::Zero);
  EXPECT_EQ(entry_value(SumPlusC{0}, p, 1, 2), SymbolValue::MinusOne);
  EXPECT_EQ(entry_value(SumPlusC{-2}, p, 4, 4), entry_value(SumPlusC{0}, p, 3, 3));
}

TEST(EntryValue, EvenPowerMatchesExactIntegerArithmetic) {
  // Reduce-then-exponentiate against exact big-integer evaluation.
  for (const std::int64_t pv : {5, 7, 11, 13, 17, 29}) {
    const Prime p = make_prime(pv);
    for (std::int64_t t = 1; t <= 12; ++t) {
      for (std::int64_t c = -pv; c <= pv; c += 3) {
        for (std::int64_t i = 1; i <= 6; ++i) {
          for (std::int64_t j = 1; j <= 6; ++j) {
            mpz_class arg;
            mpz_pow_ui(arg.get_mpz_t(), mpz_class(static_cast<long>(j - i)).get_mpz_t(),
                       static_cast<unsigned long>(2 * t));
            arg += static_cast<long>(c);
            const auto r = static_cast<std::int64_t>(mpz_fdiv_ui(arg.get_mpz_t(), static_cast<unsigned long>(pv)));
            ASSERT_EQ(formula_argument(EvenPowerPlusC{t, c}, p, i, j), r);
          }
        }
      }
    }
  }
}

TEST(EntryValue, HugeExponentStaysCheap) {
  const Prime p = make_prime(11);
  // (j-i)^(2t) with t = 10^15: Fermat gives d^(2t) = d^(2t mod 10).
  const std::int64_t t = 1'000'000'000'000'000;
  for (std::int64_t d = 1; d < 11; ++d) {
    const std::int64_t reduced = pow_mod(d, (2 * static_cast<std::uint64_t>(t)) % 10, 11);
    EXPECT_EQ(formula_argument(EvenPowerPlusC{t, 0}, p, 1, 1 + d), reduced);
  }
}

TEST(BuildMatrix, SmallWorkedMatrix) {
  const ResidueMatrix m = build_matrix(DiffPlusC{0}, make_prime(7), 3);
  EXPECT_EQ(m.entries(), flatten({{0, 1, -1}, {1, 0, 1}, {-1, 1, 0}}));
  EXPECT_EQ(m.to_text(), "0 1 -1\n1 0 1\n-1 1 0\n");
  EXPECT_EQ(m.at(1, 3), SymbolValue::MinusOne);
  EXPECT_THROW(m.at(0, 1), std::out_of_range);
  EXPECT_THROW(m.at(4, 1), std::out_of_range);
}

TEST(BuildMatrix, TenByTenWorkedMatrix) {
  const ResidueMatrix m = build_matrix(DiffPlusC{4}, make_prime(11), 10);
  EXPECT_EQ(m.entries(), flatten(kM10));
  EXPECT_EQ(m.prime().value(), 11);
  EXPECT_EQ(m.formula(), FormulaSpec{DiffPlusC{4}});
}

TEST(BuildMatrix, CompleteGraphAdjacency) {
  const ResidueMatrix m = build_matrix(DiffPlusC{0}, make_prime(11), 4);
  for (std::size_t i = 1; i <= 4; ++i)
    for (std::size_t j = 1; j <= 4; ++j) EXPECT_EQ(to_int(m.at(i, j)), i == j ? 0 : 1);
}

TEST(BuildMatrix, RejectsOrderZero) {
  EXPECT_THROW(build_matrix(DiffPlusC{0}, make_prime(7), 0), std::invalid_argument);
  EXPECT_THROW(build_matrix(DiffPlusC{0}, make_prime(7), -3), std::invalid_argument);
}

TEST(MatricesEqual, Cases) {
  const Prime p = make_prime(11);
  EXPECT_TRUE(matrices_equal(build_matrix(DiffPlusC{1}, p, 5), build_matrix(CubeDiffPlusOne{}, p, 5)));
  const auto a = build_matrix(DiffPlusC{0}, p, 3);
  EXPECT_TRUE(matrices_equal(a, a));
  EXPECT_FALSE(matrices_equal(a, build_matrix(DiffPlusC{1}, p, 3)));
  EXPECT_FALSE(matrices_equal(a, build_matrix(DiffPlusC{0}, p, 4)));
  // Metadata is ignored: the same entries from different primes compare equal.
  EXPECT_TRUE(matrices_equal(build_matrix(DiffPlusC{1}, p, 1), build_matrix(DiffPlusC{1}, make_prime(5), 1)));
}

TEST(BuildMatrix, EntriesAreTernaryAndMatchEntryValue) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> cdist(-50, 50);
  for (const std::int64_t pv : {5, 7, 11, 13, 17, 19}) {
    const Prime p = make_prime(pv);
    for (int trial = 0; trial < 20; ++trial) {
      const std::int64_t c = cdist(rng);
      const FormulaSpec formulas[] = {DiffPlusC{c}, SumPlusC{c}, CubeDiffPlusOne{}, EvenPowerPlusC{1 + trial % 4, c}};
      for (const FormulaSpec& f : formulas) {
        const auto m = build_matrix(f, p, 9);
        for (std::size_t i = 1; i <= 9; ++i)
          for (std::size_t j = 1; j <= 9; ++j) {
            const int v = to_int(m.at(i, j));
            ASSERT_TRUE(v >= -1 && v <= 1);
            ASSERT_EQ(m.at(i, j), entry_value(f, p, static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)));
          }
      }
    }
  }
}

TEST(BuildMatrix, DifferenceFormulasAreDiagonalConstant) {
  for (const std::int64_t pv : {5, 7, 11, 13}) {
    const Prime p = make_prime(pv);
    for (std::int64_t c = 0; c < pv; ++c) {
      for (const FormulaSpec& f : {FormulaSpec{DiffPlusC{c}}, FormulaSpec{EvenPowerPlusC{2, c}}, FormulaSpec{CubeDiffPlusOne{}}}) {
        ASSERT_TRUE(is_difference_based(f));
        const auto m = build_matrix(f, p, 2 * pv + 3);
        const std::size_t n = m.order();
        for (std::size_t i = 1; i < n; ++i)
          for (std::size_t j = 1; j < n; ++j) ASSERT_EQ(m.at(i, j), m.at(i + 1, j + 1));
        // Rows i and i + p coincide.
        for (std::size_t i = 1; i + static_cast<std::size_t>(pv) <= n; ++i)
          for (std::size_t j = 1; j <= n; ++j) ASSERT_EQ(m.at(i, j), m.at(i + static_cast<std::size_t>(pv), j));
      }
    }
  }
  EXPECT_FALSE(is_difference_based(SumPlusC{0}));
}

TEST(BuildMatrix, ShiftIsPeriodicInC) {
  for (const std::int64_t pv : {5, 7, 11, 13}) {
    const Prime p = make_prime(pv);
    for (std::int64_t c = -2 * pv; c <= 2 * pv; ++c) {
      ASSERT_TRUE(matrices_equal(build_matrix(DiffPlusC{c}, p, 8), build_matrix(DiffPlusC{c + pv}, p, 8)));
      ASSERT_TRUE(matrices_equal(build_matrix(SumPlusC{c}, p, 8), build_matrix(SumPlusC{c + pv}, p, 8)));
    }
  }
}

TEST(BuildMatrix, CubeFormulaAgreesWithShiftOneForThreeKPlusTwo) {
  for (const std::int64_t pv : cubres::odd_primes_between(5, 99)) {
    const Prime p = make_prime(pv);
    if (!p.is_3k2()) continue;
    for (std::int64_t n = 2; n <= pv - 2; ++n) {
      ASSERT_TRUE(matrices_equal(build_matrix(DiffPlusC{1}, p, n), build_matrix(CubeDiffPlusOne{}, p, n)))
          << "p=" << pv << " n=" << n;
    }
  }
}

TEST(BuildMatrix, CubeFormulaDiffersSomewhereForThreeKPlusOne) {
  // The equality needs x -> x^3 to be a bijection; for p = 7 it is not.
  const Prime p = make_prime(7);
  EXPECT_FALSE(matrices_equal(build_matrix(DiffPlusC{1}, p, 5), build_matrix(CubeDiffPlusOne{}, p, 5)));
}

TEST(AllOnesColumns, TenByTen) {
  const auto m = build_matrix(DiffPlusC{4}, make_prime(11), 10);
  EXPECT_EQ(all_ones_columns(m), (std::vector<std::size_t>{7}));
  EXPECT_FALSE(is_all_ones(m));
  EXPECT_TRUE(is_all_ones(build_matrix(DiffPlusC{3}, make_prime(11), 1)));
}

TEST(Describe, Formulas) {
  EXPECT_EQ(describe(DiffPlusC{4}), "[(j-i+4)/p]");
  EXPECT_EQ(describe(DiffPlusC{0}), "[(j-i)/p]");
  EXPECT_EQ(describe(SumPlusC{-2}), "[(j+i-2)/p]");
  EXPECT_EQ(describe(CubeDiffPlusOne{}), "[((j-i)^3+1)/p]");
  EXPECT_EQ(describe(EvenPowerPlusC{3, 5}), "[((j-i)^6+5)/p]");
}
