#include <algorithm>
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "cubres/residue.hpp"
#include "oracles.hpp"

using namespace cubres;
using cubres::testing::brute_cubic_symbol;
using cubres::testing::brute_legendre;
using cubres::testing::brute_order;

namespace {

std::vector<Prime> odd_primes_below(std::int64_t bound) {
  std::vector<Prime> out;
  for (const std::int64_t v : odd_primes_between(3, bound - 1)) out.emplace_back(v);
  return out;
}

}  // namespace

TEST(IsPrime, SmallValues) {
  EXPECT_TRUE(is_prime(11));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(0));
  EXPECT_TRUE(is_prime(2147483647));  // 2^31 - 1
  EXPECT_FALSE(is_prime(2147483645));
}

TEST(IsPrime, AgreesWithTrialDivisionOracle) {
  for (std::int64_t m = 1; m < 5000; ++m) {
    ASSERT_EQ(is_prime(m), cubres::testing::trial_division_prime(m)) << m;
  }
}

TEST(Prime, Classification) {
  const Prime p11 = make_prime(11);
  EXPECT_EQ(p11.value(), 11);
  EXPECT_EQ(p11.mod3(), 2);
  EXPECT_EQ(p11.mod4(), 3);
  EXPECT_EQ(p11.mod12(), 11);

  const Prime p7 = make_prime(7);
  EXPECT_EQ(p7.mod3(), 1);
  EXPECT_EQ(p7.mod4(), 3);
  EXPECT_EQ(p7.mod12(), 7);
  EXPECT_TRUE(p7.is_3k1());
  EXPECT_TRUE(p11.is_3k2());
}

TEST(Prime, Mod12DeterminesMod3AndMod4) {
  for (const Prime& p : odd_primes_below(1000)) {
    if (p.value() == 3) continue;
    EXPECT_EQ(p.mod12() % 3, p.mod3());
    EXPECT_EQ(p.mod12() % 4, p.mod4());
    EXPECT_TRUE(p.mod12() == 1 || p.mod12() == 5 || p.mod12() == 7 || p.mod12() == 11);
  }
}

TEST(Prime, Rejections) {
  EXPECT_THROW(make_prime(9), std::invalid_argument);
  EXPECT_THROW(make_prime(2), std::invalid_argument);
  EXPECT_THROW(make_prime(4), std::invalid_argument);
  EXPECT_THROW(make_prime(1), std::invalid_argument);
  EXPECT_THROW(make_prime(-7), std::invalid_argument);
  EXPECT_THROW(make_prime(kModulusLimit + 11), std::invalid_argument);
  EXPECT_NO_THROW(make_prime(3));
  EXPECT_THROW(make_prime(3, PrimeUse::ThreeKForm), std::invalid_argument);
  EXPECT_NO_THROW(make_prime(5, PrimeUse::ThreeKForm));
}

TEST(CubicSymbol, WorkedValues) {
  EXPECT_EQ(cubic_residue_symbol(12, make_prime(13)), SymbolValue::One);
  EXPECT_EQ(cubic_residue_symbol(2, make_prime(7)), SymbolValue::MinusOne);
  EXPECT_EQ(cubic_residue_symbol(0, make_prime(7)), SymbolValue::Zero);
  EXPECT_EQ(cubic_residue_symbol(5, make_prime(11)), SymbolValue::One);
}

TEST(CubicSymbol, ReducesNegativeAndOversizedArguments) {
  const Prime p = make_prime(7);
  EXPECT_EQ(cubic_residue_symbol(-1, p), SymbolValue::One);   // -1 = 6
  EXPECT_EQ(cubic_residue_symbol(9, p), SymbolValue::MinusOne);  // 9 = 2
  EXPECT_EQ(cubic_residue_symbol(-14, p), SymbolValue::Zero);
  EXPECT_EQ(cubic_residue_symbol(INT64_MIN + 1, p),
            symbol_from_int(brute_cubic_symbol(reduce_mod(INT64_MIN + 1, 7), 7)));
}

TEST(CubicSymbol, PrimeThreeEveryNonzeroClassIsACube) {
  const Prime p = make_prime(3);
  EXPECT_EQ(cubic_residue_symbol(0, p), SymbolValue::Zero);
  EXPECT_EQ(cubic_residue_symbol(1, p), SymbolValue::One);
  EXPECT_EQ(cubic_residue_symbol(2, p), SymbolValue::One);
}

TEST(CubicSymbol, FastPathMatchesBruteForceBelow200) {
  for (const Prime& p : odd_primes_below(200)) {
    for (std::int64_t a = 0; a < p.value(); ++a) {
      ASSERT_EQ(to_int(cubic_residue_symbol(a, p)), brute_cubic_symbol(a, p.value()))
          << "a=" << a << " p=" << p.value();
    }
  }
}

TEST(CubicSymbol, Periodicity) {
  for (const Prime& p : odd_primes_below(100)) {
    const std::int64_t m = p.value();
    for (std::int64_t a = -2 * m; a <= 2 * m; ++a) {
      ASSERT_EQ(cubic_residue_symbol(a, p), cubic_residue_symbol(a + m, p));
      ASSERT_EQ(cubic_residue_symbol(a, p), cubic_residue_symbol(a - 3 * m, p));
    }
  }
}

TEST(CubicSymbol, CubesCollapseToOne) {
  for (const Prime& p : odd_primes_below(100)) {
    for (std::int64_t a = 1; a < p.value(); ++a) {
      ASSERT_EQ(cubic_residue_symbol(a * a * a, p), SymbolValue::One) << a << " mod " << p.value();
    }
  }
}

TEST(CubicSymbol, NegationSymmetry) {
  for (const Prime& p : odd_primes_below(100)) {
    for (std::int64_t a = -2 * p.value(); a <= 2 * p.value(); ++a) {
      ASSERT_EQ(cubic_residue_symbol(a, p), cubic_residue_symbol(-a, p));
    }
  }
}

TEST(CubicSymbol, AllOnesForThreeKPlusTwo) {
  for (const Prime& p : odd_primes_below(500)) {
    if (!p.is_3k2()) continue;
    for (std::int64_t a = 1; a < p.value(); ++a) ASSERT_EQ(cubic_residue_symbol(a, p), SymbolValue::One);
  }
}

TEST(CubicResidueSet, WorkedSets) {
  EXPECT_EQ(cubic_residue_set(make_prime(7)), (std::vector<std::int64_t>{1, 6}));
  EXPECT_EQ(cubic_residue_set(make_prime(13)).size(), 4U);
  const auto eleven = cubic_residue_set(make_prime(11));
  EXPECT_EQ(eleven, (std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
}

TEST(CubicResidueSet, CountsByResidueClass) {
  for (const Prime& p : odd_primes_below(500)) {
    const auto set = cubic_residue_set(p);
    if (p.is_3k1()) {
      EXPECT_EQ(static_cast<std::int64_t>(set.size()), (p.value() - 1) / 3) << p.value();
    } else {
      EXPECT_EQ(static_cast<std::int64_t>(set.size()), p.value() - 1) << p.value();
    }
    for (const std::int64_t a : set) EXPECT_EQ(cubic_residue_symbol(a, p), SymbolValue::One);
  }
}

TEST(CubeRootWitness, SmallestRoot) {
  EXPECT_EQ(cube_root_witness(12, make_prime(13)), 4);
  EXPECT_EQ(cube_root_witness(2, make_prime(7)), std::nullopt);
  EXPECT_EQ(cube_root_witness(0, make_prime(7)), 0);
}

TEST(Legendre, WorkedValues) {
  EXPECT_EQ(legendre_symbol(2, make_prime(7)), SymbolValue::One);
  EXPECT_EQ(legendre_symbol(3, make_prime(7)), SymbolValue::MinusOne);
  EXPECT_EQ(legendre_symbol(0, make_prime(11)), SymbolValue::Zero);
}

TEST(Legendre, MatchesSquareSearch) {
  for (const Prime& p : odd_primes_below(200)) {
    for (std::int64_t a = -p.value(); a < p.value(); ++a) {
      ASSERT_EQ(to_int(legendre_symbol(a, p)), brute_legendre(a, p.value()));
    }
  }
}

TEST(Legendre, MinusOneByClassModFour) {
  for (const Prime& p : odd_primes_below(500)) {
    EXPECT_EQ(legendre_symbol(-1, p), p.mod4() == 1 ? SymbolValue::One : SymbolValue::MinusOne);
  }
}

TEST(PrimitiveRoot, SmallestRoots) {
  EXPECT_EQ(primitive_root(make_prime(11)), 2);
  EXPECT_EQ(primitive_root(make_prime(7)), 3);
  EXPECT_EQ(primitive_root(make_prime(17)), 3);
  EXPECT_EQ(next_primitive_root(make_prime(11), 2), 6);
}

TEST(PrimitiveRoot, SmallestByBruteForceOrder) {
  for (const Prime& p : odd_primes_below(300)) {
    const std::int64_t r = primitive_root(p);
    EXPECT_EQ(brute_order(r, p.value()), p.value() - 1);
    for (std::int64_t g = 2; g < r; ++g) EXPECT_LT(brute_order(g, p.value()), p.value() - 1);
  }
}

TEST(PrimitiveRoot, PowersEnumerateEveryNonzeroClass) {
  for (const Prime& p : odd_primes_below(300)) {
    const std::int64_t r = primitive_root(p);
    std::set<std::int64_t> seen;
    for (std::int64_t e = 1; e < p.value(); ++e) seen.insert(pow_mod(r, static_cast<std::uint64_t>(e), p.value()));
    EXPECT_EQ(static_cast<std::int64_t>(seen.size()), p.value() - 1);
    EXPECT_EQ(*seen.begin(), 1);
    EXPECT_EQ(*seen.rbegin(), p.value() - 1);
  }
}

TEST(DistinctPrimeFactors, Examples) {
  EXPECT_EQ(distinct_prime_factors(1), std::vector<std::int64_t>{});
  EXPECT_EQ(distinct_prime_factors(360), (std::vector<std::int64_t>{2, 3, 5}));
  EXPECT_EQ(distinct_prime_factors(97), std::vector<std::int64_t>{97});
  EXPECT_THROW(distinct_prime_factors(0), std::invalid_argument);
}

TEST(PowMod, LargeModulus) {
  const std::int64_t m = 2147483647;
  // Fermat: a^(m-1) = 1 for prime m.
  EXPECT_EQ(pow_mod(123456789, static_cast<std::uint64_t>(m - 1), m), 1);
  EXPECT_EQ(pow_mod(-1, 3, 7), 6);
  EXPECT_EQ(pow_mod(5, 0, 7), 1);
}
