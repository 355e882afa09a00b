#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cubres {

/// Largest modulus accepted anywhere in the library (exclusive).
inline constexpr std::int64_t kModulusLimit = std::int64_t{1} << 31;

/// Deterministic trial division. Exact for 1 <= m < kModulusLimit.
bool is_prime(std::int64_t m);

/// What a Prime is going to be used for. Theorem and table code needs a
/// 3k+1 or 3k+2 prime, which excludes 3; the symbol itself is defined for 3.
enum class PrimeUse { Symbol, ThreeKForm };

class Prime {
 public:
  /// Throws std::invalid_argument for non-primes, 2, values outside
  /// [3, kModulusLimit), and 3 when `use` is ThreeKForm.
  explicit Prime(std::int64_t value, PrimeUse use = PrimeUse::Symbol);

  std::int64_t value() const noexcept { return value_; }
  int mod3() const noexcept { return mod3_; }
  int mod4() const noexcept { return mod4_; }
  int mod12() const noexcept { return mod12_; }

  bool is_3k1() const noexcept { return mod3_ == 1; }
  bool is_3k2() const noexcept { return mod3_ == 2; }

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  std::int64_t value_;
  int mod3_;
  int mod4_;
  int mod12_;
};

Prime make_prime(std::int64_t m, PrimeUse use = PrimeUse::Symbol);

/// All odd primes in [lo, hi], ascending.
std::vector<std::int64_t> odd_primes_between(std::int64_t lo, std::int64_t hi);

/// Value of a cubic or quadratic residue symbol.
enum class SymbolValue : std::int8_t { MinusOne = -1, Zero = 0, One = 1 };

constexpr int to_int(SymbolValue v) noexcept { return static_cast<int>(v); }
SymbolValue symbol_from_int(int v);  // throws for values outside {-1,0,1}

/// Reduces `a` into [0, m).
constexpr std::int64_t reduce_mod(std::int64_t a, std::int64_t m) noexcept {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// base^exp mod m for m < kModulusLimit, exp >= 0.
std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t m);

/// Cubic residue symbol [a/p]. For p = 2 (mod 3) and p = 3 every nonzero
/// class is a cube; for p = 1 (mod 3) uses a^((p-1)/3) == 1 (mod p).
SymbolValue cubic_residue_symbol(std::int64_t a, const Prime& p);

/// Sorted residues a in [1, p-1] with x^3 = a (mod p) solvable, obtained by
/// cubing every nonzero class.
std::vector<std::int64_t> cubic_residue_set(const Prime& p);

/// Smallest x in [0, p-1] with x^3 = a (mod p), if any.
std::optional<std::int64_t> cube_root_witness(std::int64_t a, const Prime& p);

/// Legendre symbol (a/p) by Euler's criterion.
SymbolValue legendre_symbol(std::int64_t a, const Prime& p);

/// Distinct prime factors of n >= 1, ascending.
std::vector<std::int64_t> distinct_prime_factors(std::int64_t n);

bool is_primitive_root(std::int64_t g, const Prime& p);

/// Smallest primitive root modulo p.
std::int64_t primitive_root(const Prime& p);

/// Smallest primitive root strictly greater than `after`, if one exists
/// below p.
std::optional<std::int64_t> next_primitive_root(const Prime& p, std::int64_t after);

std::string to_string(const Prime& p);

}  // namespace cubres
