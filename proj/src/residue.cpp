#include "cubres/residue.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubres {

bool is_prime(std::int64_t m) {
  if (m < 2) return false;
  if (m < 4) return true;
  if (m % 2 == 0 || m % 3 == 0) return false;
  for (std::int64_t d = 5; d * d <= m; d += 6) {
    if (m % d == 0 || m % (d + 2) == 0) return false;
  }
  return true;
}

Prime::Prime(std::int64_t value, PrimeUse use) : value_(value) {
  if (value < 3 || value >= kModulusLimit) {
    throw std::invalid_argument("modulus " + std::to_string(value) +
                                " is not an odd prime in [3, 2^31)");
  }
  if (!is_prime(value)) {
    throw std::invalid_argument(std::to_string(value) + " is not prime");
  }
  if (use == PrimeUse::ThreeKForm && value == 3) {
    throw std::invalid_argument("3 is neither of the form 3k+1 nor 3k+2");
  }
  mod3_ = static_cast<int>(value % 3);
  mod4_ = static_cast<int>(value % 4);
  mod12_ = static_cast<int>(value % 12);
}

Prime make_prime(std::int64_t m, PrimeUse use) { return Prime(m, use); }

std::vector<std::int64_t> odd_primes_between(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t m = std::max<std::int64_t>(lo, 3); m <= hi; ++m) {
    if (m % 2 == 1 && is_prime(m)) out.push_back(m);
  }
  return out;
}

SymbolValue symbol_from_int(int v) {
  switch (v) {
    case -1: return SymbolValue::MinusOne;
    case 0: return SymbolValue::Zero;
    case 1: return SymbolValue::One;
    default: throw std::invalid_argument("symbol value out of range: " + std::to_string(v));
  }
}

std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t m) {
  // m < 2^31 keeps every product below 2^62.
  std::int64_t result = 1 % m;
  std::int64_t b = reduce_mod(base, m);
  while (exp > 0) {
    if (exp & 1U) result = result * b % m;
    b = b * b % m;
    exp >>= 1U;
  }
  return result;
}

SymbolValue cubic_residue_symbol(std::int64_t a, const Prime& p) {
  const std::int64_t r = reduce_mod(a, p.value());
  if (r == 0) return SymbolValue::Zero;
  if (!p.is_3k1()) return SymbolValue::One;
  const auto exponent = static_cast<std::uint64_t>((p.value() - 1) / 3);
  return pow_mod(r, exponent, p.value()) == 1 ? SymbolValue::One : SymbolValue::MinusOne;
}

std::vector<std::int64_t> cubic_residue_set(const Prime& p) {
  const std::int64_t m = p.value();
  std::vector<bool> hit(static_cast<std::size_t>(m), false);
  for (std::int64_t x = 1; x < m; ++x) {
    hit[static_cast<std::size_t>(x * x % m * x % m)] = true;
  }
  std::vector<std::int64_t> out;
  for (std::int64_t a = 1; a < m; ++a) {
    if (hit[static_cast<std::size_t>(a)]) out.push_back(a);
  }
  return out;
}

std::optional<std::int64_t> cube_root_witness(std::int64_t a, const Prime& p) {
  const std::int64_t m = p.value();
  const std::int64_t r = reduce_mod(a, m);
  for (std::int64_t x = 0; x < m; ++x) {
    if (x * x % m * x % m == r) return x;
  }
  return std::nullopt;
}

SymbolValue legendre_symbol(std::int64_t a, const Prime& p) {
  const std::int64_t r = reduce_mod(a, p.value());
  if (r == 0) return SymbolValue::Zero;
  const auto exponent = static_cast<std::uint64_t>((p.value() - 1) / 2);
  return pow_mod(r, exponent, p.value()) == 1 ? SymbolValue::One : SymbolValue::MinusOne;
}

std::vector<std::int64_t> distinct_prime_factors(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("distinct_prime_factors needs n >= 1");
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_primitive_root(std::int64_t g, const Prime& p) {
  const std::int64_t m = p.value();
  const std::int64_t r = reduce_mod(g, m);
  if (r == 0) return false;
  for (const std::int64_t q : distinct_prime_factors(m - 1)) {
    if (pow_mod(r, static_cast<std::uint64_t>((m - 1) / q), m) == 1) return false;
  }
  return true;
}

std::optional<std::int64_t> next_primitive_root(const Prime& p, std::int64_t after) {
  for (std::int64_t g = std::max<std::int64_t>(after + 1, 2); g < p.value(); ++g) {
    if (is_primitive_root(g, p)) return g;
  }
  return std::nullopt;
}

std::int64_t primitive_root(const Prime& p) {
  // Every odd prime has one in [2, p-1].
  return *next_primitive_root(p, 1);
}

std::string to_string(const Prime& p) {
  return "Prime{value:" + std::to_string(p.value()) + ", mod3:" + std::to_string(p.mod3()) +
         ", mod4:" + std::to_string(p.mod4()) + ", mod12:" + std::to_string(p.mod12()) + "}";
}

}  // namespace cubres
