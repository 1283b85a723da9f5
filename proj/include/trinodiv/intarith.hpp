#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace trinodiv {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime-power factorization, primes strictly increasing. Empty for 1.
class IntFactorization {
 public:
  IntFactorization() = default;
  explicit IntFactorization(std::vector<PrimePower> factors);

  const std::vector<PrimePower>& factors() const noexcept { return factors_; }
  std::uint64_t value() const;
  std::uint64_t divisor_count() const;
  std::string to_string() const;

  friend bool operator==(const IntFactorization&, const IntFactorization&) = default;

 private:
  std::vector<PrimePower> factors_;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);
/// Trial division to 10^6, then Pollard rho (Brent). Requires n >= 1.
IntFactorization factorize(std::uint64_t n);
/// Ascending, starting with 1 and ending with n.
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(const IntFactorization& f);
std::uint64_t euler_phi(std::uint64_t n);
int moebius(std::uint64_t n);

/// Largest k with 2^k | n (n >= 1).
unsigned two_adic_valuation(std::uint64_t n);

}  // namespace trinodiv
