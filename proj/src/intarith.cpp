#include "trinodiv/intarith.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "trinodiv/errors.hpp"

namespace trinodiv {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialLimit = 1'000'000;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp != 0) {
    if ((exp & 1) != 0) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Brent's variant; returns a nontrivial factor of the odd composite n.
u64 pollard_rho(u64 n) {
  for (u64 c = 1;; ++c) {
    auto step = [&](u64 v) { return static_cast<u64>((static_cast<u128>(v) * v + c) % n); };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    constexpr u64 kBlock = 128;
    while (g == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      for (u64 k = 0; k < r && g == 1; k += kBlock) {
        ys = y;
        for (u64 i = 0; i < std::min(kBlock, r - k); ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void collect_factors(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const u64 d = pollard_rho(n);
  collect_factors(d, primes);
  collect_factors(n / d, primes);
}

}  // namespace

IntFactorization::IntFactorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].exponent == 0 || (i > 0 && factors_[i - 1].prime >= factors_[i].prime)) {
      throw DomainError("IntFactorization: primes must increase and exponents be positive");
    }
  }
}

std::uint64_t IntFactorization::value() const {
  u64 v = 1;
  for (const auto& pp : factors_) {
    for (unsigned i = 0; i < pp.exponent; ++i) v *= pp.prime;
  }
  return v;
}

std::uint64_t IntFactorization::divisor_count() const {
  u64 c = 1;
  for (const auto& pp : factors_) c *= pp.exponent + 1;
  return c;
}

std::string IntFactorization::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) os << " * ";
    os << factors_[i].prime;
    if (factors_[i].exponent > 1) os << '^' << factors_[i].exponent;
  }
  return os.str();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr u64 kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kSmall) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a proven witness set below 3.3 * 10^24.
  for (u64 a : kSmall) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

IntFactorization factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: n must be positive");
  std::vector<u64> primes;
  auto strip = [&](u64 p) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  };
  strip(2);
  u64 p = 3;
  for (; p <= kTrialLimit && p * p <= n; p += 2) strip(p);
  if (n > 1) {
    if (p * p > n) {
      primes.push_back(n);
    } else {
      collect_factors(n, primes);
    }
  }
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> out;
  for (u64 q : primes) {
    if (!out.empty() && out.back().prime == q) {
      ++out.back().exponent;
    } else {
      out.push_back({q, 1});
    }
  }
  return IntFactorization(std::move(out));
}

std::vector<std::uint64_t> divisors(const IntFactorization& f) {
  std::vector<u64> out{1};
  for (const auto& pp : f.factors()) {
    const std::size_t base = out.size();
    u64 power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) { return divisors(factorize(n)); }

std::uint64_t euler_phi(std::uint64_t n) {
  u64 phi = n;
  const auto fact = factorize(n);
  for (const auto& pp : fact.factors()) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

int moebius(std::uint64_t n) {
  const auto f = factorize(n);
  for (const auto& pp : f.factors()) {
    if (pp.exponent > 1) return 0;
  }
  return f.factors().size() % 2 == 0 ? 1 : -1;
}

unsigned two_adic_valuation(std::uint64_t n) {
  if (n == 0) throw DomainError("two_adic_valuation: n must be positive");
  return static_cast<unsigned>(std::countr_zero(n));
}

}  // namespace trinodiv
