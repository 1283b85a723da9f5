#include "trinodiv/cyclotomic.hpp"

#include <string>

#include "trinodiv/errors.hpp"
#include "trinodiv/intarith.hpp"

namespace trinodiv {

namespace {

// p * (x^a + 1)
Gf2Poly times_binomial(const Gf2Poly& p, std::uint64_t a) { return p.shifted(a) + p; }

}  // namespace

Gf2Poly cyclotomic(std::uint64_t d, std::size_t degree_cap) {
  if (d == 0) throw DomainError("cyclotomic: index must be positive");
  const auto fact = factorize(d);
  // Squarefree divisors carry the nonzero Moebius values.
  Gf2Poly numerator = Gf2Poly::one();
  Gf2Poly denominator = Gf2Poly::one();
  std::uint64_t numerator_degree = 0;
  const auto& primes = fact.factors();
  const std::size_t subsets = std::size_t{1} << primes.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::uint64_t t = 1;
    int bits = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if ((mask >> i) & 1) {
        t *= primes[i].prime;
        ++bits;
      }
    }
    const std::uint64_t a = d / t;
    if (bits % 2 == 0) {
      numerator_degree += a;
      if (numerator_degree > degree_cap) {
        throw ResourceError("cyclotomic: intermediate degree for Q_" + std::to_string(d) +
                            " exceeds cap " + std::to_string(degree_cap));
      }
      numerator = times_binomial(numerator, a);
    } else {
      denominator = times_binomial(denominator, a);
    }
  }
  auto [q, r] = div_rem(numerator, denominator);
  if (!r.is_zero()) throw std::logic_error("cyclotomic: inexact Moebius quotient");
  return q;
}

const Gf2Poly& CyclotomicCache::get(std::uint64_t d) {
  {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(d); it != memo_.end()) return *it->second;
  }
  auto q = std::make_unique<const Gf2Poly>(cyclotomic(d, cap_));
  std::lock_guard lock(mu_);
  auto [it, inserted] = memo_.try_emplace(d, std::move(q));
  return *it->second;
}

Gf2Poly SrtFactorization::recompose(CyclotomicCache* cache) const {
  Gf2Poly product = Gf2Poly::one();
  for (std::uint64_t d : indices) product = product * (cache ? cache->get(d) : cyclotomic(d));
  // Raising to 2^k is k Frobenius squarings.
  for (unsigned i = 0; i < k; ++i) product = product.squared();
  return product;
}

std::uint64_t SrtFactorization::index_degree_sum() const {
  std::uint64_t sum = 0;
  for (std::uint64_t d : indices) sum += euler_phi(d);
  return sum;
}

SrtFactorization srt_factorization(std::uint64_t m) {
  if (m == 0) throw DomainError("srt_factorization: m must be positive");
  SrtFactorization out;
  out.m = m;
  out.k = two_adic_valuation(m);
  out.odd_part = m >> out.k;
  out.multiplicity = std::uint64_t{1} << out.k;
  for (std::uint64_t n : divisors(out.odd_part)) {
    if (out.odd_part % (3 * n) != 0) out.indices.push_back(3 * n);
  }
  return out;
}

Gf2Poly self_reciprocal_trinomial(std::uint64_t m, std::size_t degree_cap) {
  if (m == 0) throw DomainError("self_reciprocal_trinomial: m must be positive");
  return Trinomial(2 * m, m).to_poly(degree_cap);
}

Trinomial irreducible_srt_divisor(std::uint64_t m) {
  if (m % 2 == 0) throw DomainError("irreducible_srt_divisor: m must be odd, got " + std::to_string(m));
  std::uint64_t three_power = 1;
  while (m % (three_power * 3) == 0) three_power *= 3;
  return Trinomial(2 * three_power, three_power);
}

}  // namespace trinodiv
