#include "trinodiv/order.hpp"

#include <string>

#include "trinodiv/errors.hpp"
#include "trinodiv/intarith.hpp"

namespace trinodiv {

namespace {

constexpr unsigned kMaxEnumerationDegree = 31;

std::uint64_t mersenne(unsigned n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

Gf2Poly lcm(const Gf2Poly& a, const Gf2Poly& b) { return div_rem(a * b, gcd(a, b)).quot; }

}  // namespace

bool is_irreducible(const Gf2Poly& f) {
  const long n = f.degree();
  if (n < 1) throw DomainError("is_irreducible: degree must be >= 1, got " + format_poly(f));
  if (n == 1) return true;
  if (!f.coeff(0)) return false;

  const auto primes = factorize(static_cast<std::uint64_t>(n)).factors();
  const Gf2Poly x = Gf2Poly::x();
  // s runs through x^(2^i) mod f.
  Gf2Poly s = x;
  for (long i = 1; i <= n; ++i) {
    s = rem(s.squared(), f);
    for (const auto& pp : primes) {
      if (static_cast<std::uint64_t>(i) * pp.prime == static_cast<std::uint64_t>(n) &&
          !gcd(s + x, f).is_one()) {
        return false;
      }
    }
  }
  return s == x;
}

IrreducibleInfo certify(const Gf2Poly& f, unsigned degree_cap) {
  const long n = f.degree();
  if (n < 1) throw DomainError("certify: degree must be >= 1, got " + format_poly(f));
  if (static_cast<unsigned long>(n) > degree_cap || n > 64) {
    throw ResourceError("certify: degree " + std::to_string(n) + " exceeds cap " +
                        std::to_string(degree_cap < 64 ? degree_cap : 64));
  }
  if (f == Gf2Poly::x()) throw DomainError("certify: x has no order");
  if (!is_irreducible(f)) throw DomainError("certify: " + format_poly(f) + " is reducible");

  const std::uint64_t full = mersenne(static_cast<unsigned>(n));
  std::uint64_t e = full;
  const auto fact = factorize(full);
  for (const auto& pp : fact.factors()) {
    while (e % pp.prime == 0 && mod_pow_x(e / pp.prime, f).is_one()) e /= pp.prime;
  }
#ifdef TRINODIV_FAULT_CERTIFY
  e ^= 1;
#endif
  return IrreducibleInfo{f, static_cast<unsigned>(n), e, e == full};
}

Gf2Poly distinct_degree_part(const Gf2Poly& t, unsigned n) {
  if (n == 0) throw DomainError("distinct_degree_part: n must be positive");
  if (t.degree() < 1 || !t.coeff(0)) {
    throw DomainError("distinct_degree_part: need a nonconstant polynomial with nonzero constant term");
  }
  const Gf2Poly x = Gf2Poly::x();
  Gf2Poly rest = t;
  Gf2Poly s = rem(x, rest);
  for (unsigned i = 1; i <= n; ++i) {
    if (rest.degree() < static_cast<long>(n)) break;
    s = rem(s.squared(), rest);
    Gf2Poly g = gcd(s + x, rest);
    if (i == n) return g;
    if (g.is_one()) continue;
    // Strip every copy of the degree-i factors so they cannot resurface at multiples of i.
    for (Gf2Poly h = g; !h.is_one(); h = gcd(rest, g)) rest = div_rem(rest, h).quot;
    s = rem(s, rest);
  }
  return Gf2Poly::one();
}

bool has_irreducible_factor_of_degree(const Gf2Poly& t, unsigned n) {
  if (n == 0) throw DomainError("has_irreducible_factor_of_degree: n must be positive");
  if (!t.coeff(0)) throw DomainError("has_irreducible_factor_of_degree: t(0) = 0, shift out x first");
  if (t.degree() < static_cast<long>(n)) return false;
  return !distinct_degree_part(t, n).is_one();
}

bool has_primitive_factor_of_degree(const Gf2Poly& t, unsigned n) {
  if (n > 64) throw ResourceError("has_primitive_factor_of_degree: n above 64");
  if (!has_irreducible_factor_of_degree(t, n)) return false;
  const Gf2Poly part = distinct_degree_part(t, n);
  const std::uint64_t full = mersenne(n);
  // Non-primitive factors are exactly those where some maximal divisor of the order already gives 1.
  Gf2Poly non_primitive = Gf2Poly::one();
  const auto fact = factorize(full);
  for (const auto& pp : fact.factors()) {
    const Gf2Poly h = gcd(mod_pow_x(full / pp.prime, part) + Gf2Poly::one(), part);
    non_primitive = lcm(non_primitive, h);
  }
  return non_primitive.degree() < part.degree();
}

std::vector<Gf2Poly> irreducibles_of_degree(unsigned n) {
  if (n == 0) throw DomainError("irreducibles_of_degree: n must be positive");
  if (n > kMaxEnumerationDegree) {
    throw ResourceError("irreducibles_of_degree: degree " + std::to_string(n) + " above " +
                        std::to_string(kMaxEnumerationDegree));
  }
  if (n == 1) return {Gf2Poly::x(), Gf2Poly::from_uint(3)};
  std::vector<Gf2Poly> out;
  const std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t middle = 0; middle < (std::uint64_t{1} << (n - 1)); ++middle) {
    const std::uint64_t bits = top | (middle << 1) | 1;
    // Even weight means x+1 divides.
    if (__builtin_popcountll(bits) % 2 == 0) continue;
    Gf2Poly f = Gf2Poly::from_uint(bits);
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace trinodiv
