#pragma once

#include <cstdint>
#include <vector>

#include "trinodiv/gf2poly.hpp"
#include "trinodiv/order.hpp"

namespace trinodiv {

/// Largest order list_trinomial_multiples will build a power table for.
inline constexpr std::uint64_t kMaxListOrder = std::uint64_t{1} << 26;

/// An irreducible divides some x^{2m}+x^m+1 exactly when 3 divides its order.
bool divides_some_selfreciprocal(const IrreducibleInfo& info);

/// The only self-reciprocal trinomial of degree < e divisible by info.poly:
/// x^{2e/3} + x^{e/3} + 1. Throws DomainError when 3 does not divide e.
Trinomial unique_srt(const IrreducibleInfo& info);

/// gcd(1 + x^e, 1 + (1+x)^e). Squarefree, of even degree. e must be odd.
Gf2Poly welch_gcd(std::uint64_t e, std::size_t degree_cap = kDefaultDegreeCap);

/// gcd(1 + x^e1, 1 + (1+x)^e2) for odd e1, e2.
Gf2Poly ext_welch_gcd(std::uint64_t e1, std::uint64_t e2, std::size_t degree_cap = kDefaultDegreeCap);

/// Number of trinomials of degree < e divisible by info.poly: half the
/// degree of welch_gcd(e). Zero when none exist.
std::uint64_t count_nf(const IrreducibleInfo& info, std::size_t degree_cap = kDefaultDegreeCap);

/// Whether the irreducibles of order e divide some trinomial.
bool welch(std::uint64_t e, std::size_t degree_cap = kDefaultDegreeCap);

/// Reduced orders e / gcd(a, e) and e / gcd(b, e).
struct ExtWelchOrders {
  std::uint64_t e1;
  std::uint64_t e2;
};
ExtWelchOrders ext_welch_orders(std::uint64_t e, std::uint64_t a, std::uint64_t b);

/// Whether the irreducibles of order e divide some x^{am}+x^{bs}+1 with m, s >= 1.
bool ext_welch(std::uint64_t e, std::uint64_t a, std::uint64_t b, std::size_t degree_cap = kDefaultDegreeCap);
/// Same question for a specific polynomial; certifies it first.
bool ext_welch(const Gf2Poly& f, std::uint64_t a, std::uint64_t b, std::size_t degree_cap = kDefaultDegreeCap);

/// False when e divides am, bs or |am - bs|: then no irreducible of order e
/// divides x^{am}+x^{bs}+1. Requires e > 1 and am != bs.
bool necessary_check(std::uint64_t e, std::uint64_t a, std::uint64_t b, std::uint64_t m, std::uint64_t s);

/// Whether x^2+x+1 divides x^n+x^k+1, from residues mod 3. Requires n > k >= 1.
bool mod3_divides(std::uint64_t n, std::uint64_t k);

/// All trinomials x^n+x^k+1 with k < n < bound divisible by info.poly,
/// sorted by (n, k). Built from a Zech-logarithm table, so bound <= e.
std::vector<Trinomial> list_trinomial_multiples(const IrreducibleInfo& info, std::uint64_t bound);

}  // namespace trinodiv
