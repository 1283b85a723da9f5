#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "trinodiv/gf2poly.hpp"
#include "trinodiv/order.hpp"

// Brute-force references. Each one walks powers of x modulo f one step at a
// time and never touches the gcd-based criteria, so agreement between the
// two is meaningful.
namespace trinodiv::oracle {

inline constexpr std::uint64_t kMaxTableOrder = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kMaxExtWelchOrder = std::uint64_t{1} << 18;

/// Least e >= 1 with x^e = 1 mod f. Requires f irreducible, f != x, deg f <= 20.
std::uint64_t brute_order(const Gf2Poly& f);

/// Every trinomial of degree < e divisible by info.poly, sorted by (n, k).
std::vector<Trinomial> brute_trinomial_multiples(const IrreducibleInfo& info);

/// Lexicographically least (m, s) with m <= e1, s <= e2 and
/// info.poly | x^{am} + x^{bs} + 1, if any.
std::optional<std::pair<std::uint64_t, std::uint64_t>> brute_ext_welch(const IrreducibleInfo& info,
                                                                       std::uint64_t a, std::uint64_t b);

/// Trial division by every polynomial of degree 1..deg f / 2. deg f <= 24.
bool brute_irreducible(const Gf2Poly& f);

}  // namespace trinodiv::oracle
