#pragma once

#include <cstdint>
#include <vector>

#include "trinodiv/gf2poly.hpp"

namespace trinodiv {

inline constexpr unsigned kDefaultCertifyDegreeCap = 40;

/// An irreducible polynomial other than x together with its order, the
/// least e with poly | x^e + 1. Only certify() should build one.
struct IrreducibleInfo {
  Gf2Poly poly;
  unsigned degree = 0;
  std::uint64_t order = 0;
  bool primitive = false;
};

/// Rabin's test. Throws DomainError for constants and zero.
bool is_irreducible(const Gf2Poly& f);

/// Order by factor-and-reduce over 2^n - 1. Throws DomainError when f is
/// reducible or f = x, ResourceError when deg f exceeds the cap (at most 64).
IrreducibleInfo certify(const Gf2Poly& f, unsigned degree_cap = kDefaultCertifyDegreeCap);

/// Product of the distinct irreducible factors of t of degree exactly n,
/// by distinct-degree factorization. Requires t(0) = 1.
Gf2Poly distinct_degree_part(const Gf2Poly& t, unsigned n);

/// False when deg t < n. Throws DomainError when t(0) = 0 or n = 0.
bool has_irreducible_factor_of_degree(const Gf2Poly& t, unsigned n);

/// Whether some irreducible degree-n factor of t has order 2^n - 1.
bool has_primitive_factor_of_degree(const Gf2Poly& t, unsigned n);

/// All irreducible polynomials of degree n in increasing bit order; n = 1
/// yields x and x+1. Throws ResourceError above degree 31.
std::vector<Gf2Poly> irreducibles_of_degree(unsigned n);

}  // namespace trinodiv
