#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "trinodiv/gf2poly.hpp"

namespace trinodiv {

/// Q_d over F2, the product of all irreducibles of order d when d is odd.
/// Built as the Moebius quotient prod_{t|d, mu=1}(x^{d/t}+1) / prod_{t|d, mu=-1}(x^{d/t}+1),
/// which is valid for every d >= 1 (for even d it is the reduction of the
/// integer cyclotomic polynomial, so Q_{2d} = Q_d for odd d).
Gf2Poly cyclotomic(std::uint64_t d, std::size_t degree_cap = kDefaultDegreeCap);

/// Optional memo for sweeps that request the same Q_d many times. Safe for
/// concurrent callers.
class CyclotomicCache {
 public:
  explicit CyclotomicCache(std::size_t degree_cap = kDefaultDegreeCap) : cap_(degree_cap) {}
  const Gf2Poly& get(std::uint64_t d);

 private:
  std::size_t cap_;
  std::mutex mu_;
  std::map<std::uint64_t, std::unique_ptr<const Gf2Poly>> memo_;
};

/// x^{2m}+x^m+1 = (prod_{d in indices} Q_d)^multiplicity with
/// m = 2^k * odd_part and indices = {3n : n | odd_part, 3n does not divide odd_part}.
struct SrtFactorization {
  std::uint64_t m = 0;
  unsigned k = 0;
  std::uint64_t odd_part = 0;
  std::vector<std::uint64_t> indices;
  std::uint64_t multiplicity = 0;

  /// Multiplies the factorization back out.
  Gf2Poly recompose(CyclotomicCache* cache = nullptr) const;
  /// Sum of phi(d) over indices; equals 2 * odd_part.
  std::uint64_t index_degree_sum() const;
};

SrtFactorization srt_factorization(std::uint64_t m);

/// x^{2m}+x^m+1 for m >= 1.
Gf2Poly self_reciprocal_trinomial(std::uint64_t m, std::size_t degree_cap = kDefaultDegreeCap);

/// For odd m = 3^k * n with 3 not dividing n: the irreducible trinomial
/// x^{2*3^k} + x^{3^k} + 1, which divides x^{2m}+x^m+1.
Trinomial irreducible_srt_divisor(std::uint64_t m);

}  // namespace trinodiv
