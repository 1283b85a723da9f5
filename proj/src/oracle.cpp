#include "trinodiv/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

#include "trinodiv/errors.hpp"

namespace trinodiv::oracle {

namespace {

constexpr long kMaxOrderDegree = 20;
constexpr long kMaxIrreducibleDegree = 24;
constexpr long kMaxWordDegree = 63;

int bit_degree(std::uint64_t v) { return 63 - std::countl_zero(v); }

std::uint64_t rem_bits(std::uint64_t p, std::uint64_t q) {
  const int dq = bit_degree(q);
  while (p != 0 && bit_degree(p) >= dq) p ^= q << (bit_degree(p) - dq);
  return p;
}

// residue * x mod f, with f given by its bits and degree.
std::uint64_t times_x(std::uint64_t r, std::uint64_t f, int deg) {
  r <<= 1;
  if ((r >> deg) & 1) r ^= f;
  return r;
}

// x^0 .. x^{e-1} mod f where e is found by walking until the residue returns
// to 1. Throws if e would pass `cap` or disagrees with `expected_order`.
std::vector<std::uint64_t> power_table(const IrreducibleInfo& info, std::uint64_t cap) {
  if (info.order > cap) {
    throw ResourceError("oracle: order " + std::to_string(info.order) + " exceeds table cap " +
                        std::to_string(cap));
  }
  if (info.poly.degree() < 1 || info.poly.degree() > kMaxWordDegree) {
    throw ResourceError("oracle: degree outside 1..63");
  }
  const std::uint64_t f = info.poly.to_uint();
  const int deg = static_cast<int>(info.poly.degree());
  std::vector<std::uint64_t> table;
  table.reserve(info.order);
  std::uint64_t r = 1;
  do {
    if (table.size() >= info.order) throw DomainError("oracle: stated order is too small");
    table.push_back(r);
    r = times_x(r, f, deg);
  } while (r != 1 && r != 0);
  if (r == 0 || table.size() != info.order) throw DomainError("oracle: stated order is wrong");
  return table;
}

}  // namespace

std::uint64_t brute_order(const Gf2Poly& f) {
  const long deg = f.degree();
  if (deg < 1) throw DomainError("brute_order: degree must be >= 1");
  if (deg > kMaxOrderDegree) throw ResourceError("brute_order: degree above 20");
  if (f == Gf2Poly::x()) throw DomainError("brute_order: x has no order");
  if (!brute_irreducible(f)) throw DomainError("brute_order: " + format_poly(f) + " is reducible");
  const std::uint64_t bits = f.to_uint();
  std::uint64_t r = 1;
  std::uint64_t e = 0;
  do {
    r = times_x(r, bits, static_cast<int>(deg));
    ++e;
  } while (r != 1);
  return e;
}

std::vector<Trinomial> brute_trinomial_multiples(const IrreducibleInfo& info) {
  const auto table = power_table(info, kMaxTableOrder);
  std::map<std::uint64_t, std::uint64_t> log;
  for (std::uint64_t i = 0; i < table.size(); ++i) log.emplace(table[i], i);

  std::vector<Trinomial> out;
  for (std::uint64_t i = 1; i < table.size(); ++i) {
    auto it = log.find(table[i] ^ 1);
    if (it == log.end()) continue;
    const std::uint64_t j = it->second;
    // Each unordered pair once; j = 0 would need x^i = 0.
    if (j != 0 && j < i) out.emplace_back(i, j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> brute_ext_welch(const IrreducibleInfo& info,
                                                                       std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) throw DomainError("brute_ext_welch: a and b must be positive");
  const auto table = power_table(info, kMaxExtWelchOrder);
  const std::uint64_t e = info.order;
  const std::uint64_t e1 = e / std::gcd(a, e);
  const std::uint64_t e2 = e / std::gcd(b, e);
  const std::uint64_t a_mod = a % e;
  const std::uint64_t b_mod = b % e;

  std::map<std::uint64_t, std::uint64_t> least_s;
  for (std::uint64_t s = e2; s >= 1; --s) least_s[table[(b_mod * s) % e]] = s;
  for (std::uint64_t m = 1; m <= e1; ++m) {
    auto it = least_s.find(table[(a_mod * m) % e] ^ 1);
    if (it != least_s.end()) return std::make_pair(m, it->second);
  }
  return std::nullopt;
}

bool brute_irreducible(const Gf2Poly& f) {
  const long deg = f.degree();
  if (deg > kMaxIrreducibleDegree) throw ResourceError("brute_irreducible: degree above 24");
  if (deg < 1) return false;
  const std::uint64_t bits = f.to_uint();
  for (long d = 1; 2 * d <= deg; ++d) {
    for (std::uint64_t g = std::uint64_t{1} << d; g < (std::uint64_t{2} << d); ++g) {
      if (rem_bits(bits, g) == 0) return false;
    }
  }
  return true;
}

}  // namespace trinodiv::oracle
