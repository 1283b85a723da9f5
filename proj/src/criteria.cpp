#include "trinodiv/criteria.hpp"

#include <numeric>
#include <string>
#include <unordered_map>

#include "trinodiv/errors.hpp"

namespace trinodiv {

namespace {

void require_odd_order(std::uint64_t e, const char* who) {
  if (e == 0 || e % 2 == 0) {
    throw DomainError(std::string(who) + ": order must be odd and positive, got " + std::to_string(e));
  }
}

std::uint64_t checked_product(std::uint64_t x, std::uint64_t y) {
  const unsigned __int128 p = static_cast<unsigned __int128>(x) * y;
  if (p >> 64) throw ResourceError("exponent product overflows 64 bits");
  return static_cast<std::uint64_t>(p);
}

// Residue -> exponent lookup for x^i mod f, i < e. Dense when the residue
// space is small enough, hashed otherwise.
class LogTable {
 public:
  static constexpr std::uint32_t kAbsent = ~std::uint32_t{0};
  static constexpr int kMaxDenseDegree = 22;

  LogTable(const std::vector<std::uint64_t>& powers, int degree) {
    const std::uint64_t space = std::uint64_t{1} << degree;
    dense_ = degree <= kMaxDenseDegree && space <= 16 * powers.size() + 1024;
    if (dense_) {
      table_.assign(space, kAbsent);
      for (std::size_t i = 0; i < powers.size(); ++i) table_[powers[i]] = static_cast<std::uint32_t>(i);
    } else {
      map_.reserve(powers.size());
      for (std::size_t i = 0; i < powers.size(); ++i) map_.emplace(powers[i], i);
    }
  }

  std::uint64_t find(std::uint64_t residue) const {
    if (dense_) {
      if (residue >= table_.size()) return kAbsent;
      return table_[residue];
    }
    auto it = map_.find(residue);
    return it == map_.end() ? kAbsent : it->second;
  }

 private:
  bool dense_ = false;
  std::vector<std::uint32_t> table_;
  std::unordered_map<std::uint64_t, std::uint64_t> map_;
};

}  // namespace

bool divides_some_selfreciprocal(const IrreducibleInfo& info) { return info.order % 3 == 0; }

Trinomial unique_srt(const IrreducibleInfo& info) {
  if (info.order % 3 != 0) {
    throw DomainError("unique_srt: order " + std::to_string(info.order) + " is not a multiple of 3");
  }
  const std::uint64_t m = info.order / 3;
  return Trinomial(2 * m, m);
}

Gf2Poly ext_welch_gcd(std::uint64_t e1, std::uint64_t e2, std::size_t degree_cap) {
  require_odd_order(e1, "welch_gcd");
  require_odd_order(e2, "welch_gcd");
  const Gf2Poly lhs = Gf2Poly::monomial(static_cast<std::size_t>(e1), degree_cap) + Gf2Poly::one();
  Gf2Poly g = gcd(lhs, one_plus_x_pow(e2, degree_cap));
#ifdef TRINODIV_FAULT_WELCH
  g += Gf2Poly::monomial(2);
#endif
  return g;
}

Gf2Poly welch_gcd(std::uint64_t e, std::size_t degree_cap) { return ext_welch_gcd(e, e, degree_cap); }

std::uint64_t count_nf(const IrreducibleInfo& info, std::size_t degree_cap) {
  const long d = welch_gcd(info.order, degree_cap).degree();
  return d <= 0 ? 0 : static_cast<std::uint64_t>(d) / 2;
}

bool welch(std::uint64_t e, std::size_t degree_cap) { return welch_gcd(e, degree_cap).degree() > 1; }

ExtWelchOrders ext_welch_orders(std::uint64_t e, std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) throw DomainError("ext_welch: a and b must be positive");
  require_odd_order(e, "ext_welch");
  return {e / std::gcd(a, e), e / std::gcd(b, e)};
}

bool ext_welch(std::uint64_t e, std::uint64_t a, std::uint64_t b, std::size_t degree_cap) {
  const auto [e1, e2] = ext_welch_orders(e, a, b);
  return ext_welch_gcd(e1, e2, degree_cap).degree() > 1;
}

bool ext_welch(const Gf2Poly& f, std::uint64_t a, std::uint64_t b, std::size_t degree_cap) {
  return ext_welch(certify(f).order, a, b, degree_cap);
}

bool necessary_check(std::uint64_t e, std::uint64_t a, std::uint64_t b, std::uint64_t m, std::uint64_t s) {
  if (e <= 1) throw DomainError("necessary_check: order must exceed 1");
  if (a == 0 || b == 0 || m == 0 || s == 0) throw DomainError("necessary_check: a, b, m, s must be positive");
  const std::uint64_t am = checked_product(a, m);
  const std::uint64_t bs = checked_product(b, s);
  if (am == bs) throw DomainError("necessary_check: am = bs, the two terms cancel");
  const std::uint64_t diff = am > bs ? am - bs : bs - am;
  return am % e != 0 && bs % e != 0 && diff % e != 0;
}

bool mod3_divides(std::uint64_t n, std::uint64_t k) {
  if (!(n > k && k >= 1)) throw DomainError("mod3_divides: need n > k >= 1");
  return n % 3 != 0 && k % 3 != 0 && (n - k) % 3 != 0;
}

std::vector<Trinomial> list_trinomial_multiples(const IrreducibleInfo& info, std::uint64_t bound) {
  if (bound > info.order) {
    throw DomainError("list_trinomial_multiples: bound " + std::to_string(bound) + " exceeds order " +
                      std::to_string(info.order));
  }
  if (info.order > kMaxListOrder) {
    throw ResourceError("list_trinomial_multiples: order " + std::to_string(info.order) + " above table cap");
  }
  const int deg = static_cast<int>(info.poly.degree());
  if (deg < 1 || deg > 63) throw ResourceError("list_trinomial_multiples: degree outside 1..63");

  const std::uint64_t f = info.poly.to_uint();
  std::vector<std::uint64_t> powers(info.order);
  std::uint64_t r = 1;
  for (auto& p : powers) {
    p = r;
    r <<= 1;
    if ((r >> deg) & 1) r ^= f;
  }
  const LogTable log(powers, deg);

  // x^n + x^k + 1 with k < n: k is the Zech logarithm of n, if it exists.
  std::vector<Trinomial> out;
  for (std::uint64_t n = 2; n < bound; ++n) {
    const std::uint64_t k = log.find(powers[n] ^ 1);
    if (k != LogTable::kAbsent && k > 0 && k < n) out.emplace_back(n, k);
  }
  return out;
}

}  // namespace trinodiv
