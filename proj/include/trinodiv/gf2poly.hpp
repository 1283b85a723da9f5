#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace trinodiv {

/// Largest degree any routine will allocate for unless told otherwise.
inline constexpr std::size_t kDefaultDegreeCap = std::size_t{1} << 20;

/// Dense polynomial over F2. Coefficient i lives in bit (i % 64) of word
/// (i / 64). The word vector never carries trailing zero words, so the
/// zero polynomial is the empty vector and equality is word equality.
class Gf2Poly {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;
  /// degree() of the zero polynomial.
  static constexpr long kNoDegree = -1;

  Gf2Poly() = default;

  static Gf2Poly one();
  static Gf2Poly x();
  static Gf2Poly monomial(std::size_t exponent, std::size_t degree_cap = kDefaultDegreeCap);
  /// Sum of x^e over the given exponents; a repeated exponent is an error.
  static Gf2Poly from_exponents(std::span<const std::size_t> exponents,
                                std::size_t degree_cap = kDefaultDegreeCap);
  /// Bit i of `bits` is the coefficient of x^i.
  static Gf2Poly from_uint(std::uint64_t bits);
  static Gf2Poly from_words(std::vector<Word> words);

  long degree() const noexcept;
  bool is_zero() const noexcept { return words_.empty(); }
  bool is_one() const noexcept { return words_.size() == 1 && words_[0] == 1; }
  bool coeff(std::size_t i) const noexcept;
  /// Number of nonzero terms.
  std::size_t weight() const noexcept;
  /// Exponents of the nonzero terms, strictly decreasing.
  std::vector<std::size_t> exponents() const;
  std::span<const Word> words() const noexcept { return words_; }
  /// Requires degree() < 64.
  std::uint64_t to_uint() const;

  Gf2Poly shifted(std::size_t n) const;
  Gf2Poly squared() const;
  Gf2Poly derivative() const;

  Gf2Poly& operator+=(const Gf2Poly& other);
  friend Gf2Poly operator+(Gf2Poly lhs, const Gf2Poly& rhs) { return lhs += rhs; }
  friend Gf2Poly operator*(const Gf2Poly& lhs, const Gf2Poly& rhs);
  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

 private:
  explicit Gf2Poly(std::vector<Word> words);
  void trim() noexcept;

  std::vector<Word> words_;
};

struct DivRem {
  Gf2Poly quot;
  Gf2Poly rem;
};

Gf2Poly add(const Gf2Poly& p, const Gf2Poly& q);
Gf2Poly mul(const Gf2Poly& p, const Gf2Poly& q);
/// Throws DomainError when q is zero.
DivRem div_rem(const Gf2Poly& p, const Gf2Poly& q);
Gf2Poly rem(const Gf2Poly& p, const Gf2Poly& q);
bool divides(const Gf2Poly& d, const Gf2Poly& p);
/// gcd(p, 0) = p and gcd(0, 0) = 0.
Gf2Poly gcd(const Gf2Poly& p, const Gf2Poly& q);
/// x^k mod f by left-to-right square and shift. Requires deg f >= 1.
Gf2Poly mod_pow_x(std::uint64_t k, const Gf2Poly& f);
/// The full polynomial 1 + (1+x)^e, degree exactly e.
Gf2Poly one_plus_x_pow(std::uint64_t e, std::size_t degree_cap = kDefaultDegreeCap);
/// x^deg(p) * p(1/x). Throws DomainError on zero.
Gf2Poly reciprocal(const Gf2Poly& p);
bool is_self_reciprocal(const Gf2Poly& p);

/// Accepts "x^6+x^3+1", "6,3,0" or "0x49". See README for the grammar.
Gf2Poly parse_poly(std::string_view text, std::size_t degree_cap = kDefaultDegreeCap);
/// Canonical symbolic form with strictly decreasing exponents; "0" for zero.
std::string format_poly(const Gf2Poly& p);
std::ostream& operator<<(std::ostream& os, const Gf2Poly& p);

/// x^n + x^k + 1 with n > k > 0.
class Trinomial {
 public:
  Trinomial(std::uint64_t n, std::uint64_t k);

  std::uint64_t n() const noexcept { return n_; }
  std::uint64_t k() const noexcept { return k_; }
  bool is_self_reciprocal() const noexcept { return n_ == 2 * k_; }
  Gf2Poly to_poly(std::size_t degree_cap = kDefaultDegreeCap) const;
  std::string to_string() const;

  friend auto operator<=>(const Trinomial&, const Trinomial&) = default;

 private:
  std::uint64_t n_;
  std::uint64_t k_;
};

std::ostream& operator<<(std::ostream& os, const Trinomial& t);

}  // namespace trinodiv
