#include "trinodiv/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <ostream>
#include <sstream>
#include <utility>

#include "trinodiv/errors.hpp"

namespace trinodiv {

namespace {

using Word = Gf2Poly::Word;
constexpr int kBits = Gf2Poly::kWordBits;

std::size_t words_for_degree(std::size_t degree) { return degree / kBits + 1; }

void check_cap(std::size_t degree, std::size_t cap, const char* what) {
  if (degree > cap) {
    throw ResourceError(std::string(what) + ": degree " + std::to_string(degree) +
                        " exceeds cap " + std::to_string(cap));
  }
}

long top_degree(const std::vector<Word>& a) {
  for (std::size_t w = a.size(); w-- > 0;) {
    if (a[w] != 0) return static_cast<long>(w * kBits) + (kBits - 1 - std::countl_zero(a[w]));
  }
  return Gf2Poly::kNoDegree;
}

// Highest set bit strictly below `from`, or kNoDegree.
long degree_below(const std::vector<Word>& a, long from) {
  if (from <= 0) return Gf2Poly::kNoDegree;
  long bit = from - 1;
  std::size_t w = static_cast<std::size_t>(bit) / kBits;
  int off = static_cast<int>(bit % kBits);
  Word x = a[w] & (off == kBits - 1 ? ~Word{0} : ((Word{1} << (off + 1)) - 1));
  while (x == 0) {
    if (w == 0) return Gf2Poly::kNoDegree;
    x = a[--w];
  }
  return static_cast<long>(w * kBits) + (kBits - 1 - std::countl_zero(x));
}

// a ^= b * x^shift. a must already be long enough to hold every set bit
// of the shifted b.
void xor_shifted(std::vector<Word>& a, const std::vector<Word>& b, std::size_t shift) {
  const std::size_t ws = shift / kBits;
  const int bs = static_cast<int>(shift % kBits);
  const std::size_t nb = b.size();
  Word* dst = a.data() + ws;
  if (bs == 0) {
    for (std::size_t i = 0; i < nb; ++i) dst[i] ^= b[i];
    return;
  }
  const int rs = kBits - bs;
  dst[0] ^= b[0] << bs;
  for (std::size_t i = 1; i < nb; ++i) dst[i] ^= (b[i] << bs) | (b[i - 1] >> rs);
  Word carry = b[nb - 1] >> rs;
  if (carry != 0) dst[nb] ^= carry;
}

// Replaces a by a mod b; optionally accumulates the quotient bits.
void reduce(std::vector<Word>& a, const std::vector<Word>& b, long db, std::vector<Word>* quot) {
  long da = top_degree(a);
  if (quot != nullptr) {
    quot->assign(da >= db ? words_for_degree(static_cast<std::size_t>(da - db)) : 0, 0);
  }
  while (da >= db) {
    const auto s = static_cast<std::size_t>(da - db);
    xor_shifted(a, b, s);
    if (quot != nullptr) (*quot)[s / kBits] |= Word{1} << (s % kBits);
    da = degree_below(a, da);
  }
  a.resize(da < 0 ? 0 : words_for_degree(static_cast<std::size_t>(da)));
}

// 64x64 -> 128 carry-less product with a 4-bit window.
unsigned __int128 clmul64(Word a, Word b) {
  unsigned __int128 table[16];
  table[0] = 0;
  table[1] = b;
  for (int i = 2; i < 16; i += 2) {
    table[i] = table[i / 2] << 1;
    table[i + 1] = table[i] ^ b;
  }
  unsigned __int128 r = 0;
  for (int shift = kBits - 4; shift >= 0; shift -= 4) {
    r = (r << 4) ^ table[(a >> shift) & 0xF];
  }
  return r;
}

Word spread32(Word x) {
  x &= 0xFFFFFFFFu;
  x = (x | (x << 16)) & 0x0000FFFF0000FFFFull;
  x = (x | (x << 8)) & 0x00FF00FF00FF00FFull;
  x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0Full;
  x = (x | (x << 2)) & 0x3333333333333333ull;
  x = (x | (x << 1)) & 0x5555555555555555ull;
  return x;
}

std::vector<Word> square_words(const std::vector<Word>& a) {
  std::vector<Word> r(2 * a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[2 * i] = spread32(a[i]);
    r[2 * i + 1] = spread32(a[i] >> 32);
  }
  return r;
}

std::string_view trim_ws(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::size_t parse_exponent(std::string_view s, std::string_view whole) {
  s = trim_ws(s);
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DomainError("malformed polynomial '" + std::string(whole) + "': bad exponent '" +
                      std::string(s) + "'");
  }
  return v;
}

Gf2Poly parse_hex(std::string_view digits, std::string_view whole, std::size_t cap) {
  if (digits.empty()) throw DomainError("malformed polynomial '" + std::string(whole) + "': empty hex");
  std::vector<Word> words((digits.size() * 4 + kBits - 1) / kBits, 0);
  std::size_t bit = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it, bit += 4) {
    const char c = *it;
    Word v;
    if (c >= '0' && c <= '9') {
      v = static_cast<Word>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      v = static_cast<Word>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      v = static_cast<Word>(c - 'A' + 10);
    } else {
      throw DomainError("malformed polynomial '" + std::string(whole) + "': bad hex digit");
    }
    words[bit / kBits] |= v << (bit % kBits);
  }
  Gf2Poly p = Gf2Poly::from_words(std::move(words));
  if (p.degree() > 0) check_cap(static_cast<std::size_t>(p.degree()), cap, "parse");
  return p;
}

}  // namespace

Gf2Poly::Gf2Poly(std::vector<Word> words) : words_(std::move(words)) { trim(); }

void Gf2Poly::trim() noexcept {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Gf2Poly Gf2Poly::one() { return Gf2Poly(std::vector<Word>{1}); }
Gf2Poly Gf2Poly::x() { return Gf2Poly(std::vector<Word>{2}); }

Gf2Poly Gf2Poly::monomial(std::size_t exponent, std::size_t degree_cap) {
  check_cap(exponent, degree_cap, "monomial");
  std::vector<Word> w(words_for_degree(exponent), 0);
  w.back() = Word{1} << (exponent % kBits);
  return Gf2Poly(std::move(w));
}

Gf2Poly Gf2Poly::from_exponents(std::span<const std::size_t> exponents, std::size_t degree_cap) {
  if (exponents.empty()) return {};
  const std::size_t top = *std::max_element(exponents.begin(), exponents.end());
  check_cap(top, degree_cap, "polynomial");
  std::vector<Word> w(words_for_degree(top), 0);
  for (std::size_t e : exponents) {
    Word& slot = w[e / kBits];
    const Word bit = Word{1} << (e % kBits);
    if ((slot & bit) != 0) throw DomainError("duplicate exponent " + std::to_string(e));
    slot |= bit;
  }
  return Gf2Poly(std::move(w));
}

Gf2Poly Gf2Poly::from_uint(std::uint64_t bits) { return Gf2Poly(std::vector<Word>{bits}); }

Gf2Poly Gf2Poly::from_words(std::vector<Word> words) { return Gf2Poly(std::move(words)); }

long Gf2Poly::degree() const noexcept {
  if (words_.empty()) return kNoDegree;
  return static_cast<long>((words_.size() - 1) * kBits) + (kBits - 1 - std::countl_zero(words_.back()));
}

bool Gf2Poly::coeff(std::size_t i) const noexcept {
  const std::size_t w = i / kBits;
  return w < words_.size() && ((words_[w] >> (i % kBits)) & 1) != 0;
}

std::size_t Gf2Poly::weight() const noexcept {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::size_t> Gf2Poly::exponents() const {
  std::vector<std::size_t> out;
  out.reserve(weight());
  for (std::size_t w = words_.size(); w-- > 0;) {
    Word x = words_[w];
    while (x != 0) {
      const int b = kBits - 1 - std::countl_zero(x);
      out.push_back(w * kBits + static_cast<std::size_t>(b));
      x &= ~(Word{1} << b);
    }
  }
  return out;
}

std::uint64_t Gf2Poly::to_uint() const {
  if (words_.size() > 1) throw DomainError("polynomial does not fit in 64 bits");
  return words_.empty() ? 0 : words_[0];
}

Gf2Poly Gf2Poly::shifted(std::size_t n) const {
  if (is_zero()) return {};
  std::vector<Word> r(words_.size() + n / kBits + 1, 0);
  xor_shifted(r, words_, n);
  return Gf2Poly(std::move(r));
}

Gf2Poly Gf2Poly::squared() const { return Gf2Poly(square_words(words_)); }

Gf2Poly Gf2Poly::derivative() const {
  // Only odd exponents survive; they drop to the even slot below.
  std::vector<Word> r(words_.size(), 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    Word hi = i + 1 < words_.size() ? words_[i + 1] << (kBits - 1) : 0;
    r[i] = ((words_[i] >> 1) | hi) & 0x5555555555555555ull;
  }
  return Gf2Poly(std::move(r));
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  trim();
  return *this;
}

Gf2Poly operator*(const Gf2Poly& lhs, const Gf2Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const auto& a = lhs.words_;
  const auto& b = rhs.words_;
  std::vector<Word> r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const unsigned __int128 p = clmul64(a[i], b[j]);
      r[i + j] ^= static_cast<Word>(p);
      r[i + j + 1] ^= static_cast<Word>(p >> kBits);
    }
  }
  return Gf2Poly(std::move(r));
}

Gf2Poly add(const Gf2Poly& p, const Gf2Poly& q) { return p + q; }
Gf2Poly mul(const Gf2Poly& p, const Gf2Poly& q) { return p * q; }

DivRem div_rem(const Gf2Poly& p, const Gf2Poly& q) {
  if (q.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<Word> a(p.words().begin(), p.words().end());
  std::vector<Word> b(q.words().begin(), q.words().end());
  std::vector<Word> quot;
  reduce(a, b, q.degree(), &quot);
  return {Gf2Poly::from_words(std::move(quot)), Gf2Poly::from_words(std::move(a))};
}

Gf2Poly rem(const Gf2Poly& p, const Gf2Poly& q) {
  if (q.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<Word> a(p.words().begin(), p.words().end());
  std::vector<Word> b(q.words().begin(), q.words().end());
  reduce(a, b, q.degree(), nullptr);
  return Gf2Poly::from_words(std::move(a));
}

bool divides(const Gf2Poly& d, const Gf2Poly& p) { return rem(p, d).is_zero(); }

Gf2Poly gcd(const Gf2Poly& p, const Gf2Poly& q) {
  std::vector<Word> a(p.words().begin(), p.words().end());
  std::vector<Word> b(q.words().begin(), q.words().end());
  while (!b.empty()) {
    reduce(a, b, top_degree(b), nullptr);
    std::swap(a, b);
  }
  return Gf2Poly::from_words(std::move(a));
}

Gf2Poly mod_pow_x(std::uint64_t k, const Gf2Poly& f) {
  const long df = f.degree();
  if (df < 1) throw DomainError("mod_pow_x: modulus must have degree >= 1");
  std::vector<Word> fw(f.words().begin(), f.words().end());
  std::vector<Word> r{1};
  for (int bit = 63 - std::countl_zero(k | 1); bit >= 0; --bit) {
    r = square_words(r);
    reduce(r, fw, df, nullptr);
    if (((k >> bit) & 1) != 0) {
      Gf2Poly shifted = Gf2Poly::from_words(std::move(r)).shifted(1);
      if (shifted.degree() == df) shifted += f;
      r.assign(shifted.words().begin(), shifted.words().end());
    }
  }
  return Gf2Poly::from_words(std::move(r));
}

Gf2Poly one_plus_x_pow(std::uint64_t e, std::size_t degree_cap) {
  if (e == 0) throw DomainError("one_plus_x_pow: exponent must be positive");
  check_cap(static_cast<std::size_t>(e), degree_cap, "one_plus_x_pow");
  // Lucas: C(e, i) is odd iff i is a submask of e.
  std::vector<Word> w(words_for_degree(static_cast<std::size_t>(e)), 0);
  for (std::uint64_t s = e;; s = (s - 1) & e) {
    w[s / kBits] |= Word{1} << (s % kBits);
    if (s == 0) break;
  }
  w[0] ^= 1;
  return Gf2Poly::from_words(std::move(w));
}

Gf2Poly reciprocal(const Gf2Poly& p) {
  if (p.is_zero()) throw DomainError("reciprocal of the zero polynomial");
  const auto d = static_cast<std::size_t>(p.degree());
  std::vector<Word> w(words_for_degree(d), 0);
  for (std::size_t e : p.exponents()) {
    const std::size_t r = d - e;
    w[r / kBits] |= Word{1} << (r % kBits);
  }
  return Gf2Poly::from_words(std::move(w));
}

bool is_self_reciprocal(const Gf2Poly& p) { return reciprocal(p) == p; }

Gf2Poly parse_poly(std::string_view text, std::size_t degree_cap) {
  const std::string_view s = trim_ws(text);
  if (s.empty()) throw DomainError("malformed polynomial: empty text");
  if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    return parse_hex(s.substr(2), text, degree_cap);
  }

  std::vector<std::size_t> exps;
  if (s.find('x') != std::string_view::npos) {
    std::string_view rest = s;
    while (true) {
      const auto plus = rest.find('+');
      const std::string_view term = trim_ws(rest.substr(0, plus));
      if (term == "1") {
        exps.push_back(0);
      } else if (term == "x") {
        exps.push_back(1);
      } else if (term.size() > 2 && term.substr(0, 2) == "x^") {
        exps.push_back(parse_exponent(term.substr(2), text));
      } else {
        throw DomainError("malformed polynomial '" + std::string(text) + "': bad term '" +
                          std::string(term) + "'");
      }
      if (plus == std::string_view::npos) break;
      rest = rest.substr(plus + 1);
    }
  } else if (s.find(',') != std::string_view::npos) {
    std::string_view rest = s;
    while (true) {
      const auto comma = rest.find(',');
      exps.push_back(parse_exponent(rest.substr(0, comma), text));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  } else if (s == "0") {
    return {};
  } else if (s == "1") {
    return Gf2Poly::one();
  } else {
    throw DomainError("malformed polynomial '" + std::string(text) +
                      "': expected symbolic, comma-separated exponents, or 0x hex");
  }
  return Gf2Poly::from_exponents(exps, degree_cap);
}

std::string format_poly(const Gf2Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t e : p.exponents()) {
    if (!out.empty()) out += '+';
    if (e == 0) {
      out += '1';
    } else if (e == 1) {
      out += 'x';
    } else {
      out += "x^";
      out += std::to_string(e);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Gf2Poly& p) { return os << format_poly(p); }

Trinomial::Trinomial(std::uint64_t n, std::uint64_t k) : n_(n), k_(k) {
  if (!(n > k && k > 0)) {
    throw DomainError("trinomial x^" + std::to_string(n) + "+x^" + std::to_string(k) +
                      "+1 needs n > k > 0");
  }
}

Gf2Poly Trinomial::to_poly(std::size_t degree_cap) const {
  const std::size_t exps[] = {static_cast<std::size_t>(n_), static_cast<std::size_t>(k_), 0};
  return Gf2Poly::from_exponents(exps, degree_cap);
}

std::string Trinomial::to_string() const { return format_poly(to_poly(static_cast<std::size_t>(n_))); }

std::ostream& operator<<(std::ostream& os, const Trinomial& t) { return os << t.to_string(); }

}  // namespace trinodiv
