#include <random>
#include <vector>

#include "doctest.h"
#include "trinodiv/errors.hpp"
#include "trinodiv/gf2poly.hpp"

using namespace trinodiv;

namespace {

// Coefficient-at-a-time reference arithmetic, independent of the word code.
using Naive = std::vector<bool>;

Naive naive_of(const Gf2Poly& p) {
  Naive out(static_cast<std::size_t>(p.degree() + 1), false);
  for (std::size_t e : p.exponents()) out[e] = true;
  return out;
}

Gf2Poly poly_of(const Naive& n) {
  std::vector<std::size_t> exps;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i]) exps.push_back(i);
  }
  return Gf2Poly::from_exponents(exps);
}

Naive naive_mul(const Naive& a, const Naive& b) {
  if (a.empty() || b.empty()) return {};
  Naive r(a.size() + b.size() - 1, false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (a[i] && b[j]) r[i + j] = !r[i + j];
    }
  }
  return r;
}

Gf2Poly random_poly(std::mt19937_64& rng, std::size_t max_degree) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  const std::size_t d = deg(rng);
  std::vector<std::size_t> exps;
  for (std::size_t i = 0; i <= d; ++i) {
    if (rng() & 1) exps.push_back(i);
  }
  return Gf2Poly::from_exponents(exps);
}

Gf2Poly P(const char* s) { return parse_poly(s); }

}  // namespace

TEST_CASE("zero and one are distinct canonical values") {
  const Gf2Poly zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == Gf2Poly::kNoDegree);
  CHECK(Gf2Poly::one().degree() == 0);
  CHECK(zero != Gf2Poly::one());
  CHECK(P("x^70+1") + P("x^70") == Gf2Poly::one());
  CHECK((P("x^70+1") + P("x^70")).words().size() == 1);
}

TEST_CASE("add") {
  CHECK(add(P("x^2+x+1"), P("x^2+x+1")).is_zero());
  CHECK(add(P("x^3+x+1"), P("x+1")) == P("x^3"));
  CHECK(add(P("x^2+x+1"), Gf2Poly{}) == P("x^2+x+1"));
}

TEST_CASE("mul") {
  CHECK(mul(P("x+1"), P("x^2+x+1")) == P("x^3+1"));
  CHECK(mul(P("x^2+x+1"), P("x^3+x^2+1")) == P("x^5+x+1"));
  CHECK(mul(P("x^7+x+1"), Gf2Poly{}).is_zero());
}

TEST_CASE("div_rem") {
  auto [q1, r1] = div_rem(P("x^5+x+1"), P("x^2+x+1"));
  CHECK(q1 == P("x^3+x^2+1"));
  CHECK(r1.is_zero());
  auto [q2, r2] = div_rem(P("x^3+x+1"), P("x^2+x+1"));
  CHECK(q2 == P("x+1"));
  CHECK(r2 == P("x"));
  const Gf2Poly p = P("x^100+x^63+x^64+x");
  auto [q3, r3] = div_rem(p, Gf2Poly::one());
  CHECK(q3 == p);
  CHECK(r3.is_zero());
  CHECK_THROWS_AS(div_rem(p, Gf2Poly{}), DomainError);
}

TEST_CASE("gcd") {
  CHECK(gcd(P("1+x^3"), P("x+x^2+x^3")) == P("x^2+x+1"));
  CHECK(gcd(P("x^9+x^4+1"), P("x^9+x^4+1")) == P("x^9+x^4+1"));
  CHECK(gcd(P("1+x^5"), P("x+x^4+x^5")).is_one());
  CHECK(gcd(P("x^4+x+1"), Gf2Poly{}) == P("x^4+x+1"));
  CHECK(gcd(Gf2Poly{}, Gf2Poly{}).is_zero());
}

TEST_CASE("mod_pow_x") {
  CHECK(mod_pow_x(3, P("x^2+x+1")).is_one());
  CHECK(mod_pow_x(0, P("x^5+x^2+1")).is_one());
  CHECK(mod_pow_x(6, P("x^3+x+1")) == P("x^2+1"));
  // Top of the exponent range.
  const Gf2Poly f = P("x^31+x^3+1");
  const std::uint64_t k = ~std::uint64_t{0};
  CHECK(mod_pow_x(k, f) == rem(mod_pow_x(k - 1, f).shifted(1), f));
  CHECK_THROWS_AS(mod_pow_x(5, Gf2Poly::one()), DomainError);
  CHECK_THROWS_AS(mod_pow_x(5, Gf2Poly{}), DomainError);
}

TEST_CASE("one_plus_x_pow") {
  CHECK(one_plus_x_pow(1) == P("x"));
  CHECK(one_plus_x_pow(3) == P("x^3+x^2+x"));
  CHECK(one_plus_x_pow(5) == P("x^5+x^4+x"));
  CHECK_THROWS_AS(one_plus_x_pow(1000, 999), ResourceError);
  CHECK_THROWS_AS(one_plus_x_pow(0), DomainError);
}

TEST_CASE("one_plus_x_pow matches power by squaring for every e <= 4096") {
  const Gf2Poly base = P("x+1");
  // (1+x)^e by square-and-multiply, walking e upward incrementally.
  Gf2Poly power = Gf2Poly::one();
  bool all_match = true;
  for (std::uint64_t e = 1; e <= 4096; ++e) {
    if ((e & (e - 1)) == 0) {
      // Refresh from squaring at powers of two so both routes are exercised.
      Gf2Poly sq = base;
      for (std::uint64_t t = 1; t < e; t *= 2) sq = sq * sq;
      power = sq;
    } else {
      power = power * base;
    }
    if (one_plus_x_pow(e) != power + Gf2Poly::one()) {
      all_match = false;
      FAIL_CHECK("mismatch at e=" << e);
      break;
    }
  }
  CHECK(all_match);
}

TEST_CASE("reciprocal") {
  CHECK(reciprocal(P("x^3+x+1")) == P("x^3+x^2+1"));
  CHECK(reciprocal(P("x^2+x+1")) == P("x^2+x+1"));
  CHECK(reciprocal(P("x^6+x^3+1")) == P("x^6+x^3+1"));
  CHECK(reciprocal(P("x^5+x^2")) == P("x^3+1"));
  CHECK_THROWS_AS(reciprocal(Gf2Poly{}), DomainError);
}

TEST_CASE("is_self_reciprocal") {
  CHECK(is_self_reciprocal(P("x^2+x+1")));
  CHECK_FALSE(is_self_reciprocal(P("x^3+x+1")));
  CHECK(is_self_reciprocal(P("x^10+x^5+1")));
  CHECK_THROWS_AS(is_self_reciprocal(Gf2Poly{}), DomainError);
}

TEST_CASE("parse formats") {
  CHECK(P("x^2+x+1").exponents() == std::vector<std::size_t>{2, 1, 0});
  CHECK(P("6,3,0") == P("x^6+x^3+1"));
  CHECK(P("0x17") == P("x^4+x^2+x+1"));
  CHECK(P("1 + x^3 + x") == P("x^3+x+1"));
  CHECK(P("0").is_zero());
  CHECK(P("1").is_one());
  CHECK(P("0x0").is_zero());
  CHECK(P("0xFFFFFFFFFFFFFFFFF").degree() == 67);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(P("x^2+x^2+1"), DomainError);
  CHECK_THROWS_AS(P("3,3"), DomainError);
  CHECK_THROWS_AS(P(""), DomainError);
  CHECK_THROWS_AS(P("x^"), DomainError);
  CHECK_THROWS_AS(P("x^2++1"), DomainError);
  CHECK_THROWS_AS(P("y^2+1"), DomainError);
  CHECK_THROWS_AS(P("0xg1"), DomainError);
  CHECK_THROWS_AS(P("7"), DomainError);
  CHECK_THROWS_AS(P("x^-1"), DomainError);
  CHECK_THROWS_AS(parse_poly("x^5000+1", 4096), ResourceError);
}

TEST_CASE("format is canonical and round-trips") {
  CHECK(format_poly(P("1+x+x^6")) == "x^6+x+1");
  CHECK(format_poly(Gf2Poly{}) == "0");
  CHECK(format_poly(Gf2Poly::one()) == "1");
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Gf2Poly p = random_poly(rng, 300);
    CHECK(parse_poly(format_poly(p)) == p);
  }
}

TEST_CASE("ring axioms against the naive reference") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    const Gf2Poly p = random_poly(rng, 200);
    const Gf2Poly q = random_poly(rng, 200);
    const Gf2Poly r = random_poly(rng, 200);
    CHECK(p * q == poly_of(naive_mul(naive_of(p), naive_of(q))));
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p + p).is_zero());
    CHECK(p.squared() == p * p);
  }
}

TEST_CASE("div_rem reconstructs") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    const Gf2Poly p = random_poly(rng, 400);
    Gf2Poly q = random_poly(rng, 150);
    if (q.is_zero()) q = Gf2Poly::one();
    const auto [quot, rest] = div_rem(p, q);
    CHECK(q * quot + rest == p);
    CHECK(rest.degree() < q.degree());
  }
}

TEST_CASE("gcd divides both and absorbs known common factors") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Gf2Poly common = random_poly(rng, 40) + Gf2Poly::monomial(41);
    const Gf2Poly p = common * random_poly(rng, 100);
    const Gf2Poly q = common * random_poly(rng, 100);
    const Gf2Poly g = gcd(p, q);
    if (p.is_zero() || q.is_zero()) continue;
    CHECK(divides(g, p));
    CHECK(divides(g, q));
    CHECK(divides(common, g));
  }
}

TEST_CASE("reciprocal is an involution when the constant term is 1") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const Gf2Poly p = random_poly(rng, 300) + Gf2Poly::monomial(301) + Gf2Poly::one();
    if (!p.coeff(0)) continue;
    CHECK(reciprocal(reciprocal(p)) == p);
  }
}

TEST_CASE("derivative keeps odd exponents") {
  CHECK(P("x^5+x^4+x^3+x+1").derivative() == P("x^4+x^2+1"));
  CHECK(P("x^65+x^64").derivative() == P("x^64"));
  CHECK(P("x^2+1").derivative().is_zero());
}

TEST_CASE("trinomial") {
  const Trinomial t(6, 3);
  CHECK(t.to_poly() == P("x^6+x^3+1"));
  CHECK(t.is_self_reciprocal());
  CHECK(t.to_string() == "x^6+x^3+1");
  CHECK_THROWS_AS(Trinomial(3, 3), DomainError);
  CHECK_THROWS_AS(Trinomial(3, 0), DomainError);
  CHECK(Trinomial(5, 1) < Trinomial(5, 4));
  CHECK(Trinomial(4, 3) < Trinomial(5, 1));
}
