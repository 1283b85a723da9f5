#include "trinodiv/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "trinodiv/criteria.hpp"
#include "trinodiv/cyclotomic.hpp"
#include "trinodiv/errors.hpp"
#include "trinodiv/oracle.hpp"
#include "trinodiv/order.hpp"

namespace trinodiv {

namespace {

constexpr std::size_t kMaxCounterexamples = 10;
constexpr std::uint64_t kSrtMaxM = 1024;
constexpr std::uint64_t kCor4MaxN = 200;
constexpr std::uint64_t kCor5MaxE = 2001;
constexpr unsigned kThm6MaxDegree = 10;
constexpr std::uint64_t kThm6MaxAB = 12;
constexpr std::uint64_t kThm5MaxParam = 50;

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

std::string join(const std::vector<Trinomial>& ts) {
  std::string out = "[";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i > 0) out += ", ";
    out += ts[i].to_string();
  }
  return out + "]";
}

// Evaluates fn(i) for i < count on up to `jobs` threads; results stay in input order.
std::vector<Outcome> parallel_cases(std::size_t count, unsigned jobs, const std::function<Outcome(std::size_t)>& fn) {
  std::vector<Outcome> out(count);
  auto guarded = [&](std::size_t i) {
    try {
      out[i] = fn(i);
    } catch (const std::exception& ex) {
      out[i] = fail("case " + std::to_string(i) + ": exception: " + ex.what());
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) guarded(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) guarded(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

SuiteReport summarize(std::string name, const std::vector<Outcome>& outcomes) {
  SuiteReport r;
  r.name = std::move(name);
  for (const auto& o : outcomes) {
    ++r.checked;
    if (o.ok) continue;
    ++r.failures;
    if (r.counterexamples.size() < kMaxCounterexamples) r.counterexamples.push_back(o.detail);
  }
  return r;
}

// Certified irreducibles of degree 1..max_degree, x excluded.
std::vector<IrreducibleInfo> catalog(unsigned max_degree) {
  std::vector<IrreducibleInfo> out;
  for (unsigned d = 1; d <= max_degree; ++d) {
    for (const auto& f : irreducibles_of_degree(d)) {
      if (f == Gf2Poly::x()) continue;
      out.push_back(certify(f));
    }
  }
  return out;
}

std::vector<IrreducibleInfo> of_degree_at_least(const std::vector<IrreducibleInfo>& all, unsigned lo,
                                                unsigned hi) {
  std::vector<IrreducibleInfo> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out),
               [&](const IrreducibleInfo& i) { return i.degree >= lo && i.degree <= hi; });
  return out;
}

std::string describe(const IrreducibleInfo& info) {
  return format_poly(info.poly) + " (e=" + std::to_string(info.order) + ")";
}

std::vector<Trinomial> self_reciprocal_only(std::vector<Trinomial> ts) {
  std::erase_if(ts, [](const Trinomial& t) { return !t.is_self_reciprocal(); });
  return ts;
}

SuiteReport suite_thm1(const std::vector<IrreducibleInfo>& all, const SweepOptions& opt) {
  const auto infos = of_degree_at_least(all, 2, opt.max_degree);
  return summarize("thm1", parallel_cases(infos.size(), opt.jobs, [&](std::size_t i) {
                     const auto& info = infos[i];
                     const bool found = !self_reciprocal_only(oracle::brute_trinomial_multiples(info)).empty();
                     if (found != divides_some_selfreciprocal(info)) {
                       return fail(describe(info) + ": criterion says " + (found ? "no" : "yes") +
                                   ", oracle says " + (found ? "yes" : "no"));
                     }
                     return Outcome{};
                   }));
}

SuiteReport suite_lemma1(const std::vector<IrreducibleInfo>& all, const SweepOptions& opt) {
  const auto infos = of_degree_at_least(all, 2, opt.max_degree);
  return summarize("lemma1", parallel_cases(infos.size(), opt.jobs, [&](std::size_t i) {
                     const auto& info = infos[i];
                     if (info.order % 3 != 0) return Outcome{};
                     const auto srts = self_reciprocal_only(oracle::brute_trinomial_multiples(info));
                     const Trinomial expected = unique_srt(info);
                     if (srts.size() != 1 || srts[0] != expected) {
                       return fail(describe(info) + ": expected exactly " + expected.to_string() +
                                   ", oracle found " + join(srts));
                     }
                     return Outcome{};
                   }));
}

SuiteReport suite_thm2(const SweepOptions& opt) {
  CyclotomicCache cache;
  return summarize("thm2", parallel_cases(kSrtMaxM, opt.jobs, [&](std::size_t i) {
                     const std::uint64_t m = i + 1;
                     const auto fact = srt_factorization(m);
                     if (fact.recompose(&cache) != self_reciprocal_trinomial(m)) {
                       return fail("m=" + std::to_string(m) + ": factorization does not recompose");
                     }
                     if (m % 2 == 1) {
                       if (fact.index_degree_sum() != 2 * m) {
                         return fail("m=" + std::to_string(m) + ": sum of phi over indices is " +
                                     std::to_string(fact.index_degree_sum()));
                       }
                       const Trinomial div = irreducible_srt_divisor(m);
                       if (!divides(div.to_poly(), self_reciprocal_trinomial(m))) {
                         return fail("m=" + std::to_string(m) + ": " + div.to_string() + " does not divide");
                       }
                     }
                     return Outcome{};
                   }));
}

SuiteReport suite_thm3(const std::vector<IrreducibleInfo>& all, const SweepOptions& opt) {
  const auto& infos = all;
  return summarize("thm3", parallel_cases(infos.size(), opt.jobs, [&](std::size_t i) {
                     const auto& info = infos[i];
                     const auto brute = oracle::brute_trinomial_multiples(info);
                     const Gf2Poly g = welch_gcd(info.order);
                     const std::uint64_t nf = count_nf(info);
                     if (nf != brute.size()) {
                       return fail(describe(info) + ": N_f=" + std::to_string(nf) + ", oracle counts " +
                                   std::to_string(brute.size()) + " " + join(brute));
                     }
                     if (g.degree() % 2 != 0) {
                       return fail(describe(info) + ": gcd degree " + std::to_string(g.degree()) + " is odd");
                     }
                     if (!gcd(g, g.derivative()).is_one()) {
                       return fail(describe(info) + ": gcd " + format_poly(g) + " is not squarefree");
                     }
                     const auto listed = list_trinomial_multiples(info, info.order);
                     if (listed != brute) {
                       return fail(describe(info) + ": table listing " + join(listed) + " vs oracle " + join(brute));
                     }
                     return Outcome{};
                   }));
}

SuiteReport suite_cor3(const std::vector<IrreducibleInfo>& all, const SweepOptions& opt) {
  std::vector<IrreducibleInfo> infos;
  for (const auto& i : of_degree_at_least(all, 2, opt.max_degree)) {
    if (i.primitive) infos.push_back(i);
  }
  return summarize("cor3", parallel_cases(infos.size(), opt.jobs, [&](std::size_t i) {
                     const auto& info = infos[i];
                     const std::uint64_t expected = (std::uint64_t{1} << (info.degree - 1)) - 1;
                     const std::uint64_t nf = count_nf(info);
                     if (nf != expected) {
                       return fail(describe(info) + ": N_f=" + std::to_string(nf) + ", expected " +
                                   std::to_string(expected));
                     }
                     return Outcome{};
                   }));
}

SuiteReport suite_thm4(const std::vector<IrreducibleInfo>& all, const SweepOptions& opt) {
  const auto& infos = all;
  return summarize("thm4", parallel_cases(infos.size(), opt.jobs, [&](std::size_t i) {
                     const auto& info = infos[i];
                     if (count_nf(info) != 1) return Outcome{};
                     const auto brute = oracle::brute_trinomial_multiples(info);
                     if (info.order % 3 != 0 || brute.size() != 1 || !brute[0].is_self_reciprocal()) {
                       return fail(describe(info) + ": N_f=1 but multiples are " + join(brute));
                     }
                     return Outcome{};
                   }));
}

SuiteReport suite_thm5(const std::vector<IrreducibleInfo>& all, const SweepOptions& opt) {
  std::vector<IrreducibleInfo> infos;
  for (const auto& i : all) {
    if (i.order > 1) infos.push_back(i);
  }
  struct Tuple {
    std::size_t f;
    std::uint64_t a, b, m, s;
  };
  std::vector<Tuple> tuples;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick_f(0, infos.empty() ? 0 : infos.size() - 1);
  std::uniform_int_distribution<std::uint64_t> pick(1, kThm5MaxParam);
  const std::uint64_t max_attempts = opt.samples * 100'000;
  for (std::uint64_t attempt = 0; !infos.empty() && tuples.size() < opt.samples && attempt < max_attempts;
       ++attempt) {
    Tuple t{pick_f(rng), pick(rng), pick(rng), pick(rng), pick(rng)};
    if (t.a * t.m == t.b * t.s) continue;
    if (!necessary_check(infos[t.f].order, t.a, t.b, t.m, t.s)) tuples.push_back(t);
  }
  auto report = summarize("thm5", parallel_cases(tuples.size(), opt.jobs, [&](std::size_t i) {
                            const auto& t = tuples[i];
                            const auto& info = infos[t.f];
                            const std::uint64_t am = t.a * t.m;
                            const std::uint64_t bs = t.b * t.s;
                            const std::size_t exps[] = {am, bs, 0};
                            if (divides(info.poly, Gf2Poly::from_exponents(exps))) {
                              return fail(describe(info) + " divides x^" + std::to_string(am) + "+x^" +
                                          std::to_string(bs) + "+1 although the necessary condition fails");
                            }
                            return Outcome{};
                          }));
  if (tuples.size() < opt.samples) {
    ++report.failures;
    report.counterexamples.push_back("only " + std::to_string(tuples.size()) + " of " +
                                     std::to_string(opt.samples) + " tuples could be drawn");
  }
  return report;
}

SuiteReport suite_thm6(const std::vector<IrreducibleInfo>& all, const SweepOptions& opt) {
  const auto infos = of_degree_at_least(all, 1, std::min(opt.max_degree, kThm6MaxDegree));
  const std::size_t per = kThm6MaxAB * kThm6MaxAB;
  std::mutex mu;
  std::map<std::pair<std::uint64_t, std::uint64_t>, bool> by_orders;
  return summarize("thm6", parallel_cases(infos.size() * per, opt.jobs, [&](std::size_t i) {
                     const auto& info = infos[i / per];
                     const std::uint64_t a = (i % per) / kThm6MaxAB + 1;
                     const std::uint64_t b = i % kThm6MaxAB + 1;
                     const auto orders = ext_welch_orders(info.order, a, b);
                     bool criterion;
                     {
                       std::unique_lock lock(mu);
                       auto it = by_orders.find({orders.e1, orders.e2});
                       if (it == by_orders.end()) {
                         lock.unlock();
                         criterion = ext_welch(info.order, a, b);
                         lock.lock();
                         by_orders.emplace(std::make_pair(orders.e1, orders.e2), criterion);
                       } else {
                         criterion = it->second;
                       }
                     }
                     const auto witness = oracle::brute_ext_welch(info, a, b);
                     if (criterion != witness.has_value()) {
                       std::ostringstream os;
                       os << describe(info) << ", a=" << a << ", b=" << b << ": criterion says "
                          << (criterion ? "yes" : "no") << ", oracle ";
                       if (witness) {
                         os << "found m=" << witness->first << ", s=" << witness->second;
                       } else {
                         os << "found none";
                       }
                       return fail(os.str());
                     }
                     return Outcome{};
                   }));
}

SuiteReport suite_cor4(const SweepOptions& opt) {
  const Gf2Poly q3 = Gf2Poly::from_uint(7);
  const std::size_t count = kCor4MaxN * (kCor4MaxN - 1) / 2;
  return summarize("cor4", parallel_cases(count, opt.jobs, [&](std::size_t i) {
                     // Unrank i into 1 <= k < n <= 200.
                     std::uint64_t n = 2;
                     std::size_t rest = i;
                     while (rest >= n - 1) {
                       rest -= n - 1;
                       ++n;
                     }
                     const std::uint64_t k = rest + 1;
                     const bool direct = divides(q3, Trinomial(n, k).to_poly());
                     if (direct != mod3_divides(n, k)) {
                       return fail("x^" + std::to_string(n) + "+x^" + std::to_string(k) +
                                   "+1: residue rule disagrees with division");
                     }
                     return Outcome{};
                   }));
}

SuiteReport suite_cor5(const std::vector<IrreducibleInfo>& all, const SweepOptions& opt) {
  auto report = summarize("cor5", parallel_cases((kCor5MaxE + 1) / 2, opt.jobs, [&](std::size_t i) {
                            const std::uint64_t e = 2 * i + 1;
                            if (welch(e) != ext_welch(e, 1, 1)) {
                              return fail("e=" + std::to_string(e) + ": welch and ext_welch(1,1) disagree");
                            }
                            if (e == 1 && welch(e)) return fail("e=1: welch must be false");
                            return Outcome{};
                          }));
  // Orders realized by the catalog, viewed through the Welch gcd.
  const Gf2Poly q3 = Gf2Poly::from_uint(7);
  const auto realized = parallel_cases(all.size(), opt.jobs, [&](std::size_t i) {
    const auto& info = all[i];
    const Gf2Poly g = welch_gcd(info.order);
    const bool welch_says = g.degree() > 1;
    const bool oracle_says = !oracle::brute_trinomial_multiples(info).empty();
    if (welch_says != oracle_says) {
      return fail(describe(info) + ": welch says " + (welch_says ? "yes" : "no") + ", oracle says " +
                  (oracle_says ? "yes" : "no"));
    }
    const bool three = info.order % 3 == 0;
    if (three != divides(q3, g)) {
      return fail(describe(info) + ": 3 | e is " + (three ? "true" : "false") +
                  " but x^2+x+1 | welch_gcd is " + (three ? "false" : "true"));
    }
    if (three && !welch_says) return fail(describe(info) + ": 3 | e but welch is false");
    return Outcome{};
  });
  const auto extra = summarize("", realized);
  report.checked += extra.checked;
  report.failures += extra.failures;
  for (const auto& c : extra.counterexamples) {
    if (report.counterexamples.size() < kMaxCounterexamples) report.counterexamples.push_back(c);
  }
  return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lemma1", "thm1", "thm2", "thm3", "thm4",
                                                 "thm5",   "thm6", "cor3", "cor4", "cor5"};
  return names;
}

std::vector<SuiteReport> run_suite(std::string_view name, const SweepOptions& options) {
  const bool all = name == "all";
  if (!all && std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    throw DomainError("unknown suite '" + std::string(name) + "'");
  }
  if (options.max_degree < 2) throw DomainError("verify: max degree must be at least 2");
  if (options.max_degree > 20) throw ResourceError("verify: max degree above 20");

  std::vector<IrreducibleInfo> infos;
  const bool needs_catalog = all || (name != "thm2" && name != "cor4");
  if (needs_catalog) infos = catalog(options.max_degree);

  std::vector<SuiteReport> out;
  auto wants = [&](std::string_view s) { return all || name == s; };
  if (wants("lemma1")) out.push_back(suite_lemma1(infos, options));
  if (wants("thm1")) out.push_back(suite_thm1(infos, options));
  if (wants("thm2")) out.push_back(suite_thm2(options));
  if (wants("thm3")) out.push_back(suite_thm3(infos, options));
  if (wants("thm4")) out.push_back(suite_thm4(infos, options));
  if (wants("thm5")) out.push_back(suite_thm5(infos, options));
  if (wants("thm6")) out.push_back(suite_thm6(infos, options));
  if (wants("cor3")) out.push_back(suite_cor3(infos, options));
  if (wants("cor4")) out.push_back(suite_cor4(options));
  if (wants("cor5")) out.push_back(suite_cor5(infos, options));
  return out;
}

}  // namespace trinodiv
