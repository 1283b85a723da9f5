#include "trinodiv/cli.hpp"

#include <sstream>

#include "CLI11.hpp"
#include "trinodiv/criteria.hpp"
#include "trinodiv/cyclotomic.hpp"
#include "trinodiv/errors.hpp"
#include "trinodiv/gf2poly.hpp"
#include "trinodiv/intarith.hpp"
#include "trinodiv/order.hpp"
#include "trinodiv/verify.hpp"

namespace trinodiv::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultMaxE = std::uint64_t{1} << 18;

struct Settings {
  std::uint64_t max_e = kDefaultMaxE;
  std::size_t degree_cap = kDefaultDegreeCap;
};

json trinomial_list(const std::vector<Trinomial>& ts) {
  json arr = json::array();
  for (const auto& t : ts) arr.push_back(t.to_string());
  return arr;
}

void check_max_e(std::uint64_t e, const Settings& s) {
  if (e > s.max_e) {
    throw ResourceError("order " + std::to_string(e) + " exceeds --max-e " + std::to_string(s.max_e));
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void cmd_order(CommandResult& r, const std::string& text, const Settings& s) {
  const Gf2Poly f = parse_poly(text, s.degree_cap);
  r.inputs["poly"] = format_poly(f);
  const auto info = certify(f);
  r.outputs["degree"] = info.degree;
  r.outputs["order"] = info.order;
  r.outputs["primitive"] = info.primitive;
  r.text.push_back("poly:      " + format_poly(f));
  r.text.push_back("degree:    " + std::to_string(info.degree));
  r.text.push_back("order:     " + std::to_string(info.order));
  r.text.push_back("primitive: " + yes_no(info.primitive));
}

void cmd_irreducible(CommandResult& r, const std::string& text, const Settings& s) {
  const Gf2Poly f = parse_poly(text, s.degree_cap);
  r.inputs["poly"] = format_poly(f);
  const bool irr = is_irreducible(f);
  r.outputs["irreducible"] = irr;
  r.text.push_back(format_poly(f) + (irr ? " is irreducible" : " is reducible"));
}

void cmd_nf(CommandResult& r, const std::string& text, bool list, const Settings& s) {
  const Gf2Poly f = parse_poly(text, s.degree_cap);
  r.inputs["poly"] = format_poly(f);
  r.inputs["list"] = list;
  const auto info = certify(f);
  std::uint64_t nf = 0;
  std::string method;
  std::vector<Trinomial> multiples;
  if (info.order <= s.max_e) {
    nf = count_nf(info, s.degree_cap);
    method = "welch_gcd";
    if (list) multiples = list_trinomial_multiples(info, info.order);
  } else {
    // Past the gcd cap the power table is the linear-time route.
    multiples = list_trinomial_multiples(info, info.order);
    nf = multiples.size();
    method = "power_table";
  }
  r.outputs["order"] = info.order;
  r.outputs["nf"] = nf;
  r.outputs["method"] = method;
  r.text.push_back("poly:   " + format_poly(f));
  r.text.push_back("order:  " + std::to_string(info.order));
  r.text.push_back("N_f:    " + std::to_string(nf) + " (" + method + ")");
  if (list) {
    r.outputs["trinomials"] = trinomial_list(multiples);
    for (const auto& t : multiples) r.text.push_back("  " + t.to_string());
  }
}

void cmd_welch(CommandResult& r, std::uint64_t e, const Settings& s) {
  r.inputs["e"] = e;
  check_max_e(e, s);
  const Gf2Poly g = welch_gcd(e, s.degree_cap);
  const bool divides_some = g.degree() > 1;
  r.outputs["divides_trinomials"] = divides_some;
  r.outputs["gcd_degree"] = g.degree();
  r.text.push_back("irreducibles of order " + std::to_string(e) + " divide trinomials: " + yes_no(divides_some));
  r.text.push_back("gcd degree: " + std::to_string(g.degree()));
}

void cmd_extwelch(CommandResult& r, std::uint64_t e, const std::string& poly_text, std::uint64_t a,
                  std::uint64_t b, const Settings& s) {
  if (!poly_text.empty()) {
    const Gf2Poly f = parse_poly(poly_text, s.degree_cap);
    r.inputs["poly"] = format_poly(f);
    e = certify(f).order;
  } else if (e == 0) {
    throw DomainError("extwelch: give an order e or --poly");
  }
  r.inputs["e"] = e;
  r.inputs["a"] = a;
  r.inputs["b"] = b;
  const auto orders = ext_welch_orders(e, a, b);
  check_max_e(std::max(orders.e1, orders.e2), s);
  const Gf2Poly g = ext_welch_gcd(orders.e1, orders.e2, s.degree_cap);
  const bool divides_some = g.degree() > 1;
  r.outputs["e1"] = orders.e1;
  r.outputs["e2"] = orders.e2;
  r.outputs["gcd_degree"] = g.degree();
  r.outputs["divides_trinomials"] = divides_some;
  r.text.push_back("e=" + std::to_string(e) + " a=" + std::to_string(a) + " b=" + std::to_string(b) +
                   ": e1=" + std::to_string(orders.e1) + " e2=" + std::to_string(orders.e2) +
                   " gcd degree " + std::to_string(g.degree()));
  r.text.push_back("some x^(am)+x^(bs)+1 is divisible: " + yes_no(divides_some));
}

void cmd_check(CommandResult& r, const std::string& text, const std::string& tri_text, const Settings& s) {
  const Gf2Poly f = parse_poly(text, s.degree_cap);
  const auto comma = tri_text.find(',');
  if (comma == std::string::npos) throw DomainError("--trinomial expects N,K");
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  try {
    n = std::stoull(tri_text.substr(0, comma));
    k = std::stoull(tri_text.substr(comma + 1));
  } catch (const std::exception&) {
    throw DomainError("--trinomial expects N,K, got '" + tri_text + "'");
  }
  const Trinomial t(n, k);
  r.inputs["poly"] = format_poly(f);
  r.inputs["trinomial"] = t.to_string();
  if (f.is_zero()) throw DomainError("check: divisor is the zero polynomial");
  const bool divisible = divides(f, t.to_poly(s.degree_cap));
  r.outputs["divides"] = divisible;
  r.text.push_back(format_poly(f) + (divisible ? " divides " : " does not divide ") + t.to_string());

  if (f.degree() >= 1 && f != Gf2Poly::x() && is_irreducible(f)) {
    const auto info = certify(f);
    r.outputs["order"] = info.order;
    if (info.order > 1) {
      const bool passes = necessary_check(info.order, 1, 1, n, k);
      r.outputs["necessary_condition"] = passes;
      r.text.push_back("order " + std::to_string(info.order) + "; necessary condition (e divides none of n, k, n-k): " +
                       (passes ? "holds" : "fails, so no divisibility"));
    }
    if (f == Gf2Poly::from_uint(7)) {
      const bool rule = mod3_divides(n, k);
      r.outputs["mod3_rule"] = rule;
      r.text.push_back("residue rule for x^2+x+1: " + yes_no(rule));
    }
  } else {
    r.outputs["necessary_condition"] = nullptr;
    r.text.push_back("divisor is not an irreducible with an order; necessary condition not applicable");
  }
}

void cmd_srt_factor(CommandResult& r, std::uint64_t m, bool verify, const Settings& s) {
  r.inputs["m"] = m;
  r.inputs["verify"] = verify;
  if (m == 0) throw DomainError("srt-factor: m must be positive");
  if (2 * m > s.degree_cap) throw ResourceError("srt-factor: degree 2m exceeds the degree cap");
  const auto fact = srt_factorization(m);
  json idx = json::array();
  json factors = json::object();
  std::string product;
  for (std::uint64_t d : fact.indices) {
    idx.push_back(d);
    factors["Q_" + std::to_string(d)] = format_poly(cyclotomic(d, s.degree_cap));
    if (!product.empty()) product += " * ";
    product += "Q_" + std::to_string(d);
  }
  r.outputs["k"] = fact.k;
  r.outputs["odd_part"] = fact.odd_part;
  r.outputs["multiplicity"] = fact.multiplicity;
  r.outputs["indices"] = idx;
  r.outputs["factors"] = factors;
  r.outputs["phi_sum"] = fact.index_degree_sum();
  const std::string lhs = Trinomial(2 * m, m).to_string();
  r.text.push_back(lhs + " = (" + product + ")^" + std::to_string(fact.multiplicity));
  for (const auto& [name, poly] : factors.items()) r.text.push_back("  " + name + " = " + poly.get<std::string>());
  if (m % 2 == 1) {
    const Trinomial c1 = irreducible_srt_divisor(m);
    r.outputs["irreducible_trinomial_divisor"] = c1.to_string();
    r.text.push_back("irreducible trinomial divisor: " + c1.to_string());
  }
  if (verify) {
    const bool ok = fact.recompose() == self_reciprocal_trinomial(m, s.degree_cap);
    r.outputs["recomposes"] = ok;
    r.text.push_back(std::string("recomposition: ") + (ok ? "exact" : "MISMATCH"));
    if (!ok) {
      r.ok = false;
      r.exit_code = kExitCounterexample;
      r.message = "factorization does not recompose";
    }
  }
}

void cmd_cyclotomic(CommandResult& r, std::uint64_t d, const Settings& s) {
  r.inputs["d"] = d;
  const Gf2Poly q = cyclotomic(d, s.degree_cap);
  r.outputs["degree"] = q.degree();
  r.outputs["poly"] = format_poly(q);
  r.text.push_back("Q_" + std::to_string(d) + " = " + format_poly(q));
}

void cmd_multiples(CommandResult& r, const std::string& text, std::uint64_t bound, const Settings& s) {
  const Gf2Poly f = parse_poly(text, s.degree_cap);
  r.inputs["poly"] = format_poly(f);
  const auto info = certify(f);
  if (bound == 0) bound = info.order;
  r.inputs["bound"] = bound;
  const auto ts = list_trinomial_multiples(info, bound);
  r.outputs["order"] = info.order;
  r.outputs["count"] = ts.size();
  r.outputs["trinomials"] = trinomial_list(ts);
  r.text.push_back(std::to_string(ts.size()) + " trinomial(s) of degree < " + std::to_string(bound) +
                   " divisible by " + format_poly(f) + " (order " + std::to_string(info.order) + ")");
  for (const auto& t : ts) r.text.push_back("  " + t.to_string());
}

void cmd_search_redundant(CommandResult& r, unsigned n, std::uint64_t max_degree, bool primitive,
                          const Settings& s) {
  r.inputs["n"] = n;
  r.inputs["max_degree"] = max_degree;
  r.inputs["primitive"] = primitive;
  if (n == 0) throw DomainError("search-redundant: n must be positive");
  if (max_degree > s.degree_cap) throw ResourceError("search-redundant: --max-degree exceeds the degree cap");
  if (primitive && n > 64) throw ResourceError("search-redundant: --primitive needs n <= 64");
  json found = json::array();
  for (std::uint64_t deg = std::max<std::uint64_t>(n, 2); deg <= max_degree; ++deg) {
    for (std::uint64_t k = 1; k < deg; ++k) {
      const Trinomial t(deg, k);
      const Gf2Poly poly = t.to_poly(s.degree_cap);
      if (!has_irreducible_factor_of_degree(poly, n)) continue;
      if (primitive && !has_primitive_factor_of_degree(poly, n)) continue;
      const Gf2Poly part = distinct_degree_part(poly, n);
      json rec = json::object();
      rec["trinomial"] = t.to_string();
      rec["degree_n_part"] = format_poly(part);
      rec["degree_n_factors"] = static_cast<std::uint64_t>(part.degree()) / n;
      found.push_back(rec);
      r.text.push_back(t.to_string() + "  [degree-" + std::to_string(n) + " part: " + format_poly(part) + "]");
    }
  }
  r.outputs["count"] = found.size();
  r.outputs["trinomials"] = found;
  r.text.insert(r.text.begin(), std::to_string(found.size()) + " trinomial(s) of degree <= " +
                                    std::to_string(max_degree) + " with an " +
                                    (primitive ? "primitive" : "irreducible") + " factor of degree " +
                                    std::to_string(n));
}

void cmd_verify(CommandResult& r, const std::string& suite, const SweepOptions& opt) {
  r.inputs["suite"] = suite;
  r.inputs["max_degree"] = opt.max_degree;
  r.inputs["jobs"] = opt.jobs;
  r.inputs["samples"] = opt.samples;
  r.inputs["seed"] = opt.seed;
  const auto reports = run_suite(suite, opt);
  json arr = json::array();
  bool passed = true;
  for (const auto& rep : reports) {
    json j = json::object();
    j["name"] = rep.name;
    j["checked"] = rep.checked;
    j["failures"] = rep.failures;
    j["counterexamples"] = rep.counterexamples;
    arr.push_back(j);
    passed = passed && rep.passed();
    r.text.push_back(rep.name + ": checked " + std::to_string(rep.checked) + ", failures " +
                     std::to_string(rep.failures) + (rep.passed() ? "  ok" : "  FAIL"));
    for (const auto& c : rep.counterexamples) r.text.push_back("    " + c);
  }
  r.outputs["suites"] = arr;
  r.outputs["passed"] = passed;
  r.text.push_back(passed ? "all suites passed" : "counterexample found");
  if (!passed) {
    r.ok = false;
    r.exit_code = kExitCounterexample;
    r.message = "verification suite found a counterexample";
  }
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CommandResult result;
  CLI::App app{"Divisibility of trinomials by irreducible polynomials over GF(2)", "trinodiv"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string format = "text";
  Settings settings;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-e", settings.max_e, "Largest order fed to a Welch gcd")->capture_default_str();
  app.add_option("--degree-cap", settings.degree_cap, "Largest polynomial degree allocated")
      ->capture_default_str();

  std::string poly;
  std::string poly_opt;
  std::string tri;
  std::string suite;
  std::uint64_t number = 0;
  std::uint64_t a = 1;
  std::uint64_t b = 1;
  std::uint64_t bound = 0;
  std::uint64_t max_degree = 0;
  unsigned n = 0;
  bool flag_list = false;
  bool flag_verify = false;
  bool flag_primitive = false;
  SweepOptions sweep;

  auto* order = app.add_subcommand("order", "Degree, order and primitivity of an irreducible");
  order->add_option("poly", poly)->required();
  auto* irreducible = app.add_subcommand("irreducible", "Irreducibility test");
  irreducible->add_option("poly", poly)->required();
  auto* nf = app.add_subcommand("nf", "Number of trinomials of degree < e divisible by an irreducible");
  nf->add_option("poly", poly)->required();
  nf->add_flag("--list", flag_list, "Also list the trinomials");
  auto* welch_cmd = app.add_subcommand("welch", "Welch criterion for order e");
  welch_cmd->add_option("e", number)->required();
  auto* extwelch = app.add_subcommand("extwelch", "Criterion for x^(am)+x^(bs)+1");
  extwelch->add_option("e", number);
  extwelch->add_option("--a", a)->capture_default_str();
  extwelch->add_option("--b", b)->capture_default_str();
  extwelch->add_option("--poly", poly_opt, "Resolve e by certifying this polynomial");
  auto* check = app.add_subcommand("check", "Divisibility of one trinomial by a polynomial");
  check->add_option("poly", poly)->required();
  check->add_option("--trinomial", tri, "N,K for x^N+x^K+1")->required();
  auto* srt = app.add_subcommand("srt-factor", "Cyclotomic factorization of x^(2m)+x^m+1");
  srt->add_option("m", number)->required();
  srt->add_flag("--verify", flag_verify, "Multiply back out and compare");
  auto* cyclo = app.add_subcommand("cyclotomic", "Cyclotomic polynomial Q_d over GF(2)");
  cyclo->add_option("d", number)->required();
  auto* multiples = app.add_subcommand("multiples", "Trinomials of degree < bound divisible by an irreducible");
  multiples->add_option("poly", poly)->required();
  multiples->add_option("--bound", bound, "Defaults to the order");
  auto* search = app.add_subcommand("search-redundant", "Trinomials with an irreducible factor of degree n");
  search->add_option("n", n)->required();
  search->add_option("--max-degree", max_degree, "Largest trinomial degree")->required();
  search->add_flag("--primitive", flag_primitive, "Require the factor to be primitive");
  auto* verify = app.add_subcommand("verify", "Oracle-equivalence sweeps");
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember([] {
    auto names = suite_names();
    names.push_back("all");
    return names;
  }()));
  verify->add_option("--max-degree", sweep.max_degree)->capture_default_str();
  verify->add_option("--jobs", sweep.jobs)->capture_default_str();
  verify->add_option("--samples", sweep.samples, "Random tuples for thm5")->capture_default_str();
  verify->add_option("--seed", sweep.seed)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.command = "help";
    result.text.push_back(app.help());
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.command = "help";
    result.text.push_back(app.help("", CLI::AppFormatMode::All));
    return result;
  } catch (const CLI::ParseError& e) {
    result.command = app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name();
    result.ok = false;
    result.exit_code = kExitDomainError;
    result.message = e.what();
    // Honour --format even when something else was malformed.
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
      if (args[i] == "--format" && args[i + 1] == "json") result.format = OutputFormat::kJson;
    }
    return result;
  }
  result.format = format == "json" ? OutputFormat::kJson : OutputFormat::kText;
  result.command = app.get_subcommands().front()->get_name();

  try {
    if (order->parsed()) {
      cmd_order(result, poly, settings);
    } else if (irreducible->parsed()) {
      cmd_irreducible(result, poly, settings);
    } else if (nf->parsed()) {
      cmd_nf(result, poly, flag_list, settings);
    } else if (welch_cmd->parsed()) {
      cmd_welch(result, number, settings);
    } else if (extwelch->parsed()) {
      cmd_extwelch(result, number, poly_opt, a, b, settings);
    } else if (check->parsed()) {
      cmd_check(result, poly, tri, settings);
    } else if (srt->parsed()) {
      cmd_srt_factor(result, number, flag_verify, settings);
    } else if (cyclo->parsed()) {
      cmd_cyclotomic(result, number, settings);
    } else if (multiples->parsed()) {
      cmd_multiples(result, poly, bound, settings);
    } else if (search->parsed()) {
      cmd_search_redundant(result, n, max_degree, flag_primitive, settings);
    } else if (verify->parsed()) {
      cmd_verify(result, suite, sweep);
    }
  } catch (const ResourceError& e) {
    result.ok = false;
    result.exit_code = kExitResourceError;
    result.message = e.what();
  } catch (const std::exception& e) {
    result.ok = false;
    result.exit_code = kExitDomainError;
    result.message = e.what();
  }
  return result;
}

std::string render(const CommandResult& result) {
  if (result.format == OutputFormat::kJson) {
    json j = json::object();
    j["command"] = result.command;
    j["inputs"] = result.inputs;
    json outputs = result.outputs;
    if (!result.ok) outputs["error"] = result.message;
    j["outputs"] = outputs;
    j["status"] = result.ok ? "ok" : "error";
    return j.dump();
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < result.text.size(); ++i) os << (i ? "\n" : "") << result.text[i];
  if (!result.ok) os << (result.text.empty() ? "" : "\n") << "error: " << result.message;
  return os.str();
}

}  // namespace trinodiv::cli
