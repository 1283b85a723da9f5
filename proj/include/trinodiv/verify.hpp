#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace trinodiv {

struct SweepOptions {
  unsigned max_degree = 12;
  unsigned jobs = 1;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0x7269'6e6f'6469'7631ull;
};

struct SuiteReport {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  /// First few failing cases, verbatim.
  std::vector<std::string> counterexamples;

  bool passed() const noexcept { return failures == 0; }
};

/// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs one oracle-equivalence sweep ("lemma1", "thm1", ..., "cor5") or
/// every one of them for "all". Exceptions inside a case are recorded as
/// failures, not propagated. Throws DomainError for an unknown name.
std::vector<SuiteReport> run_suite(std::string_view name, const SweepOptions& options);

}  // namespace trinodiv
