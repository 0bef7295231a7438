#ifndef WAVETRAJ_SELFTEST_HPP
#define WAVETRAJ_SELFTEST_HPP

#include <string>
#include <vector>

namespace wavetraj {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Fast end-to-end sweep of the library invariants: field identities,
/// elliptic kernels and the Legendre reduction, closed forms against the
/// reference integrator, first-integral conservation, the period and drift
/// identities, the shape classifier exemplars, and serialization. Intended
/// for the CLI `selftest` subcommand; runs in a few seconds.
std::vector<CheckResult> run_selftest();

}  // namespace wavetraj

#endif
