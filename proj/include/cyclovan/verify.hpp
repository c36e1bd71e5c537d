#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cyclovan {

/// Invariant suites runnable over a range of moduli. Each suite bundles the
/// checks of one structural result or one cross-route identity.
enum class Suite {
  Ramanujan,      // closed form vs direct sum, periodicity, evenness,
                  // multiplicativity, vanishing criterion
  Gram,           // numeric V*V product vs integer Toeplitz construction
  Kronecker,      // block structure G_n = h (G_rad(n) (x) Id_h)
  Similarity,     // sign-flip similarity of G_n and G_2n (odd n) + spectra
  Theorem1,       // exact reduction of Cond^2 to the radical
  Theorem2,       // exact closed form of Cond^2 for p^k and 2^k p^l
  Theorem3,       // integrality of n G_n^-1 and the two constructions agreeing
  Orthogonality,  // root-of-unity orthogonality sums
  Spectrum,       // eigenvalue form of Cond^2 vs the exact rational value
};

/// All suites, in canonical order.
const std::vector<Suite>& all_suites();

std::string suite_name(Suite s);

/// Parses a comma-separated suite list; "all" selects every suite.
/// Throws std::invalid_argument on an unknown name.
std::vector<Suite> parse_suites(const std::string& spec);

struct SuiteReport {
  Suite suite;
  long from = 0;
  long to = 0;
  long checked = 0;  // moduli the suite applies to
  long passed = 0;
  long failed = 0;
  long skipped = 0;  // moduli outside the suite's applicability
  std::optional<long> first_failure;

  bool ok() const { return failed == 0; }
};

/// Runs one suite over every n in [from, to], optionally with a worker pool.
SuiteReport run_suite(Suite s, long from, long to, int jobs = 1);

/// Runs several suites over [from, to].
std::vector<SuiteReport> run_suites(const std::vector<Suite>& suites, long from,
                                    long to, int jobs = 1);

}  // namespace cyclovan
