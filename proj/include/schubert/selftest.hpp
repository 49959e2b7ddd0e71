// Acceptance battery.  Eleven criteria, each exercising one end-to-end
// guarantee of the library at a pinned scale: exact reproduction of small
// known instances, cross-checks between independent oracles, soundness of
// the vanishing certificates, solution counts of emitted systems, and the
// structural tallies of those systems.  Each criterion reports a single
// verdict with a short account of what it covered and how long it took.

#ifndef SCHUBERT_SELFTEST_HPP
#define SCHUBERT_SELFTEST_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace schubert {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;   // coverage counts, retry statistics, or the first mismatch
  double seconds = 0.0;
};

// Run the battery.  Level 2 is the full scale (with the runtime budgets
// enforced as part of each verdict); level 1 trims the group sizes for a
// quick smoke run.  Throws std::invalid_argument for any other level.
std::vector<CriterionResult> run_acceptance(int level);

// Render one aligned verdict line per criterion plus a summary line;
// returns true when every criterion passed.  Timings are included only
// when with_times is set, so deterministic output is available.
bool print_acceptance(const std::vector<CriterionResult>& results, std::ostream& out,
                      bool with_times = true);

}  // namespace schubert

#endif  // SCHUBERT_SELFTEST_HPP
