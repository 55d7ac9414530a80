#include "awtk/dichotomy.hpp"

#include <stdexcept>

#include "awtk/solver.hpp"

namespace awtk {

DichotomyReport exhaustive_dichotomy(long long n) {
  if (n < 2) throw std::invalid_argument("dichotomy needs N >= 2");
  DichotomyReport report;
  report.n = n;
  EnumerationOptions options;
  options.unique_endpoints = true;
  report.examined = for_each_rainbow_free(
      GroupInstance::interval(n), 3, options, [&report](const Coloring& c) {
        DichotomyResult r = dichotomy_holds(c);
        if (r.holds) {
          ++report.branches[static_cast<std::size_t>(*r.branch)];
        } else {
          report.failures.push_back(c);
        }
      });
  return report;
}

}  // namespace awtk
