#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// runner. Each returns the number of cases run and the first failure.

#include <string>

namespace cubsym::testing {

struct SuiteResult {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }
  void record(bool held, const std::string& what);
};

SuiteResult field_axioms(int cases);
SuiteResult act_composition(int cases);
SuiteResult rep_multiplicativity(int cases);
SuiteResult cayley_hamilton(int cases);
SuiteResult euler_identity(int cases);
/// Groebner bases of partials of random and catalog cubics: every
/// S-polynomial reduces to zero and every generator lies in the ideal.
SuiteResult groebner_certificates(int cases);
SuiteResult nonsingularity_equivariance(int cases);

}  // namespace cubsym::testing
