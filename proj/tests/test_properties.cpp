#include "doctest.h"

#include "properties.hpp"

using namespace cubsym::testing;

namespace {
void check_suite(const SuiteResult& r, int expected_cases) {
  CHECK(r.cases == expected_cases);
  CHECK_MESSAGE(r.failures == 0, r.first_failure);
}
}  // namespace

TEST_CASE("field axioms") { check_suite(field_axioms(1000), 1000); }
TEST_CASE("act composition") { check_suite(act_composition(1000), 1000); }
TEST_CASE("representation multiplicativity") { check_suite(rep_multiplicativity(50), 50); }
TEST_CASE("Cayley-Hamilton") { check_suite(cayley_hamilton(100), 100); }
TEST_CASE("Euler identity") { check_suite(euler_identity(100), 100); }
TEST_CASE("Groebner certificates") { check_suite(groebner_certificates(12), 12); }
TEST_CASE("nonsingularity is coordinate-free") { check_suite(nonsingularity_equivariance(20), 20); }
