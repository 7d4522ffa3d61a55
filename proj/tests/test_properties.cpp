#include <doctest.h>

#include "property_suites.hpp"

using namespace qmf::props;

namespace {
void report(const Tally& t) {
  CHECK(t.cases == kCases);
  CHECK_MESSAGE(t.failures == 0, t.name << ": " << t.failures << " of " << t.checks << " checks failed, first: " << t.first_failure);
}
}  // namespace

TEST_CASE("series ring axioms") { report(series_ring_axioms()); }
TEST_CASE("Leibniz rule") { report(leibniz_rule()); }
TEST_CASE("reversion and composition") { report(reversion_and_composition()); }
TEST_CASE("lattice round trips") { report(lattice_round_trips()); }
TEST_CASE("fraction cross-multiplication") { report(fraction_cross_multiplication()); }

TEST_CASE("a failing property is counted once per check") {
  Tally t{"probe"};
  t.check(true, "a");
  t.check(false, "b");
  t.check(false, "c");
  CHECK(t.checks == 3);
  CHECK(t.failures == 2);
  CHECK(t.first_failure == "b (case 0)");
}
