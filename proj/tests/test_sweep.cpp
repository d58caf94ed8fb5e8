#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jocp/sweep.hpp"

using namespace jocp;

TEST_CASE("grid construction is deterministic and complete") {
  const auto grid = agreement_grid(6, 5, 99, 50);
  const auto again = agreement_grid(6, 5, 99, 50);
  REQUIRE(grid.size() == again.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(grid[i].m == again[i].m);
    CHECK(grid[i].p == again[i].p);
    CHECK(grid[i].coeffs == again[i].coeffs);
  }
  // per m: (t monomials + 5 random) specs, one copy per prime <= m+1
  std::size_t expected = 0;
  for (long m = 2; m <= 6; m += 2) {
    expected += (static_cast<std::size_t>(m / 2) + 5) * primes_up_to(m + 1).size();
  }
  CHECK(grid.size() == expected);
  for (const auto& c : grid) {
    CHECK(c.coeffs.size() == static_cast<std::size_t>(c.m / 2));
    CHECK(is_prime(c.p));
    CHECK(c.p <= c.m + 1);
  }
}

TEST_CASE("parallel kernel matches the serial reference") {
  const auto grid = agreement_grid(8, 10, 20240501, 50);
  const auto serial = run_agreement_serial(grid);
  const auto parallel = run_agreement_parallel(grid);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].v_psi == parallel[i].v_psi);
    CHECK(serial[i].v_theta == parallel[i].v_theta);
    CHECK(serial[i].v_snf == parallel[i].v_snf);
    CHECK(serial[i].error == parallel[i].error);
  }
  CHECK(count_disagreements(serial) == 0);
  CHECK(count_disagreements(parallel) == 0);
}
