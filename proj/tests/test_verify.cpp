#include <doctest.h>

#include "fatpoints/errors.hpp"
#include "fatpoints/verify.hpp"

using namespace fatpoints;

TEST_CASE("verify: even square checks generators") {
  const auto rep = verify_conjectures(16, 2, kDefaultPrime, 0);
  CHECK(rep.match);
  CHECK(rep.attempts == 1);
  CHECK(rep.oracle_alpha == 9);
  REQUIRE(rep.hilbert.size() == 3);
  CHECK(rep.hilbert[0].oracle == 0);
  CHECK(rep.hilbert[1].oracle == 7);
  CHECK(rep.hilbert[2].oracle == 18);
  CHECK(rep.generators_checked);
  REQUIRE(rep.generators.size() == 2);
  CHECK(rep.generators[0] == std::pair<std::int64_t, std::int64_t>{9, 7});
  CHECK(rep.generators[1] == std::pair<std::int64_t, std::int64_t>{10, 0});
  CHECK(rep.monotone);
  CHECK(rep.above_count_bound);
}

TEST_CASE("verify: odd square skips generators by default") {
  const auto rep = verify_conjectures(25, 1, kDefaultPrime, 0);
  CHECK(rep.match);
  CHECK_FALSE(rep.generators_checked);
  CHECK(rep.hilbert[0].oracle == 0);
  CHECK(rep.hilbert[1].oracle == 3);
  CHECK(rep.hilbert[2].oracle == 11);

  const auto forced = verify_conjectures(25, 1, kDefaultPrime, 0, true);
  CHECK(forced.match);
  CHECK(forced.generators[1].second == 2);
}

TEST_CASE("verify: rejects n below 10") {
  CHECK_THROWS_AS(verify_conjectures(9, 1, kDefaultPrime, 0), ParameterError);
}

TEST_CASE("verify: tiny field exercises the reseed policy") {
  // Over F_11 random points are often special; the invariants must hold regardless.
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto rep = verify_conjectures(10, 1, 11, seed);
    CHECK(rep.attempts >= 1);
    CHECK(rep.attempts <= kMaxReseeds + 1);
    if (!rep.match) CHECK(rep.attempts == kMaxReseeds + 1);
    if (rep.attempts > 1) CHECK(rep.seed_used != seed);
    CHECK(rep.monotone);
    CHECK(rep.above_count_bound);
    CHECK(rep.oracle_alpha <= rep.conjectured_alpha);
  }
}

TEST_CASE("alpha oracle with reseeds") {
  CHECK(alpha_oracle_with_reseeds(16, 1, kDefaultPrime, 0, 5) == 5);
  CHECK(alpha_oracle_with_reseeds(16, 2, kDefaultPrime, 0, 9) == 9);
}
