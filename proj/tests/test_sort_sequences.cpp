#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "oracles.hpp"
#include "parityseq/parity_kernel.hpp"
#include "parityseq/sort_sequences.hpp"

using namespace parityseq;

TEST_CASE("A003071 by recursion") {
  CHECK(a003071(1) == 0);
  CHECK(a003071(5) == 9);
  CHECK(a003071(16) == 49);
  CHECK_THROWS_AS(a003071(0), std::domain_error);
}

TEST_CASE("list-merge schedule") {
  CHECK(a003071_simulate(1) == 0);
  CHECK(a003071_simulate(7) == 14);
  CHECK(a003071_simulate(16) == 49);

  const auto s = simulate_list_merge(7);
  using V = std::vector<std::uint64_t>;
  REQUIRE(s.rounds.size() == 4);
  CHECK(s.rounds[1] == V{2, 2, 2, 1});
  CHECK(s.rounds[2] == V{4, 3});
  CHECK(s.rounds[3] == V{7});
  for (const auto& round : s.rounds) CHECK(std::accumulate(round.begin(), round.end(), std::uint64_t{0}) == 7);
  CHECK_THROWS_AS(simulate_list_merge(0), std::domain_error);
}

TEST_CASE("recursion equals simulation") {
  for (std::uint64_t n = 1; n <= 4096; ++n) REQUIRE(a003071(n) == a003071_simulate(n));
  for (unsigned k = 1; k <= 12; ++k) REQUIRE(parity_of(a003071(1ull << k)) == Parity::one());
}

TEST_CASE("A001855") {
  CHECK(a001855(1) == 0);
  CHECK(a001855(5) == 8);
  CHECK(a001855(12) == 33);
  const auto prefix = a001855_prefix(200);
  for (std::uint64_t n = 1; n <= 200; ++n) REQUIRE(prefix[n - 1] == a001855(n));
}

TEST_CASE("A113474 chain") {
  CHECK(a113474(1) == 1);
  CHECK(a113474(6) == 5);
  CHECK(a113474(11) == 9);
  CHECK(a101925(0) == 1);
  CHECK(a101925(3) == 5);
  CHECK(a101925(4) == 8);
  CHECK(a005187(0) == 0);
  CHECK(a005187(3) == 4);
  CHECK(a005187(4) == 7);
  CHECK(a122248(0) == 0);
  CHECK(a122248(4) == 9);
  CHECK(a122248(16) == 119);
  CHECK_THROWS_AS(a113474(0), std::domain_error);

  for (std::uint64_t k = 1; k <= (1u << 14); ++k) {
    REQUIRE(a101925(k) == a113474(2 * k));
    REQUIRE(a113474(2 * k + 1) == a113474(2 * k));
  }
  for (std::uint64_t n = 0; n <= (1u << 14); ++n) {
    REQUIRE(a101925(n) == a005187(n) + 1);
    REQUIRE(parity_of(a101925(n)) == thue_morse_bar(n));
  }
  for (std::uint64_t n = 0; n <= (1u << 10); ++n) REQUIRE(a005187(n) == to_term(oracle::legendre_v2_factorial(2 * n)));
}

TEST_CASE("A122248 parity") {
  const auto sums = a122248_prefix((1u << 14) + 1);
  for (std::uint64_t n = 0; n < sums.size(); ++n) {
    if (n < 300) REQUIRE(sums[n] == a122248(n));
    if (n % 2 == 1) REQUIRE(parity_of(sums[n]) == Parity::one());
    REQUIRE(parity_of(sums[n]) == master_m(n).complement());
  }
}
