#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "parityseq/parity_kernel.hpp"

using namespace parityseq;

TEST_CASE("Parity uses the non-negative remainder") {
  CHECK(Parity::of(-1) == Parity::one());
  CHECK(Parity::of(-2) == Parity::zero());
  CHECK(Parity::of(7).value() == 1);
  CHECK(Parity::one().complement().complement() == Parity::one());
  CHECK((Parity::one() ^ true) == Parity::zero());
}

TEST_CASE("binary_weight") {
  CHECK(binary_weight(0) == 0);
  CHECK(binary_weight(7) == 3);
  CHECK(binary_weight(12) == 2);
  for (std::uint64_t n = 0; n < 5000; ++n) REQUIRE(binary_weight(n) == oracle::weight(n));
}

TEST_CASE("thue_morse and its complement") {
  CHECK(thue_morse(0).value() == 0);
  CHECK(thue_morse(3).value() == 0);
  CHECK(thue_morse(4).value() == 1);
  CHECK(thue_morse_bar(0).value() == 1);
  CHECK(thue_morse_bar(5).value() == 1);
  CHECK(thue_morse_bar(1).value() == 0);

  for (std::uint64_t n = 0; n < (1u << 14); ++n) {
    REQUIRE(thue_morse(2 * n) == thue_morse(n));
    REQUIRE(thue_morse(2 * n + 1) == thue_morse(n).complement());
    REQUIRE(thue_morse(n).value() + thue_morse_bar(n).value() == 1);
  }
}

TEST_CASE("evil and odious enumeration") {
  CHECK(evil(1) == 0);
  CHECK(evil(2) == 3);
  CHECK(evil(5) == 9);
  CHECK(odious(1) == 1);
  CHECK(odious(4) == 7);
  CHECK(odious(13) == 25);
  CHECK_THROWS_AS(evil(0), std::domain_error);
  CHECK_THROWS_AS(odious(0), std::domain_error);

  const std::size_t count = 4000;
  const auto evils = oracle::scan_weight_class(count, false);
  const auto odiouses = oracle::scan_weight_class(count, true);
  std::set<std::uint64_t> seen;
  for (std::size_t k = 1; k <= count; ++k) {
    REQUIRE(evil(k) == evils[k - 1]);
    REQUIRE(odious(k) == odiouses[k - 1]);
    REQUIRE(binary_weight(evil(k)) % 2 == 0);
    REQUIRE(binary_weight(odious(k)) % 2 == 1);
    seen.insert(evil(k));
    seen.insert(odious(k));
  }
  // Together the first k of each cover exactly 0..2k-1.
  CHECK(seen.size() == 2 * count);
  CHECK(*seen.rbegin() == 2 * count - 1);
}

TEST_CASE("master sequence") {
  CHECK(master_m(0).value() == 1);
  CHECK(master_m(6).value() == 1);
  CHECK(master_m(7).value() == 0);
  CHECK(master_m_recursive(0).value() == 1);
  CHECK(master_m_recursive(10).value() == 1);
  CHECK(master_m_recursive(12).value() == 1);

  for (std::uint64_t n = 0; n <= (1u << 16); ++n) {
    REQUIRE(master_m(n) == master_m_recursive(n));
    REQUIRE(master_m(n) == a228495(n + 1));
    REQUIRE(master_m(n).value() == oracle::m(n));
  }
}

TEST_CASE("master sequence on large indices") {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = rng() >> 2;
    REQUIRE(master_m(n) == master_m_recursive(n));
  }
}

TEST_CASE("a228495") {
  CHECK(a228495(2).value() == 0);
  CHECK(a228495(1).value() == 1);
  CHECK(a228495(7).value() == 1);
  CHECK_THROWS_AS(a228495(0), std::domain_error);
}

TEST_CASE("corollary: m at even n is the parity of s2(n/2) - 1") {
  for (std::uint64_t n = 0; n <= (1u << 16); n += 2) {
    REQUIRE(master_m(n) == Parity::of(binary_weight(n / 2) - 1));
  }
}

TEST_CASE("BinaryWord") {
  const auto w = BinaryWord::from_string("0110");
  CHECK(w.length() == 4);
  CHECK(w.to_string() == "0110");
  CHECK(w.prefix(2).to_string() == "01");
  CHECK(w.contains(BinaryWord::from_string("11")));
  CHECK_FALSE(w.contains(BinaryWord::from_string("00")));
  CHECK_THROWS_AS(BinaryWord::from_string("012"), std::invalid_argument);
  CHECK_THROWS_AS(BinaryWord(std::vector<std::uint8_t>{0, 2}), std::invalid_argument);
}

TEST_CASE("apply_morphism") {
  CHECK(apply_morphism(BinaryWord::from_string("01"), Morphism::thue_morse()).to_string() == "0110");
  CHECK(apply_morphism(BinaryWord{}, Morphism::thue_morse()).empty());
  CHECK(apply_morphism(BinaryWord{}, Morphism::master()).empty());
  CHECK(apply_morphism(BinaryWord::from_string("1000"), Morphism::master()).to_string() == "10000010");

  SUBCASE("length not a multiple of the block") {
    CHECK_THROWS_AS(apply_morphism(BinaryWord::from_string("100"), Morphism::master()), std::invalid_argument);
  }
  SUBCASE("missing rule") {
    CHECK_THROWS_AS(apply_morphism(BinaryWord::from_string("0111"), Morphism::master()), std::invalid_argument);
  }
  SUBCASE("rule blocks must match the block length") {
    CHECK_THROWS_AS(Morphism(2, {{{0}, BinaryWord::from_string("00")}}), std::invalid_argument);
    CHECK_THROWS_AS(Morphism(0, {}), std::invalid_argument);
  }
}

TEST_CASE("morphism fixed points") {
  for (std::size_t len = 1; len <= (1u << 12); len *= 2) {
    REQUIRE(apply_morphism(thue_morse_word(len), Morphism::thue_morse()) == thue_morse_word(2 * len));
  }
  for (std::size_t len = 2; len <= (1u << 13); len *= 2) {
    REQUIRE(apply_morphism(master_word(len), Morphism::master()) == master_word(2 * len));
  }
}

TEST_CASE("max_run") {
  CHECK(max_run(BinaryWord::from_string("1000001"), 0) == 5);
  CHECK(max_run(BinaryWord{}, 0) == 0);
  CHECK(max_run(master_word(32), 1) == 1);

  const auto m = master_word(1u << 16);
  CHECK(max_run(m, 0) == 5);
  CHECK(max_run(m, 1) == 1);
  CHECK_FALSE(m.contains(BinaryWord::from_string("101010")));
}

TEST_CASE("has_cube") {
  CHECK(has_cube(BinaryWord::from_string("000"), 1));
  CHECK_FALSE(has_cube(BinaryWord::from_string("0110"), 2));
  CHECK_FALSE(has_cube(BinaryWord{}, 3));
  CHECK(has_cube(BinaryWord::from_string("1101101101"), 3));
  CHECK_FALSE(has_cube(BinaryWord::from_string("1101101101"), 2));
  CHECK_FALSE(has_cube(thue_morse_word(4096), 64));

  SUBCASE("agrees with direct substring comparison on random words") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
      std::string s(3 + rng() % 40, '0');
      for (auto& c : s) c = static_cast<char>('0' + rng() % 2);
      const std::size_t bound = 1 + rng() % 8;
      REQUIRE(has_cube(BinaryWord::from_string(s), bound) == oracle::naive_has_cube(s, bound));
    }
  }
}
