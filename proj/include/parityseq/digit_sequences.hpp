#pragma once

#include <cstdint>
#include <vector>

#include "parityseq/term.hpp"

namespace parityseq {

/// Binary digits of `source`, least significant first.
struct DigitVector {
  std::vector<std::uint8_t> bits;
  std::uint64_t source = 0;

  static DigitVector of(std::uint64_t n);

  /// sum bits[i] * base^i
  Term evaluate_in_base(std::uint64_t base) const;
};

/// Least prime dividing n, by trial division. Throws std::domain_error for n < 2.
std::uint64_t smallest_prime_factor(std::uint64_t n);

/// Binary digits of n read in base p = smallest_prime_factor(n); a(1) = 1.
Term a092524(std::uint64_t n);

/// Binary digits of n read in base n. Requires n >= 1.
Term a104258(std::uint64_t n);

/// 0 if n is odious, n + 1 if n is evil.
Term a102393(std::uint64_t n);

}  // namespace parityseq
