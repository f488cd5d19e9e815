#include "parityseq/digit_sequences.hpp"

#include <stdexcept>

#include "parityseq/parity_kernel.hpp"

namespace parityseq {

DigitVector DigitVector::of(std::uint64_t n) {
  DigitVector d;
  d.source = n;
  for (std::uint64_t v = n; v != 0; v >>= 1) d.bits.push_back(static_cast<std::uint8_t>(v & 1));
  return d;
}

Term DigitVector::evaluate_in_base(std::uint64_t base) const {
  // Horner from the most significant digit.
  Term acc = 0;
  const Term b = to_term(base);
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
    acc *= b;
    if (*it) acc += 1;
  }
  return acc;
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  if (n < 2) throw std::domain_error("smallest_prime_factor: n must be >= 2");
  if (n % 2 == 0) return 2;
  for (std::uint64_t p = 3; p <= n / p; p += 2) {
    if (n % p == 0) return p;
  }
  return n;
}

Term a092524(std::uint64_t n) {
  if (n == 0) throw std::domain_error("a092524: n must be >= 1");
  if (n == 1) return 1;
  return DigitVector::of(n).evaluate_in_base(smallest_prime_factor(n));
}

Term a104258(std::uint64_t n) {
  if (n == 0) throw std::domain_error("a104258: n must be >= 1");
  return DigitVector::of(n).evaluate_in_base(n);
}

Term a102393(std::uint64_t n) {
  if (thue_morse(n).is_one()) return 0;
  return to_term(n) + 1;
}

}  // namespace parityseq
