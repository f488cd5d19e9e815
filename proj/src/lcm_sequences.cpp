#include "parityseq/lcm_sequences.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "parityseq/parity_kernel.hpp"

namespace parityseq {

namespace {

void lcm_in_place(Term& acc, std::uint64_t k) {
  mpz_lcm_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(k));
}

// Sum of lcm(n-r+1..n) / lcm(1..r) for r in [first_r, n]. Both lcms are
// extended one element at a time as r grows.
Term lcm_quotient_sum(std::uint64_t n, std::uint64_t first_r) {
  Term sum = 0;
  Term window = 1;
  Term prefix = 1;
  Term quotient;
  for (std::uint64_t r = 0; r <= n; ++r) {
    if (r > 0) {
      lcm_in_place(window, n - r + 1);
      lcm_in_place(prefix, r);
    }
    if (r < first_r) continue;
    mpz_divexact(quotient.get_mpz_t(), window.get_mpz_t(), prefix.get_mpz_t());
    sum += quotient;
  }
  return sum;
}

}  // namespace

Term lcm_range(std::int64_t lo, std::int64_t hi) {
  Term acc = 1;
  if (lo > hi) return acc;
  if (lo <= 0) throw std::domain_error("lcm_range: elements must be positive, got " + std::to_string(lo));
  for (std::int64_t k = lo; k <= hi; ++k) lcm_in_place(acc, static_cast<std::uint64_t>(k));
  return acc;
}

unsigned two_adic_valuation(std::uint64_t n) {
  if (n == 0) throw std::domain_error("two_adic_valuation: undefined for 0");
  return static_cast<unsigned>(std::countr_zero(n));
}

unsigned two_adic_valuation(const Term& n) {
  if (n <= 0) throw std::domain_error("two_adic_valuation: undefined for non-positive values");
  return static_cast<unsigned>(mpz_scan1(n.get_mpz_t(), 0));
}

Term a061297(std::uint64_t n) { return lcm_quotient_sum(n, 0); }

Term a093431(std::uint64_t n) {
  if (n == 0) throw std::domain_error("a093431: n must be >= 1");
  return lcm_quotient_sum(n, 1);
}

Parity a061297_parity_shortcut(std::uint64_t n) {
  if (n % 2 == 1) return Parity::zero();
  return Parity::of(binary_weight(n / 2) + 1);
}

// v2(lcm(1..r)) = floor(log2 r), and r consecutive integers always contain a
// multiple of that power, so the quotient is odd iff no window element
// carries a strictly higher power of two.
bool quotient_term_is_odd(std::uint64_t n, std::uint64_t r) {
  if (r > n) throw std::domain_error("quotient_term_is_odd: r must not exceed n");
  if (r == 0) return true;
  const unsigned prefix_valuation = static_cast<unsigned>(std::bit_width(r) - 1);
  unsigned window_valuation = 0;
  for (std::uint64_t k = n - r + 1; k <= n; ++k) {
    window_valuation = std::max(window_valuation, two_adic_valuation(k));
  }
  return window_valuation == prefix_valuation;
}

}  // namespace parityseq
