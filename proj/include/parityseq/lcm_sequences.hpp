#pragma once

#include <cstdint>

#include "parityseq/term.hpp"

namespace parityseq {

/// lcm(lo, lo+1, ..., hi); 1 for the empty range lo > hi.
/// Throws std::domain_error if the range is non-empty and lo <= 0.
Term lcm_range(std::int64_t lo, std::int64_t hi);

/// Exponent of the largest power of two dividing n. Throws std::domain_error for n == 0.
unsigned two_adic_valuation(std::uint64_t n);
unsigned two_adic_valuation(const Term& n);

/// Sum over r = 0..n of lcm(n-r+1..n) / lcm(1..r).
Term a061297(std::uint64_t n);

/// Same sum starting at r = 1; requires n >= 1.
Term a093431(std::uint64_t n);

/// Parity of a061297(n) without big-integer work: 0 for odd n,
/// (s2(n/2) + 1) mod 2 for even n.
Parity a061297_parity_shortcut(std::uint64_t n);

/// Whether the r-th summand lcm(n-r+1..n) / lcm(1..r) is odd, from 2-adic
/// valuations alone. Requires r <= n.
bool quotient_term_is_odd(std::uint64_t n, std::uint64_t r);

}  // namespace parityseq
