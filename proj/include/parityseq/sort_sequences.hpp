#pragma once

#include <cstdint>
#include <vector>

#include "parityseq/term.hpp"

namespace parityseq {

/// Round-by-round list sizes of a bottom-up list-merge sort, with the
/// worst-case comparison total (p + q - 1 per merge of sizes p and q).
struct MergeSchedule {
  std::vector<std::vector<std::uint64_t>> rounds;
  std::uint64_t comparisons = 0;
};

/// Starts from n singleton lists and pairs lists left to right each round;
/// an odd list out is carried to the next round. Requires n >= 1.
MergeSchedule simulate_list_merge(std::uint64_t n);

/// Worst-case comparisons of list-merge sorting, by the power-of-two split
/// recursion. Requires n >= 1.
Term a003071(std::uint64_t n);

/// A003071 by running simulate_list_merge.
Term a003071_simulate(std::uint64_t n);

/// Worst-case comparisons of binary insertion sort: a(n) = a(n-1) + ceil(log2 n).
Term a001855(std::uint64_t n);

/// a(1) = 1, a(n) = a(floor(n/2)) + floor(n/2).
Term a113474(std::uint64_t n);

/// b(0) = 1, b(k) = b(floor(k/2)) + k; equals a113474(2k) for k >= 1.
Term a101925(std::uint64_t k);

/// 2-adic valuation of (2n)!, as 2n - s2(n).
Term a005187(std::uint64_t n);

/// Partial sums of A113474; a(0) = 0.
Term a122248(std::uint64_t n);

/// Values of A122248 at 0..count-1 in one pass.
std::vector<Term> a122248_prefix(std::size_t count);

/// Values of A001855 at 1..count in one pass.
std::vector<Term> a001855_prefix(std::size_t count);

}  // namespace parityseq
