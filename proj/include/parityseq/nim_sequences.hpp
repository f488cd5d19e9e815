#pragma once

#include <cstdint>

#include "parityseq/term.hpp"

namespace parityseq {

/// Heap sizes of a three-heap Nim position.
struct HeapTriple {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;

  std::uint64_t total() const { return a + b + c; }
  /// Previous-player win: the nim-sum is zero.
  bool is_p_position() const { return (a ^ b ^ c) == 0; }
};

/// Ordered three-heap P-positions with n counters in total, empty heaps
/// allowed: 3^{s2(n/2)} for even n, 0 for odd n.
Term ordered_p_count_closed(std::uint64_t n);

/// Same count by enumerating a, b and setting c = a XOR b.
Term ordered_p_count_bruteforce(std::uint64_t n);

/// Unordered three-heap P-positions with non-empty heaps (A128975), closed form.
/// Requires n >= 1.
Term a128975_closed(std::uint64_t n);

/// A128975 by enumerating a < b < c.
Term a128975_bruteforce(std::uint64_t n);

}  // namespace parityseq
