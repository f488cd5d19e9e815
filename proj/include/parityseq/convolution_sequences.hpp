#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "parityseq/term.hpp"

namespace parityseq {

/// The n+1 products f(i) * f(n-i) whose sum is the self-convolution at n.
struct ConvolutionWindow {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> terms;

  std::uint64_t sum() const;
};

/// Requires f.size() > n.
ConvolutionWindow self_convolution_window(std::span<const std::uint64_t> f, std::uint64_t n);

/// Self-convolution of f at every index below f.size().
std::vector<Term> self_convolution_prefix(std::span<const std::uint64_t> f);

/// t-bar with zeros replaced by twos: 1 for evil n, 2 for odious n.
Term a001285(std::uint64_t n);

/// Self-convolution of A001285.
Term a029886(std::uint64_t n);

/// Self-convolution of t-bar.
Term a247303(std::uint64_t n);

/// First `count` values of A001285 and t-bar as machine integers.
std::vector<std::uint64_t> a001285_values(std::size_t count);
std::vector<std::uint64_t> thue_morse_bar_values(std::size_t count);

}  // namespace parityseq
