#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "parityseq/term.hpp"

namespace parityseq {

/// Number of 1-bits of n.
int binary_weight(std::uint64_t n);

/// Thue-Morse: 1 iff n is odious.
Parity thue_morse(std::uint64_t n);

/// Logical negation of thue_morse; the characteristic function of evil numbers.
Parity thue_morse_bar(std::uint64_t n);

/// k-th evil number, 1-indexed. Throws std::domain_error for k == 0.
std::uint64_t evil(std::uint64_t k);

/// k-th odious number, 1-indexed. Throws std::domain_error for k == 0.
std::uint64_t odious(std::uint64_t k);

/// The master sequence: m(2k) = thue_morse_bar(k), m(2k+1) = 0.
Parity master_m(std::uint64_t n);

/// master_m evaluated through m(2n+1)=0, m(4n)=m(2n), m(4n+2)=1-m(2n), m(0)=1.
Parity master_m_recursive(std::uint64_t n);

/// Characteristic function of odd odious numbers. Requires n >= 1.
Parity a228495(std::uint64_t n);

/// Finite word over {0, 1}.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<std::uint8_t> symbols);

  /// Parses a string of '0'/'1' characters; anything else throws std::invalid_argument.
  static BinaryWord from_string(std::string_view text);

  std::string to_string() const;

  std::size_t length() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<std::uint8_t>& symbols() const { return symbols_; }

  void push_back(std::uint8_t s);
  void append(const BinaryWord& other);
  BinaryWord prefix(std::size_t length) const;

  /// True iff `factor` occurs as a contiguous subword.
  bool contains(const BinaryWord& factor) const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::vector<std::uint8_t> symbols_;
};

/// Uniform block substitution: every block of `block_length` symbols is
/// replaced by its rule image.
class Morphism {
 public:
  Morphism(std::size_t block_length, std::map<std::vector<std::uint8_t>, BinaryWord> rules);

  /// 0 -> 01, 1 -> 10.
  static Morphism thue_morse();
  /// 00 -> 0010, 10 -> 1000.
  static Morphism master();

  std::size_t block_length() const { return block_length_; }
  const std::map<std::vector<std::uint8_t>, BinaryWord>& rules() const { return rules_; }

 private:
  std::size_t block_length_;
  std::map<std::vector<std::uint8_t>, BinaryWord> rules_;
};

/// Concatenated rule images of consecutive non-overlapping blocks of w.
/// Throws std::invalid_argument if w's length is not a multiple of the block
/// length or a block has no rule.
BinaryWord apply_morphism(const BinaryWord& w, const Morphism& rho);

/// Longest run of `symbol` in w.
std::size_t max_run(const BinaryWord& w, std::uint8_t symbol);

/// True iff w contains a factor xxx with 1 <= |x| <= max_block.
bool has_cube(const BinaryWord& w, std::size_t max_block);

/// First `length` symbols of t, t-bar and m.
BinaryWord thue_morse_word(std::size_t length);
BinaryWord thue_morse_bar_word(std::size_t length);
BinaryWord master_word(std::size_t length);

}  // namespace parityseq
