#include "parityseq/parity_kernel.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace parityseq {

int binary_weight(std::uint64_t n) { return std::popcount(n); }

Parity thue_morse(std::uint64_t n) { return Parity::of(binary_weight(n)); }

Parity thue_morse_bar(std::uint64_t n) { return thue_morse(n).complement(); }

// Exactly one of 2j, 2j+1 is evil, and 2j is evil iff j is.
std::uint64_t evil(std::uint64_t k) {
  if (k == 0) throw std::domain_error("evil: index is 1-based");
  const std::uint64_t j = k - 1;
  return 2 * j + static_cast<std::uint64_t>(thue_morse(j).value());
}

std::uint64_t odious(std::uint64_t k) {
  if (k == 0) throw std::domain_error("odious: index is 1-based");
  const std::uint64_t j = k - 1;
  return 2 * j + static_cast<std::uint64_t>(thue_morse_bar(j).value());
}

Parity master_m(std::uint64_t n) {
  if (n % 2 == 1) return Parity::zero();
  return thue_morse_bar(n / 2);
}

Parity master_m_recursive(std::uint64_t n) {
  if (n == 0) return Parity::one();
  if (n % 2 == 1) return Parity::zero();
  if (n % 4 == 0) return master_m_recursive(n / 2);
  return master_m_recursive(n / 2 - 1).complement();  // n = 4k+2 -> 1 - m(2k)
}

Parity a228495(std::uint64_t n) {
  if (n == 0) throw std::domain_error("a228495: n must be >= 1");
  return Parity::of(static_cast<int>(n % 2 == 1 && thue_morse(n).is_one()));
}

BinaryWord::BinaryWord(std::vector<std::uint8_t> symbols) : symbols_(std::move(symbols)) {
  for (auto s : symbols_) {
    if (s > 1) throw std::invalid_argument("BinaryWord: symbol outside {0,1}");
  }
}

BinaryWord BinaryWord::from_string(std::string_view text) {
  std::vector<std::uint8_t> symbols;
  symbols.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("BinaryWord: expected only '0' and '1'");
    symbols.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BinaryWord(std::move(symbols));
}

std::string BinaryWord::to_string() const {
  std::string out;
  out.reserve(symbols_.size());
  for (auto s : symbols_) out.push_back(static_cast<char>('0' + s));
  return out;
}

void BinaryWord::push_back(std::uint8_t s) {
  if (s > 1) throw std::invalid_argument("BinaryWord: symbol outside {0,1}");
  symbols_.push_back(s);
}

void BinaryWord::append(const BinaryWord& other) {
  symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
}

BinaryWord BinaryWord::prefix(std::size_t length) const {
  length = std::min(length, symbols_.size());
  BinaryWord out;
  out.symbols_.assign(symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(length));
  return out;
}

bool BinaryWord::contains(const BinaryWord& factor) const {
  return std::search(symbols_.begin(), symbols_.end(), factor.symbols_.begin(), factor.symbols_.end()) !=
         symbols_.end();
}

Morphism::Morphism(std::size_t block_length, std::map<std::vector<std::uint8_t>, BinaryWord> rules)
    : block_length_(block_length), rules_(std::move(rules)) {
  if (block_length_ == 0) throw std::invalid_argument("Morphism: block length must be positive");
  for (const auto& [block, image] : rules_) {
    if (block.size() != block_length_) throw std::invalid_argument("Morphism: rule block has wrong length");
  }
}

Morphism Morphism::thue_morse() {
  return Morphism(1, {{{0}, BinaryWord::from_string("01")}, {{1}, BinaryWord::from_string("10")}});
}

Morphism Morphism::master() {
  return Morphism(2, {{{0, 0}, BinaryWord::from_string("0010")}, {{1, 0}, BinaryWord::from_string("1000")}});
}

BinaryWord apply_morphism(const BinaryWord& w, const Morphism& rho) {
  const std::size_t block = rho.block_length();
  if (w.length() % block != 0) {
    throw std::invalid_argument("apply_morphism: word length is not a multiple of the block length");
  }
  BinaryWord out;
  std::vector<std::uint8_t> key(block);
  for (std::size_t i = 0; i < w.length(); i += block) {
    for (std::size_t j = 0; j < block; ++j) key[j] = w[i + j];
    auto it = rho.rules().find(key);
    if (it == rho.rules().end()) throw std::invalid_argument("apply_morphism: no rule for block at " + std::to_string(i));
    out.append(it->second);
  }
  return out;
}

std::size_t max_run(const BinaryWord& w, std::uint8_t symbol) {
  std::size_t best = 0;
  std::size_t current = 0;
  for (std::size_t i = 0; i < w.length(); ++i) {
    current = w[i] == symbol ? current + 1 : 0;
    best = std::max(best, current);
  }
  return best;
}

// xxx with |x| = p starts at i iff w[j] == w[j+p] for every j in [i, i+2p),
// so it suffices to track runs of such agreements for each period.
bool has_cube(const BinaryWord& w, std::size_t max_block) {
  const std::size_t n = w.length();
  for (std::size_t p = 1; p <= max_block && 3 * p <= n; ++p) {
    std::size_t agree = 0;
    for (std::size_t j = 0; j + p < n; ++j) {
      agree = w[j] == w[j + p] ? agree + 1 : 0;
      if (agree >= 2 * p) return true;
    }
  }
  return false;
}

BinaryWord thue_morse_word(std::size_t length) {
  std::vector<std::uint8_t> s(length);
  for (std::size_t i = 0; i < length; ++i) s[i] = static_cast<std::uint8_t>(thue_morse(i).value());
  return BinaryWord(std::move(s));
}

BinaryWord thue_morse_bar_word(std::size_t length) {
  std::vector<std::uint8_t> s(length);
  for (std::size_t i = 0; i < length; ++i) s[i] = static_cast<std::uint8_t>(thue_morse_bar(i).value());
  return BinaryWord(std::move(s));
}

BinaryWord master_word(std::size_t length) {
  std::vector<std::uint8_t> s(length);
  for (std::size_t i = 0; i < length; ++i) s[i] = static_cast<std::uint8_t>(master_m(i).value());
  return BinaryWord(std::move(s));
}

}  // namespace parityseq
