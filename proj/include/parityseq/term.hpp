#pragma once

#include <cstdint>
#include <ostream>

#include <gmpxx.h>

namespace parityseq {

/// Exact non-negative sequence value.
using Term = mpz_class;

/// A value in {0, 1}.
class Parity {
 public:
  constexpr Parity() = default;

  /// Parity of a signed integer using the non-negative remainder, so of(-1) is 1.
  static constexpr Parity of(std::int64_t k) {
    return Parity(static_cast<std::uint8_t>(((k % 2) + 2) % 2));
  }

  static constexpr Parity zero() { return Parity(0); }
  static constexpr Parity one() { return Parity(1); }

  constexpr int value() const { return bit_; }
  constexpr bool is_one() const { return bit_ == 1; }

  constexpr Parity complement() const { return Parity(static_cast<std::uint8_t>(1 - bit_)); }

  friend constexpr Parity operator^(Parity a, Parity b) {
    return Parity(static_cast<std::uint8_t>(a.bit_ ^ b.bit_));
  }
  friend constexpr Parity operator^(Parity a, bool flip) { return flip ? a.complement() : a; }
  friend constexpr bool operator==(Parity, Parity) = default;

  friend std::ostream& operator<<(std::ostream& os, Parity p) { return os << p.value(); }

 private:
  constexpr explicit Parity(std::uint8_t bit) : bit_(bit) {}
  std::uint8_t bit_ = 0;
};

inline Parity parity_of(const Term& t) { return mpz_odd_p(t.get_mpz_t()) ? Parity::one() : Parity::zero(); }

inline Term to_term(std::uint64_t v) {
  Term t;
  mpz_import(t.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return t;
}

}  // namespace parityseq
