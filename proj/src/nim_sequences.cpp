#include "parityseq/nim_sequences.hpp"

#include <stdexcept>

#include "parityseq/parity_kernel.hpp"

namespace parityseq {

namespace {

Term pow3(unsigned long e) {
  Term r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, e);
  return r;
}

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw std::domain_error(std::string(what) + ": n must be >= 1");
}

}  // namespace

Term ordered_p_count_closed(std::uint64_t n) {
  if (n % 2 == 1) return 0;
  return pow3(static_cast<unsigned long>(binary_weight(n / 2)));
}

Term ordered_p_count_bruteforce(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a <= n; ++a) {
    for (std::uint64_t b = 0; a + b <= n; ++b) {
      const HeapTriple t{a, b, a ^ b};
      if (t.total() == n) ++count;
    }
  }
  return to_term(count);
}

// (3^{s-1} - 1) / 2 where s = s2(n/2) >= 1 for even n >= 2.
Term a128975_closed(std::uint64_t n) {
  require_positive(n, "a128975_closed");
  if (n % 2 == 1) return 0;
  Term r = pow3(static_cast<unsigned long>(binary_weight(n / 2) - 1)) - 1;
  return r / 2;
}

Term a128975_bruteforce(std::uint64_t n) {
  require_positive(n, "a128975_bruteforce");
  std::uint64_t count = 0;
  for (std::uint64_t a = 1; 3 * a < n; ++a) {
    for (std::uint64_t b = a + 1; a + 2 * b < n; ++b) {
      const HeapTriple t{a, b, n - a - b};
      if (t.c > b && t.is_p_position()) ++count;
    }
  }
  return to_term(count);
}

}  // namespace parityseq
