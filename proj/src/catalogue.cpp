#include <algorithm>

#include "parityseq/convolution_sequences.hpp"
#include "parityseq/digit_sequences.hpp"
#include "parityseq/lcm_sequences.hpp"
#include "parityseq/nim_sequences.hpp"
#include "parityseq/parity_kernel.hpp"
#include "parityseq/sort_sequences.hpp"
#include "parityseq/verifier.hpp"

namespace parityseq {

namespace {

template <typename F>
Generator pointwise(F f) {
  return [f](std::uint64_t first, std::size_t count) {
    std::vector<Term> out;
    out.reserve(count);
    for (std::uint64_t n = first; n < first + count; ++n) {
      if constexpr (std::is_same_v<std::invoke_result_t<F, std::uint64_t>, Parity>) {
        out.emplace_back(f(n).value());
      } else {
        out.push_back(Term(f(n)));
      }
    }
    return out;
  };
}

template <typename F>
Generator pointwise_u64(F f) {
  return [f](std::uint64_t first, std::size_t count) {
    std::vector<Term> out;
    out.reserve(count);
    for (std::uint64_t n = first; n < first + count; ++n) out.push_back(to_term(f(n)));
    return out;
  };
}

// Self-convolution at first..first+count-1 over one shared prefix of f.
Generator convolution(std::vector<std::uint64_t> (*values)(std::size_t)) {
  return [values](std::uint64_t first, std::size_t count) {
    const auto f = values(first + count);
    std::vector<Term> out;
    out.reserve(count);
    for (std::uint64_t n = first; n < first + count; ++n) out.push_back(to_term(self_convolution_window(f, n).sum()));
    return out;
  };
}

// Slice of a prefix generator whose element 0 is at index `offset`.
Generator sliced(std::vector<Term> (*prefix)(std::size_t), std::uint64_t offset) {
  return [prefix, offset](std::uint64_t first, std::size_t count) {
    auto all = prefix(first - offset + count);
    return std::vector<Term>(all.begin() + static_cast<std::ptrdiff_t>(first - offset), all.end());
  };
}

std::vector<SequenceDescriptor> build_catalogue() {
  using C = CostClass;
  const ParityRelation plain{0, false};
  std::vector<SequenceDescriptor> c;
  c.push_back({"A000069", "Odious numbers", 1, pointwise_u64(odious), std::nullopt, C::cheap});
  c.push_back({"A001285", "Thue-Morse sequence over {1,2}", 0, pointwise(a001285), std::nullopt, C::cheap});
  c.push_back({"A001855", "Comparisons for binary insertion sort", 1, sliced(a001855_prefix, 1), std::nullopt,
               C::cheap});
  c.push_back({"A001969", "Evil numbers", 1, pointwise_u64(evil), std::nullopt, C::cheap});
  c.push_back({"A003071", "Comparisons for list-merge sort", 1, pointwise(a003071), ParityRelation{1, true},
               C::cheap});
  c.push_back({"A005187", "2-adic valuation of (2n)!", 0, pointwise(a005187), std::nullopt, C::cheap});
  c.push_back({"A010059", "Thue-Morse complement", 0, pointwise(thue_morse_bar), std::nullopt, C::cheap});
  c.push_back({"A010060", "Thue-Morse sequence", 0, pointwise(thue_morse), std::nullopt, C::cheap});
  c.push_back({"A029886", "Self-convolution of A001285", 0, convolution(a001285_values), plain, C::cheap});
  c.push_back({"A048883", "3^s2(n)", 0, pointwise([](std::uint64_t k) { return ordered_p_count_closed(2 * k); }),
               std::nullopt, C::cheap});
  c.push_back({"A061297", "lcm-quotient sum from r = 0", 0, pointwise(a061297), plain, C::bignum_heavy});
  c.push_back({"A092524", "Binary digits read in base spf(n)", 1, pointwise(a092524), ParityRelation{1, false},
               C::cheap});
  c.push_back({"A093431", "lcm-quotient sum from k = 1", 1, pointwise(a093431), ParityRelation{1, true},
               C::bignum_heavy});
  c.push_back({"A101925", "A005187(n) + 1", 0, pointwise(a101925), std::nullopt, C::cheap});
  c.push_back({"A102393", "Wicked evil sequence", 0, pointwise(a102393), plain, C::cheap});
  c.push_back({"A104258", "Binary digits read in base n", 1, pointwise(a104258), ParityRelation{1, false},
               C::cheap});
  c.push_back({"A113474", "a(n) = a(n/2) + n/2", 1, pointwise(a113474), std::nullopt, C::cheap});
  c.push_back({"A122248", "Partial sums of A113474", 0, sliced(a122248_prefix, 0), ParityRelation{0, true},
               C::cheap});
  c.push_back({"A128975", "Unordered three-heap Nim P-positions", 1, pointwise(a128975_closed), plain, C::cheap});
  c.push_back({"A228495", "Characteristic function of odd odious numbers", 1, pointwise(a228495), std::nullopt,
               C::cheap});
  c.push_back({"A247303", "Self-convolution of A010059", 0, convolution(thue_morse_bar_values), plain, C::cheap});
  c.push_back({"m", "Master sequence: A010059 interleaved with zeros", 0, pointwise(master_m), std::nullopt,
               C::cheap});
  return c;
}

}  // namespace

const std::vector<SequenceDescriptor>& catalogue() {
  static const std::vector<SequenceDescriptor> entries = build_catalogue();
  return entries;
}

const SequenceDescriptor* find_sequence(std::string_view id) {
  const auto& all = catalogue();
  auto it = std::find_if(all.begin(), all.end(), [&](const SequenceDescriptor& d) { return d.id == id; });
  return it == all.end() ? nullptr : &*it;
}

std::vector<const SequenceDescriptor*> parity_catalogue() {
  static constexpr std::string_view order[] = {"A128975", "A102393", "A029886", "A247303", "A092524",
                                               "A104258", "A061297", "A093431", "A003071", "A122248"};
  std::vector<const SequenceDescriptor*> out;
  for (auto id : order) out.push_back(find_sequence(id));
  return out;
}

}  // namespace parityseq
