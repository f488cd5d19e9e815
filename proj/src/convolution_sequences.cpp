#include "parityseq/convolution_sequences.hpp"

#include <numeric>
#include <stdexcept>

#include "parityseq/parity_kernel.hpp"

namespace parityseq {

std::uint64_t ConvolutionWindow::sum() const { return std::accumulate(terms.begin(), terms.end(), std::uint64_t{0}); }

ConvolutionWindow self_convolution_window(std::span<const std::uint64_t> f, std::uint64_t n) {
  if (n >= f.size()) throw std::out_of_range("self_convolution_window: prefix too short");
  ConvolutionWindow w;
  w.n = n;
  w.terms.reserve(n + 1);
  for (std::uint64_t i = 0; i <= n; ++i) w.terms.push_back(f[i] * f[n - i]);
  return w;
}

std::vector<Term> self_convolution_prefix(std::span<const std::uint64_t> f) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (std::uint64_t n = 0; n < f.size(); ++n) out.push_back(to_term(self_convolution_window(f, n).sum()));
  return out;
}

std::vector<std::uint64_t> a001285_values(std::size_t count) {
  std::vector<std::uint64_t> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = 2 - static_cast<std::uint64_t>(thue_morse_bar(i).value());
  return v;
}

std::vector<std::uint64_t> thue_morse_bar_values(std::size_t count) {
  std::vector<std::uint64_t> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = static_cast<std::uint64_t>(thue_morse_bar(i).value());
  return v;
}

Term a001285(std::uint64_t n) { return 2 - thue_morse_bar(n).value(); }

Term a029886(std::uint64_t n) {
  const auto f = a001285_values(n + 1);
  return to_term(self_convolution_window(f, n).sum());
}

Term a247303(std::uint64_t n) {
  const auto f = thue_morse_bar_values(n + 1);
  return to_term(self_convolution_window(f, n).sum());
}

}  // namespace parityseq
