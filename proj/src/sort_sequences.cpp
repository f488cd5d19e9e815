#include "parityseq/sort_sequences.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "parityseq/parity_kernel.hpp"

namespace parityseq {

namespace {

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw std::domain_error(std::string(what) + ": n must be >= 1");
}

std::uint64_t list_merge_worst(std::uint64_t n) {
  if (n == 1) return 0;
  const std::uint64_t high = std::bit_floor(n);
  // Exact powers of two merge two halves of equal size last.
  if (high == n) return 2 * list_merge_worst(n / 2) + n - 1;
  return list_merge_worst(high) + list_merge_worst(n - high) + n - 1;
}

std::uint64_t ceil_log2(std::uint64_t n) { return n <= 1 ? 0 : static_cast<std::uint64_t>(std::bit_width(n - 1)); }

std::uint64_t halving_sum(std::uint64_t n) {
  std::uint64_t acc = 1;  // a(1)
  for (; n > 1; n /= 2) acc += n / 2;
  return acc;
}

}  // namespace

MergeSchedule simulate_list_merge(std::uint64_t n) {
  require_positive(n, "simulate_list_merge");
  MergeSchedule schedule;
  std::vector<std::uint64_t> lists(n, 1);
  schedule.rounds.push_back(lists);
  while (lists.size() > 1) {
    std::vector<std::uint64_t> next;
    next.reserve(lists.size() / 2 + 1);
    for (std::size_t i = 0; i + 1 < lists.size(); i += 2) {
      const std::uint64_t merged = lists[i] + lists[i + 1];
      schedule.comparisons += merged - 1;
      next.push_back(merged);
    }
    if (lists.size() % 2 == 1) next.push_back(lists.back());
    lists = std::move(next);
    schedule.rounds.push_back(lists);
  }
  return schedule;
}

Term a003071(std::uint64_t n) {
  require_positive(n, "a003071");
  return to_term(list_merge_worst(n));
}

Term a003071_simulate(std::uint64_t n) { return to_term(simulate_list_merge(n).comparisons); }

Term a001855(std::uint64_t n) {
  require_positive(n, "a001855");
  std::uint64_t acc = 0;
  for (std::uint64_t k = 2; k <= n; ++k) acc += ceil_log2(k);
  return to_term(acc);
}

std::vector<Term> a001855_prefix(std::size_t count) {
  std::vector<Term> out;
  out.reserve(count);
  std::uint64_t acc = 0;
  for (std::uint64_t k = 1; k <= count; ++k) {
    acc += ceil_log2(k);
    out.push_back(to_term(acc));
  }
  return out;
}

Term a113474(std::uint64_t n) {
  require_positive(n, "a113474");
  return to_term(halving_sum(n));
}

Term a101925(std::uint64_t k) {
  std::uint64_t acc = 1;  // b(0)
  for (; k > 0; k /= 2) acc += k;
  return to_term(acc);
}

Term a005187(std::uint64_t n) { return to_term(2 * n - static_cast<std::uint64_t>(binary_weight(n))); }

Term a122248(std::uint64_t n) {
  std::uint64_t acc = 0;
  for (std::uint64_t i = 1; i <= n; ++i) acc += halving_sum(i);
  return to_term(acc);
}

std::vector<Term> a122248_prefix(std::size_t count) {
  std::vector<Term> out;
  out.reserve(count);
  std::uint64_t acc = 0;
  for (std::uint64_t n = 0; n < count; ++n) {
    if (n > 0) acc += halving_sum(n);
    out.push_back(to_term(acc));
  }
  return out;
}

}  // namespace parityseq
