#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "parityseq/term.hpp"

namespace parityseq {

/// parity(A(n)) = complement XOR m(n + shift).
struct ParityRelation {
  int shift = 0;
  bool complement = false;

  /// "m(n)", "1-m(n+1)", ...
  std::string to_string() const;

  friend bool operator==(const ParityRelation&, const ParityRelation&) = default;
};

enum class CostClass { cheap, bignum_heavy };

/// Values at first, first+1, ..., first+count-1.
using Generator = std::function<std::vector<Term>(std::uint64_t first, std::size_t count)>;

struct SequenceDescriptor {
  std::string id;
  std::string name;
  std::uint64_t offset = 0;
  Generator generate;
  std::optional<ParityRelation> claimed;  // as stated in the source lemma, even when wrong
  CostClass cost = CostClass::cheap;
};

/// Every sequence known to the library, in a fixed order.
const std::vector<SequenceDescriptor>& catalogue();

/// nullptr for unknown ids.
const SequenceDescriptor* find_sequence(std::string_view id);

/// The ten sequences whose parity is related to m, in report order.
std::vector<const SequenceDescriptor*> parity_catalogue();

/// Indices in [max(offset, -shift), n_max] where the relation fails.
std::vector<std::uint64_t> check_relation(const SequenceDescriptor& seq, const ParityRelation& rel, std::uint64_t n_max);

/// The unique relation with |shift| <= max_shift and no mismatches on
/// [offset, n_max], or nullopt when none or several fit.
std::optional<ParityRelation> fit_relation(const SequenceDescriptor& seq, std::uint64_t n_max, int max_shift = 4);

struct SequenceReport {
  std::string id;
  std::uint64_t first = 0;
  std::uint64_t last = 0;
  std::optional<ParityRelation> claimed;
  bool claimed_pass = false;
  std::size_t mismatch_count = 0;
  std::vector<std::uint64_t> first_mismatches;  // capped
  std::optional<ParityRelation> fitted;
  std::optional<std::string> error;
  std::chrono::duration<double> wall_time{};
};

struct VerificationReport {
  std::uint64_t n_max_cheap = 0;
  std::uint64_t n_max_heavy = 0;
  std::vector<SequenceReport> sequences;

  bool all_fitted() const;
};

inline constexpr std::size_t kMismatchCap = 16;
inline constexpr int kMaxShift = 4;

SequenceReport verify_sequence(const SequenceDescriptor& seq, std::uint64_t n_max);

/// Verifies the given sequences concurrently; the report keeps input order.
/// A generator failure is recorded on its own record and does not abort the run.
VerificationReport verify(const std::vector<const SequenceDescriptor*>& seqs, std::uint64_t n_max_cheap,
                          std::uint64_t n_max_heavy);

/// verify() over parity_catalogue(). Both bounds must be >= 32.
VerificationReport verify_all(std::uint64_t n_max_cheap, std::uint64_t n_max_heavy);

/// One line per sequence.
std::string to_text(const VerificationReport& report, bool with_timing = false);

/// {"metadata": {...}, "records": [ {...}, ... ]}
nlohmann::json to_json(const VerificationReport& report, bool with_timing = false);

}  // namespace parityseq
