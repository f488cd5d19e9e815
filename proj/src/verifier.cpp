#include "parityseq/verifier.hpp"

#include <future>
#include <sstream>
#include <stdexcept>

#include "parityseq/parity_kernel.hpp"
#include "parityseq/version.hpp"

namespace parityseq {

namespace {

// Parities of seq at offset..n_max.
std::vector<Parity> parity_prefix(const SequenceDescriptor& seq, std::uint64_t n_max) {
  if (n_max < seq.offset) {
    throw std::invalid_argument(seq.id + ": n_max " + std::to_string(n_max) + " is below offset " +
                                std::to_string(seq.offset));
  }
  const auto values = seq.generate(seq.offset, n_max - seq.offset + 1);
  std::vector<Parity> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(parity_of(v));
  return out;
}

std::uint64_t first_compared(std::uint64_t offset, const ParityRelation& rel) {
  if (rel.shift >= 0) return offset;
  return std::max(offset, static_cast<std::uint64_t>(-rel.shift));
}

bool holds_at(const ParityRelation& rel, std::uint64_t n, Parity p) {
  const auto shifted = static_cast<std::uint64_t>(static_cast<std::int64_t>(n) + rel.shift);
  return p == (master_m(shifted) ^ rel.complement);
}

std::vector<std::uint64_t> mismatches(const std::vector<Parity>& parities, std::uint64_t offset,
                                      const ParityRelation& rel) {
  std::vector<std::uint64_t> out;
  const std::uint64_t last = offset + parities.size();
  for (std::uint64_t n = first_compared(offset, rel); n < last; ++n) {
    if (!holds_at(rel, n, parities[n - offset])) out.push_back(n);
  }
  return out;
}

bool matches_everywhere(const std::vector<Parity>& parities, std::uint64_t offset, const ParityRelation& rel) {
  const std::uint64_t last = offset + parities.size();
  for (std::uint64_t n = first_compared(offset, rel); n < last; ++n) {
    if (!holds_at(rel, n, parities[n - offset])) return false;
  }
  return true;
}

std::optional<ParityRelation> fit(const std::vector<Parity>& parities, std::uint64_t offset, int max_shift) {
  std::optional<ParityRelation> found;
  int matches = 0;
  for (int shift = -max_shift; shift <= max_shift; ++shift) {
    for (bool complement : {false, true}) {
      const ParityRelation rel{shift, complement};
      if (matches_everywhere(parities, offset, rel)) {
        ++matches;
        found = rel;
      }
    }
  }
  if (matches != 1) return std::nullopt;
  return found;
}

std::string fitted_label(const ParityRelation& rel) {
  return "shift=" + std::to_string(rel.shift) + (rel.complement ? " complemented" : " plain");
}

nlohmann::json relation_json(const std::optional<ParityRelation>& rel) {
  if (!rel) return nullptr;
  return {{"shift", rel->shift}, {"complement", rel->complement}, {"relation", rel->to_string()}};
}

std::string claimed_status(const SequenceReport& r) {
  if (r.error) return "ERROR";
  if (!r.claimed) return "NONE";
  return r.claimed_pass ? "PASS" : "FAIL";
}

}  // namespace

std::string ParityRelation::to_string() const {
  std::string s = complement ? "1-m(n" : "m(n";
  if (shift > 0) s += "+" + std::to_string(shift);
  if (shift < 0) s += std::to_string(shift);
  return s + ")";
}

std::vector<std::uint64_t> check_relation(const SequenceDescriptor& seq, const ParityRelation& rel,
                                          std::uint64_t n_max) {
  return mismatches(parity_prefix(seq, n_max), seq.offset, rel);
}

std::optional<ParityRelation> fit_relation(const SequenceDescriptor& seq, std::uint64_t n_max, int max_shift) {
  if (max_shift < 0) throw std::invalid_argument("fit_relation: max_shift must be non-negative");
  if (n_max < seq.offset + 2 * static_cast<std::uint64_t>(max_shift)) {
    throw std::invalid_argument("fit_relation: range too short for the shift window");
  }
  return fit(parity_prefix(seq, n_max), seq.offset, max_shift);
}

bool VerificationReport::all_fitted() const {
  for (const auto& s : sequences) {
    if (s.error || !s.fitted) return false;
  }
  return true;
}

SequenceReport verify_sequence(const SequenceDescriptor& seq, std::uint64_t n_max) {
  SequenceReport r;
  r.id = seq.id;
  r.first = seq.offset;
  r.last = n_max;
  r.claimed = seq.claimed;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (n_max < seq.offset + 2 * kMaxShift) throw std::invalid_argument("range too short for the shift window");
    const auto parities = parity_prefix(seq, n_max);
    if (seq.claimed) {
      auto bad = mismatches(parities, seq.offset, *seq.claimed);
      r.mismatch_count = bad.size();
      r.claimed_pass = bad.empty();
      bad.resize(std::min(bad.size(), kMismatchCap));
      r.first_mismatches = std::move(bad);
    }
    r.fitted = fit(parities, seq.offset, kMaxShift);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.wall_time = std::chrono::steady_clock::now() - start;
  return r;
}

VerificationReport verify(const std::vector<const SequenceDescriptor*>& seqs, std::uint64_t n_max_cheap,
                          std::uint64_t n_max_heavy) {
  VerificationReport report;
  report.n_max_cheap = n_max_cheap;
  report.n_max_heavy = n_max_heavy;
  std::vector<std::future<SequenceReport>> pending;
  pending.reserve(seqs.size());
  for (const auto* seq : seqs) {
    const std::uint64_t n_max = seq->cost == CostClass::bignum_heavy ? n_max_heavy : n_max_cheap;
    pending.push_back(std::async(std::launch::async, [seq, n_max] { return verify_sequence(*seq, n_max); }));
  }
  for (auto& f : pending) report.sequences.push_back(f.get());
  return report;
}

VerificationReport verify_all(std::uint64_t n_max_cheap, std::uint64_t n_max_heavy) {
  if (n_max_cheap < 32 || n_max_heavy < 32) throw std::invalid_argument("verify_all: bounds must be >= 32");
  return verify(parity_catalogue(), n_max_cheap, n_max_heavy);
}

std::string to_text(const VerificationReport& report, bool with_timing) {
  std::ostringstream os;
  for (const auto& r : report.sequences) {
    os << r.id << "  n=" << r.first << ".." << r.last << "  claim " << (r.claimed ? r.claimed->to_string() : "-")
       << "  claimed: " << claimed_status(r) << ", fitted: " << (r.fitted ? fitted_label(*r.fitted) : "none");
    if (r.fitted) os << " (" << r.fitted->to_string() << ")";
    if (r.claimed && !r.error) {
      os << "  mismatches: " << r.mismatch_count;
      if (!r.first_mismatches.empty()) {
        os << " [";
        for (std::size_t i = 0; i < r.first_mismatches.size(); ++i) os << (i ? " " : "") << r.first_mismatches[i];
        os << (r.mismatch_count > r.first_mismatches.size() ? " ...]" : "]");
      }
    }
    if (r.error) os << "  error: " << *r.error;
    if (with_timing) os << "  time: " << r.wall_time.count() << "s";
    os << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const VerificationReport& report, bool with_timing) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : report.sequences) {
    nlohmann::json rec = {
        {"id", r.id},
        {"range", {r.first, r.last}},
        {"claimed", relation_json(r.claimed)},
        {"claimed_status", claimed_status(r)},
        {"fitted", relation_json(r.fitted)},
        {"mismatch_count", r.mismatch_count},
        {"first_mismatches", r.first_mismatches},
        {"error", r.error ? nlohmann::json(*r.error) : nlohmann::json(nullptr)},
    };
    if (with_timing) rec["wall_time_s"] = r.wall_time.count();
    records.push_back(std::move(rec));
  }
  return {{"metadata",
           {{"tool", kToolName},
            {"version", kVersion},
            {"n_max_cheap", report.n_max_cheap},
            {"n_max_heavy", report.n_max_heavy},
            {"max_shift", kMaxShift}}},
          {"records", std::move(records)}};
}

}  // namespace parityseq
