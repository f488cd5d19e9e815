#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "parityseq/term.hpp"

namespace parityseq {

struct SequenceDescriptor;

class BFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BFileRow {
  std::int64_t index = 0;
  Term value;

  friend bool operator==(const BFileRow&, const BFileRow&) = default;
};

/// Parsed OEIS b-file. Indices increase by exactly 1 from the first row.
struct BFileTable {
  std::string sequence_id;
  std::vector<BFileRow> rows;

  std::optional<std::int64_t> offset() const {
    if (rows.empty()) return std::nullopt;
    return rows.front().index;
  }

  friend bool operator==(const BFileTable&, const BFileTable&) = default;
};

/// Parses "<index> <value>" lines; '#' comment lines and blank lines are skipped.
/// Throws BFileError on malformed tokens, extra tokens, negative values or an index gap.
BFileTable parse_bfile(std::string_view text, std::string sequence_id = {});

/// One "<index> <value>\n" line per row.
std::string serialize_bfile(const BFileTable& table);

struct CrossCheckMismatch {
  std::int64_t index = 0;
  Term expected;  // from the table
  Term actual;    // from the generator
};

struct CrossCheckResult {
  std::vector<CrossCheckMismatch> mismatches;
  /// Set when the table starts at a different index than the descriptor's offset.
  std::optional<std::string> offset_error;
  std::size_t compared = 0;

  bool ok() const { return mismatches.empty() && !offset_error; }
};

/// Compares the first min(limit, rows) table rows against the generator.
/// Throws std::invalid_argument if the table names a different sequence.
CrossCheckResult cross_check(const SequenceDescriptor& seq, const BFileTable& table, std::size_t limit);

/// "A061297" -> "b061297.txt". Throws BFileError for ids not of the form A + 6 digits.
std::string bfile_name(std::string_view id);

/// https://oeis.org/A061297/b061297.txt
std::string bfile_url(std::string_view id);

/// Raw b-file text shipped with the library, if any.
std::optional<std::string_view> bundled_fixture(std::string_view id);

/// Ids with a bundled fixture.
std::vector<std::string> bundled_fixture_ids();

/// Returns the body on success, nullopt on any transport failure.
using HttpGet = std::function<std::optional<std::string>(const std::string& url)>;

/// cpp-httplib backed GET.
HttpGet default_http_get();

struct FetchOptions {
  std::filesystem::path cache_dir;
  bool offline = true;
  HttpGet http_get;  // defaults to default_http_get() when empty
};

/// Cache first, then the network (unless offline, with a single retry),
/// then the bundled fixture. Network results are written to the cache via
/// a temporary file and rename. Throws BFileError when no source is available.
BFileTable fetch_bfile(std::string_view id, const FetchOptions& options);

}  // namespace parityseq
