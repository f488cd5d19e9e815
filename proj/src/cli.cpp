#include "parityseq/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "parityseq/oeis_io.hpp"
#include "parityseq/verifier.hpp"
#include "parityseq/version.hpp"

namespace parityseq {

namespace {

enum class OutputFormat { plain, bfile, json };

const std::map<std::string, OutputFormat> kFormats = {
    {"plain", OutputFormat::plain}, {"bfile", OutputFormat::bfile}, {"json", OutputFormat::json}};

constexpr const char* kCacheEnv = "PARITYSEQ_CACHE_DIR";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::filesystem::path resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kCacheEnv); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "parityseq";
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "parityseq";
  }
  return ".parityseq-cache";
}

const SequenceDescriptor& lookup(const std::string& id) {
  const auto* seq = find_sequence(id);
  if (!seq) throw UsageError("unknown sequence id '" + id + "'");
  return *seq;
}

struct GenOptions {
  std::string id;
  std::optional<std::uint64_t> from;
  std::size_t count = 10;
  OutputFormat format = OutputFormat::plain;
};

// Shared by gen and parity; `as_parity` reduces every term mod 2.
int run_gen(const GenOptions& o, bool as_parity, std::ostream& out) {
  const auto& seq = lookup(o.id);
  const std::uint64_t from = o.from.value_or(seq.offset);
  if (from < seq.offset) {
    throw UsageError(seq.id + " starts at index " + std::to_string(seq.offset) + ", --from " +
                     std::to_string(from) + " is below it");
  }
  if (o.count == 0) throw UsageError("--count must be positive");
  auto values = seq.generate(from, o.count);
  if (as_parity) {
    for (auto& v : values) v = parity_of(v).value();
  }
  switch (o.format) {
    case OutputFormat::plain:
      for (const auto& v : values) out << v.get_str() << '\n';
      break;
    case OutputFormat::bfile: {
      BFileTable table{seq.id, {}};
      for (std::size_t i = 0; i < values.size(); ++i) {
        table.rows.push_back({static_cast<std::int64_t>(from + i), values[i]});
      }
      out << serialize_bfile(table);
      break;
    }
    case OutputFormat::json: {
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& v : values) terms.push_back(v.get_str());
      out << nlohmann::json{{"id", seq.id},
                            {"offset", seq.offset},
                            {"from", from},
                            {"kind", as_parity ? "parity" : "terms"},
                            {"values", std::move(terms)}}
                 .dump(2)
          << '\n';
      break;
    }
  }
  return kExitOk;
}

struct VerifyOptions {
  std::string target = "all";
  std::uint64_t n_max = 4096;
  std::uint64_t n_max_heavy = 512;
  OutputFormat format = OutputFormat::plain;
  bool timing = false;
};

int run_verify(const VerifyOptions& o, std::ostream& out) {
  if (o.format == OutputFormat::bfile) throw UsageError("verify supports --format plain or json");
  if (o.n_max < 32 || o.n_max_heavy < 32) throw UsageError("--n-max and --n-max-heavy must be >= 32");
  const auto report = o.target == "all" ? verify_all(o.n_max, o.n_max_heavy)
                                        : verify({&lookup(o.target)}, o.n_max, o.n_max_heavy);
  if (o.format == OutputFormat::json) {
    out << to_json(report, o.timing).dump(2) << '\n';
  } else {
    out << to_text(report, o.timing);
  }
  return report.all_fitted() ? kExitOk : kExitFailure;
}

struct BFileOptions {
  std::string id;
  std::string source;
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  std::string cache_dir;
  bool offline = true;
};

FetchOptions fetch_options(const BFileOptions& o) {
  FetchOptions f;
  f.cache_dir = resolve_cache_dir(o.cache_dir);
  f.offline = o.offline;
  return f;
}

int run_check_bfile(const BFileOptions& o, std::ostream& out, std::ostream& err) {
  const auto& seq = lookup(o.id);
  BFileTable table;
  try {
    if (o.source == "fetch") {
      table = fetch_bfile(seq.id, fetch_options(o));
    } else {
      std::ifstream in(o.source, std::ios::binary);
      if (!in) throw UsageError("cannot read '" + o.source + "'");
      std::ostringstream ss;
      ss << in.rdbuf();
      table = parse_bfile(ss.str(), seq.id);
    }
  } catch (const BFileError& e) {
    throw UsageError(e.what());
  }
  const auto result = cross_check(seq, table, o.limit);
  if (result.offset_error) {
    err << "offset mismatch: " << *result.offset_error << '\n';
    return kExitFailure;
  }
  for (const auto& m : result.mismatches) {
    out << m.index << " expected " << m.expected.get_str() << " got " << m.actual.get_str() << '\n';
  }
  if (!result.ok()) return kExitFailure;
  out << seq.id << ": " << result.compared << " terms match\n";
  return kExitOk;
}

int run_fetch_bfile(const BFileOptions& o, std::ostream& out) {
  try {
    out << serialize_bfile(fetch_bfile(o.id, fetch_options(o)));
  } catch (const BFileError& e) {
    throw UsageError(e.what());
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer sequences whose parity follows the Thue-Morse master sequence m", std::string(kToolName)};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  std::string cache_dir;
  bool offline = true;
  app.add_option("--cache-dir", cache_dir, std::string("b-file cache directory (overrides $") + kCacheEnv + ")");
  app.add_flag("--offline,!--online", offline, "Never touch the network (default on)");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Print terms of a sequence");
  auto* parity_cmd = app.add_subcommand("parity", "Print the parity bits of a sequence");
  for (auto* cmd : {gen_cmd, parity_cmd}) {
    cmd->add_option("id", gen.id, "Sequence id, e.g. A061297 or m")->required();
    cmd->add_option("--from", gen.from, "First index (default: the sequence offset)");
    cmd->add_option("--count", gen.count, "Number of terms")->capture_default_str();
    cmd->add_option("--format", gen.format, "plain, bfile or json")->transform(CLI::CheckedTransformer(kFormats).description(""))->type_name("FORMAT");
  }

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check claimed parity relations and fit the true ones");
  verify_cmd->add_option("target", verify.target, "Sequence id or 'all'")->capture_default_str();
  verify_cmd->add_option("--n-max", verify.n_max, "Last index for cheap sequences")->capture_default_str();
  verify_cmd->add_option("--n-max-heavy", verify.n_max_heavy, "Last index for big-integer sequences")
      ->capture_default_str();
  verify_cmd->add_option("--format", verify.format, "plain or json")->transform(CLI::CheckedTransformer(kFormats).description(""))->type_name("FORMAT");
  verify_cmd->add_flag("--timing", verify.timing, "Include wall time per sequence");

  BFileOptions bfile;
  auto* check_cmd = app.add_subcommand("check-bfile", "Cross-check a generator against a b-file");
  check_cmd->add_option("id", bfile.id, "Sequence id")->required();
  check_cmd->add_option("file", bfile.source, "b-file path, or 'fetch'")->required();
  check_cmd->add_option("--limit", bfile.limit, "Compare at most this many rows");

  auto* fetch_cmd = app.add_subcommand("fetch-bfile", "Print a b-file from cache, network or bundled fixtures");
  fetch_cmd->add_option("id", bfile.id, "OEIS id")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  bfile.cache_dir = cache_dir;
  bfile.offline = offline;

  try {
    if (*gen_cmd) return run_gen(gen, false, out);
    if (*parity_cmd) return run_gen(gen, true, out);
    if (*verify_cmd) return run_verify(verify, out);
    if (*check_cmd) return run_check_bfile(bfile, out, err);
    if (*fetch_cmd) return run_fetch_bfile(bfile, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace parityseq
