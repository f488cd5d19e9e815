#include "parityseq/oeis_io.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "parityseq/verifier.hpp"

namespace parityseq {

namespace {

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::int64_t parse_index(std::string_view tok, std::size_t line_no) {
  const bool negative = !tok.empty() && tok.front() == '-';
  const auto digits = negative ? tok.substr(1) : tok;
  if (!is_digits(digits) || digits.size() > 18) {
    throw BFileError("line " + std::to_string(line_no) + ": bad index '" + std::string(tok) + "'");
  }
  const auto v = std::stoll(std::string(digits));
  return negative ? -v : v;
}

Term parse_value(std::string_view tok, std::size_t line_no) {
  if (!tok.empty() && tok.front() == '-' && is_digits(tok.substr(1))) {
    throw BFileError("line " + std::to_string(line_no) + ": negative value '" + std::string(tok) + "'");
  }
  if (!is_digits(tok)) throw BFileError("line " + std::to_string(line_no) + ": bad value '" + std::string(tok) + "'");
  return Term(std::string(tok), 10);
}

std::optional<std::string> read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomically(const std::filesystem::path& target, const std::string& text) {
  namespace fs = std::filesystem;
  fs::create_directories(target.parent_path());
  auto tmp = target;
  static std::atomic<unsigned> counter{0};
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw BFileError("cannot write cache file " + tmp.string());
    out << text;
    if (!out.flush()) throw BFileError("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace

BFileTable parse_bfile(std::string_view text, std::string sequence_id) {
  BFileTable table;
  table.sequence_id = std::move(sequence_id);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 2) {
      throw BFileError("line " + std::to_string(line_no) + ": expected '<index> <value>', got " +
                       std::to_string(tokens.size()) + " tokens");
    }
    BFileRow row{parse_index(tokens[0], line_no), parse_value(tokens[1], line_no)};
    if (!table.rows.empty() && row.index != table.rows.back().index + 1) {
      throw BFileError("line " + std::to_string(line_no) + ": index gap, " + std::to_string(row.index) +
                       " follows " + std::to_string(table.rows.back().index));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string serialize_bfile(const BFileTable& table) {
  std::string out;
  for (const auto& row : table.rows) {
    out += std::to_string(row.index);
    out += ' ';
    out += row.value.get_str();
    out += '\n';
  }
  return out;
}

CrossCheckResult cross_check(const SequenceDescriptor& seq, const BFileTable& table, std::size_t limit) {
  if (!table.sequence_id.empty() && table.sequence_id != seq.id) {
    throw std::invalid_argument("cross_check: table is for " + table.sequence_id + ", not " + seq.id);
  }
  CrossCheckResult result;
  const auto offset = table.offset();
  if (!offset) return result;
  if (*offset != static_cast<std::int64_t>(seq.offset)) {
    result.offset_error = seq.id + ": b-file starts at index " + std::to_string(*offset) + " but the sequence offset is " +
                          std::to_string(seq.offset);
    return result;
  }
  const std::size_t count = std::min(limit, table.rows.size());
  const auto generated = seq.generate(seq.offset, count);
  for (std::size_t i = 0; i < count; ++i) {
    if (generated[i] != table.rows[i].value) {
      result.mismatches.push_back({table.rows[i].index, table.rows[i].value, generated[i]});
    }
  }
  result.compared = count;
  return result;
}

std::string bfile_name(std::string_view id) {
  if (id.size() != 7 || id.front() != 'A' || !is_digits(id.substr(1))) {
    throw BFileError("not an OEIS A-number: '" + std::string(id) + "'");
  }
  return "b" + std::string(id.substr(1)) + ".txt";
}

std::string bfile_url(std::string_view id) { return "https://oeis.org/" + std::string(id) + "/" + bfile_name(id); }

BFileTable fetch_bfile(std::string_view id, const FetchOptions& options) {
  const auto name = bfile_name(id);
  const std::string sid(id);

  if (!options.cache_dir.empty()) {
    if (auto cached = read_file(options.cache_dir / name)) return parse_bfile(*cached, sid);
  }

  if (!options.offline) {
    const auto get = options.http_get ? options.http_get : default_http_get();
    const auto url = bfile_url(id);
    auto body = get(url);
    if (!body) body = get(url);
    if (body) {
      BFileTable table;
      try {
        table = parse_bfile(*body, sid);
      } catch (const BFileError& e) {
        throw BFileError(sid + ": retrieved b-file does not parse: " + e.what());
      }
      if (!options.cache_dir.empty()) write_atomically(options.cache_dir / name, *body);
      return table;
    }
  }

  if (auto fixture = bundled_fixture(id)) return parse_bfile(*fixture, sid);
  throw BFileError(sid + ": no b-file source available (cache, " +
                   std::string(options.offline ? "network disabled" : "network failed") + ", no bundled fixture)");
}

}  // namespace parityseq
