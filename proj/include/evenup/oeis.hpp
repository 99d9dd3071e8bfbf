#pragma once

// OEIS b-file handling: parsing, rendering, offset-search comparison
// against computed sequences, and the on-disk cache. Network retrieval
// lives in oeis_fetch.hpp so that offline builds and tests never touch
// an HTTP stack.

#include <unistd.h>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "evenup/errors.hpp"
#include "evenup/numeric.hpp"

namespace evenup {

// Terms at consecutive indices first_index, first_index + 1, ...
// (b-files may start at any offset, not necessarily 0).
struct OeisSequence {
  std::string id;
  long first_index = 0;
  std::vector<Int> terms;
};

inline bool valid_oeis_id(const std::string& id) {
  if (id.size() != 7 || id[0] != 'A') return false;
  for (std::size_t i = 1; i < id.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
  return true;
}

namespace detail {

inline bool parse_exact_integer(const std::string& token, Int& out) {
  if (token.empty()) return false;
  std::size_t start = token[0] == '-' ? 1 : 0;
  if (start == token.size()) return false;
  for (std::size_t i = start; i < token.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
  out = Int(token);
  return true;
}

}  // namespace detail

// Accepts lines of the form "<index> <value>"; '#' comment lines and
// blank lines are ignored. Indices must be consecutive.
inline OeisSequence parse_bfile(std::string_view text, std::string id = "") {
  OeisSequence seq;
  seq.id = std::move(id);
  std::istringstream in{std::string(text)};
  std::string line;
  long line_number = 0;
  bool have_first = false;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream fields(line);
    std::string index_token;
    if (!(fields >> index_token)) continue;  // blank
    if (index_token[0] == '#') continue;     // comment
    std::string value_token, extra;
    if (!(fields >> value_token) || (fields >> extra))
      throw bfile_error("b-file line " + std::to_string(line_number) +
                            ": expected \"index value\", got \"" + line + "\"",
                        line_number);
    Int index, value;
    if (!detail::parse_exact_integer(index_token, index) ||
        !detail::parse_exact_integer(value_token, value))
      throw bfile_error("b-file line " + std::to_string(line_number) +
                            ": malformed integer in \"" + line + "\"",
                        line_number);
    long idx = static_cast<long>(index.get_si());
    if (!have_first) {
      seq.first_index = idx;
      have_first = true;
    } else if (idx != seq.first_index + static_cast<long>(seq.terms.size())) {
      throw bfile_error("b-file line " + std::to_string(line_number) +
                            ": non-consecutive index " + std::to_string(idx) +
                            " (expected " +
                            std::to_string(seq.first_index +
                                           static_cast<long>(seq.terms.size())) +
                            ")",
                        line_number);
    }
    seq.terms.push_back(std::move(value));
  }
  return seq;
}

inline std::string render_bfile(const OeisSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.terms.size(); ++i) {
    out += std::to_string(seq.first_index + static_cast<long>(i));
    out += ' ';
    out += to_string(seq.terms[i]);
    out += '\n';
  }
  return out;
}

struct SequenceMismatch {
  long computed_index = 0;
  Int expected;  // b-file value
  Int got;       // computed value
};

struct ComparisonReport {
  long matched = 0;             // agreeing compared positions
  long alignment_offset = 0;    // computed[i] was compared to b-file index i + offset
  std::optional<SequenceMismatch> first_mismatch;

  bool full_match() const { return !first_mismatch && matched > 0; }
};

// Searches offsets d in [-max_offset, max_offset], aligning computed[i]
// with the b-file entry at index i + d. Positions falling outside the
// b-file's index range are not compared. Picks the alignment with the
// longest agreeing prefix of compared positions, preferring
// mismatch-free alignments, then smaller |d|.
inline ComparisonReport compare(const std::vector<Int>& computed,
                                const OeisSequence& seq, long max_offset) {
  if (computed.empty())
    throw std::invalid_argument("compare: computed sequence is empty");
  if (max_offset < 0)
    throw std::invalid_argument("compare: max_offset must be >= 0");
  ComparisonReport best;
  bool have_best = false;
  const long last = seq.first_index + static_cast<long>(seq.terms.size());
  for (long d = -max_offset; d <= max_offset; ++d) {
    ComparisonReport r;
    r.alignment_offset = d;
    for (std::size_t i = 0; i < computed.size(); ++i) {
      const long j = static_cast<long>(i) + d;
      if (j < seq.first_index || j >= last) continue;
      const Int& expected = seq.terms[static_cast<std::size_t>(j - seq.first_index)];
      if (expected == computed[i]) {
        ++r.matched;
      } else {
        r.first_mismatch =
            SequenceMismatch{static_cast<long>(i), expected, computed[i]};
        break;
      }
    }
    auto rank = [](const ComparisonReport& c) {
      return std::tuple(!c.first_mismatch.has_value(), c.matched,
                        -std::abs(c.alignment_offset), -c.alignment_offset);
    };
    if (!have_best || rank(r) > rank(best)) {
      best = std::move(r);
      have_best = true;
    }
  }
  return best;
}

// ---- on-disk cache ----

inline std::filesystem::path oeis_cache_dir() {
  if (const char* env = std::getenv("OEIS_CACHE_DIR"); env && *env)
    return std::filesystem::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::filesystem::path(xdg) / "evenup" / "oeis";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "evenup" / "oeis";
  return std::filesystem::temp_directory_path() / "evenup-oeis";
}

inline std::optional<std::string> oeis_cache_read(const std::string& id) {
  std::ifstream in(oeis_cache_dir() / (id + ".txt"), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Write-through via a temporary file plus rename, so concurrent writers
// of the same id leave a complete file. Failure only warns: the cache
// is an optimization, not a correctness requirement.
inline void oeis_cache_write(const std::string& id, const std::string& text) {
  try {
    const auto dir = oeis_cache_dir();
    std::filesystem::create_directories(dir);
    const auto tmp = dir / (id + ".txt.tmp" + std::to_string(::getpid()));
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << text;
      if (!out) throw std::runtime_error("short write");
    }
    std::filesystem::rename(tmp, dir / (id + ".txt"));
  } catch (const std::exception& e) {
    std::cerr << "warning: could not cache " << id << ": " << e.what() << "\n";
  }
}

// Cache-only retrieval. With networking unavailable this is the whole
// story: hit the cache or fail with fetch_error.
inline OeisSequence fetch_cached(const std::string& id) {
  if (!valid_oeis_id(id))
    throw std::invalid_argument("malformed OEIS id \"" + id +
                                "\" (expected A followed by six digits)");
  if (auto text = oeis_cache_read(id)) return parse_bfile(*text, id);
  throw fetch_error("no cached b-file for " + id + " in " +
                    oeis_cache_dir().string() +
                    " and network retrieval is disabled");
}

}  // namespace evenup
