#pragma once

// Table rendering for the CLI: csv, json, markdown and b-file output.
// Counts are emitted as decimal strings everywhere (they outgrow 64-bit
// consumers quickly).

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "evenup/numeric.hpp"

namespace evenup {

enum class OutputFormat { csv, json, markdown, bfile };

inline bool parse_output_format(const std::string& name, OutputFormat& out) {
  if (name == "csv") out = OutputFormat::csv;
  else if (name == "json") out = OutputFormat::json;
  else if (name == "markdown") out = OutputFormat::markdown;
  else if (name == "bfile") out = OutputFormat::bfile;
  else return false;
  return true;
}

// One rendered row: a word-class row carries its k, a Catalan row only
// its variant label.
struct TableRow {
  std::string label;
  std::optional<int> k;
  std::vector<Int> counts;
};

inline std::string render_table(const std::vector<TableRow>& rows,
                                OutputFormat format) {
  std::string out;
  switch (format) {
    case OutputFormat::csv: {
      const bool with_k = !rows.empty() && rows.front().k.has_value();
      out = with_k ? "k,n,count\n" : "variant,n,count\n";
      for (const TableRow& row : rows)
        for (std::size_t n = 0; n < row.counts.size(); ++n) {
          out += with_k ? std::to_string(*row.k) : row.label;
          out += ',' + std::to_string(n) + ',' + to_string(row.counts[n]) + '\n';
        }
      return out;
    }
    case OutputFormat::json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const TableRow& row : rows)
        for (std::size_t n = 0; n < row.counts.size(); ++n) {
          nlohmann::ordered_json item;
          item["class"] = row.label;
          if (row.k) item["k"] = *row.k;
          item["n"] = n;
          item["count"] = to_string(row.counts[n]);
          arr.push_back(std::move(item));
        }
      return arr.dump(2) + "\n";
    }
    case OutputFormat::markdown: {
      if (rows.empty()) return "";
      const std::size_t width = rows.front().counts.size();
      out = rows.front().k ? "| k/n |" : "| variant/n |";
      for (std::size_t n = 0; n < width; ++n) out += ' ' + std::to_string(n) + " |";
      out += '\n';
      out += "|---|";
      for (std::size_t n = 0; n < width; ++n) out += "---|";
      out += '\n';
      for (const TableRow& row : rows) {
        out += "| " + (row.k ? std::to_string(*row.k) : row.label) + " |";
        for (const Int& c : row.counts) out += ' ' + to_string(c) + " |";
        out += '\n';
      }
      return out;
    }
    case OutputFormat::bfile: {
      if (rows.size() != 1)
        throw std::invalid_argument(
            "bfile output requires a single sequence (one k or one variant)");
      for (std::size_t n = 0; n < rows.front().counts.size(); ++n)
        out += std::to_string(n) + ' ' + to_string(rows.front().counts[n]) + '\n';
      return out;
    }
  }
  return out;
}

}  // namespace evenup
