#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "persymm/distribution.hpp"

// Table emitters for distributions: markdown, CSV, and JSON share one row
// schema (shape, i, gamma, source). Big integers are serialized as
// decimal strings.

namespace persymm {

enum class ReportFormat { Markdown, Csv, Json };

inline ReportFormat parse_format(const std::string& s) {
  if (s == "md" || s == "markdown") return ReportFormat::Markdown;
  if (s == "csv") return ReportFormat::Csv;
  if (s == "json") return ReportFormat::Json;
  throw std::invalid_argument("unknown format \"" + s + "\" (md|csv|json)");
}

inline std::string emit_report(ReportFormat fmt, const std::vector<RankDistribution>& dists) {
  std::ostringstream out;
  switch (fmt) {
    case ReportFormat::Markdown: {
      out << "| shape | i | gamma | source |\n|---|---|---|---|\n";
      for (const auto& d : dists)
        for (std::size_t i = 0; i < d.counts.size(); ++i)
          out << "| " << d.shape << " | " << i << " | " << d.counts[i].str() << " | "
              << to_string(d.source) << " |\n";
      break;
    }
    case ReportFormat::Csv: {
      out << "shape,i,gamma,source\n";
      for (const auto& d : dists)
        for (std::size_t i = 0; i < d.counts.size(); ++i)
          out << "\"" << d.shape << "\"," << i << "," << d.counts[i].str() << ","
              << to_string(d.source) << "\n";
      break;
    }
    case ReportFormat::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& d : dists) {
        nlohmann::json rec;
        rec["shape"] = d.shape;
        rec["source"] = to_string(d.source);
        auto& counts = rec["counts"] = nlohmann::json::array();
        for (const auto& c : d.counts) counts.push_back(c.str());
        arr.push_back(rec);
      }
      out << arr.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

}  // namespace persymm
