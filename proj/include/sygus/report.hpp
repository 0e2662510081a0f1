#pragma once

#include "sygus/scoring.hpp"

namespace sygus {

// Benchmark -> category sidecar: CSV lines "benchmark,category" (no header
// required; one is tolerated).  Benchmarks missing from the map fall into
// "uncategorized".
std::map<std::string, std::string> load_category_map(const std::string& path);

struct ReportBundle {
  std::string category_table_text;  // aligned Solved/Fastest/Uniquely table
  std::string category_table_csv;
  std::string detail_csv;           // per-benchmark detail rows
  std::string svg;                  // per-category charts; empty unless requested
};

ReportBundle report(const std::vector<RunRecord>& records,
                    const std::map<std::string, std::string>& categories,
                    bool with_svg = false);

} // namespace sygus
