#pragma once

#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "darp/mata.hpp"

namespace darp {

/// elapsed_ms,iteration,temperature,best_cost,best_served,current_cost,current_served,event
extern const char* const kTraceHeader;

/// One CSV row (no newline). Floating-point fields use the shortest exact
/// decimal form; best_cost is empty while no incumbent exists.
std::string format_trace_row(const TraceRecord& record);

std::string format_trace(const std::vector<TraceRecord>& records);

/// Inverse of format_trace. Throws ParseError on malformed rows.
std::vector<TraceRecord> parse_trace(std::string_view csv);

std::vector<TraceRecord> load_trace(const std::string& path);

/// Observer that keeps every record in memory and optionally streams it to a
/// CSV file as it arrives.
class TraceRecorder {
 public:
  TraceRecorder() = default;
  explicit TraceRecorder(const std::string& path);

  void operator()(const TraceRecord& record);
  const std::vector<TraceRecord>& records() const { return records_; }
  bool ok() const { return !file_.is_open() || file_.good(); }

 private:
  std::vector<TraceRecord> records_;
  std::ofstream file_;
};

}  // namespace darp
