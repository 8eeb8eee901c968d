#include "darp/trace.hpp"

#include <charconv>
#include <sstream>

#include "darp/instance.hpp"
#include "darp/solution_io.hpp"

namespace darp {

const char* const kTraceHeader =
    "elapsed_ms,iteration,temperature,best_cost,best_served,current_cost,current_served,event";

std::string format_trace_row(const TraceRecord& r) {
  std::string row;
  row.reserve(96);
  row += exact_decimal(r.elapsed_ms);
  row += ',';
  row += std::to_string(r.iteration);
  row += ',';
  row += exact_decimal(r.temperature);
  row += ',';
  if (r.best_cost) row += exact_decimal(*r.best_cost);
  row += ',';
  row += std::to_string(r.best_served);
  row += ',';
  row += exact_decimal(r.current_cost);
  row += ',';
  row += std::to_string(r.current_served);
  row += ',';
  row += to_string(r.event);
  return row;
}

std::string format_trace(const std::vector<TraceRecord>& records) {
  std::string out = kTraceHeader;
  out += '\n';
  for (const auto& r : records) {
    out += format_trace_row(r);
    out += '\n';
  }
  return out;
}

namespace {

template <class T>
T field_value(std::string_view text, std::size_t line) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw ParseError(line, "bad trace field '" + std::string(text) + "'");
  return value;
}

TraceEvent parse_event(std::string_view text, std::size_t line) {
  for (auto e : {TraceEvent::kConstruct, TraceEvent::kImprove, TraceEvent::kRestart, TraceEvent::kReheat,
                 TraceEvent::kTick}) {
    if (text == to_string(e)) return e;
  }
  throw ParseError(line, "unknown trace event '" + std::string(text) + "'");
}

}  // namespace

std::vector<TraceRecord> parse_trace(std::string_view csv) {
  std::vector<TraceRecord> records;
  std::size_t line_no = 0;
  while (!csv.empty()) {
    ++line_no;
    const std::size_t eol = csv.find('\n');
    std::string_view line = csv.substr(0, eol);
    csv = eol == std::string_view::npos ? std::string_view{} : csv.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != kTraceHeader) throw ParseError(1, "unexpected trace header");
      continue;
    }
    std::vector<std::string_view> f;
    std::size_t start = 0;
    for (std::size_t pos = 0; pos <= line.size(); ++pos) {
      if (pos == line.size() || line[pos] == ',') {
        f.push_back(line.substr(start, pos - start));
        start = pos + 1;
      }
    }
    if (f.size() != 8) throw ParseError(line_no, "trace row needs 8 fields");
    TraceRecord r;
    r.elapsed_ms = field_value<double>(f[0], line_no);
    r.iteration = field_value<std::uint64_t>(f[1], line_no);
    r.temperature = field_value<double>(f[2], line_no);
    if (!f[3].empty()) r.best_cost = field_value<double>(f[3], line_no);
    r.best_served = field_value<int>(f[4], line_no);
    r.current_cost = field_value<double>(f[5], line_no);
    r.current_served = field_value<int>(f[6], line_no);
    r.event = parse_event(f[7], line_no);
    records.push_back(r);
  }
  return records;
}

std::vector<TraceRecord> load_trace(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open trace file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_trace(buf.str());
}

TraceRecorder::TraceRecorder(const std::string& path) : file_(path, std::ios::binary | std::ios::trunc) {
  if (file_) file_ << kTraceHeader << '\n';
}

void TraceRecorder::operator()(const TraceRecord& record) {
  records_.push_back(record);
  if (file_.is_open()) file_ << format_trace_row(record) << '\n';
}

}  // namespace darp
