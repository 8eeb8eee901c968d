#include "darp/solution_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "darp/schedule.hpp"

namespace darp {

std::string exact_decimal(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

std::string format_solution(const Instance& inst, const Solution& solution) {
  std::ostringstream out;
  out << "cost " << exact_decimal(solution.cost()) << '\n';
  out << "unserved";
  const auto unserved = solution.unserved();
  if (unserved.empty()) out << " -";
  for (int i : unserved) out << ' ' << i;
  out << '\n';
  out << std::fixed << std::setprecision(3);
  for (const Route& r : solution.routes()) {
    out << "route " << r.vehicle << ':';
    const Schedule s = evaluate_route(inst, r.visits);
    for (const Stop& stop : s.stops) out << ' ' << stop.vertex << '@' << stop.begin;
    out << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos > start) out.push_back(line.substr(start, pos - start));
  }
  return out;
}

template <class T>
T number(std::string_view text, std::size_t line) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw ParseError(line, "expected a number, got '" + std::string(text) + "'");
  return value;
}

}  // namespace

SolutionFile parse_solution(std::string_view text) {
  SolutionFile file;
  bool have_cost = false;
  bool have_unserved = false;
  std::size_t number_of_line = 0;
  while (!text.empty()) {
    ++number_of_line;
    const std::size_t eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    const auto f = fields(line);
    if (f.empty()) continue;

    if (f[0] == "cost") {
      if (f.size() != 2) throw ParseError(number_of_line, "expected 'cost <value>'");
      file.cost = number<double>(f[1], number_of_line);
      have_cost = true;
    } else if (f[0] == "unserved") {
      have_unserved = true;
      if (f.size() == 2 && f[1] == "-") continue;
      for (std::size_t k = 1; k < f.size(); ++k) file.unserved.push_back(number<int>(f[k], number_of_line));
    } else if (f[0] == "route") {
      if (f.size() < 2 || f[1].empty() || f[1].back() != ':')
        throw ParseError(number_of_line, "expected 'route <k>: ...'");
      Route r;
      r.vehicle = number<int>(f[1].substr(0, f[1].size() - 1), number_of_line);
      for (std::size_t k = 2; k < f.size(); ++k) {
        const std::string_view token = f[k];
        const std::size_t at = token.find('@');
        r.visits.push_back(number<int>(token.substr(0, at), number_of_line));
        if (at != std::string_view::npos) (void)number<double>(token.substr(at + 1), number_of_line);
      }
      file.routes.push_back(std::move(r));
    } else {
      throw ParseError(number_of_line, "unknown record '" + std::string(f[0]) + "'");
    }
  }
  if (!have_cost) throw ParseError(0, "solution has no 'cost' line");
  if (!have_unserved) throw ParseError(0, "solution has no 'unserved' line");
  return file;
}

SolutionFile load_solution(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open solution file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_solution(buf.str());
}

}  // namespace darp
