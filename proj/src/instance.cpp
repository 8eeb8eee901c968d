#include "darp/instance.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace darp {

Instance::Instance(int vehicles, int capacity, Minutes route_duration_bound,
                   Minutes ride_time_bound, std::vector<Vertex> vertices)
    : m_(vehicles),
      capacity_(capacity),
      route_duration_bound_(route_duration_bound),
      ride_time_bound_(ride_time_bound),
      vertices_(std::move(vertices)) {
  if (vertices_.empty() || vertices_.size() % 2 == 0)
    throw std::invalid_argument("instance needs a depot plus an even number of vertices");
  if (m_ < 1) throw std::invalid_argument("instance needs at least one vehicle");
  if (capacity_ <= 0) throw std::invalid_argument("capacity must be positive");
  if (!(route_duration_bound_ > 0.0)) throw std::invalid_argument("route duration bound must be positive");
  if (!(ride_time_bound_ > 0.0)) throw std::invalid_argument("ride time bound must be positive");
  n_ = static_cast<int>(vertices_.size() - 1) / 2;

  if (vertices_[0].load_change != 0) throw std::invalid_argument("depot load must be 0");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].window_open > vertices_[i].window_close)
      throw std::invalid_argument("vertex " + std::to_string(i) + " has an empty time window");
    vertices_[i].id = static_cast<int>(i);
  }
  for (int i = 1; i <= n_; ++i) {
    if (vertices_[static_cast<std::size_t>(i + n_)].load_change != -vertices_[static_cast<std::size_t>(i)].load_change)
      throw std::invalid_argument("request " + std::to_string(i) + " has mismatched pickup/dropoff loads");
  }

  const std::size_t v = vertices_.size();
  travel_.assign(v * v, 0.0);
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = i + 1; j < v; ++j) {
      const double d = std::hypot(vertices_[i].x - vertices_[j].x, vertices_[i].y - vertices_[j].y);
      travel_[i * v + j] = d;
      travel_[j * v + i] = d;
    }
  }
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> fields;
};

std::vector<Line> split_records(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      const std::size_t start = pos;
      while (pos < raw.size() && !std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      if (pos > start) line.fields.push_back(raw.substr(start, pos - start));
    }
    if (!line.fields.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

double to_double(std::string_view field, std::size_t line) {
  double value = 0.0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value))
    throw ParseError(line, "expected a number, got '" + std::string(field) + "'");
  return value;
}

int to_int(std::string_view field, std::size_t line) {
  const double value = to_double(field, line);
  if (value != std::floor(value) || std::abs(value) > 1e9)
    throw ParseError(line, "expected an integer, got '" + std::string(field) + "'");
  return static_cast<int>(value);
}

Vertex parse_vertex(const Line& line) {
  if (line.fields.size() != 7)
    throw ParseError(line.number, "vertex record needs 7 fields (id x y d q e l), found " +
                                      std::to_string(line.fields.size()));
  Vertex v;
  v.id = to_int(line.fields[0], line.number);
  v.x = to_double(line.fields[1], line.number);
  v.y = to_double(line.fields[2], line.number);
  v.service_duration = to_double(line.fields[3], line.number);
  v.load_change = to_int(line.fields[4], line.number);
  v.window_open = to_double(line.fields[5], line.number);
  v.window_close = to_double(line.fields[6], line.number);
  if (v.service_duration < 0.0) throw ParseError(line.number, "negative service duration");
  if (v.window_open > v.window_close) throw ParseError(line.number, "time window opens after it closes");
  return v;
}

bool same_place(const Vertex& a, const Vertex& b) {
  return a.x == b.x && a.y == b.y && a.load_change == b.load_change;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const std::vector<Line> lines = split_records(text);
  if (lines.empty()) throw ParseError(0, "empty instance");

  const Line& header = lines.front();
  if (header.fields.size() != 5)
    throw ParseError(header.number, "header needs 5 fields (m V T Q L), found " +
                                        std::to_string(header.fields.size()));
  const int vehicles = to_int(header.fields[0], header.number);
  const int vertex_count = to_int(header.fields[1], header.number);
  const double duration_bound = to_double(header.fields[2], header.number);
  const int capacity = to_int(header.fields[3], header.number);
  const double ride_bound = to_double(header.fields[4], header.number);
  if (vehicles < 1) throw ParseError(header.number, "vehicle count must be at least 1");
  if (vertex_count < 0 || vertex_count % 2 != 0)
    throw ParseError(header.number, "vertex count V must be even (V = 2n), got " + std::to_string(vertex_count));
  if (capacity <= 0) throw ParseError(header.number, "capacity must be positive");
  if (!(duration_bound > 0.0)) throw ParseError(header.number, "route duration bound must be positive");
  if (!(ride_bound > 0.0)) throw ParseError(header.number, "ride time bound must be positive");

  const std::size_t expected = static_cast<std::size_t>(vertex_count) + 1;
  std::vector<Vertex> vertices;
  vertices.reserve(expected);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    Vertex v = parse_vertex(lines[k]);
    if (vertices.size() == expected) {
      if (k + 1 == lines.size() && same_place(v, vertices.front())) break;
      throw ParseError(lines[k].number, "more vertex records than the header announces (" +
                                            std::to_string(expected) + ")");
    }
    if (v.id != static_cast<int>(vertices.size()))
      throw ParseError(lines[k].number, "expected vertex id " + std::to_string(vertices.size()) +
                                            ", got " + std::to_string(v.id));
    if (vertices.empty() && v.load_change != 0) throw ParseError(lines[k].number, "depot load must be 0");
    vertices.push_back(v);
  }
  if (vertices.size() != expected)
    throw ParseError(lines.back().number, "expected " + std::to_string(expected) + " vertex records, found " +
                                              std::to_string(vertices.size()));

  const int n = vertex_count / 2;
  for (int i = 1; i <= n; ++i) {
    const auto& p = vertices[static_cast<std::size_t>(i)];
    const auto& d = vertices[static_cast<std::size_t>(i + n)];
    if (d.load_change != -p.load_change)
      throw ParseError(lines[static_cast<std::size_t>(i + n + 1)].number,
                       "dropoff load " + std::to_string(d.load_change) + " does not cancel pickup load " +
                           std::to_string(p.load_change) + " of request " + std::to_string(i));
  }
  return Instance(vehicles, capacity, duration_bound, ride_bound, std::move(vertices));
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string format_instance(const Instance& inst) {
  std::ostringstream out;
  out.precision(17);
  out << inst.vehicles() << ' ' << 2 * inst.requests() << ' ' << inst.route_duration_bound() << ' '
      << inst.capacity() << ' ' << inst.ride_time_bound() << '\n';
  for (const Vertex& v : inst.vertices()) {
    out << v.id << ' ' << v.x << ' ' << v.y << ' ' << v.service_duration << ' ' << v.load_change << ' '
        << v.window_open << ' ' << v.window_close << '\n';
  }
  return out.str();
}

Minutes travel_time(const Instance& inst, int i, int j) {
  if (i < 0 || j < 0 || i >= inst.vertex_count() || j >= inst.vertex_count())
    throw std::out_of_range("vertex index out of range: (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  return inst.travel(i, j);
}

Instance tighten_time_windows(const Instance& inst) {
  const int n = inst.requests();
  const double horizon = inst.horizon();
  const double ride = inst.ride_time_bound();
  std::vector<Vertex> vertices = inst.vertices();

  for (int i = 1; i <= n; ++i) {
    Vertex& p = vertices[static_cast<std::size_t>(i)];
    Vertex& d = vertices[static_cast<std::size_t>(i + n)];
    const bool pickup_specified = p.window_width() < horizon;
    const bool dropoff_specified = d.window_width() < horizon;
    if (pickup_specified == dropoff_specified) continue;

    const double direct = inst.travel(i, i + n);
    if (dropoff_specified) {
      p.window_open = std::max(p.window_open, d.window_open - ride - p.service_duration);
      p.window_close = std::min(p.window_close, d.window_close - direct - p.service_duration);
      if (p.window_open > p.window_close)
        throw InfeasibleRequestError(i, "pickup window is empty after adjustment");
    } else {
      d.window_open = std::max(d.window_open, p.window_open + p.service_duration + direct);
      d.window_close = std::min(d.window_close, p.window_close + p.service_duration + ride);
      if (d.window_open > d.window_close)
        throw InfeasibleRequestError(i, "dropoff window is empty after adjustment");
    }
  }
  return Instance(inst.vehicles(), inst.capacity(), inst.route_duration_bound(), inst.ride_time_bound(),
                  std::move(vertices));
}

}  // namespace darp
