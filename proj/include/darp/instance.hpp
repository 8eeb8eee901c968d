#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace darp {

/// Minutes. Travel times equal planar distances, so one unit serves both.
using Minutes = double;

/// Absolute tolerance for every feasibility comparison.
inline constexpr double kEpsilon = 1e-9;

struct Vertex {
  int id = 0;
  double x = 0.0;
  double y = 0.0;
  Minutes service_duration = 0.0;
  int load_change = 0;
  Minutes window_open = 0.0;
  Minutes window_close = 0.0;

  Minutes window_width() const { return window_close - window_open; }
};

/// Raised by parse_instance. Carries the 1-based line the problem was found on
/// (0 when the problem is not tied to a line, e.g. a missing vertex record).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(format(line, what)), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  static std::string format(std::size_t line, const std::string& what) {
    return line == 0 ? what : "line " + std::to_string(line) + ": " + what;
  }
  std::size_t line_;
};

/// A request whose windows cannot be met even in isolation.
class InfeasibleRequestError : public std::runtime_error {
 public:
  InfeasibleRequestError(int request, const std::string& what)
      : std::runtime_error("request " + std::to_string(request) + ": " + what),
        request_(request) {}
  int request() const { return request_; }

 private:
  int request_;
};

/// Immutable static DARP instance with a homogeneous fleet.
///
/// Vertex 0 is the depot, vertices 1..n are pickups and n+1..2n the matching
/// dropoffs. The travel-time matrix is the Euclidean distance between vertex
/// coordinates, kept at full double precision.
class Instance {
 public:
  Instance() = default;
  Instance(int vehicles, int capacity, Minutes route_duration_bound,
           Minutes ride_time_bound, std::vector<Vertex> vertices);

  int requests() const { return n_; }
  int vehicles() const { return m_; }
  int capacity() const { return capacity_; }
  Minutes route_duration_bound() const { return route_duration_bound_; }
  Minutes ride_time_bound() const { return ride_time_bound_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(int id) const { return vertices_[static_cast<std::size_t>(id)]; }
  const Vertex& depot() const { return vertices_.front(); }

  int pickup(int request) const { return request; }
  int dropoff(int request) const { return request + n_; }
  bool is_pickup(int id) const { return id >= 1 && id <= n_; }
  bool is_dropoff(int id) const { return id > n_ && id <= 2 * n_; }
  /// Request index served by vertex `id` (pickup or dropoff).
  int request_of(int id) const { return id > n_ ? id - n_ : id; }

  /// Unchecked matrix lookup for hot loops.
  Minutes travel(int i, int j) const {
    return travel_[static_cast<std::size_t>(i) * vertices_.size() + static_cast<std::size_t>(j)];
  }

  /// l_i + e_{i+n}: close of the pickup window plus open of the dropoff window.
  Minutes sort_key(int request) const {
    return vertex(pickup(request)).window_close + vertex(dropoff(request)).window_open;
  }

  /// Planning horizon, taken as the depot window width.
  Minutes horizon() const { return depot().window_width(); }

 private:
  int n_ = 0;
  int m_ = 0;
  int capacity_ = 0;
  Minutes route_duration_bound_ = 0.0;
  Minutes ride_time_bound_ = 0.0;
  std::vector<Vertex> vertices_;
  std::vector<Minutes> travel_;
};

/// Parses the standard benchmark format: a header `m 2n T Q L` followed by
/// one `id x y d q e l` record per vertex, depot first. A trailing copy of the
/// depot (as found in some distributions of these files) is ignored.
Instance parse_instance(std::string_view text);

/// Reads and parses a file; I/O failures are reported as ParseError at line 0.
Instance load_instance(const std::string& path);

/// Writes `inst` back in the format accepted by parse_instance, with enough
/// digits that every field survives a round trip exactly.
std::string format_instance(const Instance& inst);

/// Bounds-checked travel time lookup.
Minutes travel_time(const Instance& inst, int i, int j);

/// Narrows the window on the unspecified side of each request using the
/// window on the specified side, the direct travel time and the ride time
/// bound. A side is "specified" when its window is narrower than the planning
/// horizon; requests with zero or two specified sides are left alone.
///
/// Throws InfeasibleRequestError if a narrowed window becomes empty.
Instance tighten_time_windows(const Instance& inst);

}  // namespace darp
