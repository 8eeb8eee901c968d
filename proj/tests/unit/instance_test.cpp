#include <random>
#include <string>

#include "darp/instance.hpp"
#include "doctest.h"
#include "random_instances.hpp"

using namespace darp;

namespace {

// Header of R1a plus a tiny body: 3 vehicles, 48 request vertices.
std::string r1a_shaped_text(bool trailing_depot) {
  std::string text = "3 48 480 6 90\n0 0.000 0.000 0 0 0 1440\n";
  for (int i = 1; i <= 48; ++i) {
    const int load = i <= 24 ? 1 : -1;
    text += std::to_string(i) + " " + std::to_string(i % 7 - 3) + ".250 " + std::to_string(i % 5 - 2) +
            ".500 3 " + std::to_string(load) + " 0 1440\n";
  }
  if (trailing_depot) text += "49 0.000 0.000 0 0 0 1440\n";
  return text;
}

void require_same(const Instance& a, const Instance& b) {
  REQUIRE(a.requests() == b.requests());
  CHECK(a.vehicles() == b.vehicles());
  CHECK(a.capacity() == b.capacity());
  CHECK(a.route_duration_bound() == b.route_duration_bound());
  CHECK(a.ride_time_bound() == b.ride_time_bound());
  for (int i = 0; i < a.vertex_count(); ++i) {
    const Vertex& u = a.vertex(i);
    const Vertex& v = b.vertex(i);
    CHECK(u.x == v.x);
    CHECK(u.y == v.y);
    CHECK(u.service_duration == v.service_duration);
    CHECK(u.load_change == v.load_change);
    CHECK(u.window_open == v.window_open);
    CHECK(u.window_close == v.window_close);
  }
}

}  // namespace

TEST_CASE("parse_instance reads the benchmark header") {
  const Instance inst = parse_instance(r1a_shaped_text(false));
  CHECK(inst.vehicles() == 3);
  CHECK(inst.requests() == 24);
  CHECK(inst.route_duration_bound() == 480.0);
  CHECK(inst.capacity() == 6);
  CHECK(inst.ride_time_bound() == 90.0);
  CHECK(inst.vertex(25).load_change == -1);
}

TEST_CASE("parse_instance accepts the R3a header shape") {
  std::string text = "7 144 480 6 90\n0 0 0 0 0 0 1440\n";
  for (int i = 1; i <= 144; ++i) text += std::to_string(i) + " 1 1 3 " + (i <= 72 ? "1" : "-1") + " 0 1440\n";
  const Instance inst = parse_instance(text);
  CHECK(inst.vehicles() == 7);
  CHECK(inst.requests() == 72);
}

TEST_CASE("a trailing duplicate depot line is ignored") {
  require_same(parse_instance(r1a_shaped_text(true)), parse_instance(r1a_shaped_text(false)));
}

TEST_CASE("parse errors carry line numbers") {
  SUBCASE("malformed header") {
    try {
      parse_instance("3 48 480 6\n");
      FAIL("expected a ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
    }
  }
  SUBCASE("odd vertex count") { CHECK_THROWS_AS(parse_instance("1 3 480 6 90\n0 0 0 0 0 0 100\n"), ParseError); }
  SUBCASE("non-numeric field") {
    try {
      parse_instance("1 2 480 6 90\n0 0 0 0 0 0 100\n1 x 0 0 1 0 100\n2 0 0 0 -1 0 100\n");
      FAIL("expected a ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("vertex count mismatch") {
    CHECK_THROWS_AS(parse_instance("1 4 480 6 90\n0 0 0 0 0 0 100\n1 0 0 0 1 0 100\n2 0 0 0 -1 0 100\n"),
                    ParseError);
  }
  SUBCASE("load mismatch") {
    try {
      parse_instance("1 2 480 6 90\n0 0 0 0 0 0 100\n1 0 0 0 1 0 100\n2 0 0 0 -2 0 100\n");
      FAIL("expected a ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
    }
  }
  SUBCASE("extra records") {
    CHECK_THROWS_AS(parse_instance("1 2 480 6 90\n0 0 0 0 0 0 100\n1 0 0 0 1 0 100\n2 0 0 0 -1 0 100\n"
                                   "3 4 4 0 0 0 100\n"),
                    ParseError);
  }
}

TEST_CASE("format_instance round-trips every field") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Instance inst = testing::benchmark_like_instance(12, 2, seed);
    require_same(parse_instance(format_instance(inst)), inst);
  }
}

TEST_CASE("travel_time") {
  const Instance toy = testing::toy_single_request();
  CHECK(travel_time(toy, 1, 1) == 0.0);
  CHECK(travel_time(toy, 0, 2) == 6.0);

  std::vector<Vertex> v(3);
  v[1].x = 3.0;
  v[1].y = 4.0;
  v[1].load_change = 1;
  v[2].load_change = -1;
  const Instance inst(1, 1, 10.0, 10.0, v);
  CHECK(travel_time(inst, 0, 1) == 5.0);
  CHECK_THROWS_AS(travel_time(inst, 0, 3), std::out_of_range);
  CHECK_THROWS_AS(travel_time(inst, -1, 0), std::out_of_range);
}

TEST_CASE("travel matrix is symmetric and metric") {
  const Instance inst = testing::benchmark_like_instance(24, 3, 11);
  const int size = inst.vertex_count();
  for (int i = 0; i < size; ++i) {
    CHECK(inst.travel(i, i) == 0.0);
    for (int j = 0; j < size; ++j) {
      REQUIRE(inst.travel(i, j) == inst.travel(j, i));
      for (int k = 0; k < size; ++k) REQUIRE(inst.travel(i, k) <= inst.travel(i, j) + inst.travel(j, k) + 1e-9);
    }
  }
}

TEST_CASE("tighten_time_windows on a pickup-specified request") {
  // e=100, l=120, d=0, direct travel 10, L=90.
  std::vector<Vertex> v(3);
  v[0].window_close = 1440;
  v[1] = Vertex{1, 0, 0, 0, 1, 100, 120};
  v[2] = Vertex{2, 10, 0, 0, -1, 0, 1440};
  const Instance inst(1, 6, 480, 90, v);
  const Instance t = tighten_time_windows(inst);
  CHECK(t.vertex(2).window_open == 110.0);
  CHECK(t.vertex(2).window_close == 210.0);
  CHECK(t.vertex(1).window_open == 100.0);
  CHECK(t.vertex(1).window_close == 120.0);
}

TEST_CASE("tighten_time_windows on a dropoff-specified request") {
  std::vector<Vertex> v(3);
  v[0].window_close = 1440;
  v[1] = Vertex{1, 0, 0, 2, 1, 0, 1440};
  v[2] = Vertex{2, 10, 0, 0, -1, 300, 315};
  const Instance t = tighten_time_windows(Instance(1, 6, 480, 90, v));
  CHECK(t.vertex(1).window_open == 300.0 - 90.0 - 2.0);
  CHECK(t.vertex(1).window_close == 315.0 - 10.0 - 2.0);
}

TEST_CASE("windows already tighter than the derived bounds are unchanged") {
  std::vector<Vertex> v(3);
  v[0].window_close = 1440;
  v[1] = Vertex{1, 0, 0, 0, 1, 100, 120};
  v[2] = Vertex{2, 10, 0, 0, -1, 150, 160};
  const Instance inst(1, 6, 480, 90, v);
  const Instance t = tighten_time_windows(inst);
  CHECK(t.vertex(2).window_open == 150.0);
  CHECK(t.vertex(2).window_close == 160.0);
}

TEST_CASE("an inherently infeasible request is reported") {
  std::vector<Vertex> v(3);
  v[0].window_close = 1440;
  v[1] = Vertex{1, 0, 0, 0, 1, 100, 120};
  v[2] = Vertex{2, 150, 0, 0, -1, 0, 1440};  // 150 minutes away
  const Instance inst(1, 6, 480, 90, v);
  // open = max(0, 250) = 250 > close = min(1440, 210): empty.
  CHECK_THROWS_AS(tighten_time_windows(inst), InfeasibleRequestError);
}

TEST_CASE("tightening is idempotent and never widens") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Instance inst = testing::benchmark_like_instance(24, 3, seed);
    const Instance once = tighten_time_windows(inst);
    const Instance twice = tighten_time_windows(once);
    require_same(once, twice);
    for (int i = 0; i < inst.vertex_count(); ++i) {
      CHECK(once.vertex(i).window_open >= inst.vertex(i).window_open);
      CHECK(once.vertex(i).window_close <= inst.vertex(i).window_close);
    }
  }
}

TEST_CASE("tightening keeps every single-request schedule that was feasible") {
  // Sample schedules (pickup begin, dropoff begin) that respect the original
  // windows, precedence and the ride bound, and check the adjusted windows.
  const Instance inst = testing::benchmark_like_instance(24, 3, 7);
  const Instance adjusted = tighten_time_windows(inst);
  Rng rng(99);
  int sampled = 0;
  for (int i = 1; i <= inst.requests(); ++i) {
    const Vertex& p = inst.vertex(i);
    const Vertex& d = inst.vertex(i + inst.requests());
    const double direct = inst.travel(i, i + inst.requests());
    for (int attempt = 0; attempt < 200000 && sampled < 1000 * i / inst.requests(); ++attempt) {
      // Draw the specified side inside its window, the other side near it.
      const bool pickup_narrow = p.window_width() < inst.horizon();
      double bp, bd;
      if (pickup_narrow) {
        bp = std::uniform_real_distribution<double>(p.window_open, p.window_close)(rng);
        bd = bp + p.service_duration + std::uniform_real_distribution<double>(0.0, inst.ride_time_bound() + 20)(rng);
      } else {
        bd = std::uniform_real_distribution<double>(d.window_open, d.window_close)(rng);
        bp = bd - p.service_duration - std::uniform_real_distribution<double>(0.0, inst.ride_time_bound() + 20)(rng);
      }
      const double ride = bd - (bp + p.service_duration);
      const bool feasible = bp >= p.window_open && bp <= p.window_close && bd >= d.window_open &&
                            bd <= d.window_close && ride >= direct && ride <= inst.ride_time_bound();
      if (!feasible) continue;
      ++sampled;
      const Vertex& ap = adjusted.vertex(i);
      const Vertex& ad = adjusted.vertex(i + inst.requests());
      REQUIRE(bp >= ap.window_open - 1e-9);
      REQUIRE(bp <= ap.window_close + 1e-9);
      REQUIRE(bd >= ad.window_open - 1e-9);
      REQUIRE(bd <= ad.window_close + 1e-9);
    }
  }
  CHECK(sampled >= 1000);
}
