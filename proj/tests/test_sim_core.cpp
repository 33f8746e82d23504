#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "wsn/engine.hpp"
#include "wsn/rng.hpp"
#include "wsn/sim_time.hpp"

using namespace wsn;

TEST_CASE("sim time fixed point conversions") {
  CHECK(SimTime::from_seconds(1.5).usec() == 1500000);
  CHECK(SimTime::from_usec(250).seconds() == doctest::Approx(0.00025));
  CHECK(SimTime::zero() < SimTime::from_usec(1));
  CHECK(SimTime::from_seconds(2) - SimTime::from_seconds(0.5) ==
        SimTime::from_seconds(1.5));
}

TEST_CASE("events run in time order with insertion-order ties") {
  Engine eng;
  std::vector<int> order;
  eng.schedule(SimTime::from_usec(20), 0, "b", [&] { order.push_back(2); });
  eng.schedule(SimTime::from_usec(10), 0, "a1", [&] { order.push_back(0); });
  eng.schedule(SimTime::from_usec(10), 0, "a2", [&] { order.push_back(1); });
  eng.schedule(SimTime::from_usec(30), 0, "c", [&] { order.push_back(3); });
  std::size_t n = eng.run_until(SimTime::from_usec(100));
  CHECK(n == 4);
  CHECK(order == std::vector<int>{0, 1, 2, 3});
  CHECK(eng.now() == SimTime::from_usec(100));
}

TEST_CASE("run_until includes events exactly at the boundary") {
  Engine eng;
  int fired = 0;
  eng.schedule(SimTime::from_usec(50), 0, "x", [&] { ++fired; });
  eng.schedule(SimTime::from_usec(51), 0, "y", [&] { ++fired; });
  CHECK(eng.run_until(SimTime::from_usec(50)) == 1);
  CHECK(fired == 1);
  CHECK(eng.run_until(SimTime::from_usec(51)) == 1);
  CHECK(fired == 2);
}

TEST_CASE("scheduling in the past is an error") {
  Engine eng;
  eng.run_until(SimTime::from_usec(100));
  CHECK_THROWS_AS(eng.schedule(SimTime::from_usec(50), 0, "late", [] {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(eng.run_until(SimTime::from_usec(99)),
                  std::invalid_argument);
  // Scheduling exactly at the current clock is allowed.
  CHECK_NOTHROW(eng.schedule(SimTime::from_usec(100), 0, "now", [] {}));
}

TEST_CASE("cancelled events do not fire and leave no trace") {
  Engine eng;
  eng.set_trace_enabled(true);
  int fired = 0;
  auto h1 = eng.schedule(SimTime::from_usec(10), 1, "keep", [&] { ++fired; });
  auto h2 = eng.schedule(SimTime::from_usec(20), 2, "drop", [&] { ++fired; });
  (void)h1;
  CHECK(eng.cancel(h2));
  CHECK_FALSE(eng.cancel(h2));  // second cancel is a no-op
  eng.run_until(SimTime::from_usec(100));
  CHECK(fired == 1);
  REQUIRE(eng.trace().size() == 1);
  CHECK(eng.trace()[0].kind == "keep");
  CHECK(eng.trace()[0].target == 1);
}

TEST_CASE("trace renders tab-separated lines") {
  Engine eng;
  eng.set_trace_enabled(true);
  eng.schedule(SimTime::from_seconds(0.5), 3, "tick", [] {});
  eng.run_until(SimTime::from_seconds(1));
  CHECK(format_trace(eng.trace()) == "0.500000\t0\t3\ttick\n");
}

TEST_CASE("rng streams are deterministic and label-separated") {
  RngStream a1(42, "placement");
  RngStream a2(42, "placement");
  RngStream b(42, "mac-jitter");
  bool same = true, diff = false;
  for (int i = 0; i < 100; ++i) {
    auto x = a1.next_u64();
    same = same && (x == a2.next_u64());
    diff = diff || (x != b.next_u64());
  }
  CHECK(same);
  CHECK(diff);
}

TEST_CASE("rng uniform ranges") {
  RngStream r(7, "test");
  for (int i = 0; i < 1000; ++i) {
    double u = r.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    double v = r.uniform(2.0, 5.0);
    CHECK(v >= 2.0);
    CHECK(v < 5.0);
    CHECK(r.uniform_index(10) < 10);
  }
  CHECK(r.uniform_index(0) == 0);
}

TEST_CASE("rng uniform mean is near the midpoint") {
  RngStream r(11, "mean");
  double sum = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) sum += r.uniform();
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.02));
}
