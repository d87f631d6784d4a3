#include <random>

#include "asynum/error.hpp"
#include "asynum/pointset.hpp"
#include "doctest.h"
#include "asynum/sample.hpp"

using asynum::BigInt;
using asynum::Point;
using asynum::PointSetExpr;

namespace {
Point pt(std::initializer_list<std::uint64_t> c) { return Point{std::vector<std::uint64_t>(c)}; }
}  // namespace

TEST_CASE("dimension") {
  CHECK(dimension(PointSetExpr::range(0, 5)) == 1);
  CHECK(dimension(PointSetExpr::product(PointSetExpr::range(0, 5), PointSetExpr::progression(0, 2))) == 2);
  auto sq = PointSetExpr::product(PointSetExpr::range(0, 1), PointSetExpr::range(0, 1));
  CHECK_THROWS_AS(PointSetExpr::unite(PointSetExpr::range(0, 1), sq), asynum::Error);
  try {
    PointSetExpr::unite(PointSetExpr::range(0, 1), sq);
  } catch (const asynum::Error& e) {
    CHECK(e.code() == asynum::ErrorCode::HeterogeneousUnion);
  }
  CHECK_THROWS(PointSetExpr::progression(0, 0));
}

TEST_CASE("contains") {
  CHECK(contains(PointSetExpr::progression(1, 2), pt({7})));
  CHECK_FALSE(contains(PointSetExpr::diff(PointSetExpr::range(0, 9), PointSetExpr::progression(0, 2)), pt({4})));
  CHECK(contains(PointSetExpr::lift(pt({3}), PointSetExpr::range(0, 2)), pt({3, 1})));
  CHECK_THROWS(contains(PointSetExpr::range(0, 2), pt({1, 1})));
}

TEST_CASE("truncate") {
  auto t = truncate(PointSetExpr::progression(0, 2), 5);
  CHECK(t == std::vector<Point>{pt({0}), pt({2}), pt({4})});
  auto p = truncate(PointSetExpr::product(PointSetExpr::progression(0, 2), PointSetExpr::progression(1, 2)), 3);
  CHECK(p == std::vector<Point>{pt({0, 1}), pt({0, 3}), pt({2, 1}), pt({2, 3})});
  CHECK(truncate(PointSetExpr::lift(pt({4}), PointSetExpr::range(0, 9)), 3).empty());
}

TEST_CASE("count") {
  CHECK(count(PointSetExpr::naturals(), 4) == 5);
  CHECK(count(PointSetExpr::product(PointSetExpr::progression(0, 2), PointSetExpr::progression(1, 2)), 5) == 9);
  CHECK(count(PointSetExpr::diff(PointSetExpr::range(0, 100), PointSetExpr::progression(0, 3)), 10) == 7);
  CHECK(count(PointSetExpr::range(7, 3), 10) == 0);
}

TEST_CASE("counting plan tails") {
  auto plan = asynum::CountingPlan::build(PointSetExpr::progression(0, 2));
  REQUIRE(plan);
  auto tail = plan->tail();
  REQUIRE(tail);
  for (std::uint64_t n = tail->from(); n < 50; ++n) CHECK(tail->evaluate(n) == BigInt(n / 2 + 1));
}

TEST_CASE("closed form equals enumeration") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 150; ++i) {
    auto e = asynum::sample::random_expr(rng, 1 + i % 3);
    auto plan = asynum::CountingPlan::build(e);
    REQUIRE(plan);
    auto tail = plan->tail();
    const std::uint64_t limit = e.dimension() == 1 ? 32 : e.dimension() == 2 ? 20 : 10;
    for (std::uint64_t n = 0; n <= limit; ++n) {
      asynum::WorkBudget budget;
      BigInt slow = asynum::count_by_enumeration(e, n, budget);
      INFO(e.to_string(), " n=", n);
      REQUIRE(plan->count(n) == slow);
      if (tail && n >= tail->from()) REQUIRE(tail->evaluate(n) == slow);
    }
  }
}

TEST_CASE("counting identities") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const std::size_t k = 1 + i % 2;
    auto x = asynum::sample::random_expr(rng, k);
    auto y = asynum::sample::random_expr(rng, k);
    auto p = PointSetExpr::product(x, y);
    auto d1 = PointSetExpr::diff(x, y), d2 = PointSetExpr::diff(y, x);
    for (std::uint64_t n = 0; n <= 24; ++n) {
      REQUIRE(count(p, n) == count(x, n) * count(y, n));
      REQUIRE(count(x, n) - count(y, n) == count(d1, n) - count(d2, n));
      REQUIRE(count(PointSetExpr::unite(d1, PointSetExpr::intersect(x, y)), n) == count(x, n));
    }
    Point lp = pt({static_cast<std::uint64_t>(i % 7)});
    auto lifted = PointSetExpr::lift(lp, x);
    for (std::uint64_t n = 0; n <= 24; ++n)
      REQUIRE(count(lifted, n) == (n >= lp.max_coordinate() ? count(x, n) : BigInt(0)));
  }
}

TEST_CASE("truncate sorted and duplicate free") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto e = asynum::sample::random_expr(rng, 1 + i % 3);
    auto t = truncate(e, 8);
    for (std::size_t j = 1; j < t.size(); ++j) REQUIRE(t[j - 1] < t[j]);
    for (const auto& p : t) REQUIRE(contains(e, p));
    REQUIRE(BigInt(static_cast<unsigned long>(t.size())) == count(e, 8));
  }
}

TEST_CASE("parallel counts match serial") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    auto e = asynum::sample::random_expr(rng, 2);
    auto plan = asynum::CountingPlan::build(e);
    REQUIRE(plan);
    auto all = plan->counts(40);
    for (std::uint64_t n = 0; n <= 40; ++n) REQUIRE(all[n] == plan->count(n));
  }
}
