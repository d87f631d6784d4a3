#include <random>

#include "asynum/error.hpp"
#include "asynum/parse.hpp"
#include "asynum/series.hpp"
#include "doctest.h"
#include "asynum/sample.hpp"

using namespace asynum;

namespace {
const PointSetExpr evens = PointSetExpr::progression(0, 2);
const PointSetExpr odds = PointSetExpr::progression(1, 2);
const PointSetExpr nat = PointSetExpr::naturals();

PointSetExpr pt(std::vector<std::uint64_t> c) { return PointSetExpr::finite({Point{std::move(c)}}); }

SeriesExpr random_series(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3), dim(1, 2), terms(0, 3);
  SeriesExpr s(c(rng));
  for (int i = terms(rng); i > 0; --i)
    s = s + SeriesExpr(c(rng)) * SeriesExpr::of_set(sample::random_expr(rng, dim(rng), 2));
  return s;
}
}  // namespace

TEST_CASE("series of a set") {
  CHECK(SeriesExpr::of_set(PointSetExpr::empty()).is_zero());
  CHECK(SeriesExpr::of_set(PointSetExpr::range(5, 2)).is_zero());
  auto s = SeriesExpr::of_set(pt({2}));
  REQUIRE(s.terms().size() == 1);
  CHECK(s.terms()[0].first == 1);
  WorkBudget b;
  CHECK(phi(SeriesExpr::of_set(nat), 4, b) == 5);
  CHECK((s + SeriesExpr(0)).structurally_equal(s));
  CHECK((s - s).is_zero());
}

TEST_CASE("series arithmetic and printing") {
  auto x = SeriesExpr::of_set(evens), y = SeriesExpr::of_set(PointSetExpr::range(0, 9));
  auto p = x * y;
  REQUIRE(p.terms().size() == 1);
  CHECK(p.terms()[0].second.kind() == PointSetExpr::Kind::Product);
  auto s = SeriesExpr(3) + SeriesExpr(2) * x - y;
  CHECK(s.to_string() == "3 + 2*S[ap(0,2)] - S[range(0,9)]");
  CHECK(parse_series(s.to_string()).structurally_equal(s));
  CHECK((x + x).to_string() == "2*S[ap(0,2)]");
  CHECK((-x).to_string() == "-S[ap(0,2)]");
  CHECK(SeriesExpr().to_string() == "0");
}

TEST_CASE("phi of disjoint sums matches the union") {
  WorkBudget b;
  auto s = SeriesExpr::of_set(evens) + SeriesExpr::of_set(odds);
  for (std::uint64_t n = 0; n <= 20; ++n) CHECK(phi(s, n, b) == n + 1);
}

TEST_CASE("phi is a ring homomorphism") {
  std::mt19937_64 rng(11);
  WorkBudget b(1'000'000'000);
  for (int trial = 0; trial < 40; ++trial) {
    auto s = random_series(rng), t = random_series(rng);
    auto sum = phi_range(s + t, 24, b), prod = phi_range(s * t, 24, b);
    auto ps = phi_range(s, 24, b), pt_ = phi_range(t, 24, b);
    for (std::uint64_t n = 0; n <= 24; ++n) {
      CHECK(sum[n] == ps[n] + pt_[n]);
      CHECK(prod[n] == ps[n] * pt_[n]);
      CHECK(ps[n] == phi(s, n, b));
    }
  }
}

TEST_CASE("difference series counts the difference") {
  std::mt19937_64 rng(5);
  WorkBudget b(1'000'000'000);
  for (int trial = 0; trial < 30; ++trial) {
    auto x = sample::random_expr(rng, 2), y = sample::random_expr(rng, 2);
    auto d = SeriesExpr::of_set(x) - SeriesExpr::of_set(y);
    for (std::uint64_t n = 0; n <= 32; n += 4)
      CHECK(phi(d, n, b) == count(x, n, b) - count(y, n, b));
  }
}

TEST_CASE("shifted generators vanish eventually") {
  WorkBudget b;
  auto x = PointSetExpr::product(evens, PointSetExpr::range(1, 6));
  for (std::uint64_t i = 1; i <= 6; ++i) {
    auto s = SeriesExpr::of_set(PointSetExpr::lift(Point{{i}}, x)) -
             SeriesExpr::of_set(PointSetExpr::lift(Point{{0}}, x));
    for (std::uint64_t n = i; n <= 40; ++n) CHECK(phi(s, n, b) == 0);
  }
}

TEST_CASE("bounded decomposition") {
  CHECK(decompose_bounded(0, {}, 3).levels.empty());
  CHECK(decompose_bounded(0, {{Point{{4}}, BigInt(0)}}, 3).levels.empty());
  Point x{{7}};
  auto d = decompose_bounded(0, {{x, BigInt(3)}}, 3);
  REQUIRE(d.levels.size() == 3);
  for (const auto& l : d.levels) {
    CHECK(l.x.points() == std::vector<Point>{x});
    CHECK(l.y.points().empty());
  }
  CHECK(d.verified);
  auto mixed = decompose_bounded(2, {{Point{{1}}, BigInt(1)}, {Point{{2}}, BigInt(-1)},
                                     {Point{{1, 1}}, BigInt(-2)}, {Point{{3}}, BigInt(1)}},
                                 2);
  CHECK(mixed.verified);
  for (const auto& l : mixed.levels) {
    if (l.k != 1) continue;
    CHECK(l.x.points() == std::vector<Point>{Point{{1}}, Point{{3}}});
    CHECK(l.y.points() == std::vector<Point>{Point{{2}}});
  }
  CHECK_THROWS_AS(decompose_bounded(0, {{x, BigInt(4)}}, 3), Error);
}

TEST_CASE("positive series to characteristic") {
  WorkBudget b;
  auto two = SeriesExpr(2) * SeriesExpr::of_set(pt({5}));
  auto c = positive_to_characteristic(two, 2, 1, 20, b);
  CHECK(c.k == 3);
  REQUIRE(c.x.points().size() == 2);
  for (const auto& p : c.x.points()) CHECK(p.max_coordinate() == 5);
  CHECK(c.n0 <= 5);
  for (std::uint64_t n = 5; n <= 20; ++n) CHECK(count(c.x, n, b) == phi(two, n, b));

  auto pair = SeriesExpr::of_set(pt({2})) + SeriesExpr::of_set(pt({3}));
  auto c2 = positive_to_characteristic(pair, 1, 1, 20, b);
  CHECK(c2.x.points().size() == 2);
  CHECK(c2.n0 <= 3);

  // Crowded {0,1} prefixes force k beyond the plain bound: P = 3 + 3 t0 + 3 t1.
  auto crowded = SeriesExpr(3) + SeriesExpr(3) * SeriesExpr::of_set(PointSetExpr::range(0, 1));
  auto c3 = positive_to_characteristic(crowded, 3, 1, 10, b);
  CHECK(c3.k == 4);
  for (std::uint64_t n = c3.n0; n <= 10; ++n) CHECK(count(c3.x, n, b) == phi(crowded, n, b));

  auto ch = SeriesExpr::of_set(PointSetExpr::product(evens, PointSetExpr::range(0, 4)));
  auto c4 = positive_to_characteristic(ch, 1, 2, 16, b);
  CHECK(c4.n0 <= 1);
  CHECK_THROWS_AS(positive_to_characteristic(SeriesExpr::of_set(pt({30})), 1, 1, 10, b), Error);
  CHECK_THROWS_AS(positive_to_characteristic(two, 1, 1, 10, b), Error);
}

TEST_CASE("ideal membership delegates to equinumerosity") {
  WorkBudget b;
  FilterModel empty;
  CHECK(ideal_membership_via_oracle(evens, evens, empty, 64, b).kind == VerdictKind::Equal);
  CHECK(ideal_membership_via_oracle(evens, odds, empty, 64, b).kind ==
        VerdictKind::DependsOnOracle);
  auto x = PointSetExpr::product(odds, PointSetExpr::range(3, 9));
  auto m = empty.commit(PeriodicSet::progression(0, 3));
  for (const auto& model : {empty, m})
    CHECK(ideal_membership_via_oracle(PointSetExpr::lift(Point{{2, 8}}, x), x, model, 64, b).kind ==
          VerdictKind::Equal);
}
