#include <random>
#include <set>

#include "asynum/error.hpp"
#include "asynum/ramsey.hpp"
#include "doctest.h"

using namespace asynum;

namespace {
FiniteNatSet set(std::initializer_list<std::uint64_t> v) { return FiniteNatSet(std::vector<std::uint64_t>(v)); }

// No B in the family is homogeneous under c.
bool really_avoids(RamseyEngine& engine, const Family& x, const Coloring& c, WorkBudget& b) {
  const std::size_t s = c.vertices.size();
  for (std::uint64_t mask = 1; mask < (1ULL << s); ++mask) {
    std::vector<std::uint64_t> vs;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < s; ++i)
      if (mask >> i & 1) idx.push_back(i);
    for (auto i : idx) vs.push_back(c.vertices[i]);
    if (!engine.in_family(x, FiniteNatSet(vs), b)) continue;
    std::set<int> colours;
    std::size_t e = 0;
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = i + 1; j < s; ++j, ++e)
        if ((mask >> i & 1) && (mask >> j & 1)) colours.insert(c.colors[e]);
    if (colours.size() <= 1) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("family L") {
  CHECK(in_l(set({0, 1, 2, 3})));
  CHECK_FALSE(in_l(set({1, 2, 3})));
  CHECK(in_l(set({5, 6, 7, 8, 9, 10, 11, 12})));
  CHECK_THROWS_AS(in_l(FiniteNatSet()), Error);
  CHECK(FiniteNatSet::parse("{3, 1,2}") == set({1, 2, 3}));
  CHECK(FiniteNatSet::parse("{}").empty());
  CHECK_THROWS_AS(FiniteNatSet::parse("{1,}"), ParseError);
}

TEST_CASE("rho of L") {
  WorkBudget b;
  RamseyEngine engine;
  auto r = engine.in_rho(Family{0}, set({0, 1, 2, 3}), b);
  CHECK_FALSE(r.member);
  REQUIRE(r.counterexample);
  CHECK(really_avoids(engine, Family{0}, *r.counterexample, b));
  CHECK_FALSE(engine.in_rho(Family{0}, set({0}), b).member);
  auto six = engine.in_rho(Family{0}, set({0, 1, 2, 3, 4, 5}), b);
  RamseyEngine naive(RamseyEngine::Strategy::Naive, false);
  auto six_naive = naive.in_rho(Family{0}, set({0, 1, 2, 3, 4, 5}), b);
  CHECK(six.member == six_naive.member);
  if (!six.member) CHECK(six.counterexample->colors == six_naive.counterexample->colors);
  MESSAGE("{0..5} in rho L: ", six.member);
}

TEST_CASE("nu") {
  WorkBudget b;
  RamseyEngine engine;
  CHECK(engine.nu(set({1, 2, 3}), b) == 0);
  CHECK(engine.nu(set({0, 1, 2, 3}), b) == 1);
  CHECK(engine.nu(set({0, 1}), b) == 0);
  CHECK(engine.nu(FiniteNatSet(), b) == 0);
}

TEST_CASE("pruned and naive agree with identical counterexamples") {
  WorkBudget b(1ULL << 40);
  RamseyEngine fast, serial(RamseyEngine::Strategy::Pruned, false), naive(RamseyEngine::Strategy::Naive, false);
  for (std::uint64_t mask = 0; mask < 32; ++mask) {
    std::vector<std::uint64_t> v;
    for (std::uint64_t i = 0; i < 5; ++i)
      if (mask >> i & 1) v.push_back(i);
    FiniteNatSet a(v);
    auto p = fast.in_rho(Family{0}, a, b), s = serial.in_rho(Family{0}, a, b), n = naive.in_rho(Family{0}, a, b);
    REQUIRE(p.member == n.member);
    REQUIRE(s.member == n.member);
    if (!p.member) {
      REQUIRE(p.counterexample->colors == n.counterexample->colors);
      REQUIRE(s.counterexample->colors == n.counterexample->colors);
      REQUIRE(really_avoids(fast, Family{0}, *p.counterexample, b));
    }
    REQUIRE(fast.nu(a, b) == naive.nu(a, b));
  }
}

TEST_CASE("monotone in the set and size bound") {
  WorkBudget b(1ULL << 40);
  RamseyEngine engine;
  std::vector<std::uint64_t> nu(64);
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    std::vector<std::uint64_t> v;
    for (std::uint64_t i = 0; i < 6; ++i)
      if (mask >> i & 1) v.push_back(i);
    nu[mask] = engine.nu(FiniteNatSet(v), b);
    if (nu[mask] > 0) REQUIRE(v.size() >= 3 + (nu[mask] - 1));
  }
  for (std::uint64_t a = 0; a < 64; ++a)
    for (std::uint64_t c = 0; c < 64; ++c)
      if ((a & c) == a) REQUIRE(nu[a] <= nu[c]);
}

TEST_CASE("rho is monotone in the family") {
  // ρ(ρL) ⊆ ρL because ρL ⊆ L
  WorkBudget b(1ULL << 40);
  RamseyEngine engine;
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    std::vector<std::uint64_t> v;
    for (std::uint64_t i = 0; i < 6; ++i)
      if (mask >> i & 1) v.push_back(i);
    FiniteNatSet a(v);
    if (engine.in_family(Family{1}, a, b)) REQUIRE(in_l(a));
    if (engine.in_family(Family{2}, a, b)) REQUIRE(engine.in_family(Family{1}, a, b));
  }
}

TEST_CASE("initial segments") {
  WorkBudget b;
  CHECK(initial_segment_in(Family{0}, PeriodicSet::naturals(), b) == 3);  // {0,1,2}: 0+2 < 3
  CHECK(initial_segment_in(Family{0}, PeriodicSet::naturals().minus(PeriodicSet::range(0, 4)), b) == 8);
  CHECK(initial_segment_in(Family{0}, std::vector<std::uint64_t>{1, 2, 3, 10, 11}, b) == 4);
  CHECK_THROWS_AS(initial_segment_in(Family{0}, PeriodicSet::range(3, 5), b), Error);
}

TEST_CASE("gamma and largeness") {
  auto part = parse_partition("# two blocks\ninterval 0 3\ninterval 4 9\ninterval 10 10\n");
  REQUIRE(part.size() == 3);
  auto g = gamma(PointSetExpr::naturals(), part, 1'000'000);
  CHECK(g[0] == std::uint64_t{1});
  CHECK(g[2] == std::uint64_t{0});
  auto ge = gamma(PointSetExpr::empty(), part, 1000);
  for (auto v : ge) CHECK(v == std::uint64_t{0});
  auto single = gamma(PointSetExpr::finite({Point{{4}}}), part, 1000);
  CHECK(single[1] == std::uint64_t{0});
  CHECK_THROWS_AS(parse_partition("interval 1 3\n"), Error);
  CHECK_THROWS_AS(parse_partition("interval 0 3\ninterval 5 6\n"), Error);
  CHECK_THROWS_AS(parse_partition("intervl 0 3\n"), Error);

  auto empty = is_large_at_horizon(PointSetExpr::empty(), part, FilterModel(), 0, 1000);
  CHECK(empty.verdict == Membership::NonMember);
  auto huge = is_large_at_horizon(PointSetExpr::naturals(), part, FilterModel(), 100, 1'000'000);
  CHECK(huge.verdict == Membership::Undecided);
  CHECK(huge.index_set.known_elements_upto(100).empty());
  std::vector<Interval> one{{0, 3}};
  auto assumed = is_large_at_horizon(PointSetExpr::naturals(), one, FilterModel(), 0, 1'000'000,
                                     IndexSet::TailTag::Cofinite);
  CHECK(assumed.verdict == Membership::Member);
  auto tight = gamma(PointSetExpr::naturals(), {{0, 30}}, 100);
  CHECK_FALSE(tight[0].has_value());
}
