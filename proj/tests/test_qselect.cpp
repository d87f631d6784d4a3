#include <random>

#include "asynum/error.hpp"
#include "asynum/qselect.hpp"
#include "doctest.h"

using namespace asynum;

namespace {
BigInt at(const std::string& f, long n) { return FuncSpec::parse(f)(static_cast<std::uint64_t>(n)); }

// Literal unrolling of the recursion, for small arguments only.
BigInt ack_literal(std::uint64_t m, std::uint64_t n) {
  if (m == 0) return n + 1;
  BigInt x = 1;
  for (std::uint64_t i = 0; i <= n; ++i) {
    std::uint64_t xi = 0;
    to_u64(x, xi);
    x = ack_literal(m - 1, xi);
  }
  return x;
}
}  // namespace

TEST_CASE("function language") {
  CHECK(at("n*n + 3", 4) == 19);
  CHECK(at("floor_div(n, 2) + mod(n, 3)", 7) == 4);
  CHECK(at("abs(n - 10)", 3) == 7);
  CHECK(at("pow2(n)", 10) == 1024);
  CHECK(at("compose(n*n, n+1)", 3) == 16);
  CHECK(at("table(5, 6, 7)", 2) == 7);
  CHECK(at("isqrt(n)", 17) == 4);
  CHECK(at("-n + 2*n", 9) == 9);
  CHECK_THROWS_AS(at("n - 5", 2), Error);
  CHECK_THROWS_AS(at("table(1,2)", 5), Error);
  CHECK_THROWS_AS(FuncSpec::parse("n +"), ParseError);
  CHECK_THROWS_AS(FuncSpec::parse("frob(n)"), ParseError);
  auto f = FuncSpec::parse("compose(mod(n, 3), n * 2) + f0(n + 2)");
  CHECK(FuncSpec::parse(f.to_string()).to_string() == f.to_string());
}

TEST_CASE("f0 f1 f2") {
  CHECK(eval_f012(0, 6) == 2);
  CHECK(eval_f012(0, 4) == 0);
  CHECK(eval_f012(1, 12) == 0);
  CHECK(eval_f012(1, 30) == 18);
  CHECK(eval_f012(2, 6) == 0);
  CHECK(eval_f012(2, 15) == 9);
  CHECK_THROWS_AS(eval_f012(0, 1), Error);
  CHECK_THROWS_AS(eval_f012(1, 11), Error);
  CHECK_THROWS_AS(eval_f012(2, 5), Error);
  for (int w = 0; w < 3; ++w) {
    const long start = w == 0 ? 2 : w == 1 ? 12 : 6;
    for (long m = start; m < 1024; ++m) {
      BigInt d = eval_f012(w, m + 1) - eval_f012(w, m);
      REQUIRE(abs(d) <= 1);
      REQUIRE(eval_f012(w, m) >= 0);
    }
  }
}

TEST_CASE("tilde and ackermann") {
  WorkBudget b;
  CHECK(tilde(FuncSpec::parse("n+1"), 2, b) == 5);
  CHECK(tilde(FuncSpec::parse("n"), 9, b) == 9);
  CHECK(tilde(FuncSpec::parse("0"), 9, b) == 9);
  CHECK(at("tilde(n+1)", 2) == 5);
  for (long n = 1; n < 30; ++n) {
    auto f = FuncSpec::parse("2*n");
    CHECK(tilde(f, n, b) >= f(static_cast<std::uint64_t>(n)));
  }
  for (std::uint64_t n = 0; n <= 20; ++n) CHECK(ackermann(0, n, b) == n + 1);
  CHECK(ackermann(1, 3, b) == 5);
  CHECK(ackermann(2, 2, b) == 7);
  for (std::uint64_t m = 0; m <= 3; ++m)
    for (std::uint64_t n = 0; n <= 4; ++n) CHECK(ackermann(m, n, b) == ack_literal(m, n));
  CHECK(ackermann(4, 0, b) == 13);
  WorkBudget small(1000);
  CHECK_THROWS_AS(ackermann(5, 3, small), Error);
  WorkBudget tiny(100);
  CHECK_THROWS_AS(tilde(FuncSpec::parse("n*n"), 12, tiny), Error);
}

TEST_CASE("monotone restriction") {
  WorkBudget b;
  FilterModel empty;
  auto w = monotone_restriction(FuncSpec::parse("mod(n, 2)"), empty, 64, b);
  CHECK(w.elements == PeriodicSet::progression(0, 2).elements_upto(64));
  auto id = monotone_restriction(FuncSpec::parse("floor_div(n, 3)"), empty, 30, b);
  CHECK(id.elements.size() == 31);
  auto odd = monotone_restriction(FuncSpec::parse("mod(n, 2)"), empty.commit(PeriodicSet::progression(1, 2)), 64, b);
  CHECK(odd.elements == PeriodicSet::progression(1, 2).elements_upto(64));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 40; ++t) {
    std::vector<BigInt> v;
    for (std::uint64_t n = 0; n <= 99; ++n) v.push_back(std::uniform_int_distribution<std::uint64_t>(0, n)(rng));
    auto r = monotone_restriction(FuncSpec::table(v), empty, 99, b);
    CHECK(r.elements.size() >= 10);
    for (std::size_t i = 1; i < r.elements.size(); ++i) REQUIRE(v[r.elements[i - 1]] <= v[r.elements[i]]);
  }
}

TEST_CASE("longest nondecreasing is optimal") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 12;
    std::vector<std::vector<BigInt>> keys;
    for (int i = 0; i < n; ++i) keys.push_back({BigInt(static_cast<long>(rng() % 4)), BigInt(static_cast<long>(rng() % 4))});
    std::size_t best = 0;
    for (int mask = 1; mask < (1 << n); ++mask) {
      int prev = -1;
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        if (mask >> i & 1) {
          if (prev >= 0 && (keys[prev][0] > keys[i][0] || keys[prev][1] > keys[i][1])) ok = false;
          prev = i;
        }
      if (ok) best = std::max(best, static_cast<std::size_t>(__builtin_popcount(mask)));
    }
    REQUIRE(longest_nondecreasing(keys).size() == best);
  }
}

TEST_CASE("interval to one") {
  WorkBudget b;
  FilterModel empty;
  auto c = interval_to_one_reduce(FuncSpec::parse("7"), empty, 20, b);
  CHECK(c.witness.elements.size() == 21);
  CHECK(c.verified);
  auto inj = interval_to_one_reduce(FuncSpec::parse("n*n"), empty, 20, b);
  CHECK(inj.witness.elements.size() == 21);
  for (std::uint64_t n = 0; n <= 20; ++n) CHECK(inj.h[n] == n);
  auto m3 = interval_to_one_reduce(FuncSpec::parse("mod(n, 3)"), empty, 30, b);
  for (std::uint64_t n = 0; n <= 30; ++n) CHECK(m3.h[n] == n % 3);
  CHECK(m3.verified);
  for (std::size_t i = 1; i < m3.witness.elements.size(); ++i)
    CHECK(m3.h[m3.witness.elements[i - 1]] <= m3.h[m3.witness.elements[i]]);
}

TEST_CASE("FU condition") {
  WorkBudget b;
  CHECK(check_fu_condition(FuncSpec::parse("0"), PeriodicSet::progression(0, 2).elements_upto(64), 64, b).holds);
  auto r = check_fu_condition(FuncSpec::parse("n"), {1, 2, 4, 8, 16, 32, 64}, 64, b);
  CHECK_FALSE(r.holds);
  CHECK(r.violation == std::size_t{0});
  CHECK(check_fu_condition(FuncSpec::parse("floor_div(n, 2)"), {2, 4, 8, 16, 32, 64}, 64, b).holds);
  CHECK_THROWS_AS(check_fu_condition(FuncSpec::parse("mod(n, 2)"), {1, 2}, 10, b), Error);
}

TEST_CASE("doubling and rapid sets") {
  WorkBudget b;
  FilterModel empty;
  CHECK(doubling_set(empty, 100).elements == std::vector<std::uint64_t>{1, 3, 7, 15, 31, 63});
  auto m3 = doubling_set(empty.commit(PeriodicSet::progression(0, 3)), 100).elements;
  CHECK(m3 == std::vector<std::uint64_t>{3, 9, 21, 45, 93});
  CHECK_THROWS_AS(doubling_set(empty, 1), Error);
  CHECK(rapid_set(FuncSpec::parse("n*n"), empty, 50, b).elements == std::vector<std::uint64_t>{1, 2, 5, 26});
  auto z = rapid_set(FuncSpec::parse("0"), empty, 20, b).elements;
  CHECK(z.size() == 20);
  auto d = rapid_set(FuncSpec::parse("2*n"), empty, 200, b).elements;
  for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i] > 2 * d[i - 1]);
}

TEST_CASE("g plus") {
  WorkBudget b;
  auto g = g_plus_and_enumerator(FuncSpec::parse("floor_div(n, 3)"), 30, b);
  for (std::uint64_t n = 0; n < 30; ++n) CHECK(g.g_plus[n] == 3 * (n / 3) + 2);
  CHECK(g.last_class_incomplete);
  for (std::size_t k = 0; k < g.enumerator.size(); ++k) CHECK(g.enumerator[k] == 3 * k + 2);
  auto id = g_plus_and_enumerator(FuncSpec::parse("n"), 10, b);
  for (std::uint64_t n = 0; n < 10; ++n) CHECK(id.g_plus[n] == n);
  auto sq = g_plus_and_enumerator(FuncSpec::parse("isqrt(n)"), 50, b);
  for (std::uint64_t n = 0; n < 49; ++n) {
    std::uint64_t r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    CHECK(sq.g_plus[n] == (r + 1) * (r + 1) - 1);
  }
  CHECK_THROWS_AS(g_plus_and_enumerator(FuncSpec::parse("mod(n, 2)"), 10, b), Error);
}

TEST_CASE("dominating function") {
  WorkBudget b;
  std::vector<bool> pw(101, false);
  for (std::uint64_t p = 1; p <= 100; p *= 2) pw[p] = true;
  auto u = IndexSet::explicit_set(pw, IndexSet::TailTag::Unknown);
  auto d = dominating_function({{FuncSpec::parse("1"), u}}, 100, b);
  CHECK(d.v == std::vector<std::uint64_t>{1, 2, 4, 8, 16, 32, 64});
  CHECK(d.f_omega[5] == 8);   // next power 8, gap to 16
  CHECK(d.f_omega[8] == 8);
  CHECK(d.f_omega[0] == 1);
  std::vector<std::uint64_t> all(51);
  for (std::uint64_t i = 0; i <= 50; ++i) all[i] = i;
  auto ones = dominating_function({}, 50, b, all);
  for (auto v : ones.f_omega) CHECK(v == 1);
  auto two = dominating_function({{FuncSpec::parse("3"), u}, {FuncSpec::parse("10"), u}}, 100, b);
  REQUIRE(two.thresholds[0]);
  REQUIRE(two.thresholds[1]);
  CHECK(*two.thresholds[0] == 3);
  CHECK(*two.thresholds[1] == 9);
  CHECK_THROWS_AS(dominating_function({}, 5, b, std::vector<std::uint64_t>{3}), Error);
}
