#include <random>

#include "asynum/error.hpp"
#include "asynum/log.hpp"
#include "asynum/seqring.hpp"
#include "doctest.h"
#include "asynum/sample.hpp"

using namespace asynum;

namespace {
CountingSequence linear(long a, long b, std::uint64_t h) {
  return CountingSequence::from_tail(QuasiPolynomial(1, {Polynomial::linear(a, b)}, 0), h);
}
}  // namespace

TEST_CASE("counting sequences of expressions") {
  auto s = counting_sequence(PointSetExpr::naturals(), 3);
  CHECK(s.to_string() == "prefix=[1,2,3,4]; tail=qp(1; n + 1; from=0)");
  auto e = counting_sequence(PointSetExpr::progression(0, 2), 4);
  CHECK(e.prefix() == std::vector<BigInt>{1, 1, 2, 2, 3});
  REQUIRE(e.has_tail());
  for (std::uint64_t n = 0; n < 30; ++n) CHECK(e.value(n) == BigInt(n / 2 + 1));
  auto f = counting_sequence(PointSetExpr::finite({Point{{5}}}), 7);
  CHECK(f.prefix() == std::vector<BigInt>{0, 0, 0, 0, 0, 1, 1, 1});
  CHECK(f.value(1000) == 1);
}

TEST_CASE("prefix is extended when the closed form settles late") {
  auto s = counting_sequence(PointSetExpr::range(0, 9), 3);
  REQUIRE(s.has_tail());
  CHECK(s.horizon() >= s.tail()->from());
  CHECK(s.value(50) == 10);
}

TEST_CASE("arithmetic") {
  auto a = linear(1, 1, 10);
  CHECK((a + a) == linear(2, 2, 10));
  auto z = a - a;
  for (auto& v : z.prefix()) CHECK(v == 0);
  auto ev = counting_sequence(PointSetExpr::progression(0, 2), 8);
  auto od = counting_sequence(PointSetExpr::progression(1, 2), 8);
  CHECK((ev * od).value(5) == 9);
  CHECK((ev * od).value(101) == BigInt(51 * 51));
}

TEST_CASE("horizon mismatch uses the shorter and warns") {
  std::string seen;
  set_warning_sink([&](const std::string& m) { seen = m; });
  CountingSequence a({1, 2, 3, 4, 5});
  CountingSequence b({1, 1, 1});
  auto c = a + b;
  CHECK(c.horizon() == 2);
  CHECK_FALSE(c.has_tail());
  CHECK(seen.find("horizon mismatch") != std::string::npos);
  set_warning_sink(nullptr);
}

TEST_CASE("tail must agree with prefix") {
  CHECK_THROWS_AS(CountingSequence({1, 2, 4}, QuasiPolynomial(1, {Polynomial::linear(1, 1)}, 0)), Error);
}

TEST_CASE("sign patterns") {
  auto d = counting_sequence(PointSetExpr::progression(0, 2), 20) -
           counting_sequence(PointSetExpr::progression(1, 2), 20);
  auto sp = sign_pattern(d);
  CHECK(sp.zero.exact() == PeriodicSet::progression(1, 2));
  CHECK(sp.positive.exact() == PeriodicSet::progression(0, 2));
  CHECK(sp.negative.exact().is_empty());

  auto zero = linear(0, 0, 5);
  auto zp = sign_pattern(zero);
  CHECK(zp.zero.exact() == PeriodicSet::naturals());
  CHECK(zp.positive.exact().is_empty());

  auto g = counting_sequence(PointSetExpr::naturals(), 30) - counting_sequence(PointSetExpr::range(0, 9), 30);
  auto gp = sign_pattern(g);
  CHECK(gp.zero.exact() == PeriodicSet::range(0, 9));
  CHECK(gp.positive.exact().is_cofinite());

  // A tail that changes sign past the horizon.
  auto late = CountingSequence::from_tail(QuasiPolynomial(1, {Polynomial::linear(1, -40)}, 0), 5);
  auto lp = sign_pattern(late);
  CHECK(lp.negative.exact() == PeriodicSet::range(0, 39));
  CHECK(lp.zero.exact() == PeriodicSet::singleton(40));

  CountingSequence raw({0, -1, 2});
  auto rp = sign_pattern(raw);
  CHECK_FALSE(rp.zero.is_exact());
  CHECK(rp.zero.descriptor() == "explicit H=2 members=0 tail=unknown");
  CHECK(parse_index_set(rp.zero.descriptor()) == rp.zero);
}

TEST_CASE("sign cells partition the horizon") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    auto x = sample::random_expr(rng, 1 + i % 2), y = sample::random_expr(rng, 1 + (i / 2) % 2);
    auto d = counting_sequence(x, 40) - counting_sequence(y, 40);
    auto sp = sign_pattern(d);
    for (std::uint64_t n = 0; n <= 40; ++n) {
      int hits = *sp.negative.contains(n) + *sp.zero.contains(n) + *sp.positive.contains(n);
      REQUIRE(hits == 1);
      const int sg = sgn(d.value(n));
      REQUIRE(*(sg < 0 ? sp.negative : sg == 0 ? sp.zero : sp.positive).contains(n));
    }
    // exact beyond the horizon too
    for (std::uint64_t n = 41; n < 200; ++n) {
      const int sg = sgn(d.value(n));
      REQUIRE(*(sg < 0 ? sp.negative : sg == 0 ? sp.zero : sp.positive).contains(n));
    }
  }
}

TEST_CASE("polynomial boundedness") {
  CHECK(is_polynomially_bounded(linear(1, 1, 4)) == Tri::True);
  CHECK(is_polynomially_bounded(CountingSequence({1, 2})) == Tri::Unknown);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const std::size_t k = 1 + i % 3;
    auto s = counting_sequence(sample::random_expr(rng, k), 24);
    REQUIRE(is_polynomially_bounded(s) == Tri::True);
    for (std::uint64_t n = 0; n <= 24; ++n) {
      BigInt cap;
      mpz_ui_pow_ui(cap.get_mpz_t(), n + 1, k);
      REQUIRE(s.value(n) >= 0);
      REQUIRE(s.value(n) <= cap);
    }
  }
}

TEST_CASE("ring laws on prefixes") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> v(-50, 50);
  for (int i = 0; i < 100; ++i) {
    std::vector<BigInt> pa, pb, pc;
    for (int j = 0; j < 12; ++j) {
      pa.push_back(v(rng));
      pb.push_back(v(rng));
      pc.push_back(v(rng));
    }
    CountingSequence a(pa), b(pb), c(pc);
    REQUIRE(((a + b) + c) == (a + (b + c)));
    REQUIRE((a * b) == (b * a));
    REQUIRE((a * (b + c)) == (a * b + a * c));
    REQUIRE(((a * b) * c) == (a * (b * c)));
  }
}
