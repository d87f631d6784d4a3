#include <random>

#include "asynum/error.hpp"
#include "asynum/parse.hpp"
#include "doctest.h"
#include "asynum/sample.hpp"

using namespace asynum;
using K = PointSetExpr::Kind;

TEST_CASE("parse examples") {
  auto u = parse_expr("ap(0,2) | ap(1,2)");
  CHECK(u.kind() == K::Union);
  CHECK(u.left().structurally_equal(PointSetExpr::progression(0, 2)));
  CHECK(parse_expr("range(0,3) * finite{(1)}").kind() == K::Product);
  CHECK(parse_expr("N").structurally_equal(PointSetExpr::naturals()));
  CHECK(parse_expr("finite<2>{}").dimension() == 2);
  CHECK(parse_expr("finite{}").dimension() == 1);
  auto l = parse_expr("lift((1,2), ap(0,3) * N)");
  CHECK(l.kind() == K::Lift);
  CHECK(l.dimension() == 4);
}

TEST_CASE("precedence") {
  // * binds tightest, then &, then | and \ from the left.
  auto e = parse_expr("N*N | N*N & N*N");
  CHECK(e.kind() == K::Union);
  CHECK(e.right().kind() == K::Intersect);
  auto d = parse_expr("N \\ ap(0,2) | ap(0,4)");
  CHECK(d.kind() == K::Union);
  CHECK(d.left().kind() == K::Diff);
  CHECK(parse_expr("(N | N) * N").kind() == K::Product);
}

TEST_CASE("parse errors carry an offset") {
  auto offset_of = [](const std::string& s) -> std::size_t {
    try {
      parse_expr(s);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return std::string::npos;
  };
  CHECK(offset_of("ap(0,0)") == 5);
  CHECK(offset_of("ap(0,2) |") == 9);
  CHECK(offset_of("range(1 2)") == 8);
  CHECK(offset_of("foo") == 0);
  CHECK(offset_of("N | N*N") == 2);  // heterogeneous union
  CHECK(offset_of("finite{(1),(1,2)}") == 0);
  CHECK(offset_of("N)") == 1);
  try {
    parse_expr("ap(0,2) ^ N");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("expected") != std::string::npos);
    CHECK(std::string(e.what()).find("'^'") != std::string::npos);
  }
}

TEST_CASE("round trip on fuzzed expressions") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  for (int i = 0; i < 200; ++i) {
    auto e = sample::random_expr(rng, dim(rng), 4);
    auto back = parse_expr(e.to_string());
    CHECK_MESSAGE(back.structurally_equal(e), e.to_string());
    CHECK(back.to_string() == e.to_string());
  }
}

TEST_CASE("series parsing") {
  auto s = parse_series("3 + 2*S[ap(0,2)] - S[range(0,9)*ap(1,2)]");
  CHECK(s.constant() == 3);
  REQUIRE(s.terms().size() == 2);
  CHECK(s.terms()[1].first == -1);
  CHECK(s.terms()[1].second.dimension() == 2);
  CHECK(parse_series("-S[N]").terms()[0].first == -1);
  CHECK(parse_series("S[N]*S[N]").terms()[0].second.kind() == K::Product);
  CHECK(parse_series("S[N] - S[N]").is_zero());
  CHECK_THROWS_AS(parse_series("3 + T[N]"), ParseError);
  CHECK_THROWS_AS(parse_series("S[N"), ParseError);
}
