#include "asynum/parse.hpp"

#include <cctype>
#include <cstdint>

#include "asynum/error.hpp"

namespace asynum {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  PointSetExpr whole_expr() {
    auto e = expr();
    finish("'|', '&', '\\', '*' or end of input");
    return e;
  }

  SeriesExpr whole_series() {
    SeriesExpr s = signed_term(true);
    while (true) {
      skip();
      if (pos_ >= s_.size()) return s;
      if (eat('+')) s = s + signed_term(false);
      else if (eat('-')) s = s - signed_term(false);
      else fail("'+', '-' or end of input");
    }
  }

 private:
  [[noreturn]] void fail(const std::string& expected) {
    skip();
    std::string found = pos_ < s_.size() ? "'" + std::string(1, s_[pos_]) + "'" : "end of input";
    throw ParseError(pos_, "expected " + expected + ", found " + found);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("'") + c + "'");
  }

  void finish(const char* expected) {
    skip();
    if (pos_ != s_.size()) fail(expected);
  }

  std::string word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  std::uint64_t natural() {
    skip();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::uint64_t d = static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > (UINT64_MAX - d) / 10) {
        pos_ = start;
        throw ParseError(start, "number does not fit in 64 bits");
      }
      v = v * 10 + d;
      ++pos_;
    }
    if (pos_ == start) fail("a natural number");
    return v;
  }

  Point point() {
    expect('(');
    Point p;
    p.coords.push_back(natural());
    while (eat(',')) p.coords.push_back(natural());
    expect(')');
    return p;
  }

  template <class F>
  PointSetExpr checked(std::size_t at, F&& build) {
    try {
      return build();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(at, e.what());
    }
  }

  PointSetExpr expr() {
    auto lhs = inter();
    while (true) {
      const std::size_t at = (skip(), pos_);
      if (eat('|')) {
        auto rhs = inter();
        lhs = checked(at, [&] { return PointSetExpr::unite(lhs, rhs); });
      } else if (eat('\\')) {
        auto rhs = inter();
        lhs = checked(at, [&] { return PointSetExpr::diff(lhs, rhs); });
      } else {
        return lhs;
      }
    }
  }

  PointSetExpr inter() {
    auto lhs = prod();
    while (true) {
      const std::size_t at = (skip(), pos_);
      if (!eat('&')) return lhs;
      auto rhs = prod();
      lhs = checked(at, [&] { return PointSetExpr::intersect(lhs, rhs); });
    }
  }

  PointSetExpr prod() {
    auto lhs = atom();
    while (eat('*')) lhs = PointSetExpr::product(lhs, atom());
    return lhs;
  }

  PointSetExpr atom() {
    skip();
    const std::size_t at = pos_;
    if (eat('(')) {
      auto e = expr();
      expect(')');
      return e;
    }
    const std::string name = word();
    if (name == "N") return PointSetExpr::naturals();
    if (name == "range" || name == "ap") {
      expect('(');
      const std::uint64_t a = natural();
      expect(',');
      const std::size_t at_b = (skip(), pos_);
      const std::uint64_t b = natural();
      expect(')');
      if (name == "range") return PointSetExpr::range(a, b);
      if (b == 0) throw ParseError(at_b, "progression step must be at least 1");
      return PointSetExpr::progression(a, b);
    }
    if (name == "finite") {
      std::size_t k = 0;
      if (eat('<')) {
        k = natural();
        if (k == 0) throw ParseError(at, "dimension must be at least 1");
        expect('>');
      }
      expect('{');
      std::vector<Point> pts;
      if (!peek('}')) {
        pts.push_back(point());
        while (eat(',')) pts.push_back(point());
      }
      expect('}');
      if (pts.empty() && k == 0) k = 1;
      return checked(at, [&] { return PointSetExpr::finite(std::move(pts), k); });
    }
    if (name == "lift") {
      expect('(');
      Point p = point();
      expect(',');
      auto inner = expr();
      expect(')');
      return PointSetExpr::lift(std::move(p), inner);
    }
    pos_ = at;
    fail("one of 'finite', 'range', 'ap', 'lift', 'N', '('");
  }

  SeriesExpr signed_term(bool leading) {
    bool neg = false;
    if (leading && eat('-')) neg = true;
    SeriesExpr t = series_term();
    return neg ? -t : t;
  }

  // INT | INT '*' S[expr] | S[expr], with products of S[..] factors allowed.
  SeriesExpr series_term() {
    skip();
    SeriesExpr t;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      t = SeriesExpr(BigInt(s_.substr(start, pos_ - start)));
      if (!eat('*')) return t;
      t = t * characteristic();
    } else {
      t = characteristic();
    }
    while (eat('*')) t = t * characteristic();
    return t;
  }

  SeriesExpr characteristic() {
    skip();
    if (!eat('S')) fail("an integer or 'S['");
    expect('[');
    auto e = expr();
    expect(']');
    return SeriesExpr::of_set(e);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

PointSetExpr parse_expr(const std::string& text) { return Parser(text).whole_expr(); }

SeriesExpr parse_series(const std::string& text) { return Parser(text).whole_series(); }

}  // namespace asynum
