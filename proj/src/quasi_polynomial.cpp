#include "asynum/quasi_polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "asynum/error.hpp"

namespace asynum {

Polynomial::Polynomial(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial Polynomial::constant(const BigRational& c) { return Polynomial({c}); }

Polynomial Polynomial::linear(const BigRational& a, const BigRational& b) {
  return Polynomial({b, a});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigRational Polynomial::evaluate(const BigInt& n) const {
  BigRational acc = 0;
  BigRational x(n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  acc.canonicalize();
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<BigRational> r(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-() const {
  std::vector<BigRational> r(coeffs_);
  for (auto& c : r) c = -c;
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigRational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(std::move(r));
}

BigInt Polynomial::root_bound() const {
  if (degree() <= 0) return 0;
  BigRational max_ratio = 0;
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
    BigRational q = abs(coeffs_[i] / coeffs_.back());
    if (q > max_ratio) max_ratio = q;
  }
  BigInt ceil_ratio;
  mpz_cdiv_q(ceil_ratio.get_mpz_t(), max_ratio.get_num_mpz_t(), max_ratio.get_den_mpz_t());
  return ceil_ratio + 1;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const BigRational& c = coeffs_[static_cast<std::size_t>(d)];
    if (sgn(c) == 0) continue;
    BigRational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << "n";
      if (d > 1) out << "^" << d;
    }
  }
  return out.str();
}

QuasiPolynomial::QuasiPolynomial(std::uint64_t period, std::vector<Polynomial> pieces,
                                 std::uint64_t from)
    : period_(period), pieces_(std::move(pieces)), from_(from) {
  if (period_ == 0 || pieces_.size() != period_)
    throw Error(ErrorCode::InvalidArgument, "quasi-polynomial needs exactly `period` pieces");
  reduce_period();
}

QuasiPolynomial QuasiPolynomial::constant(const BigInt& c, std::uint64_t from) {
  return QuasiPolynomial(1, {Polynomial::constant(BigRational(c))}, from);
}

void QuasiPolynomial::reduce_period() {
  for (std::uint64_t p = 1; p < period_; ++p) {
    if (period_ % p != 0) continue;
    bool ok = true;
    for (std::uint64_t r = p; r < period_ && ok; ++r) ok = pieces_[r] == pieces_[r % p];
    if (ok) {
      pieces_.resize(p);
      period_ = p;
      return;
    }
  }
}

BigRational QuasiPolynomial::evaluate_rational(std::uint64_t n) const {
  return piece_for(n).evaluate(big(n));
}

BigInt QuasiPolynomial::evaluate(std::uint64_t n) const {
  BigRational v = evaluate_rational(n);
  if (v.get_den() != 1)
    throw Error(ErrorCode::InvalidArgument,
                "quasi-polynomial piece is not integral at n=" + std::to_string(n));
  return v.get_num();
}

namespace {

template <class Op>
QuasiPolynomial combine(const QuasiPolynomial& a, const QuasiPolynomial& b, Op op) {
  const std::uint64_t period = std::lcm(a.period(), b.period());
  std::vector<Polynomial> pieces;
  pieces.reserve(period);
  for (std::uint64_t r = 0; r < period; ++r)
    pieces.push_back(op(a.pieces()[r % a.period()], b.pieces()[r % b.period()]));
  return QuasiPolynomial(period, std::move(pieces), std::max(a.from(), b.from()));
}

}  // namespace

QuasiPolynomial QuasiPolynomial::operator+(const QuasiPolynomial& o) const {
  return combine(*this, o, [](const Polynomial& x, const Polynomial& y) { return x + y; });
}

QuasiPolynomial QuasiPolynomial::operator-(const QuasiPolynomial& o) const {
  return combine(*this, o, [](const Polynomial& x, const Polynomial& y) { return x - y; });
}

QuasiPolynomial QuasiPolynomial::operator*(const QuasiPolynomial& o) const {
  return combine(*this, o, [](const Polynomial& x, const Polynomial& y) { return x * y; });
}

QuasiPolynomial QuasiPolynomial::starting_at(std::uint64_t from) const {
  QuasiPolynomial r = *this;
  r.from_ = std::max(from_, from);
  return r;
}

int QuasiPolynomial::degree() const {
  int d = -1;
  for (const auto& p : pieces_) d = std::max(d, p.degree());
  return d;
}

std::string QuasiPolynomial::to_string() const {
  std::ostringstream out;
  out << "qp(" << period_ << "; ";
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) out << ", ";
    out << pieces_[i].to_string();
  }
  out << "; from=" << from_ << ")";
  return out.str();
}

namespace {

// Term grammar: [coef][*]n[^k] | coef, with coef = int or int/int.
class PolyParser {
 public:
  explicit PolyParser(const std::string& s) : s_(s) {}

  Polynomial parse() {
    std::vector<BigRational> coeffs;
    skip();
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      auto [coef, deg] = term();
      if (coeffs.size() <= deg) coeffs.resize(deg + 1);
      coeffs[deg] += sign * coef;
      skip();
      if (pos_ >= s_.size()) break;
      char c = s_[pos_];
      if (c != '+' && c != '-') throw ParseError(pos_, "expected '+' or '-'");
      sign = c == '-' ? -1 : 1;
      ++pos_;
    }
    return Polynomial(std::move(coeffs));
  }

 private:
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  BigInt integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected integer");
    return BigInt(s_.substr(start, pos_ - start));
  }
  std::pair<BigRational, std::size_t> term() {
    BigRational coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      BigInt num = integer();
      BigInt den = 1;
      if (peek() == '/') {
        ++pos_;
        den = integer();
        if (den == 0) throw ParseError(pos_, "zero denominator");
      }
      coef = BigRational(num, den);
      coef.canonicalize();
      have_coef = true;
      if (peek() == '*') ++pos_;
      else return {coef, 0};
    }
    if (peek() != 'n') throw ParseError(pos_, have_coef ? "expected 'n' after '*'" : "expected term");
    ++pos_;
    std::size_t deg = 1;
    if (peek() == '^') {
      ++pos_;
      BigInt d = integer();
      deg = d.get_ui();
    }
    return {coef, deg};
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text) { return PolyParser(text).parse(); }

}  // namespace asynum
