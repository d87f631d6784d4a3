#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "asynum/bigint.hpp"

namespace asynum {

/// Polynomial in one variable `n` with rational coefficients, lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigRational> coefficients);
  static Polynomial constant(const BigRational& c);
  /// a*n + b
  static Polynomial linear(const BigRational& a, const BigRational& b);

  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const BigRational& leading() const { return coeffs_.back(); }

  BigRational evaluate(const BigInt& n) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  /// Upper bound on the absolute value of every real root (Cauchy bound).
  BigInt root_bound() const;

  /// Renders e.g. `1/2*n^2 + 3/2*n + 1`; the zero polynomial renders as `0`.
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

/// Eventually quasi-polynomial description: for every n >= from, the value
/// is pieces[n mod period](n).
class QuasiPolynomial {
 public:
  QuasiPolynomial() : period_(1), pieces_(1), from_(0) {}
  QuasiPolynomial(std::uint64_t period, std::vector<Polynomial> pieces, std::uint64_t from);
  static QuasiPolynomial constant(const BigInt& c, std::uint64_t from = 0);

  std::uint64_t period() const { return period_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }
  std::uint64_t from() const { return from_; }
  const Polynomial& piece_for(std::uint64_t n) const { return pieces_[n % period_]; }

  /// Exact value at n (callers must only rely on it for n >= from()).
  BigRational evaluate_rational(std::uint64_t n) const;
  /// Integer value; throws InvalidArgument if the piece is not integral at n.
  BigInt evaluate(std::uint64_t n) const;

  QuasiPolynomial operator+(const QuasiPolynomial& o) const;
  QuasiPolynomial operator-(const QuasiPolynomial& o) const;
  QuasiPolynomial operator*(const QuasiPolynomial& o) const;

  /// Same function viewed as valid from a later index.
  QuasiPolynomial starting_at(std::uint64_t from) const;

  /// Largest degree among pieces (-1 if identically zero).
  int degree() const;

  /// `qp(m; p_0,...,p_{m-1}; from=n0)`
  std::string to_string() const;

 private:
  void reduce_period();
  std::uint64_t period_;
  std::vector<Polynomial> pieces_;
  std::uint64_t from_;
};

Polynomial parse_polynomial(const std::string& text);

}  // namespace asynum
