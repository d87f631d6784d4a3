#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "asynum/bigint.hpp"
#include "asynum/budget.hpp"
#include "asynum/numerosity.hpp"
#include "asynum/oracle.hpp"
#include "asynum/pointset.hpp"

namespace asynum {

/// a + sum c_i * S_{X_i}: a bounded series kept as a combination of
/// characteristic series. Terms with structurally equal sets are merged and
/// zero coefficients dropped.
class SeriesExpr {
 public:
  using Term = std::pair<BigInt, PointSetExpr>;

  SeriesExpr() = default;
  explicit SeriesExpr(BigInt constant, std::vector<Term> terms = {});

  /// S_X; the zero series when X is empty.
  static SeriesExpr of_set(const PointSetExpr& x);

  const BigInt& constant() const { return constant_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return sgn(constant_) == 0 && terms_.empty(); }
  /// Largest term dimension, 0 for a constant.
  std::size_t degree() const;

  /// `3 + 2*S[ap(0,2)] - S[range(0,9)]`
  std::string to_string() const;
  bool structurally_equal(const SeriesExpr& o) const;

  friend SeriesExpr operator+(const SeriesExpr& a, const SeriesExpr& b);
  friend SeriesExpr operator-(const SeriesExpr& a, const SeriesExpr& b);
  friend SeriesExpr operator-(const SeriesExpr& a);
  /// Distributes; S_X * S_Y becomes S_{X x Y}, order kept.
  friend SeriesExpr operator*(const SeriesExpr& a, const SeriesExpr& b);

 private:
  void add_term(const BigInt& c, const PointSetExpr& x);

  BigInt constant_ = 0;
  std::vector<Term> terms_;
};

/// Phi(S)(n) = a + sum c_i |(X_i)_n|.
BigInt phi(const SeriesExpr& s, std::uint64_t n, WorkBudget& budget);
/// Phi(S)(0..horizon), terms counted in parallel.
std::vector<BigInt> phi_range(const SeriesExpr& s, std::uint64_t horizon, WorkBudget& budget);

struct DecompositionLevel {
  std::size_t k;      // dimension
  std::uint64_t i;    // level, 1..B
  PointSetExpr x;     // {x in N^k : a_x >= i}
  PointSetExpr y;     // {x in N^k : a_x <= -i}
};

struct Decomposition {
  BigInt constant;
  std::vector<DecompositionLevel> levels;  // only levels with a nonempty side
  bool verified = false;                   // reconstruction reproduced every coefficient
  std::string to_string() const;
};

/// S = a + sum_k sum_{i<=B} (S_{X_ik} - S_{Y_ik}). BoundExceeded if some
/// |a_x| > B.
Decomposition decompose_bounded(const BigInt& constant, const std::map<Point, BigInt>& values,
                                std::uint64_t bound);

/// Coefficients of the monomials of S with every index <= horizon.
std::map<Point, BigInt> coefficients_upto(const SeriesExpr& s, std::uint64_t horizon,
                                          WorkBudget& budget);

struct CharacteristicForm {
  PointSetExpr x;        // finite, dimension k
  std::size_t k;
  std::uint64_t n0;      // Phi(S_X) = Phi(P) on n0..horizon
  std::uint64_t horizon;
};

/// A characteristic series congruent to the positive series P: every monomial
/// t_x is split as t_{x'} t_z with x' the longest {0,1} prefix, and the N_z
/// monomials sharing z are replaced by N_z distinct {0,1} prefixes of one
/// common length. HorizonTooSmall if P has no monomial within the horizon.
CharacteristicForm positive_to_characteristic(const SeriesExpr& p, std::uint64_t bound,
                                              std::size_t degree, std::uint64_t horizon,
                                              WorkBudget& budget);

/// S_X - S_Y in the ideal of the model, i.e. the equinumerosity verdict.
Verdict ideal_membership_via_oracle(const PointSetExpr& x, const PointSetExpr& y,
                                    const FilterModel& model, std::uint64_t horizon,
                                    WorkBudget& budget);

}  // namespace asynum
