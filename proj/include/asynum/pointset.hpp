#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "asynum/bigint.hpp"
#include "asynum/budget.hpp"
#include "asynum/periodic_set.hpp"

namespace asynum {

/// A point of N^k, k >= 1.
struct Point {
  std::vector<std::uint64_t> coords;

  std::size_t dimension() const { return coords.size(); }
  std::uint64_t max_coordinate() const;
  auto operator<=>(const Point&) const = default;
  std::string to_string() const;
};

/// Symbolic subset of N^k. Immutable; copies share structure.
class PointSetExpr {
 public:
  enum class Kind { Finite, Range, Progression, Product, Union, Intersect, Diff, Lift };

  /// Points must share one dimension. An empty list needs `dimension`.
  static PointSetExpr finite(std::vector<Point> points, std::size_t dimension = 0);
  static PointSetExpr empty(std::size_t dimension = 1) { return finite({}, dimension); }
  /// {a..b} in N; empty when a > b.
  static PointSetExpr range(std::uint64_t a, std::uint64_t b);
  /// {a + d*i}; d >= 1 (a degenerate progression is a Finite set).
  static PointSetExpr progression(std::uint64_t a, std::uint64_t d);
  static PointSetExpr naturals() { return progression(0, 1); }
  static PointSetExpr product(const PointSetExpr& left, const PointSetExpr& right);
  static PointSetExpr unite(const PointSetExpr& left, const PointSetExpr& right);
  static PointSetExpr intersect(const PointSetExpr& left, const PointSetExpr& right);
  static PointSetExpr diff(const PointSetExpr& left, const PointSetExpr& right);
  /// {P} x X
  static PointSetExpr lift(Point prefix, const PointSetExpr& inner);

  Kind kind() const { return node_->kind; }
  std::size_t dimension() const { return node_->dimension; }
  const std::vector<Point>& points() const { return node_->points; }
  std::uint64_t a() const { return node_->a; }
  std::uint64_t b() const { return node_->b; }
  const PointSetExpr& left() const { return *node_->left; }
  const PointSetExpr& right() const { return *node_->right; }
  const Point& lift_point() const { return node_->points.front(); }

  /// Surface syntax; reparses to a structurally equal expression.
  std::string to_string() const;
  bool structurally_equal(const PointSetExpr& o) const;

 private:
  struct Node {
    Kind kind;
    std::size_t dimension;
    std::vector<Point> points;  // Finite members, or the single Lift prefix
    std::uint64_t a = 0, b = 0;  // Range bounds / Progression start and step
    std::shared_ptr<const PointSetExpr> left, right;
  };
  explicit PointSetExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::size_t dimension(const PointSetExpr& expr);

/// Membership by direct recursion over the expression tree.
bool contains(const PointSetExpr& expr, const Point& p);

/// A product of one-dimensional eventually periodic sets.
using Cell = std::vector<PeriodicSet>;

/// Disjoint-cell normal form of an expression: the denotation is the disjoint
/// union of the cells. Gives exact counts at every n and a quasi-polynomial
/// counting tail.
class CountingPlan {
 public:
  static constexpr std::size_t kDefaultCellLimit = 1 << 16;

  /// nullopt when the decomposition would exceed `cell_limit` cells.
  static std::optional<CountingPlan> build(const PointSetExpr& expr,
                                           std::size_t cell_limit = kDefaultCellLimit);

  std::size_t dimension() const { return dimension_; }
  const std::vector<Cell>& cells() const { return cells_; }

  BigInt count(std::uint64_t n) const;
  /// Counts at 0..horizon; evaluated in parallel, deterministic.
  std::vector<BigInt> counts(std::uint64_t horizon) const;
  /// Counting function as a quasi-polynomial; nullopt if its period would
  /// exceed `period_limit`.
  std::optional<QuasiPolynomial> tail(std::uint64_t period_limit = 1 << 14) const;
  /// Points with every coordinate <= n, lexicographic order.
  std::vector<Point> truncate(std::uint64_t n, WorkBudget& budget) const;

 private:
  std::size_t dimension_ = 0;
  std::vector<Cell> cells_;
};

/// Points of the denotation with every coordinate <= n, lexicographically sorted.
std::vector<Point> truncate(const PointSetExpr& expr, std::uint64_t n, WorkBudget& budget);
std::vector<Point> truncate(const PointSetExpr& expr, std::uint64_t n);

/// |truncate(expr, n)|, exactly. Uses the cell normal form and falls back to
/// bounded enumeration.
BigInt count(const PointSetExpr& expr, std::uint64_t n, WorkBudget& budget);
BigInt count(const PointSetExpr& expr, std::uint64_t n);

/// Serial reference: tests every point of {0..n}^k with `contains`.
BigInt count_by_enumeration(const PointSetExpr& expr, std::uint64_t n, WorkBudget& budget);

}  // namespace asynum
