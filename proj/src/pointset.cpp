#include "asynum/pointset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "asynum/error.hpp"

namespace asynum {

std::uint64_t Point::max_coordinate() const {
  return coords.empty() ? 0 : *std::max_element(coords.begin(), coords.end());
}

std::string Point::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out << ",";
    out << coords[i];
  }
  out << ")";
  return out.str();
}

PointSetExpr PointSetExpr::finite(std::vector<Point> points, std::size_t dimension) {
  if (points.empty() && dimension == 0)
    throw Error(ErrorCode::InvalidArgument, "empty finite set needs an explicit dimension");
  const std::size_t k = points.empty() ? dimension : points.front().dimension();
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "points need at least one coordinate");
  for (const auto& p : points)
    if (p.dimension() != k)
      throw Error(ErrorCode::DimensionMismatch, "finite set mixes dimensions " + std::to_string(k) +
                                                    " and " + std::to_string(p.dimension()));
  if (dimension != 0 && dimension != k)
    throw Error(ErrorCode::DimensionMismatch, "finite set points do not match the given dimension");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  auto node = std::make_shared<Node>(Node{Kind::Finite, k, std::move(points), 0, 0, {}, {}});
  return PointSetExpr(std::move(node));
}

PointSetExpr PointSetExpr::range(std::uint64_t a, std::uint64_t b) {
  return PointSetExpr(std::make_shared<Node>(Node{Kind::Range, 1, {}, a, b, {}, {}}));
}

PointSetExpr PointSetExpr::progression(std::uint64_t a, std::uint64_t d) {
  if (d == 0)
    throw Error(ErrorCode::InvalidArgument, "progression step must be >= 1 (use a finite set)");
  return PointSetExpr(std::make_shared<Node>(Node{Kind::Progression, 1, {}, a, d, {}, {}}));
}

PointSetExpr PointSetExpr::product(const PointSetExpr& left, const PointSetExpr& right) {
  return PointSetExpr(std::make_shared<Node>(
      Node{Kind::Product, left.dimension() + right.dimension(), {}, 0, 0,
           std::make_shared<const PointSetExpr>(left), std::make_shared<const PointSetExpr>(right)}));
}

namespace {

void require_homogeneous(const PointSetExpr& l, const PointSetExpr& r, const char* op) {
  if (l.dimension() != r.dimension())
    throw Error(ErrorCode::HeterogeneousUnion,
                std::string(op) + " of sets of dimensions " + std::to_string(l.dimension()) +
                    " and " + std::to_string(r.dimension()));
}

}  // namespace

PointSetExpr PointSetExpr::unite(const PointSetExpr& left, const PointSetExpr& right) {
  require_homogeneous(left, right, "union");
  return PointSetExpr(std::make_shared<Node>(
      Node{Kind::Union, left.dimension(), {}, 0, 0, std::make_shared<const PointSetExpr>(left),
           std::make_shared<const PointSetExpr>(right)}));
}

PointSetExpr PointSetExpr::intersect(const PointSetExpr& left, const PointSetExpr& right) {
  require_homogeneous(left, right, "intersection");
  return PointSetExpr(std::make_shared<Node>(
      Node{Kind::Intersect, left.dimension(), {}, 0, 0, std::make_shared<const PointSetExpr>(left),
           std::make_shared<const PointSetExpr>(right)}));
}

PointSetExpr PointSetExpr::diff(const PointSetExpr& left, const PointSetExpr& right) {
  require_homogeneous(left, right, "difference");
  return PointSetExpr(std::make_shared<Node>(
      Node{Kind::Diff, left.dimension(), {}, 0, 0, std::make_shared<const PointSetExpr>(left),
           std::make_shared<const PointSetExpr>(right)}));
}

PointSetExpr PointSetExpr::lift(Point prefix, const PointSetExpr& inner) {
  if (prefix.dimension() == 0)
    throw Error(ErrorCode::InvalidArgument, "lift point needs at least one coordinate");
  const std::size_t k = prefix.dimension() + inner.dimension();
  return PointSetExpr(std::make_shared<Node>(
      Node{Kind::Lift, k, {std::move(prefix)}, 0, 0, std::make_shared<const PointSetExpr>(inner), {}}));
}

namespace {

void print(const PointSetExpr& e, std::ostream& out, bool top) {
  using K = PointSetExpr::Kind;
  switch (e.kind()) {
    case K::Finite: {
      out << "finite";
      if (e.points().empty() && e.dimension() != 1) out << "<" << e.dimension() << ">";
      out << "{";
      for (std::size_t i = 0; i < e.points().size(); ++i) {
        if (i) out << ",";
        out << e.points()[i].to_string();
      }
      out << "}";
      return;
    }
    case K::Range: out << "range(" << e.a() << "," << e.b() << ")"; return;
    case K::Progression: out << "ap(" << e.a() << "," << e.b() << ")"; return;
    case K::Lift:
      out << "lift(" << e.lift_point().to_string() << ", ";
      print(e.left(), out, true);
      out << ")";
      return;
    default: break;
  }
  const char* op = e.kind() == K::Product ? " * " : e.kind() == K::Union ? " | "
                   : e.kind() == K::Intersect ? " & " : " \\ ";
  if (!top) out << "(";
  print(e.left(), out, false);
  out << op;
  print(e.right(), out, false);
  if (!top) out << ")";
}

}  // namespace

std::string PointSetExpr::to_string() const {
  std::ostringstream out;
  print(*this, out, true);
  return out.str();
}

bool PointSetExpr::structurally_equal(const PointSetExpr& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind() || dimension() != o.dimension()) return false;
  switch (kind()) {
    case Kind::Finite: return points() == o.points();
    case Kind::Range:
    case Kind::Progression: return a() == o.a() && b() == o.b();
    case Kind::Lift: return lift_point() == o.lift_point() && left().structurally_equal(o.left());
    default: return left().structurally_equal(o.left()) && right().structurally_equal(o.right());
  }
}

std::size_t dimension(const PointSetExpr& expr) { return expr.dimension(); }

namespace {

bool contains_span(const PointSetExpr& e, const std::uint64_t* p) {
  using K = PointSetExpr::Kind;
  switch (e.kind()) {
    case K::Finite:
      return std::any_of(e.points().begin(), e.points().end(), [&](const Point& q) {
        return std::equal(q.coords.begin(), q.coords.end(), p);
      });
    case K::Range: return e.a() <= p[0] && p[0] <= e.b();
    case K::Progression: return p[0] >= e.a() && (p[0] - e.a()) % e.b() == 0;
    case K::Product:
      return contains_span(e.left(), p) && contains_span(e.right(), p + e.left().dimension());
    case K::Union: return contains_span(e.left(), p) || contains_span(e.right(), p);
    case K::Intersect: return contains_span(e.left(), p) && contains_span(e.right(), p);
    case K::Diff: return contains_span(e.left(), p) && !contains_span(e.right(), p);
    case K::Lift: {
      const auto& q = e.lift_point().coords;
      return std::equal(q.begin(), q.end(), p) && contains_span(e.left(), p + q.size());
    }
  }
  return false;
}

}  // namespace

bool contains(const PointSetExpr& expr, const Point& p) {
  if (p.dimension() != expr.dimension())
    throw Error(ErrorCode::DimensionMismatch, "point " + p.to_string() + " has dimension " +
                                                  std::to_string(p.dimension()) + ", set has " +
                                                  std::to_string(expr.dimension()));
  return contains_span(expr, p.coords.data());
}

// ---------------------------------------------------------------------------
// Cell normal form

namespace {

class CellLimitExceeded {};

bool cell_empty(const Cell& c) {
  return std::any_of(c.begin(), c.end(), [](const PeriodicSet& s) { return s.is_empty(); });
}

std::optional<Cell> cell_intersect(const Cell& a, const Cell& b) {
  Cell out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.push_back(a[i].intersect(b[i]));
    if (out.back().is_empty()) return std::nullopt;
  }
  return out;
}

// a \ b as disjoint cells.
void cell_subtract(const Cell& a, const Cell& b, std::vector<Cell>& out) {
  std::vector<PeriodicSet> common;
  common.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    common.push_back(a[i].intersect(b[i]));
    if (common.back().is_empty()) {
      out.push_back(a);
      return;
    }
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    PeriodicSet rest = a[i].minus(b[i]);
    if (rest.is_empty()) continue;
    Cell piece;
    piece.reserve(a.size());
    for (std::size_t j = 0; j < i; ++j) piece.push_back(common[j]);
    piece.push_back(std::move(rest));
    for (std::size_t j = i + 1; j < a.size(); ++j) piece.push_back(a[j]);
    out.push_back(std::move(piece));
  }
}

class NormalFormBuilder {
 public:
  explicit NormalFormBuilder(std::size_t limit) : limit_(limit) {}

  std::vector<Cell> build(const PointSetExpr& e) {
    using K = PointSetExpr::Kind;
    std::vector<Cell> out;
    switch (e.kind()) {
      case K::Finite:
        for (const auto& p : e.points()) {
          Cell c;
          for (auto x : p.coords) c.push_back(PeriodicSet::singleton(x));
          out.push_back(std::move(c));
        }
        break;
      case K::Range:
        if (e.a() <= e.b()) out.push_back({PeriodicSet::range(e.a(), e.b())});
        break;
      case K::Progression: out.push_back({PeriodicSet::progression(e.a(), e.b())}); break;
      case K::Product: {
        auto l = build(e.left());
        auto r = build(e.right());
        for (const auto& a : l)
          for (const auto& b : r) {
            Cell c(a);
            c.insert(c.end(), b.begin(), b.end());
            out.push_back(std::move(c));
            check(out.size());
          }
        break;
      }
      case K::Lift: {
        Cell prefix;
        for (auto x : e.lift_point().coords) prefix.push_back(PeriodicSet::singleton(x));
        for (auto& b : build(e.left())) {
          Cell c(prefix);
          c.insert(c.end(), b.begin(), b.end());
          out.push_back(std::move(c));
        }
        break;
      }
      case K::Intersect: {
        auto l = build(e.left());
        auto r = build(e.right());
        for (const auto& a : l)
          for (const auto& b : r)
            if (auto c = cell_intersect(a, b)) {
              out.push_back(std::move(*c));
              check(out.size());
            }
        break;
      }
      case K::Diff: out = subtract(build(e.left()), build(e.right())); break;
      case K::Union: {
        out = build(e.left());
        auto extra = subtract(build(e.right()), out);
        out.insert(out.end(), std::make_move_iterator(extra.begin()),
                   std::make_move_iterator(extra.end()));
        check(out.size());
        break;
      }
    }
    return out;
  }

 private:
  std::vector<Cell> subtract(std::vector<Cell> from, const std::vector<Cell>& what) {
    for (const auto& b : what) {
      std::vector<Cell> next;
      for (const auto& a : from) {
        cell_subtract(a, b, next);
        check(next.size());
      }
      from = std::move(next);
    }
    return from;
  }

  void check(std::size_t n) const {
    if (n > limit_) throw CellLimitExceeded{};
  }

  std::size_t limit_;
};

}  // namespace

std::optional<CountingPlan> CountingPlan::build(const PointSetExpr& expr, std::size_t cell_limit) {
  CountingPlan plan;
  plan.dimension_ = expr.dimension();
  try {
    plan.cells_ = NormalFormBuilder(cell_limit).build(expr);
  } catch (const CellLimitExceeded&) {
    return std::nullopt;
  }
  plan.cells_.erase(std::remove_if(plan.cells_.begin(), plan.cells_.end(), cell_empty),
                    plan.cells_.end());
  return plan;
}

BigInt CountingPlan::count(std::uint64_t n) const {
  BigInt total = 0;
  for (const auto& cell : cells_) {
    BigInt term = 1;
    for (const auto& s : cell) {
      const std::uint64_t c = s.count_upto(n);
      if (c == 0) {
        term = 0;
        break;
      }
      term *= big(c);
    }
    total += term;
  }
  return total;
}

std::vector<BigInt> CountingPlan::counts(std::uint64_t horizon) const {
  std::vector<BigInt> out(horizon + 1);
  const auto last = static_cast<std::int64_t>(horizon);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t n = 0; n <= last; ++n) out[static_cast<std::size_t>(n)] = count(static_cast<std::uint64_t>(n));
  return out;
}

std::optional<QuasiPolynomial> CountingPlan::tail(std::uint64_t period_limit) const {
  QuasiPolynomial total = QuasiPolynomial::constant(0);
  for (const auto& cell : cells_) {
    QuasiPolynomial term = QuasiPolynomial::constant(1);
    for (const auto& s : cell) {
      if (std::lcm(term.period(), s.modulus()) > period_limit) return std::nullopt;
      term = term * s.counting_tail();
    }
    if (std::lcm(total.period(), term.period()) > period_limit) return std::nullopt;
    total = total + term;
  }
  return total;
}

std::vector<Point> CountingPlan::truncate(std::uint64_t n, WorkBudget& budget) const {
  std::vector<Point> out;
  for (const auto& cell : cells_) {
    std::vector<std::vector<std::uint64_t>> axes;
    std::uint64_t size = 1;
    for (const auto& s : cell) {
      axes.push_back(s.elements_upto(n));
      budget.charge(axes.back().size() + 1, "truncation");
      size = axes.back().empty() ? 0 : size * axes.back().size();
      if (size == 0) break;
    }
    if (size == 0) continue;
    budget.charge(size, "truncation");
    std::vector<std::size_t> idx(cell.size(), 0);
    while (true) {
      Point p;
      p.coords.reserve(cell.size());
      for (std::size_t i = 0; i < cell.size(); ++i) p.coords.push_back(axes[i][idx[i]]);
      out.push_back(std::move(p));
      std::size_t i = cell.size();
      while (i > 0) {
        --i;
        if (++idx[i] < axes[i].size()) break;
        idx[i] = 0;
        if (i == 0) goto done;
      }
    }
  done:;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Visits every point of {0..n}^k in lexicographic order.
template <class F>
void for_each_grid_point(std::size_t k, std::uint64_t n, WorkBudget& budget, F&& f) {
  Point p{std::vector<std::uint64_t>(k, 0)};
  while (true) {
    budget.charge(1, "enumeration");
    f(p);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (p.coords[i] < n) {
        ++p.coords[i];
        break;
      }
      p.coords[i] = 0;
      if (i == 0) return;
    }
  }
}

}  // namespace

std::vector<Point> truncate(const PointSetExpr& expr, std::uint64_t n, WorkBudget& budget) {
  if (auto plan = CountingPlan::build(expr)) return plan->truncate(n, budget);
  std::vector<Point> out;
  for_each_grid_point(expr.dimension(), n, budget, [&](const Point& p) {
    if (contains(expr, p)) out.push_back(p);
  });
  return out;
}

std::vector<Point> truncate(const PointSetExpr& expr, std::uint64_t n) {
  WorkBudget budget;
  return truncate(expr, n, budget);
}

BigInt count(const PointSetExpr& expr, std::uint64_t n, WorkBudget& budget) {
  if (auto plan = CountingPlan::build(expr)) {
    budget.charge(plan->cells().size() + 1, "counting");
    return plan->count(n);
  }
  return count_by_enumeration(expr, n, budget);
}

BigInt count(const PointSetExpr& expr, std::uint64_t n) {
  WorkBudget budget;
  return count(expr, n, budget);
}

BigInt count_by_enumeration(const PointSetExpr& expr, std::uint64_t n, WorkBudget& budget) {
  std::uint64_t total = 0;
  for_each_grid_point(expr.dimension(), n, budget, [&](const Point& p) {
    if (contains(expr, p)) ++total;
  });
  return big(total);
}

}  // namespace asynum
