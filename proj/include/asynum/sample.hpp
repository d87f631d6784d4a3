#pragma once

#include <random>

#include "asynum/error.hpp"
#include "asynum/numerosity.hpp"
#include "asynum/oracle.hpp"
#include "asynum/pointset.hpp"

/// Seeded generators for property checks and the CLI.
namespace asynum::sample {

inline PointSetExpr random_leaf(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3), small(0, 9), step(1, 4);
  auto u = [&](int v) { return static_cast<std::uint64_t>(v); };
  switch (pick(rng)) {
    case 0: {
      std::vector<Point> pts;
      for (int i = small(rng) % 4; i > 0; --i) pts.push_back(Point{{u(small(rng))}});
      return PointSetExpr::finite(pts, 1);
    }
    case 1: return PointSetExpr::range(u(small(rng)), u(small(rng) + small(rng)));
    default: return PointSetExpr::progression(u(small(rng) % 5), u(step(rng)));
  }
}

/// Random expression of exactly dimension k.
inline PointSetExpr random_expr(std::mt19937_64& rng, std::size_t k, int depth = 3) {
  std::uniform_int_distribution<int> pick(0, 5);
  if (k > 1) {
    std::uniform_int_distribution<std::size_t> split(1, k - 1);
    const int choice = depth > 0 ? pick(rng) : 0;
    if (choice == 5) {
      std::uniform_int_distribution<int> c(0, 6);
      return PointSetExpr::lift(Point{{static_cast<std::uint64_t>(c(rng))}},
                                random_expr(rng, k - 1, depth - 1));
    }
    if (choice >= 2 && depth > 0) {
      auto l = random_expr(rng, k, depth - 1), r = random_expr(rng, k, depth - 1);
      if (choice == 2) return PointSetExpr::unite(l, r);
      if (choice == 3) return PointSetExpr::intersect(l, r);
      return PointSetExpr::diff(l, r);
    }
    const std::size_t a = split(rng);
    return PointSetExpr::product(random_expr(rng, a, depth - 1), random_expr(rng, k - a, depth - 1));
  }
  if (depth <= 0) return random_leaf(rng);
  auto l = random_expr(rng, 1, depth - 1), r = random_expr(rng, 1, depth - 1);
  switch (pick(rng)) {
    case 0: return PointSetExpr::unite(l, r);
    case 1: return PointSetExpr::intersect(l, r);
    case 2: return PointSetExpr::diff(l, r);
    default: return random_leaf(rng);
  }
}

/// A sample shaped for `axiom_check`: (A, B) homogeneous for E0-E2,
/// ({P} x A or A x {P}, A) for E3, and (A, A', B, B') with A' ≈ A forced
/// for E4.
inline std::vector<PointSetExpr> axiom_sample(Axiom axiom, std::mt19937_64& rng,
                                              std::size_t max_dim = 2) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<int> c(0, 6), pick(0, 2);
  auto u = [](int v) { return static_cast<std::uint64_t>(v); };
  auto shifted = [&](const PointSetExpr& a) {
    switch (pick(rng)) {
      case 0: return PointSetExpr::lift(Point{{u(c(rng))}}, a);
      case 1: return PointSetExpr::product(a, PointSetExpr::finite({Point{{u(c(rng))}}}));
      default: return a;
    }
  };
  switch (axiom) {
    case Axiom::E3: {
      auto a = random_expr(rng, dim(rng));
      if (pick(rng) == 0) return {a, PointSetExpr::finite({Point{{u(c(rng)), u(c(rng))}}})};
      auto p = PointSetExpr::finite({Point{{u(c(rng))}}});
      return {pick(rng) == 0 ? PointSetExpr::product(a, p) : PointSetExpr::product(p, a), a};
    }
    case Axiom::E4: {
      auto a = random_expr(rng, dim(rng)), b = random_expr(rng, dim(rng));
      return {a, shifted(a), b, shifted(b)};
    }
    default: {
      const std::size_t k = dim(rng);
      return {random_expr(rng, k), random_expr(rng, k)};
    }
  }
}

/// Up to `commitments` random infinite periodic commitments, each kept only
/// if consistent with the earlier ones.
inline FilterModel random_model(std::mt19937_64& rng, int commitments) {
  std::uniform_int_distribution<int> mod(1, 6), res(0, 5), pick(0, 2), small(0, 20);
  FilterModel model("random");
  for (int tries = 0; static_cast<int>(model.commitments().size()) < commitments && tries < 100;
       ++tries) {
    const auto m = static_cast<std::uint64_t>(mod(rng));
    PeriodicSet s;
    switch (pick(rng)) {
      case 0: s = PeriodicSet::progression(static_cast<std::uint64_t>(res(rng)) % m, m); break;
      case 1: {
        std::vector<std::uint64_t> r;
        for (std::uint64_t i = 0; i < m; ++i)
          if (res(rng) % 2) r.push_back(i);
        s = PeriodicSet::residue_classes(m, r);
        break;
      }
      default: s = PeriodicSet::range(0, static_cast<std::uint64_t>(small(rng))).complement();
    }
    try {
      model = model.commit(s);
    } catch (const Error&) {
    }
  }
  return model;
}

}  // namespace asynum::sample
