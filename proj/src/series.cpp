#include "asynum/series.hpp"

#include <algorithm>
#include <sstream>

#include "asynum/error.hpp"

namespace asynum {

namespace {

bool denotes_empty(const PointSetExpr& x) {
  if (x.kind() == PointSetExpr::Kind::Finite) return x.points().empty();
  auto plan = CountingPlan::build(x);
  if (!plan) return false;
  return std::all_of(plan->cells().begin(), plan->cells().end(), [](const Cell& c) {
    return std::any_of(c.begin(), c.end(), [](const PeriodicSet& s) { return s.is_empty(); });
  });
}

}  // namespace

SeriesExpr::SeriesExpr(BigInt constant, std::vector<Term> terms) : constant_(std::move(constant)) {
  for (const auto& [c, x] : terms) add_term(c, x);
}

SeriesExpr SeriesExpr::of_set(const PointSetExpr& x) {
  if (denotes_empty(x)) return SeriesExpr();
  return SeriesExpr(0, {{BigInt(1), x}});
}

void SeriesExpr::add_term(const BigInt& c, const PointSetExpr& x) {
  if (sgn(c) == 0) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (!it->second.structurally_equal(x)) continue;
    it->first += c;
    if (sgn(it->first) == 0) terms_.erase(it);
    return;
  }
  terms_.emplace_back(c, x);
}

std::size_t SeriesExpr::degree() const {
  std::size_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.second.dimension());
  return d;
}

std::string SeriesExpr::to_string() const {
  std::ostringstream out;
  bool first = true;
  if (sgn(constant_) != 0 || terms_.empty()) {
    out << constant_.get_str();
    first = false;
  }
  for (const auto& [c, x] : terms_) {
    const bool neg = sgn(c) < 0;
    if (first) out << (neg ? "-" : "");
    else out << (neg ? " - " : " + ");
    first = false;
    const BigInt mag = abs(c);
    if (mag != 1) out << mag.get_str() << "*";
    out << "S[" << x.to_string() << "]";
  }
  return out.str();
}

bool SeriesExpr::structurally_equal(const SeriesExpr& o) const {
  if (constant_ != o.constant_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].first != o.terms_[i].first ||
        !terms_[i].second.structurally_equal(o.terms_[i].second))
      return false;
  return true;
}

SeriesExpr operator+(const SeriesExpr& a, const SeriesExpr& b) {
  SeriesExpr r = a;
  r.constant_ += b.constant_;
  for (const auto& [c, x] : b.terms_) r.add_term(c, x);
  return r;
}

SeriesExpr operator-(const SeriesExpr& a) {
  SeriesExpr r;
  r.constant_ = -a.constant_;
  for (const auto& [c, x] : a.terms_) r.terms_.emplace_back(-c, x);
  return r;
}

SeriesExpr operator-(const SeriesExpr& a, const SeriesExpr& b) { return a + (-b); }

SeriesExpr operator*(const SeriesExpr& a, const SeriesExpr& b) {
  SeriesExpr r;
  r.constant_ = a.constant_ * b.constant_;
  for (const auto& [c, x] : b.terms_) r.add_term(a.constant_ * c, x);
  for (const auto& [c, x] : a.terms_) {
    r.add_term(c * b.constant_, x);
    for (const auto& [d, y] : b.terms_) r.add_term(c * d, PointSetExpr::product(x, y));
  }
  return r;
}

BigInt phi(const SeriesExpr& s, std::uint64_t n, WorkBudget& budget) {
  BigInt v = s.constant();
  for (const auto& [c, x] : s.terms()) v += c * count(x, n, budget);
  return v;
}

std::vector<BigInt> phi_range(const SeriesExpr& s, std::uint64_t horizon, WorkBudget& budget) {
  std::vector<BigInt> out(horizon + 1, s.constant());
  for (const auto& [c, x] : s.terms()) {
    budget.charge(horizon + 1, "series evaluation");
    std::vector<BigInt> counts;
    if (auto plan = CountingPlan::build(x)) {
      counts = plan->counts(horizon);
    } else {
      counts.resize(horizon + 1);
      for (std::uint64_t n = 0; n <= horizon; ++n) counts[n] = count(x, n, budget);
    }
    for (std::uint64_t n = 0; n <= horizon; ++n) out[n] += c * counts[n];
  }
  return out;
}

std::string Decomposition::to_string() const {
  std::ostringstream out;
  out << "constant=" << constant.get_str() << " levels=" << levels.size()
      << " verified=" << (verified ? "yes" : "no") << "\n";
  for (const auto& l : levels)
    out << "  k=" << l.k << " i=" << l.i << " X=" << l.x.to_string() << " Y=" << l.y.to_string()
        << "\n";
  return out.str();
}

Decomposition decompose_bounded(const BigInt& constant, const std::map<Point, BigInt>& values,
                                std::uint64_t bound) {
  const BigInt b = big(bound);
  std::map<std::size_t, std::vector<std::pair<Point, BigInt>>> by_dim;
  for (const auto& [p, a] : values) {
    if (p.dimension() == 0) throw Error(ErrorCode::InvalidArgument, "point without coordinates");
    if (abs(a) > b)
      throw Error(ErrorCode::BoundExceeded, "coefficient " + a.get_str() + " at " + p.to_string() +
                                                " exceeds the bound " + std::to_string(bound));
    if (sgn(a) != 0) by_dim[p.dimension()].emplace_back(p, a);
  }
  Decomposition d{constant, {}, false};
  for (const auto& [k, entries] : by_dim) {
    for (std::uint64_t i = 1; i <= bound; ++i) {
      std::vector<Point> xs, ys;
      const BigInt level = big(i);
      for (const auto& [p, a] : entries) {
        if (a >= level) xs.push_back(p);
        else if (a <= -level) ys.push_back(p);
      }
      if (xs.empty() && ys.empty()) break;  // levels only shrink
      d.levels.push_back({k, i, PointSetExpr::finite(std::move(xs), k),
                          PointSetExpr::finite(std::move(ys), k)});
    }
  }
  // Reconstruction: the levels must give back every input coefficient.
  d.verified = std::all_of(values.begin(), values.end(), [&](const auto& entry) {
    const auto& [p, a] = entry;
    BigInt sum = 0;
    for (const auto& l : d.levels) {
      if (l.k != p.dimension()) continue;
      if (std::binary_search(l.x.points().begin(), l.x.points().end(), p)) sum += 1;
      if (std::binary_search(l.y.points().begin(), l.y.points().end(), p)) sum -= 1;
    }
    return sum == a;
  });
  if (!d.verified) throw Error(ErrorCode::InvalidArgument, "decomposition does not reconstruct");
  return d;
}

std::map<Point, BigInt> coefficients_upto(const SeriesExpr& s, std::uint64_t horizon,
                                          WorkBudget& budget) {
  std::map<Point, BigInt> out;
  for (const auto& [c, x] : s.terms())
    for (auto& p : truncate(x, horizon, budget)) out[std::move(p)] += c;
  for (auto it = out.begin(); it != out.end();) {
    if (sgn(it->second) == 0) it = out.erase(it);
    else ++it;
  }
  return out;
}

CharacteristicForm positive_to_characteristic(const SeriesExpr& p, std::uint64_t bound,
                                              std::size_t degree, std::uint64_t horizon,
                                              WorkBudget& budget) {
  if (p.degree() > degree)
    throw Error(ErrorCode::BoundExceeded, "series has a term of dimension " +
                                              std::to_string(p.degree()) + " > " +
                                              std::to_string(degree));
  const BigInt b = big(bound);
  auto check = [&](const BigInt& a, const std::string& where) {
    if (sgn(a) < 0)
      throw Error(ErrorCode::InvalidArgument, "negative coefficient " + a.get_str() + " at " + where);
    if (a > b)
      throw Error(ErrorCode::BoundExceeded, "coefficient " + a.get_str() + " at " + where +
                                                " exceeds the bound " + std::to_string(bound));
  };
  // N_z: total coefficient of monomials whose part after the {0,1} prefix is z.
  std::map<std::vector<std::uint64_t>, BigInt> n_z;
  check(p.constant(), "the constant term");
  if (sgn(p.constant()) > 0) n_z[{}] += p.constant();
  for (const auto& [x, a] : coefficients_upto(p, horizon, budget)) {
    check(a, x.to_string());
    auto split = std::find_if(x.coords.begin(), x.coords.end(), [](std::uint64_t c) { return c > 1; });
    n_z[std::vector<std::uint64_t>(split, x.coords.end())] += a;
  }
  if (n_z.empty())
    throw Error(ErrorCode::HorizonTooSmall,
                "no monomial of the series lies within horizon " + std::to_string(horizon));

  // Least k with 2^k > B*2^d that also leaves room for N_z prefixes of length k-|z|.
  std::size_t k = 1;
  BigInt target = b;
  target <<= degree;
  auto pow2 = [](std::size_t e) {
    BigInt r = 1;
    r <<= e;
    return r;
  };
  while (pow2(k) <= target) ++k;
  auto fits = [&](std::size_t kk) {
    return std::all_of(n_z.begin(), n_z.end(), [&](const auto& e) {
      return e.first.size() <= kk && e.second <= pow2(kk - e.first.size());
    });
  };
  while (!fits(k)) ++k;

  std::vector<Point> points;
  for (const auto& [z, n] : n_z) {
    std::uint64_t count_z = 0;
    to_u64(n, count_z);
    const std::size_t m = k - z.size();
    for (std::uint64_t j = 0; j < count_z; ++j) {
      budget.charge(k, "characteristic form");
      Point q;
      q.coords.reserve(k);
      for (std::size_t bit = m; bit-- > 0;) q.coords.push_back((j >> bit) & 1);
      q.coords.insert(q.coords.end(), z.begin(), z.end());
      points.push_back(std::move(q));
    }
  }

  // Phi of the finite result by max-coordinate histogram, against Phi(P).
  std::vector<BigInt> mine(horizon + 1, 0);
  for (const auto& q : points)
    if (q.max_coordinate() <= horizon) mine[q.max_coordinate()] += 1;
  for (std::uint64_t n = 1; n <= horizon; ++n) mine[n] += mine[n - 1];
  const auto theirs = phi_range(p, horizon, budget);
  std::uint64_t n0 = horizon + 1;
  while (n0 > 0 && mine[n0 - 1] == theirs[n0 - 1]) --n0;
  if (n0 > horizon)
    throw Error(ErrorCode::HorizonTooSmall, "characteristic form does not agree at the horizon");
  return {PointSetExpr::finite(std::move(points), k), k, n0, horizon};
}

Verdict ideal_membership_via_oracle(const PointSetExpr& x, const PointSetExpr& y,
                                    const FilterModel& model, std::uint64_t horizon,
                                    WorkBudget& budget) {
  return equinumerous(x, y, model, horizon, budget);
}

}  // namespace asynum
