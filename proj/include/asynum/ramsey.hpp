#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asynum/budget.hpp"
#include "asynum/oracle.hpp"
#include "asynum/pointset.hpp"
#include "asynum/seqring.hpp"

namespace asynum {

/// Sorted, duplicate-free finite subset of N.
class FiniteNatSet {
 public:
  FiniteNatSet() = default;
  explicit FiniteNatSet(std::vector<std::uint64_t> elements);
  static FiniteNatSet parse(const std::string& text);  // "{0,1,2}" or "0,1,2"

  const std::vector<std::uint64_t>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  std::uint64_t min() const { return elements_.front(); }
  /// Elements selected by the bits of `mask`.
  FiniteNatSet subset(std::uint64_t mask) const;
  std::string to_string() const;
  bool operator==(const FiniteNatSet&) const = default;
  bool operator<(const FiniteNatSet& o) const { return elements_ < o.elements_; }

 private:
  std::vector<std::uint64_t> elements_;
};

/// min(A) + 2 < |A|; EmptySet for A = ∅.
bool in_l(const FiniteNatSet& a);

/// ρ^depth L (depth 0 is L itself).
struct Family {
  std::size_t depth = 0;
};

/// Two-coloring of the pairs of a finite set, pairs in lexicographic order.
struct Coloring {
  std::vector<std::uint64_t> vertices;
  std::vector<int> colors;  // one per pair (i < j), lexicographic
  /// `a-b:c` entries separated by spaces.
  std::string to_string() const;
};

struct RhoResult {
  bool member;
  /// A coloring with no homogeneous set in the family, when not a member.
  std::optional<Coloring> counterexample;
};

/// Largest |A| the coloring search accepts (edges must fit in 64 bits).
constexpr std::size_t kMaxRamseyVertices = 11;

/// Membership in ρ^k L with memoized subset tables. One engine may be
/// shared across calls; the cache is guarded.
class RamseyEngine {
 public:
  enum class Strategy { Pruned, Naive };

  explicit RamseyEngine(Strategy strategy = Strategy::Pruned, bool parallel = true)
      : strategy_(strategy), parallel_(parallel) {}

  bool in_family(const Family& x, const FiniteNatSet& a, WorkBudget& budget);
  /// A -> (X)^2_2: every two-coloring of [A]^2 has a homogeneous B ∈ X.
  RhoResult in_rho(const Family& x, const FiniteNatSet& a, WorkBudget& budget);
  /// Least n with A ∉ ρ^n L.
  std::uint64_t nu(const FiniteNatSet& a, WorkBudget& budget);

 private:
  std::vector<std::uint64_t> minimal_members(const Family& x, const FiniteNatSet& a,
                                             WorkBudget& budget);
  RhoResult search_pruned(const FiniteNatSet& a, const std::vector<std::uint64_t>& minimal,
                          WorkBudget& budget) const;
  RhoResult search_naive(const FiniteNatSet& a, const std::vector<bool>& member_table,
                         WorkBudget& budget) const;

  Strategy strategy_;
  bool parallel_;
  std::mutex mutex_;
  std::map<std::pair<std::size_t, std::vector<std::uint64_t>>, bool> memo_;
};

/// Least n such that the first n elements of S form a member of X.
std::uint64_t initial_segment_in(const Family& x, const std::vector<std::uint64_t>& s,
                                 WorkBudget& budget);
std::uint64_t initial_segment_in(const Family& x, const PeriodicSet& s, WorkBudget& budget);

/// Closed interval [lo, hi].
struct Interval {
  std::uint64_t lo, hi;
};
/// `interval <lo> <hi>` lines; `#` comments. Intervals must be consecutive from 0.
std::vector<Interval> parse_partition(const std::string& text);
void validate_partition(const std::vector<Interval>& partition);

/// γ(X)(n) = ν(X ∩ I_n); an entry is nullopt (Unknown) when its own budget
/// of `entry_budget` steps runs out.
std::vector<std::optional<std::uint64_t>> gamma(const PointSetExpr& x,
                                                const std::vector<Interval>& partition,
                                                std::uint64_t entry_budget);

struct LargenessReport {
  std::uint64_t k;
  IndexSet index_set;  // {n : γ(n) > √n + k} on the computed entries
  Membership verdict;
  std::vector<std::uint64_t> unknown;  // entries whose γ was not computed
};
/// Horizon-bounded test of γ(X)(n) > √n + k. The set beyond the computed
/// entries is taken from `assumed_tail` (Finite when X is empty).
LargenessReport is_large_at_horizon(const PointSetExpr& x, const std::vector<Interval>& partition,
                                    const FilterModel& model, std::uint64_t k,
                                    std::uint64_t entry_budget,
                                    IndexSet::TailTag assumed_tail = IndexSet::TailTag::Unknown);

}  // namespace asynum
