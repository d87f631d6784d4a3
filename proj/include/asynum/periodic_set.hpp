#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asynum/quasi_polynomial.hpp"

namespace asynum {

/// An eventually periodic subset of N: an explicit part below `threshold`
/// and, from the threshold on, membership decided by `n mod modulus`.
///
/// Values are kept canonical (least modulus, least threshold), so two sets
/// are equal exactly when their representations are equal. This is the
/// Boolean algebra used both for one-dimensional coordinate sets and for
/// index sets handed to the filter model.
class PeriodicSet {
 public:
  /// Half-open run [lo, hi) of members below the threshold.
  using Run = std::pair<std::uint64_t, std::uint64_t>;

  PeriodicSet();  // empty set

  static PeriodicSet empty();
  static PeriodicSet naturals();
  static PeriodicSet singleton(std::uint64_t x);
  static PeriodicSet of(const std::vector<std::uint64_t>& elements);
  /// {a, ..., b}; empty when a > b.
  static PeriodicSet range(std::uint64_t a, std::uint64_t b);
  /// {a + d*i : i in N}; d >= 1.
  static PeriodicSet progression(std::uint64_t a, std::uint64_t d);
  /// {n : n mod m in residues}
  static PeriodicSet residue_classes(std::uint64_t m, const std::vector<std::uint64_t>& residues);
  /// (residue pattern ∪ add) \ remove
  static PeriodicSet from_descriptor(std::uint64_t m, const std::vector<std::uint64_t>& residues,
                                     const std::vector<std::uint64_t>& add,
                                     const std::vector<std::uint64_t>& remove);

  /// Members below `threshold` given by `below` (size threshold); from the
  /// threshold on, n is a member iff mask[n mod mask.size()].
  static PeriodicSet from_parts(const std::vector<bool>& below, const std::vector<bool>& mask);

  bool contains(std::uint64_t n) const;
  /// |S ∩ [0, n]|
  std::uint64_t count_upto(std::uint64_t n) const;
  /// Members in [0, n], ascending.
  std::vector<std::uint64_t> elements_upto(std::uint64_t n) const;
  /// Least member >= n, if any.
  std::optional<std::uint64_t> next_member(std::uint64_t n) const;

  bool is_empty() const;
  bool is_finite() const;
  bool is_infinite() const { return !is_finite(); }
  bool is_cofinite() const;
  /// Largest member of a finite nonempty set.
  std::optional<std::uint64_t> max_element() const;

  PeriodicSet complement() const;
  PeriodicSet intersect(const PeriodicSet& o) const;
  PeriodicSet unite(const PeriodicSet& o) const;
  PeriodicSet minus(const PeriodicSet& o) const;

  bool subset_of(const PeriodicSet& o) const { return minus(o).is_empty(); }
  /// Inclusion up to finitely many exceptions.
  bool almost_subset_of(const PeriodicSet& o) const { return minus(o).is_finite(); }

  std::uint64_t modulus() const { return modulus_; }
  const std::vector<bool>& residue_mask() const { return residues_; }
  std::vector<std::uint64_t> residues() const;
  std::uint64_t threshold() const { return threshold_; }
  const std::vector<Run>& runs() const { return runs_; }

  /// Elements below the threshold that the residue pattern would exclude.
  std::vector<std::uint64_t> added() const;
  /// Non-elements below the threshold that the residue pattern would include.
  std::vector<std::uint64_t> removed() const;

  /// n -> |S ∩ [0, n]| as a quasi-polynomial valid from the threshold on.
  QuasiPolynomial counting_tail() const;

  /// `periodic mod=<m> residues=<r,...>[ add=<n,...>][ remove=<n,...>]`
  std::string descriptor() const;

  bool operator==(const PeriodicSet& o) const {
    return modulus_ == o.modulus_ && residues_ == o.residues_ && threshold_ == o.threshold_ &&
           runs_ == o.runs_;
  }

 private:
  PeriodicSet(std::uint64_t modulus, std::vector<bool> residues, std::uint64_t threshold,
              std::vector<Run> runs);

  bool pattern(std::uint64_t n) const { return residues_[n % modulus_]; }
  std::uint64_t residue_count() const;
  /// #{x < y : pattern(x)}
  std::uint64_t pattern_count_below(std::uint64_t y) const;
  /// Membership runs over [0, t) for t >= threshold, extending the pattern.
  std::vector<Run> runs_upto(std::uint64_t t) const;
  void normalize();

  template <class Op>
  static PeriodicSet combine(const PeriodicSet& a, const PeriodicSet& b, Op op);

  std::uint64_t modulus_;
  std::vector<bool> residues_;
  std::uint64_t threshold_;
  std::vector<Run> runs_;
};

/// Parses the descriptor syntax produced by `PeriodicSet::descriptor`
/// (leading keyword `periodic` optional).
PeriodicSet parse_periodic_descriptor(const std::string& text);

}  // namespace asynum
