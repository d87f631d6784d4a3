#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "asynum/bigint.hpp"
#include "asynum/budget.hpp"
#include "asynum/periodic_set.hpp"
#include "asynum/pointset.hpp"
#include "asynum/quasi_polynomial.hpp"

namespace asynum {

enum class Tri { False, True, Unknown };
std::string_view to_string(Tri t);

/// Integer sequence known exactly on 0..horizon, optionally with a
/// quasi-polynomial formula that holds from tail->from() on.
class CountingSequence {
 public:
  /// Throws InvalidArgument if the tail disagrees with the prefix on the
  /// overlap, or starts beyond the prefix.
  explicit CountingSequence(std::vector<BigInt> prefix,
                            std::optional<QuasiPolynomial> tail = std::nullopt);
  /// Values 0..horizon taken from a formula valid everywhere it is used.
  static CountingSequence from_tail(const QuasiPolynomial& tail, std::uint64_t horizon);

  std::uint64_t horizon() const { return prefix_.size() - 1; }
  const std::vector<BigInt>& prefix() const { return prefix_; }
  const std::optional<QuasiPolynomial>& tail() const { return tail_; }
  bool has_tail() const { return tail_.has_value(); }

  /// Exact value; beyond the horizon only when the tail is known.
  BigInt value(std::uint64_t n) const;
  bool known_at(std::uint64_t n) const { return n <= horizon() || has_tail(); }

  /// Same sequence with the prefix cut or extended to `h` (extension needs
  /// the tail; cutting below tail->from() drops the tail).
  CountingSequence with_horizon(std::uint64_t h) const;

  /// `prefix=[...]; tail=qp(...)` or `tail=unknown`
  std::string to_string() const;

  bool operator==(const CountingSequence& o) const;

 private:
  std::vector<BigInt> prefix_;
  std::optional<QuasiPolynomial> tail_;
};

CountingSequence operator+(const CountingSequence& s, const CountingSequence& t);
CountingSequence operator-(const CountingSequence& s, const CountingSequence& t);
CountingSequence operator*(const CountingSequence& s, const CountingSequence& t);
CountingSequence operator-(const CountingSequence& s);

/// n -> |truncate(expr, n)| on 0..horizon. The prefix is extended past the
/// horizon when the closed form only settles later.
CountingSequence counting_sequence(const PointSetExpr& expr, std::uint64_t horizon,
                                   WorkBudget& budget);
CountingSequence counting_sequence(const PointSetExpr& expr, std::uint64_t horizon);

/// A subset of 0..horizon whose behaviour beyond the horizon is not known.
struct ExplicitSet {
  std::vector<bool> bits;  // membership of 0..horizon

  std::uint64_t horizon() const { return bits.size() - 1; }
  bool operator==(const ExplicitSet&) const = default;
};

/// Index set: either exactly decided (eventually periodic, which includes
/// finite and cofinite sets) or known only up to a horizon.
class IndexSet {
 public:
  enum class TailTag { Finite, Cofinite, Unknown };

  IndexSet(PeriodicSet s) : rep_(std::move(s)) {}  // NOLINT: implicit on purpose
  /// Finite and Cofinite tags are turned into exact sets.
  static IndexSet explicit_set(std::vector<bool> bits, TailTag tag);

  bool is_exact() const { return std::holds_alternative<PeriodicSet>(rep_); }
  const PeriodicSet& exact() const { return std::get<PeriodicSet>(rep_); }
  const ExplicitSet& partial() const { return std::get<ExplicitSet>(rep_); }

  /// Membership of n; nullopt when undecided.
  std::optional<bool> contains(std::uint64_t n) const;
  /// Members in [0, n] that are known.
  std::vector<std::uint64_t> known_elements_upto(std::uint64_t n) const;

  /// Periodic descriptor, or `explicit H=<h> members=<n,...> tail=unknown`.
  std::string descriptor() const;

  bool operator==(const IndexSet& o) const { return rep_ == o.rep_; }

 private:
  explicit IndexSet(ExplicitSet s) : rep_(std::move(s)) {}
  std::variant<PeriodicSet, ExplicitSet> rep_;
};

/// Parses either descriptor form produced by IndexSet::descriptor.
IndexSet parse_index_set(const std::string& text);

struct SignPattern {
  IndexSet negative;
  IndexSet zero;
  IndexSet positive;
};

/// Splits N by the sign of s(n). Exact when the tail is known.
SignPattern sign_pattern(const CountingSequence& s);

/// True when a tail is known; Unknown for prefix-only data.
Tri is_polynomially_bounded(const CountingSequence& s);

}  // namespace asynum
