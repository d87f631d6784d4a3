#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "asynum/bigint.hpp"
#include "asynum/budget.hpp"
#include "asynum/oracle.hpp"
#include "asynum/seqring.hpp"

namespace asynum {

/// A function N -> N given by a small expression language in `n`:
///   integers, n, + - *, unary -, floor_div(a,b), mod(a,b), abs(e), pow2(e),
///   isqrt(e), compose(f,g) = f(g(n)), f0(e), f1(e), f2(e), ack(m,e),
///   tilde(f), table(v0,v1,...).
/// Intermediate values may be negative; the value at n must be a natural.
class FuncSpec {
 public:
  static FuncSpec parse(const std::string& text);
  static FuncSpec table(std::vector<BigInt> values);

  /// Value at n; OutOfDomain if it is negative or n is outside a table.
  BigInt operator()(const BigInt& n, WorkBudget& budget) const;
  BigInt operator()(std::uint64_t n, WorkBudget& budget) const { return (*this)(big(n), budget); }
  BigInt operator()(std::uint64_t n) const;
  /// Values at 0..horizon.
  std::vector<BigInt> values(std::uint64_t horizon, WorkBudget& budget) const;

  std::string to_string() const;

  struct Node;

 private:
  explicit FuncSpec(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;
};

/// f0, f1, f2: minimal-step zigzag functions. OutOfDomain below m = 2, 12, 6.
BigInt eval_f012(int which, const BigInt& m);

/// f iterated f(n) times starting from n.
BigInt tilde(const FuncSpec& f, const BigInt& n, WorkBudget& budget);

/// A(0,n) = n+1; A(m+1,n) = A(m,.) iterated n+1 times starting from 1.
BigInt ackermann(std::uint64_t m, const BigInt& n, WorkBudget& budget);

/// Indices of a longest chain i_1 < i_2 < ... with keys nondecreasing in
/// every component. Among longest chains the one with lexicographically
/// least key sequence, then least indices, is returned.
std::vector<std::size_t> longest_nondecreasing(const std::vector<std::vector<BigInt>>& keys);

struct Witness {
  std::vector<std::uint64_t> elements;  // ascending, all <= horizon
  std::uint64_t horizon;
  /// Elements as an index set known on 0..horizon.
  IndexSet as_index_set() const;
};

/// S inside the model's core with f nondecreasing on S. Horizon-bounded:
/// a finite witness, not a member of any ultrafilter.
Witness monotone_restriction(const FuncSpec& f, const FilterModel& model, std::uint64_t horizon,
                             WorkBudget& budget);

struct IntervalToOne {
  std::vector<BigInt> h;  // least m with f(m) = f(n)
  Witness witness;        // h nondecreasing on it
  FuncSpec g;             // interval-to-one step function agreeing with h on the witness
  bool verified;          // preimages of g are intervals on 0..horizon
};
IntervalToOne interval_to_one_reduce(const FuncSpec& f, const FilterModel& model,
                                     std::uint64_t horizon, WorkBudget& budget);

struct FUCheck {
  bool holds;
  std::optional<std::size_t> violation;  // index i with f(u_i) >= u_{i+1} - u_i
};
/// f(u_i) < u_{i+1} - u_i for consecutive elements of U up to the horizon.
/// NotNondecreasing if f is not nondecreasing on 0..horizon.
FUCheck check_fu_condition(const FuncSpec& f, const std::vector<std::uint64_t>& u,
                           std::uint64_t horizon, WorkBudget& budget);

/// Greedy u_{i+1} > 2 u_i inside the model's core, from its least positive element.
Witness doubling_set(const FilterModel& model, std::uint64_t horizon);
/// Greedy u_{i+1} > f(u_i) inside the model's core, from its least positive element.
Witness rapid_set(const FuncSpec& f, const FilterModel& model, std::uint64_t horizon,
                  WorkBudget& budget);

struct GPlus {
  /// g+(n) = max{x : g(x) = g(n)}; nullopt on the class still open at the horizon.
  std::vector<std::optional<std::uint64_t>> g_plus;
  /// Ascending enumeration of the range of g+ over complete classes.
  std::vector<std::uint64_t> enumerator;
  bool last_class_incomplete;
};
/// NotIntervalToOne if some class of g is not an interval on 0..horizon.
GPlus g_plus_and_enumerator(const FuncSpec& g, std::uint64_t horizon, WorkBudget& budget);

struct Dominating {
  std::vector<std::uint64_t> v;  // the set V used
  /// f_omega(m) = min{v' - v : v < v' in V, v >= m} for m = 0..(second to last of V)
  std::vector<std::uint64_t> f_omega;
  /// Per input function: least k with f_omega(m) > f_i(m) for all checked m >= k.
  std::vector<std::optional<std::uint64_t>> thresholds;
};
/// V defaults to the intersection of the U_i up to the horizon.
Dominating dominating_function(const std::vector<std::pair<FuncSpec, IndexSet>>& witnessed,
                               std::uint64_t horizon, WorkBudget& budget,
                               const std::optional<std::vector<std::uint64_t>>& v = std::nullopt);

}  // namespace asynum
