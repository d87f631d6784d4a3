#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asynum/budget.hpp"
#include "asynum/oracle.hpp"
#include "asynum/pointset.hpp"
#include "asynum/seqring.hpp"

namespace asynum {

enum class VerdictKind { Equal, Less, Greater, NotEqual, DependsOnOracle };
std::string_view to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind;
  /// The index set the verdict turns on: the zero set of the count
  /// difference, or the sign cell that decided Less/Greater.
  IndexSet decisive;
  std::optional<Certificate> certificate;
  SignPattern evidence;  // cells of s(n) = |Y_n| - |X_n|
  std::uint64_t horizon;

  /// Decided without any commitment, so it holds for every nonprincipal
  /// ultrafilter (the decisive set is cofinite, or the equality set finite).
  bool forced = false;

  /// Kind name; forced verdicts are prefixed with `Forced`.
  std::string kind_name() const;
  /// `verdict=<kind> D=<descriptor> cert=<descriptor|none> H=<n>`
  std::string line() const;
  /// Machine line followed by the evidence table.
  std::string report() const;
};

/// Equal iff {n : |X_n| = |Y_n|} is decided a member; otherwise the
/// direction when decided, else NotEqual or DependsOnOracle.
Verdict equinumerous(const PointSetExpr& x, const PointSetExpr& y, const FilterModel& model,
                     std::uint64_t horizon, WorkBudget& budget);
/// Sign of |Y_n| - |X_n| modulo the model: Less means X below Y.
Verdict compare(const PointSetExpr& x, const PointSetExpr& y, const FilterModel& model,
                std::uint64_t horizon, WorkBudget& budget);

struct Numerosity {
  CountingSequence representative;
  PointSetExpr provenance;
};
Numerosity numerosity(const PointSetExpr& x, std::uint64_t horizon, WorkBudget& budget);
/// {(0,..)} x A  ∪  {(1,..)} x B, padded to a common dimension.
Numerosity num_add(const Numerosity& a, const Numerosity& b, WorkBudget& budget);
Numerosity num_mul(const Numerosity& a, const Numerosity& b, WorkBudget& budget);
/// The disjoint union expression used by num_add.
PointSetExpr tagged_union(const PointSetExpr& a, const PointSetExpr& b);

struct SubsetRepresentative {
  PointSetExpr z;                          // finite part of Z built up to the horizon
  std::vector<std::uint64_t> checkpoints;  // m with |Z_m| = |X_m|
  Certificate certificate;                 // for {n : |X_n| <= |Y_n|}
  std::string continuation;                // how Z continues past the horizon
};
/// Z ⊆ Y with |Z_m| = |X_m| at every checkpoint up to the horizon.
/// PreconditionNotMember, HorizonTooSmall.
SubsetRepresentative build_subset_representative(const PointSetExpr& x, const PointSetExpr& y,
                                                 const FilterModel& model,
                                                 std::uint64_t horizon, WorkBudget& budget);

struct UCongruence {
  std::vector<std::pair<Point, Point>> sigma;  // truncate(X, w_last) -> truncate(Y, w_last)
  std::vector<std::uint64_t> witness;          // W: certificate up to the horizon
  bool verified;                               // sigma[X_n] = Y_n on W, checked literally
};
/// NotEquinumerous unless equinumerous(...) is Equal.
UCongruence build_u_congruence(const PointSetExpr& x, const PointSetExpr& y,
                               const FilterModel& model, std::uint64_t horizon,
                               WorkBudget& budget);

enum class Axiom { E0, E1, E2, E3, E4 };
std::string_view to_string(Axiom a);
Axiom parse_axiom(const std::string& name);

struct AxiomEntry {
  std::size_t sample;
  bool ok;
  bool vacuous;  // premise not met, nothing to check
  std::string detail;
};

struct AxiomReport {
  Axiom axiom;
  std::vector<AxiomEntry> entries;
  bool passed() const;
  std::string to_string() const;
};

/// Samples: pairs (A, B) for E0-E3 and 4-tuples (A, A', B, B') for E4.
/// E3 pairs are (A, {P}) or (A', A) with A' = {P} x A or A x {P}.
AxiomReport axiom_check(Axiom axiom, const std::vector<std::vector<PointSetExpr>>& samples,
                        const FilterModel& model, std::uint64_t horizon, WorkBudget& budget);

/// |E_n| = sum_{k=1..n} (n+1)^k = (n+1)((n+1)^n - 1)/n, and 0 at n = 0.
BigInt quasi_numerosity_e(std::uint64_t n);
CountingSequence e_sequence(std::uint64_t horizon);

}  // namespace asynum
