#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "asynum/periodic_set.hpp"
#include "asynum/seqring.hpp"

namespace asynum {

enum class Membership { Member, NonMember, Undecided };
std::string_view to_string(Membership m);

/// Witness that an index set belongs to every ultrafilter extending a model:
/// an intersection of commitments minus a finite set, contained in the set.
struct Certificate {
  PeriodicSet set;
  std::vector<std::size_t> used;  // indices of the commitments intersected
  /// No commitment needed: the set is cofinite.
  bool forced() const { return used.empty(); }
};

/// The Fréchet filter plus finitely many eventually periodic commitments.
/// Stands in for a nonprincipal ultrafilter; conclusions hold for every
/// ultrafilter extending the commitments. Values are immutable.
class FilterModel {
 public:
  explicit FilterModel(std::string name = "model");

  /// Throws FiniteSetCommitted, or InconsistentCommitment when the
  /// intersection with the existing commitments would be finite.
  FilterModel commit(const PeriodicSet& s) const;
  /// Only exact index sets can be committed (InvalidArgument otherwise).
  FilterModel commit(const IndexSet& s) const;

  Membership query(const IndexSet& s) const;
  /// Throws NotAMember unless query(s) is Member.
  Certificate decided_superset_witness(const IndexSet& s) const;

  const std::string& name() const { return name_; }
  const std::vector<PeriodicSet>& commitments() const { return commitments_; }
  const std::vector<std::string>& history() const { return history_; }
  /// Intersection of all commitments (N when there are none).
  const PeriodicSet& core() const { return core_; }

  /// Oracle file text: one `commit <descriptor>` line per commitment.
  std::string save() const;
  /// Replays the commits of an oracle file; failures name the line.
  static FilterModel load(const std::string& text, std::string name = "model");
  static FilterModel load_file(const std::string& path);
  void save_file(const std::string& path) const;

 private:
  std::string name_;
  std::vector<PeriodicSet> commitments_;
  std::vector<std::string> history_;
  PeriodicSet core_ = PeriodicSet::naturals();
};

}  // namespace asynum
