#include "asynum/oracle.hpp"

#include <fstream>
#include <sstream>

#include "asynum/error.hpp"

namespace asynum {

std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::Member: return "Member";
    case Membership::NonMember: return "NonMember";
    case Membership::Undecided: return "Undecided";
  }
  return "Undecided";
}

FilterModel::FilterModel(std::string name) : name_(std::move(name)) {}

FilterModel FilterModel::commit(const PeriodicSet& s) const {
  if (s.is_finite())
    throw Error(ErrorCode::FiniteSetCommitted, "cannot commit finite set " + s.descriptor());
  // The intersection of all commitments lies inside every sub-intersection,
  // so checking it alone gives the finite intersection property.
  PeriodicSet next = core_.intersect(s);
  if (next.is_finite())
    throw Error(ErrorCode::InconsistentCommitment,
                s.descriptor() + " meets the committed sets in a finite set");
  FilterModel out(*this);
  out.commitments_.push_back(s);
  out.history_.push_back("commit " + s.descriptor());
  out.core_ = std::move(next);
  return out;
}

FilterModel FilterModel::commit(const IndexSet& s) const {
  if (!s.is_exact())
    throw Error(ErrorCode::InvalidArgument,
                "only eventually periodic sets can be committed, got " + s.descriptor());
  return commit(s.exact());
}

Membership FilterModel::query(const IndexSet& s) const {
  if (!s.is_exact()) return Membership::Undecided;
  const PeriodicSet& x = s.exact();
  if (core_.minus(x).is_finite()) return Membership::Member;
  if (core_.intersect(x).is_finite()) return Membership::NonMember;
  return Membership::Undecided;
}

namespace {

// Calls f on each k-subset of {0..n-1} in lexicographic order until f returns true.
template <class F>
bool for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (f(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Certificate FilterModel::decided_superset_witness(const IndexSet& s) const {
  if (query(s) != Membership::Member)
    throw Error(ErrorCode::NotAMember, s.descriptor() + " is not decided as a member");
  const PeriodicSet& x = s.exact();
  const std::size_t n = commitments_.size();
  const std::size_t widest = n <= 12 ? n : 3;
  std::optional<Certificate> found;
  for (std::size_t k = 0; k <= widest && !found; ++k) {
    for_each_subset(n, k, [&](const std::vector<std::size_t>& idx) {
      PeriodicSet inter = PeriodicSet::naturals();
      for (auto i : idx) inter = inter.intersect(commitments_[i]);
      if (!inter.minus(x).is_finite()) return false;
      found = Certificate{inter.intersect(x), idx};
      return true;
    });
  }
  if (!found) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    found = Certificate{core_.intersect(x), all};
  }
  return *found;
}

std::string FilterModel::save() const {
  std::ostringstream out;
  out << "# " << name_ << "\n";
  for (const auto& c : commitments_) out << "commit " << c.descriptor() << "\n";
  return out.str();
}

FilterModel FilterModel::load(const std::string& text, std::string name) {
  FilterModel model(std::move(name));
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    line = line.substr(start);
    try {
      if (line.rfind("commit", 0) != 0 || (line.size() > 6 && !isspace(line[6])))
        throw Error(ErrorCode::ParseError, "expected 'commit <descriptor>'");
      model = model.commit(parse_periodic_descriptor(line.substr(6)));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return model;
}

FilterModel FilterModel::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open oracle file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load(buf.str(), path);
}

void FilterModel::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write oracle file " + path);
  out << save();
}

}  // namespace asynum
