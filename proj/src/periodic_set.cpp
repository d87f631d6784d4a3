#include "asynum/periodic_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "asynum/error.hpp"

namespace asynum {

PeriodicSet::PeriodicSet() : PeriodicSet(1, {false}, 0, {}) {}

PeriodicSet::PeriodicSet(std::uint64_t modulus, std::vector<bool> residues,
                         std::uint64_t threshold, std::vector<Run> runs)
    : modulus_(modulus), residues_(std::move(residues)), threshold_(threshold),
      runs_(std::move(runs)) {
  normalize();
}

PeriodicSet PeriodicSet::empty() { return PeriodicSet(); }

PeriodicSet PeriodicSet::naturals() { return PeriodicSet(1, {true}, 0, {}); }

PeriodicSet PeriodicSet::singleton(std::uint64_t x) { return range(x, x); }

PeriodicSet PeriodicSet::of(const std::vector<std::uint64_t>& elements) {
  std::vector<std::uint64_t> sorted(elements);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Run> runs;
  for (auto x : sorted) {
    if (!runs.empty() && runs.back().second == x) runs.back().second = x + 1;
    else runs.emplace_back(x, x + 1);
  }
  const std::uint64_t t = sorted.empty() ? 0 : sorted.back() + 1;
  return PeriodicSet(1, {false}, t, std::move(runs));
}

PeriodicSet PeriodicSet::range(std::uint64_t a, std::uint64_t b) {
  if (a > b) return empty();
  return PeriodicSet(1, {false}, b + 1, {{a, b + 1}});
}

PeriodicSet PeriodicSet::progression(std::uint64_t a, std::uint64_t d) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "progression step must be >= 1");
  std::vector<bool> mask(d, false);
  mask[a % d] = true;
  return PeriodicSet(d, std::move(mask), a, {});
}

PeriodicSet PeriodicSet::residue_classes(std::uint64_t m,
                                         const std::vector<std::uint64_t>& residues) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "modulus must be >= 1");
  std::vector<bool> mask(m, false);
  for (auto r : residues) {
    if (r >= m)
      throw Error(ErrorCode::InvalidArgument,
                  "residue " + std::to_string(r) + " out of range for modulus " + std::to_string(m));
    mask[r] = true;
  }
  return PeriodicSet(m, std::move(mask), 0, {});
}

PeriodicSet PeriodicSet::from_descriptor(std::uint64_t m,
                                         const std::vector<std::uint64_t>& residues,
                                         const std::vector<std::uint64_t>& add,
                                         const std::vector<std::uint64_t>& remove) {
  return residue_classes(m, residues).unite(of(add)).minus(of(remove));
}

PeriodicSet PeriodicSet::from_parts(const std::vector<bool>& below, const std::vector<bool>& mask) {
  if (mask.empty()) throw Error(ErrorCode::InvalidArgument, "residue mask must be nonempty");
  std::vector<Run> runs;
  for (std::uint64_t i = 0; i < below.size(); ++i) {
    if (!below[i]) continue;
    if (!runs.empty() && runs.back().second == i)
      runs.back().second = i + 1;
    else
      runs.emplace_back(i, i + 1);
  }
  return PeriodicSet(mask.size(), mask, below.size(), std::move(runs));
}

std::uint64_t PeriodicSet::residue_count() const {
  return static_cast<std::uint64_t>(std::count(residues_.begin(), residues_.end(), true));
}

std::uint64_t PeriodicSet::pattern_count_below(std::uint64_t y) const {
  std::uint64_t partial = 0;
  const std::uint64_t rem = y % modulus_;
  for (std::uint64_t r = 0; r < rem; ++r) partial += residues_[r] ? 1 : 0;
  return (y / modulus_) * residue_count() + partial;
}

bool PeriodicSet::contains(std::uint64_t n) const {
  if (n >= threshold_) return pattern(n);
  auto it = std::upper_bound(runs_.begin(), runs_.end(), n,
                             [](std::uint64_t v, const Run& r) { return v < r.first; });
  if (it == runs_.begin()) return false;
  --it;
  return n < it->second;
}

std::uint64_t PeriodicSet::count_upto(std::uint64_t n) const {
  std::uint64_t total = 0;
  const std::uint64_t cut = n >= threshold_ ? threshold_ : n + 1;
  for (const auto& [lo, hi] : runs_) {
    if (lo >= cut) break;
    total += std::min(hi, cut) - lo;
  }
  if (n >= threshold_) total += pattern_count_below(n + 1) - pattern_count_below(threshold_);
  return total;
}

std::vector<std::uint64_t> PeriodicSet::elements_upto(std::uint64_t n) const {
  std::vector<std::uint64_t> out;
  for (const auto& [lo, hi] : runs_) {
    for (std::uint64_t x = lo; x < hi && x <= n; ++x) out.push_back(x);
    if (hi > n) break;
  }
  for (std::uint64_t x = threshold_; x <= n; ++x) {
    if (pattern(x)) out.push_back(x);
    if (x == UINT64_MAX) break;
  }
  return out;
}

std::optional<std::uint64_t> PeriodicSet::next_member(std::uint64_t n) const {
  for (const auto& [lo, hi] : runs_) {
    if (hi <= n) continue;
    return std::max(lo, n);
  }
  if (residue_count() == 0) return std::nullopt;
  for (std::uint64_t x = std::max(n, threshold_);; ++x)
    if (pattern(x)) return x;
}

bool PeriodicSet::is_empty() const { return runs_.empty() && residue_count() == 0; }

bool PeriodicSet::is_finite() const { return residue_count() == 0; }

bool PeriodicSet::is_cofinite() const { return residue_count() == modulus_; }

std::optional<std::uint64_t> PeriodicSet::max_element() const {
  if (!is_finite() || runs_.empty()) return std::nullopt;
  return runs_.back().second - 1;
}

std::vector<PeriodicSet::Run> PeriodicSet::runs_upto(std::uint64_t t) const {
  std::vector<Run> out = runs_;
  auto push = [&out](std::uint64_t lo, std::uint64_t hi) {
    if (lo >= hi) return;
    if (!out.empty() && out.back().second == lo) out.back().second = hi;
    else out.emplace_back(lo, hi);
  };
  if (t <= threshold_) return out;
  const std::uint64_t rc = residue_count();
  if (rc == 0) return out;
  if (rc == modulus_) {
    push(threshold_, t);
    return out;
  }
  std::vector<Run> period_runs;
  for (std::uint64_t r = 0; r < modulus_; ++r) {
    if (!residues_[r]) continue;
    if (!period_runs.empty() && period_runs.back().second == r) period_runs.back().second = r + 1;
    else period_runs.emplace_back(r, r + 1);
  }
  for (std::uint64_t base = threshold_ - threshold_ % modulus_; base < t; base += modulus_) {
    for (const auto& [lo, hi] : period_runs) {
      push(std::max(base + lo, threshold_), std::min(base + hi, t));
    }
  }
  return out;
}

void PeriodicSet::normalize() {
  // Clip and merge the explicit runs.
  std::vector<Run> merged;
  for (auto [lo, hi] : runs_) {
    hi = std::min(hi, threshold_);
    if (lo >= hi) continue;
    if (!merged.empty() && merged.back().second >= lo)
      merged.back().second = std::max(merged.back().second, hi);
    else merged.emplace_back(lo, hi);
  }
  runs_ = std::move(merged);

  // Least period of the residue pattern.
  for (std::uint64_t p = 1; p < modulus_; ++p) {
    if (modulus_ % p != 0) continue;
    bool periodic = true;
    for (std::uint64_t r = p; r < modulus_ && periodic; ++r)
      periodic = residues_[r] == residues_[r % p];
    if (periodic) {
      residues_.resize(p);
      modulus_ = p;
      break;
    }
  }

  // Least threshold: absorb the explicit tail that already follows the pattern.
  const std::uint64_t rc = residue_count();
  while (threshold_ > 0) {
    const bool member = !runs_.empty() && runs_.back().second == threshold_;
    const std::uint64_t start =
        member ? runs_.back().first : (runs_.empty() ? 0 : runs_.back().second);
    if ((member && rc == modulus_) || (!member && rc == 0)) {
      threshold_ = start;
      if (member) runs_.pop_back();
      continue;
    }
    std::uint64_t x = threshold_;
    bool mismatch = false;
    while (x > start && threshold_ - x < modulus_) {
      --x;
      if (pattern(x) != member) {
        mismatch = true;
        break;
      }
    }
    if (mismatch) {
      threshold_ = x + 1;
      if (member) runs_.back().second = threshold_;
      break;
    }
    threshold_ = start;
    if (member) runs_.pop_back();
  }
}

template <class Op>
PeriodicSet PeriodicSet::combine(const PeriodicSet& a, const PeriodicSet& b, Op op) {
  const std::uint64_t t = std::max(a.threshold_, b.threshold_);
  const std::uint64_t m = std::lcm(a.modulus_, b.modulus_);
  const auto ra = a.runs_upto(t);
  const auto rb = b.runs_upto(t);

  std::vector<std::uint64_t> cuts{0, t};
  for (const auto& [lo, hi] : ra) cuts.insert(cuts.end(), {lo, hi});
  for (const auto& [lo, hi] : rb) cuts.insert(cuts.end(), {lo, hi});
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Run> runs;
  std::size_t ia = 0, ib = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const std::uint64_t lo = cuts[i], hi = cuts[i + 1];
    if (lo >= t) break;
    while (ia < ra.size() && ra[ia].second <= lo) ++ia;
    while (ib < rb.size() && rb[ib].second <= lo) ++ib;
    const bool in_a = ia < ra.size() && ra[ia].first <= lo;
    const bool in_b = ib < rb.size() && rb[ib].first <= lo;
    if (!op(in_a, in_b)) continue;
    if (!runs.empty() && runs.back().second == lo) runs.back().second = hi;
    else runs.emplace_back(lo, hi);
  }

  std::vector<bool> mask(m);
  for (std::uint64_t r = 0; r < m; ++r) mask[r] = op(a.residues_[r % a.modulus_], b.residues_[r % b.modulus_]);
  return PeriodicSet(m, std::move(mask), t, std::move(runs));
}

PeriodicSet PeriodicSet::complement() const {
  return combine(*this, naturals(), [](bool x, bool) { return !x; });
}

PeriodicSet PeriodicSet::intersect(const PeriodicSet& o) const {
  return combine(*this, o, [](bool x, bool y) { return x && y; });
}

PeriodicSet PeriodicSet::unite(const PeriodicSet& o) const {
  return combine(*this, o, [](bool x, bool y) { return x || y; });
}

PeriodicSet PeriodicSet::minus(const PeriodicSet& o) const {
  return combine(*this, o, [](bool x, bool y) { return x && !y; });
}

std::vector<std::uint64_t> PeriodicSet::residues() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < modulus_; ++r)
    if (residues_[r]) out.push_back(r);
  return out;
}

std::vector<std::uint64_t> PeriodicSet::added() const {
  std::vector<std::uint64_t> out;
  for (const auto& [lo, hi] : runs_)
    for (std::uint64_t x = lo; x < hi; ++x)
      if (!pattern(x)) out.push_back(x);
  return out;
}

std::vector<std::uint64_t> PeriodicSet::removed() const {
  std::vector<std::uint64_t> out;
  std::uint64_t x = 0;
  for (const auto& [lo, hi] : runs_) {
    for (; x < lo; ++x)
      if (pattern(x)) out.push_back(x);
    x = hi;
  }
  for (; x < threshold_; ++x)
    if (pattern(x)) out.push_back(x);
  return out;
}

QuasiPolynomial PeriodicSet::counting_tail() const {
  std::uint64_t prefix = 0;
  for (const auto& [lo, hi] : runs_) prefix += hi - lo;
  const BigRational base = BigRational(big(prefix)) - BigRational(big(pattern_count_below(threshold_)));
  const BigRational slope(big(residue_count()), big(modulus_));
  std::vector<Polynomial> pieces;
  pieces.reserve(modulus_);
  for (std::uint64_t rho = 0; rho < modulus_; ++rho) {
    const std::uint64_t s = (rho + 1) % modulus_;
    std::uint64_t cum = 0;
    for (std::uint64_t r = 0; r < s; ++r) cum += residues_[r] ? 1 : 0;
    // count(n) = prefix - F(t) + |R| * (n + 1 - s) / m + cum(s)
    BigRational constant = base + slope * (1 - BigRational(big(s))) + BigRational(big(cum));
    pieces.push_back(Polynomial::linear(slope, constant));
  }
  return QuasiPolynomial(modulus_, std::move(pieces), threshold_);
}

namespace {

std::string join(const std::vector<std::uint64_t>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  return out.str();
}

std::vector<std::uint64_t> split_numbers(const std::string& s, std::size_t offset) {
  std::vector<std::uint64_t> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    std::string item = s.substr(pos, comma - pos);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(offset + pos, "expected a natural number, got '" + item + "'");
    try {
      out.push_back(std::stoull(item));
    } catch (const std::out_of_range&) {
      throw ParseError(offset + pos, "number out of range: " + item);
    }
    pos = comma + 1;
  }
  return out;
}

}  // namespace

std::string PeriodicSet::descriptor() const {
  std::ostringstream out;
  out << "periodic mod=" << modulus_ << " residues=" << join(residues());
  const auto add = added();
  const auto rem = removed();
  if (!add.empty()) out << " add=" << join(add);
  if (!rem.empty()) out << " remove=" << join(rem);
  return out.str();
}

PeriodicSet parse_periodic_descriptor(const std::string& text) {
  std::uint64_t m = 0;
  bool have_mod = false;
  std::vector<std::uint64_t> residues, add, remove;
  std::size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string token = text.substr(pos, end - pos);
    if (first && token == "periodic") {
      first = false;
      pos = end;
      continue;
    }
    first = false;
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw ParseError(pos, "expected key=value, got '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    const std::size_t voff = pos + eq + 1;
    if (key == "mod") {
      auto v = split_numbers(value, voff);
      if (v.size() != 1 || v[0] == 0) throw ParseError(voff, "mod must be a single number >= 1");
      m = v[0];
      have_mod = true;
    } else if (key == "residues") {
      residues = split_numbers(value, voff);
    } else if (key == "add") {
      add = split_numbers(value, voff);
    } else if (key == "remove") {
      remove = split_numbers(value, voff);
    } else {
      throw ParseError(pos, "unknown key '" + key + "' (expected mod, residues, add, remove)");
    }
    pos = end;
  }
  if (!have_mod) throw ParseError(text.size(), "missing mod=<m>");
  for (auto r : residues)
    if (r >= m) throw ParseError(0, "residue " + std::to_string(r) + " >= modulus");
  return PeriodicSet::from_descriptor(m, residues, add, remove);
}

}  // namespace asynum
