#include "asynum/ramsey.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>

#include "asynum/error.hpp"

namespace asynum {

FiniteNatSet::FiniteNatSet(std::vector<std::uint64_t> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

FiniteNatSet FiniteNatSet::parse(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  const auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  const bool braced = i < text.size() && text[i] == '{';
  if (braced) ++i;
  skip();
  bool expect_number = !(braced && i < text.size() && text[i] == '}');
  while (expect_number) {
    skip();
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw ParseError(start, "expected a natural number");
    out.push_back(std::stoull(text.substr(start, i - start)));
    skip();
    if (i < text.size() && text[i] == ',') {
      ++i;
    } else {
      expect_number = false;
    }
  }
  if (braced) {
    if (i >= text.size() || text[i] != '}') throw ParseError(i, "expected ',' or '}'");
    ++i;
  }
  skip();
  if (i != text.size()) throw ParseError(i, "unexpected trailing input");
  return FiniteNatSet(std::move(out));
}

FiniteNatSet FiniteNatSet::subset(std::uint64_t mask) const {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (mask >> i & 1) out.push_back(elements_[i]);
  return FiniteNatSet(std::move(out));
}

std::string FiniteNatSet::to_string() const {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) out << (i ? "," : "") << elements_[i];
  out << "}";
  return out.str();
}

bool in_l(const FiniteNatSet& a) {
  if (a.empty()) throw Error(ErrorCode::EmptySet, "L is defined on nonempty sets");
  return a.min() + 2 < a.size();
}

std::string Coloring::to_string() const {
  std::ostringstream out;
  std::size_t e = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j, ++e)
      out << (e ? " " : "") << vertices[i] << "-" << vertices[j] << ":" << colors[e];
  return out.str();
}

namespace {

// Pairs of {0..s-1} in lexicographic order.
struct EdgeIndex {
  explicit EdgeIndex(std::size_t s) : s(s), id(s * s, 0) {
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = i + 1; j < s; ++j) {
        id[i * s + j] = count;
        ends.emplace_back(i, j);
        ++count;
      }
  }
  std::uint64_t mask_of(std::uint64_t vertex_mask) const {
    std::uint64_t m = 0;
    for (const auto& [i, j] : ends)
      if ((vertex_mask >> i & 1) && (vertex_mask >> j & 1)) m |= 1ULL << id[i * s + j];
    return m;
  }
  std::size_t s;
  std::vector<std::size_t> id;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  std::size_t count = 0;
};

void check_size(const FiniteNatSet& a) {
  if (a.size() > kMaxRamseyVertices)
    throw Error(ErrorCode::WorkBudgetExceeded,
                "coloring search over " + std::to_string(a.size()) + " vertices (" +
                    std::to_string(a.size() * (a.size() - 1) / 2) +
                    " pairs) exceeds the supported bound of " +
                    std::to_string(kMaxRamseyVertices) + " vertices");
}

bool homogeneous(std::uint64_t edge_mask, std::uint64_t red) {
  return (edge_mask & red) == 0 || (edge_mask & red) == edge_mask;
}

Coloring make_coloring(const FiniteNatSet& a, std::size_t edges, std::uint64_t red) {
  Coloring c{a.elements(), std::vector<int>(edges)};
  for (std::size_t e = 0; e < edges; ++e) c.colors[e] = static_cast<int>(red >> e & 1);
  return c;
}

// Throws if some member is homogeneous under the coloring.
void verify_counterexample(const EdgeIndex& idx, const std::vector<std::uint64_t>& member_edges,
                           std::uint64_t red) {
  for (auto m : member_edges)
    if (homogeneous(m, red))
      throw Error(ErrorCode::InvalidArgument, "internal: counterexample has a homogeneous member");
  (void)idx;
}

struct PrunedSearch {
  std::size_t edges;
  std::vector<std::uint64_t> members;               // edge masks of minimal members
  std::vector<std::vector<std::size_t>> by_edge;    // members containing each edge
  WorkBudget& budget;

  // True if assigning edge e closed off a homogeneous member.
  bool covered(std::size_t e, std::uint64_t red, std::uint64_t assigned) const {
    for (auto i : by_edge[e]) {
      const auto m = members[i];
      if ((m & assigned) == m && homogeneous(m, red)) return true;
    }
    return false;
  }

  bool any_alive(std::uint64_t red, std::uint64_t assigned) const {
    const std::uint64_t blue = assigned & ~red;
    for (auto m : members)
      if ((m & red) == 0 || (m & blue) == 0) return true;
    return false;
  }

  // Depth-first, colour 0 first. Returns the lex-least counterexample below
  // the node given by (next edge, red, assigned), if any.
  std::optional<std::uint64_t> dfs(std::size_t e, std::uint64_t red, std::uint64_t assigned) const {
    budget.charge(1, "coloring search");
    if (!any_alive(red, assigned)) return red;  // completing with colour 0 is lex-least
    if (e == edges) return red;
    for (int c = 0; c < 2; ++c) {
      const std::uint64_t r = c ? red | (1ULL << e) : red;
      const std::uint64_t a = assigned | (1ULL << e);
      if (covered(e, r, a)) continue;
      if (auto found = dfs(e + 1, r, a)) return found;
    }
    return std::nullopt;
  }
};

}  // namespace

std::vector<std::uint64_t> RamseyEngine::minimal_members(const Family& x, const FiniteNatSet& a,
                                                         WorkBudget& budget) {
  const std::size_t s = a.size();
  std::vector<bool> member(std::size_t{1} << s, false);
  for (std::uint64_t mask = 1; mask < member.size(); ++mask)
    member[mask] = in_family(x, a.subset(mask), budget);
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 1; mask < member.size(); ++mask) {
    if (!member[mask]) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < s && minimal; ++i)
      if ((mask >> i & 1) && member[mask ^ (1ULL << i)]) minimal = false;
    if (minimal) out.push_back(mask);
  }
  return out;
}

bool RamseyEngine::in_family(const Family& x, const FiniteNatSet& a, WorkBudget& budget) {
  if (a.size() < 3 + x.depth) return false;  // members of ρ^n L have at least n+3 elements
  if (x.depth == 0) return in_l(a);
  const auto key = std::make_pair(x.depth, a.elements());
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  const bool result = in_rho(Family{x.depth - 1}, a, budget).member;
  std::lock_guard<std::mutex> lock(mutex_);
  memo_.emplace(key, result);
  return result;
}

RhoResult RamseyEngine::in_rho(const Family& x, const FiniteNatSet& a, WorkBudget& budget) {
  check_size(a);
  if (strategy_ == Strategy::Naive) {
    std::vector<bool> table(std::size_t{1} << a.size(), false);
    for (std::uint64_t mask = 1; mask < table.size(); ++mask)
      table[mask] = in_family(x, a.subset(mask), budget);
    return search_naive(a, table, budget);
  }
  return search_pruned(a, minimal_members(x, a, budget), budget);
}

RhoResult RamseyEngine::search_pruned(const FiniteNatSet& a,
                                      const std::vector<std::uint64_t>& minimal,
                                      WorkBudget& budget) const {
  const EdgeIndex idx(a.size());
  PrunedSearch search{idx.count, {}, std::vector<std::vector<std::size_t>>(idx.count), budget};
  for (auto vm : minimal) {
    const auto em = idx.mask_of(vm);
    if (em == 0) return {true, std::nullopt};  // homogeneous under every coloring
    for (std::size_t e = 0; e < idx.count; ++e)
      if (em >> e & 1) search.by_edge[e].push_back(search.members.size());
    search.members.push_back(em);
  }
  if (search.members.empty()) return {false, make_coloring(a, idx.count, 0)};
  // Colour swapping maps counterexamples to counterexamples, so edge 0 is
  // fixed to colour 0. The next `split` edges are enumerated as independent
  // tasks in lexicographic order; the first task with a counterexample holds
  // the lex-least one.
  const std::size_t split = std::min<std::size_t>(idx.count - 1, parallel_ ? 10 : 0);
  const std::int64_t tasks = std::int64_t{1} << split;
  std::vector<std::optional<std::uint64_t>> found(static_cast<std::size_t>(tasks));
  std::atomic<std::int64_t> best{tasks};
  std::atomic<bool> failed{false};
  std::string failure;
  std::optional<ErrorCode> failure_code;
#pragma omp parallel for schedule(dynamic) if (parallel_)
  for (std::int64_t t = 0; t < tasks; ++t) {
    if (t > best.load() || failed.load()) continue;
    try {
      std::uint64_t red = 0, assigned = 1;  // edge 0 assigned colour 0
      bool dead = false;
      for (std::size_t i = 0; i < split && !dead; ++i) {
        const std::size_t e = i + 1;
        if (t >> (split - 1 - i) & 1) red |= 1ULL << e;
        assigned |= 1ULL << e;
        dead = search.covered(e, red, assigned);
      }
      if (dead || search.covered(0, red, assigned)) continue;
      auto r = search.dfs(split + 1, red, assigned);
      if (r) {
        found[static_cast<std::size_t>(t)] = r;
        std::int64_t cur = best.load();
        while (t < cur && !best.compare_exchange_weak(cur, t)) {
        }
      }
    } catch (const Error& e) {
#pragma omp critical(ramsey_failure)
      {
        if (!failed.exchange(true)) {
          failure = e.what();
          failure_code = e.code();
        }
      }
    }
  }
  if (failed) throw Error(*failure_code, failure);
  const auto b = best.load();
  if (b == tasks) return {true, std::nullopt};
  const std::uint64_t red = *found[static_cast<std::size_t>(b)];
  verify_counterexample(idx, search.members, red);
  return {false, make_coloring(a, idx.count, red)};
}

RhoResult RamseyEngine::search_naive(const FiniteNatSet& a, const std::vector<bool>& member_table,
                                     WorkBudget& budget) const {
  const EdgeIndex idx(a.size());
  std::vector<std::uint64_t> member_edges;
  for (std::uint64_t mask = 1; mask < member_table.size(); ++mask)
    if (member_table[mask]) member_edges.push_back(idx.mask_of(mask));
  const std::uint64_t total = 1ULL << idx.count;
  for (std::uint64_t code = 0; code < total; ++code) {
    budget.charge(member_edges.size() + 1, "naive coloring enumeration");
    // Edge 0 is the most significant position of the enumeration order.
    std::uint64_t red = 0;
    for (std::size_t e = 0; e < idx.count; ++e)
      if (code >> (idx.count - 1 - e) & 1) red |= 1ULL << e;
    bool hit = false;
    for (auto m : member_edges)
      if (homogeneous(m, red)) {
        hit = true;
        break;
      }
    if (!hit) return {false, make_coloring(a, idx.count, red)};
  }
  return {true, std::nullopt};
}

std::uint64_t RamseyEngine::nu(const FiniteNatSet& a, WorkBudget& budget) {
  std::uint64_t n = 0;
  while (!a.empty() && in_family(Family{n}, a, budget)) ++n;
  return n;
}

std::uint64_t initial_segment_in(const Family& x, const std::vector<std::uint64_t>& s,
                                 WorkBudget& budget) {
  RamseyEngine engine;
  std::vector<std::uint64_t> prefix;
  for (auto v : s) {
    prefix.push_back(v);
    if (engine.in_family(x, FiniteNatSet(prefix), budget)) return prefix.size();
  }
  throw Error(ErrorCode::NoWitnessWithinHorizon,
              "no initial segment of the given " + std::to_string(s.size()) + " elements is in the family");
}

std::uint64_t initial_segment_in(const Family& x, const PeriodicSet& s, WorkBudget& budget) {
  RamseyEngine engine;
  std::vector<std::uint64_t> prefix;
  auto next = s.next_member(0);
  while (next) {
    budget.charge(1, "initial segment search");
    prefix.push_back(*next);
    if (engine.in_family(x, FiniteNatSet(prefix), budget)) return prefix.size();
    if (*next == UINT64_MAX) break;
    next = s.next_member(*next + 1);
  }
  throw Error(ErrorCode::NoWitnessWithinHorizon, "the set is finite and has no initial segment in the family");
}

std::vector<Interval> parse_partition(const std::string& text) {
  std::vector<Interval> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string kw;
    if (!(words >> kw)) continue;
    Interval iv{};
    std::string extra;
    if (kw != "interval" || !(words >> iv.lo >> iv.hi) || (words >> extra))
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(lineno) + ": expected 'interval <lo> <hi>'");
    out.push_back(iv);
  }
  validate_partition(out);
  return out;
}

void validate_partition(const std::vector<Interval>& partition) {
  std::uint64_t expect = 0;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    const auto& iv = partition[i];
    if (iv.lo != expect || iv.hi < iv.lo)
      throw Error(ErrorCode::InvalidArgument,
                  "interval " + std::to_string(i) + " must be [" + std::to_string(expect) +
                      ", hi] with hi >= lo");
    expect = iv.hi + 1;
  }
}

std::vector<std::optional<std::uint64_t>> gamma(const PointSetExpr& x,
                                                const std::vector<Interval>& partition,
                                                std::uint64_t entry_budget) {
  if (x.dimension() != 1)
    throw Error(ErrorCode::DimensionMismatch, "gamma needs a one-dimensional set");
  validate_partition(partition);
  RamseyEngine engine;
  std::vector<std::optional<std::uint64_t>> out;
  for (const auto& iv : partition) {
    std::vector<std::uint64_t> part;
    WorkBudget budget(entry_budget);
    try {
      for (std::uint64_t v = iv.lo; v <= iv.hi; ++v) {
        budget.charge(1, "interval scan");
        if (contains(x, Point{{v}})) part.push_back(v);
      }
      out.push_back(engine.nu(FiniteNatSet(part), budget));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::WorkBudgetExceeded) throw;
      out.push_back(std::nullopt);
    }
  }
  return out;
}

LargenessReport is_large_at_horizon(const PointSetExpr& x, const std::vector<Interval>& partition,
                                    const FilterModel& model, std::uint64_t k,
                                    std::uint64_t entry_budget, IndexSet::TailTag assumed_tail) {
  if (partition.empty()) throw Error(ErrorCode::HorizonTooSmall, "empty partition");
  const auto g = gamma(x, partition, entry_budget);
  std::vector<bool> bits(g.size(), false);
  LargenessReport report{k, PeriodicSet::empty(), Membership::Undecided, {}};
  for (std::uint64_t n = 0; n < g.size(); ++n) {
    if (!g[n]) {
      report.unknown.push_back(n);
      continue;
    }
    // γ > √n + k  <=>  γ - k > 0 and (γ - k)^2 > n
    if (*g[n] > k) {
      const BigInt d = big(*g[n] - k);
      bits[n] = d * d > big(n);
    }
  }
  auto plan = CountingPlan::build(x);
  const bool empty_set = plan && plan->cells().empty();
  report.index_set = IndexSet::explicit_set(bits, empty_set ? IndexSet::TailTag::Finite : assumed_tail);
  report.verdict = model.query(report.index_set);
  return report;
}

}  // namespace asynum
