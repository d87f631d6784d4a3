#include "asynum/qselect.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "asynum/error.hpp"

namespace asynum {

struct FuncSpec::Node {
  enum class Op {
    Var, Const, Add, Sub, Mul, Neg, FloorDiv, Mod, Abs, Pow2, Isqrt, Compose, F0, F1, F2, Ack,
    Tilde, Table
  };
  Op op;
  BigInt value;                    // Const
  std::vector<BigInt> table;       // Table
  std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using Node = FuncSpec::Node;
using NodePtr = std::shared_ptr<const Node>;
using Op = Node::Op;

constexpr std::uint64_t kMaxShift = 1u << 24;

NodePtr make(Op op, std::vector<NodePtr> args = {}, BigInt value = 0) {
  return std::make_shared<const Node>(Node{op, std::move(value), {}, std::move(args)});
}

BigInt pow2_of(const BigInt& e, WorkBudget& budget) {
  std::uint64_t k = 0;
  if (sgn(e) < 0) throw Error(ErrorCode::OutOfDomain, "pow2 of a negative exponent");
  if (!to_u64(e, k) || k > kMaxShift)
    throw Error(ErrorCode::WorkBudgetExceeded, "pow2 exponent " + e.get_str() + " too large");
  budget.charge(k / 64 + 1, "pow2");
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (sgn(b) == 0) throw Error(ErrorCode::OutOfDomain, "division by zero");
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt floor_mod(const BigInt& a, const BigInt& b) {
  if (sgn(b) == 0) throw Error(ErrorCode::OutOfDomain, "mod by zero");
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt eval(const Node& node, const BigInt& n, WorkBudget& budget);

BigInt apply_tilde(const Node& f, const BigInt& n, WorkBudget& budget) {
  BigInt times = eval(f, n, budget);
  if (sgn(times) < 0) throw Error(ErrorCode::OutOfDomain, "tilde iteration count is negative");
  BigInt x = n;
  for (BigInt i = 0; i < times; ++i) {
    budget.charge(1, "tilde");
    x = eval(f, x, budget);
  }
  return x;
}

BigInt eval(const Node& node, const BigInt& n, WorkBudget& budget) {
  budget.charge(1, "function evaluation");
  const auto arg = [&](std::size_t i) { return eval(*node.args[i], n, budget); };
  switch (node.op) {
    case Op::Var: return n;
    case Op::Const: return node.value;
    case Op::Add: return arg(0) + arg(1);
    case Op::Sub: return arg(0) - arg(1);
    case Op::Mul: return arg(0) * arg(1);
    case Op::Neg: return -arg(0);
    case Op::FloorDiv: return floor_div(arg(0), arg(1));
    case Op::Mod: return floor_mod(arg(0), arg(1));
    case Op::Abs: return abs(arg(0));
    case Op::Pow2: return pow2_of(arg(0), budget);
    case Op::Isqrt: {
      BigInt v = arg(0);
      if (sgn(v) < 0) throw Error(ErrorCode::OutOfDomain, "isqrt of a negative value");
      BigInt r;
      mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
      return r;
    }
    case Op::Compose: return eval(*node.args[0], arg(1), budget);
    case Op::F0: return eval_f012(0, arg(0));
    case Op::F1: return eval_f012(1, arg(0));
    case Op::F2: return eval_f012(2, arg(0));
    case Op::Ack: {
      BigInt m = arg(0);
      std::uint64_t mm = 0;
      if (!to_u64(m, mm)) throw Error(ErrorCode::OutOfDomain, "ack level must be a natural");
      return ackermann(mm, arg(1), budget);
    }
    case Op::Tilde: return apply_tilde(*node.args[0], n, budget);
    case Op::Table: {
      std::uint64_t i = 0;
      if (!to_u64(n, i) || i >= node.table.size())
        throw Error(ErrorCode::OutOfDomain, "table has no entry at " + n.get_str());
      return node.table[i];
    }
  }
  return 0;
}

void print(const Node& node, std::ostream& out) {
  const auto call = [&](const char* name) {
    out << name << "(";
    for (std::size_t i = 0; i < node.args.size(); ++i) {
      if (i) out << ", ";
      print(*node.args[i], out);
    }
    out << ")";
  };
  const auto infix = [&](const char* op) {
    out << "(";
    print(*node.args[0], out);
    out << " " << op << " ";
    print(*node.args[1], out);
    out << ")";
  };
  switch (node.op) {
    case Op::Var: out << "n"; return;
    case Op::Const: out << node.value.get_str(); return;
    case Op::Add: infix("+"); return;
    case Op::Sub: infix("-"); return;
    case Op::Mul: infix("*"); return;
    case Op::Neg: out << "-"; print(*node.args[0], out); return;
    case Op::FloorDiv: call("floor_div"); return;
    case Op::Mod: call("mod"); return;
    case Op::Abs: call("abs"); return;
    case Op::Pow2: call("pow2"); return;
    case Op::Isqrt: call("isqrt"); return;
    case Op::Compose: call("compose"); return;
    case Op::F0: call("f0"); return;
    case Op::F1: call("f1"); return;
    case Op::F2: call("f2"); return;
    case Op::Ack: call("ack"); return;
    case Op::Tilde: call("tilde"); return;
    case Op::Table:
      out << "table(";
      for (std::size_t i = 0; i < node.table.size(); ++i) out << (i ? ", " : "") << node.table[i].get_str();
      out << ")";
      return;
  }
}

class FuncParser {
 public:
  explicit FuncParser(const std::string& text) : s_(text) {}

  NodePtr parse() {
    auto e = expr();
    skip();
    if (pos_ != s_.size()) fail("expected one of: + - * or end of input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  NodePtr expr() {
    auto lhs = term();
    while (true) {
      if (eat('+')) lhs = make(Op::Add, {lhs, term()});
      else if (eat('-')) lhs = make(Op::Sub, {lhs, term()});
      else return lhs;
    }
  }

  NodePtr term() {
    auto lhs = unary();
    while (eat('*')) lhs = make(Op::Mul, {lhs, unary()});
    return lhs;
  }

  NodePtr unary() {
    if (eat('-')) return make(Op::Neg, {unary()});
    return primary();
  }

  BigInt integer() {
    skip();
    const std::size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    BigInt v(s_.substr(digits, pos_ - digits));
    return neg ? BigInt(-v) : v;
  }

  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("expected one of: n, integer, '(', function name");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return make(Op::Const, {}, integer());
    if (eat('(')) {
      auto e = expr();
      expect(')');
      return e;
    }
    if (!std::isalpha(static_cast<unsigned char>(c)))
      fail("expected one of: n, integer, '(', function name");
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    const std::string name = s_.substr(start, pos_ - start);
    if (name == "n") return make(Op::Var);
    static const std::map<std::string, std::pair<Op, int>> functions = {
        {"floor_div", {Op::FloorDiv, 2}}, {"mod", {Op::Mod, 2}},   {"abs", {Op::Abs, 1}},
        {"pow2", {Op::Pow2, 1}},          {"isqrt", {Op::Isqrt, 1}}, {"compose", {Op::Compose, 2}},
        {"f0", {Op::F0, 1}},              {"f1", {Op::F1, 1}},     {"f2", {Op::F2, 1}},
        {"ack", {Op::Ack, 2}},            {"tilde", {Op::Tilde, 1}}};
    if (name == "table") {
      expect('(');
      std::vector<BigInt> values{integer()};
      while (eat(',')) values.push_back(integer());
      expect(')');
      auto node = std::make_shared<Node>(Node{Op::Table, 0, std::move(values), {}});
      return node;
    }
    auto it = functions.find(name);
    if (it == functions.end()) {
      pos_ = start;
      fail("unknown function '" + name + "'");
    }
    expect('(');
    std::vector<NodePtr> args{expr()};
    for (int i = 1; i < it->second.second; ++i) {
      expect(',');
      args.push_back(expr());
    }
    expect(')');
    return make(it->second.first, std::move(args));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

FuncSpec FuncSpec::parse(const std::string& text) { return FuncSpec(FuncParser(text).parse()); }

FuncSpec FuncSpec::table(std::vector<BigInt> values) {
  if (values.empty()) throw Error(ErrorCode::InvalidArgument, "table needs at least one value");
  return FuncSpec(std::make_shared<Node>(Node{Op::Table, 0, std::move(values), {}}));
}

BigInt FuncSpec::operator()(const BigInt& n, WorkBudget& budget) const {
  BigInt v = eval(*root_, n, budget);
  if (sgn(v) < 0)
    throw Error(ErrorCode::OutOfDomain,
                to_string() + " is negative (" + v.get_str() + ") at n=" + n.get_str());
  return v;
}

BigInt FuncSpec::operator()(std::uint64_t n) const {
  WorkBudget budget;
  return (*this)(n, budget);
}

std::vector<BigInt> FuncSpec::values(std::uint64_t horizon, WorkBudget& budget) const {
  std::vector<BigInt> out;
  out.reserve(horizon + 1);
  for (std::uint64_t n = 0; n <= horizon; ++n) out.push_back((*this)(n, budget));
  return out;
}

std::string FuncSpec::to_string() const {
  std::ostringstream out;
  print(*root_, out);
  return out.str();
}

BigInt eval_f012(int which, const BigInt& m) {
  const auto lo = [&](long k) -> BigInt {
    BigInt r;
    switch (which) {
      case 0: mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(k)); return r;
      case 1: mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(2 * k)); return 3 * r;
      default: mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(2 * k - 1)); return 3 * r;
    }
  };
  const auto formula = [&](long k) -> BigInt {
    BigInt p;
    switch (which) {
      case 0:
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k - 1));
        return p - abs(3 * p - m);
      case 1:
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(2 * k - 1));
        return 9 * p - abs(15 * p - m);
      default:
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(2 * k - 2));
        return 9 * p - abs(15 * p - m);
    }
  };
  if (which < 0 || which > 2) throw Error(ErrorCode::InvalidArgument, "expected f0, f1 or f2");
  if (m < lo(1))
    throw Error(ErrorCode::OutOfDomain, "f" + std::to_string(which) + " is undefined at " +
                                            m.get_str() + " (domain starts at " +
                                            lo(1).get_str() + ")");
  // Interval k is [lo(k), lo(k+1)]; find the largest k with lo(k) <= m.
  long k = 1;
  while (lo(k + 1) <= m) ++k;
  BigInt value = formula(k);
  if (m == lo(k) && k > 1 && formula(k - 1) != value)
    throw Error(ErrorCode::OutOfDomain, "f" + std::to_string(which) +
                                            " endpoint values disagree at " + m.get_str());
  return value;
}

BigInt tilde(const FuncSpec& f, const BigInt& n, WorkBudget& budget) {
  BigInt times = f(n, budget);
  BigInt x = n;
  for (BigInt i = 0; i < times; ++i) {
    budget.charge(1, "tilde");
    x = f(x, budget);
  }
  return x;
}

BigInt ackermann(std::uint64_t m, const BigInt& n, WorkBudget& budget) {
  if (sgn(n) < 0) throw Error(ErrorCode::OutOfDomain, "ackermann argument must be a natural");
  budget.charge(1, "ackermann");
  // Closed forms of the first levels of the recursion; the tests check them
  // against the literal iteration.
  switch (m) {
    case 0: return n + 1;
    case 1: return n + 2;
    case 2: return 2 * n + 3;
    case 3: {
      BigInt p = pow2_of(n + 3, budget);
      return p - 3;
    }
    default: break;
  }
  BigInt x = 1;
  for (BigInt i = 0; i <= n; ++i) x = ackermann(m - 1, x, budget);
  return x;
}

std::vector<std::size_t> longest_nondecreasing(const std::vector<std::vector<BigInt>>& keys) {
  const std::size_t n = keys.size();
  if (n == 0) return {};
  const auto le = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < keys[i].size(); ++c)
      if (keys[i][c] > keys[j][c]) return false;
    return true;
  };
  // best[i]: longest chain starting at i
  std::vector<std::size_t> best(n, 1);
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = i + 1; j < n; ++j)
      if (best[j] + 1 > best[i] && le(i, j)) best[i] = best[j] + 1;
  const std::size_t length = *std::max_element(best.begin(), best.end());
  std::vector<std::size_t> chain;
  std::optional<std::size_t> prev;
  for (std::size_t need = length; need > 0; --need) {
    std::optional<std::size_t> pick;
    for (std::size_t j = prev ? *prev + 1 : 0; j < n; ++j) {
      if (best[j] != need || (prev && !le(*prev, j))) continue;
      if (!pick || keys[j] < keys[*pick]) pick = j;
    }
    chain.push_back(*pick);
    prev = pick;
  }
  return chain;
}

IndexSet Witness::as_index_set() const {
  std::vector<bool> bits(horizon + 1, false);
  for (auto e : elements) bits[e] = true;
  return IndexSet::explicit_set(std::move(bits), IndexSet::TailTag::Unknown);
}

namespace {

std::vector<std::uint64_t> core_upto(const FilterModel& model, std::uint64_t horizon) {
  auto c = model.core().elements_upto(horizon);
  if (c.empty())
    throw Error(ErrorCode::NoWitnessWithinHorizon,
                "the committed sets have no element up to " + std::to_string(horizon));
  return c;
}

Witness restrict_monotone(const std::vector<BigInt>& values, const FilterModel& model,
                          std::uint64_t horizon) {
  auto candidates = core_upto(model, horizon);
  std::vector<std::vector<BigInt>> keys;
  keys.reserve(candidates.size());
  for (auto c : candidates) keys.push_back({values[c]});
  Witness w{{}, horizon};
  for (auto i : longest_nondecreasing(keys)) w.elements.push_back(candidates[i]);
  return w;
}

}  // namespace

Witness monotone_restriction(const FuncSpec& f, const FilterModel& model, std::uint64_t horizon,
                             WorkBudget& budget) {
  return restrict_monotone(f.values(horizon, budget), model, horizon);
}

IntervalToOne interval_to_one_reduce(const FuncSpec& f, const FilterModel& model,
                                     std::uint64_t horizon, WorkBudget& budget) {
  const auto values = f.values(horizon, budget);
  std::map<BigInt, std::uint64_t> first;
  std::vector<BigInt> h(horizon + 1);
  for (std::uint64_t n = 0; n <= horizon; ++n) {
    auto [it, inserted] = first.emplace(values[n], n);
    h[n] = big(it->second);
  }
  Witness w = restrict_monotone(h, model, horizon);
  // Step function: constant h(s_i) on (s_{i-1}, s_i], then h(s_last) onwards.
  std::vector<BigInt> g(horizon + 1);
  std::size_t i = 0;
  for (std::uint64_t n = 0; n <= horizon; ++n) {
    while (i + 1 < w.elements.size() && w.elements[i] < n) ++i;
    g[n] = h[w.elements[i]];
  }
  bool ok = true;
  for (std::uint64_t n = 0; n < horizon; ++n)
    if (g[n] > g[n + 1]) ok = false;  // nondecreasing => every preimage is an interval
  for (auto s : w.elements)
    if (g[s] != h[s]) ok = false;
  return {std::move(h), std::move(w), FuncSpec::table(g), ok};
}

FUCheck check_fu_condition(const FuncSpec& f, const std::vector<std::uint64_t>& u,
                           std::uint64_t horizon, WorkBudget& budget) {
  const auto values = f.values(horizon, budget);
  for (std::uint64_t n = 0; n < horizon; ++n)
    if (values[n] > values[n + 1])
      throw Error(ErrorCode::NotNondecreasing, f.to_string() + " decreases at n=" + std::to_string(n));
  std::vector<std::uint64_t> us;
  for (auto x : u)
    if (x <= horizon) us.push_back(x);
  std::sort(us.begin(), us.end());
  us.erase(std::unique(us.begin(), us.end()), us.end());
  for (std::size_t i = 0; i + 1 < us.size(); ++i)
    if (values[us[i]] >= big(us[i + 1] - us[i])) return {false, i};
  return {true, std::nullopt};
}

namespace {

template <class Next>
Witness greedy_from_positive(const FilterModel& model, std::uint64_t horizon, Next&& bound) {
  Witness w{{}, horizon};
  auto start = model.core().next_member(1);
  while (start && *start <= horizon) {
    w.elements.push_back(*start);
    BigInt b = bound(*start);  // next element must exceed b
    std::uint64_t lim = 0;
    if (!to_u64(b, lim) || lim >= horizon) break;
    lim = std::max(lim, *start);
    start = model.core().next_member(lim + 1);
  }
  if (w.elements.size() < 2)
    throw Error(ErrorCode::NoWitnessWithinHorizon,
                "fewer than two elements up to " + std::to_string(horizon));
  return w;
}

}  // namespace

Witness doubling_set(const FilterModel& model, std::uint64_t horizon) {
  return greedy_from_positive(model, horizon, [](std::uint64_t u) { return BigInt(2 * big(u)); });
}

Witness rapid_set(const FuncSpec& f, const FilterModel& model, std::uint64_t horizon,
                  WorkBudget& budget) {
  return greedy_from_positive(model, horizon, [&](std::uint64_t u) { return f(u, budget); });
}

GPlus g_plus_and_enumerator(const FuncSpec& g, std::uint64_t horizon, WorkBudget& budget) {
  const auto values = g.values(horizon, budget);
  std::map<BigInt, std::pair<std::uint64_t, std::uint64_t>> span;  // first, last
  for (std::uint64_t n = 0; n <= horizon; ++n) {
    auto [it, inserted] = span.emplace(values[n], std::make_pair(n, n));
    if (!inserted) {
      if (it->second.second + 1 != n)
        throw Error(ErrorCode::NotIntervalToOne, "class of value " + values[n].get_str() +
                                                     " is not an interval (gap before " +
                                                     std::to_string(n) + ")");
      it->second.second = n;
    }
  }
  GPlus out{{}, {}, false};
  for (std::uint64_t n = 0; n <= horizon; ++n) {
    const auto last = span[values[n]].second;
    if (last == horizon) {
      out.g_plus.push_back(std::nullopt);
      out.last_class_incomplete = true;
    } else {
      out.g_plus.push_back(last);
      if (out.enumerator.empty() || out.enumerator.back() != last) out.enumerator.push_back(last);
    }
  }
  return out;
}

Dominating dominating_function(const std::vector<std::pair<FuncSpec, IndexSet>>& witnessed,
                               std::uint64_t horizon, WorkBudget& budget,
                               const std::optional<std::vector<std::uint64_t>>& v) {
  Dominating out;
  if (v) {
    out.v = *v;
    std::sort(out.v.begin(), out.v.end());
    out.v.erase(std::unique(out.v.begin(), out.v.end()), out.v.end());
    while (!out.v.empty() && out.v.back() > horizon) out.v.pop_back();
  } else {
    for (std::uint64_t n = 0; n <= horizon; ++n) {
      bool all = true;
      for (const auto& [f, u] : witnessed) {
        auto c = u.contains(n);
        if (!c || !*c) {
          all = false;
          break;
        }
      }
      if (all) out.v.push_back(n);
    }
  }
  if (out.v.size() < 2)
    throw Error(ErrorCode::HorizonTooSmall, "V needs at least two elements up to the horizon");
  // Gaps are taken from the right so f_omega(m) is a running minimum.
  const std::uint64_t last_m = out.v[out.v.size() - 2];
  out.f_omega.assign(last_m + 1, 0);
  std::uint64_t running = UINT64_MAX;
  std::size_t idx = out.v.size() - 1;
  for (std::uint64_t m = last_m + 1; m-- > 0;) {
    while (idx > 0 && out.v[idx - 1] >= m) {
      running = std::min(running, out.v[idx] - out.v[idx - 1]);
      --idx;
    }
    out.f_omega[m] = running;
  }
  for (const auto& [f, u] : witnessed) {
    std::optional<std::uint64_t> k;
    for (std::uint64_t m = last_m + 1; m-- > 0;) {
      if (big(out.f_omega[m]) > f(m, budget)) k = m;
      else break;
    }
    out.thresholds.push_back(k);
  }
  return out;
}

}  // namespace asynum
