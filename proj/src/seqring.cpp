#include "asynum/seqring.hpp"

#include <algorithm>
#include <sstream>

#include "asynum/error.hpp"
#include "asynum/log.hpp"

namespace asynum {

std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

CountingSequence::CountingSequence(std::vector<BigInt> prefix, std::optional<QuasiPolynomial> tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  if (prefix_.empty()) throw Error(ErrorCode::InvalidArgument, "sequence prefix must be nonempty");
  if (!tail_) return;
  if (tail_->from() > horizon())
    throw Error(ErrorCode::InvalidArgument, "tail starts at " + std::to_string(tail_->from()) +
                                                " beyond horizon " + std::to_string(horizon()));
  for (std::uint64_t n = tail_->from(); n <= horizon(); ++n)
    if (tail_->evaluate_rational(n) != BigRational(prefix_[n]))
      throw Error(ErrorCode::InvalidArgument,
                  "tail " + tail_->to_string() + " disagrees with prefix at n=" + std::to_string(n));
}

CountingSequence CountingSequence::from_tail(const QuasiPolynomial& tail, std::uint64_t horizon) {
  QuasiPolynomial everywhere(tail.period(), tail.pieces(), 0);
  std::vector<BigInt> prefix;
  prefix.reserve(horizon + 1);
  for (std::uint64_t n = 0; n <= horizon; ++n) prefix.push_back(everywhere.evaluate(n));
  return CountingSequence(std::move(prefix), everywhere);
}

BigInt CountingSequence::value(std::uint64_t n) const {
  if (n <= horizon()) return prefix_[n];
  if (!tail_)
    throw Error(ErrorCode::HorizonTooSmall, "value at n=" + std::to_string(n) +
                                                " lies beyond horizon " + std::to_string(horizon()) +
                                                " and the tail is unknown");
  return tail_->evaluate(n);
}

CountingSequence CountingSequence::with_horizon(std::uint64_t h) const {
  if (h == horizon()) return *this;
  std::vector<BigInt> p;
  p.reserve(h + 1);
  for (std::uint64_t n = 0; n <= h; ++n) p.push_back(value(n));
  if (tail_ && tail_->from() <= h) return CountingSequence(std::move(p), tail_);
  return CountingSequence(std::move(p));
}

std::string CountingSequence::to_string() const {
  std::ostringstream out;
  out << "prefix=[";
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (i) out << ",";
    out << prefix_[i].get_str();
  }
  out << "]; tail=" << (tail_ ? tail_->to_string() : std::string("unknown"));
  return out.str();
}

bool CountingSequence::operator==(const CountingSequence& o) const {
  if (prefix_ != o.prefix_ || tail_.has_value() != o.tail_.has_value()) return false;
  if (!tail_) return true;
  return tail_->period() == o.tail_->period() && tail_->pieces() == o.tail_->pieces();
}

namespace {

template <class ValueOp, class TailOp>
CountingSequence combine(const CountingSequence& s, const CountingSequence& t, ValueOp vop,
                         TailOp top) {
  if (s.has_tail() && t.has_tail()) {
    const std::uint64_t h = std::max(s.horizon(), t.horizon());
    auto a = s.with_horizon(h), b = t.with_horizon(h);
    std::vector<BigInt> p(h + 1);
    for (std::uint64_t n = 0; n <= h; ++n) p[n] = vop(a.prefix()[n], b.prefix()[n]);
    return CountingSequence(std::move(p), top(*a.tail(), *b.tail()));
  }
  if (s.horizon() != t.horizon())
    warn("horizon mismatch (" + std::to_string(s.horizon()) + " vs " +
         std::to_string(t.horizon()) + "); using the shorter");
  const std::uint64_t h = std::min(s.horizon(), t.horizon());
  std::vector<BigInt> p(h + 1);
  for (std::uint64_t n = 0; n <= h; ++n) p[n] = vop(s.prefix()[n], t.prefix()[n]);
  return CountingSequence(std::move(p));
}

}  // namespace

CountingSequence operator+(const CountingSequence& s, const CountingSequence& t) {
  return combine(
      s, t, [](const BigInt& a, const BigInt& b) { return BigInt(a + b); },
      [](const QuasiPolynomial& a, const QuasiPolynomial& b) { return a + b; });
}

CountingSequence operator-(const CountingSequence& s, const CountingSequence& t) {
  return combine(
      s, t, [](const BigInt& a, const BigInt& b) { return BigInt(a - b); },
      [](const QuasiPolynomial& a, const QuasiPolynomial& b) { return a - b; });
}

CountingSequence operator*(const CountingSequence& s, const CountingSequence& t) {
  return combine(
      s, t, [](const BigInt& a, const BigInt& b) { return BigInt(a * b); },
      [](const QuasiPolynomial& a, const QuasiPolynomial& b) { return a * b; });
}

CountingSequence operator-(const CountingSequence& s) {
  std::vector<BigInt> p(s.prefix());
  for (auto& v : p) v = -v;
  if (!s.has_tail()) return CountingSequence(std::move(p));
  return CountingSequence(std::move(p), QuasiPolynomial::constant(0) - *s.tail());
}

CountingSequence counting_sequence(const PointSetExpr& expr, std::uint64_t horizon,
                                   WorkBudget& budget) {
  if (auto plan = CountingPlan::build(expr)) {
    auto tail = plan->tail();
    const std::uint64_t h = tail ? std::max(horizon, tail->from()) : horizon;
    budget.charge((h + 1) * (plan->cells().size() + 1), "counting sequence");
    auto prefix = plan->counts(h);
    if (tail) return CountingSequence(std::move(prefix), tail->starting_at(tail->from()));
    return CountingSequence(std::move(prefix));
  }
  std::vector<BigInt> prefix;
  for (std::uint64_t n = 0; n <= horizon; ++n)
    prefix.push_back(count_by_enumeration(expr, n, budget));
  return CountingSequence(std::move(prefix));
}

CountingSequence counting_sequence(const PointSetExpr& expr, std::uint64_t horizon) {
  WorkBudget budget;
  return counting_sequence(expr, horizon, budget);
}

IndexSet IndexSet::explicit_set(std::vector<bool> bits, TailTag tag) {
  if (bits.empty()) throw Error(ErrorCode::InvalidArgument, "explicit set needs a horizon");
  switch (tag) {
    case TailTag::Finite: return PeriodicSet::from_parts(bits, {false});
    case TailTag::Cofinite: return PeriodicSet::from_parts(bits, {true});
    case TailTag::Unknown: break;
  }
  return IndexSet(ExplicitSet{std::move(bits)});
}

std::optional<bool> IndexSet::contains(std::uint64_t n) const {
  if (is_exact()) return exact().contains(n);
  const auto& p = partial();
  if (n > p.horizon()) return std::nullopt;
  return p.bits[n];
}

std::vector<std::uint64_t> IndexSet::known_elements_upto(std::uint64_t n) const {
  if (is_exact()) return exact().elements_upto(n);
  std::vector<std::uint64_t> out;
  const auto& p = partial();
  for (std::uint64_t i = 0; i <= std::min(n, p.horizon()); ++i)
    if (p.bits[i]) out.push_back(i);
  return out;
}

std::string IndexSet::descriptor() const {
  if (is_exact()) return exact().descriptor();
  const auto& p = partial();
  std::ostringstream out;
  out << "explicit H=" << p.horizon() << " members=";
  bool first = true;
  for (std::uint64_t i = 0; i <= p.horizon(); ++i)
    if (p.bits[i]) {
      out << (first ? "" : ",") << i;
      first = false;
    }
  out << " tail=unknown";
  return out.str();
}

namespace {

std::uint64_t parse_u64(const std::string& text, std::size_t offset) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), ::isdigit))
    throw ParseError(offset, "expected a natural number, got '" + text + "'");
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw ParseError(offset, "number out of range: " + text);
  }
}

}  // namespace

IndexSet parse_index_set(const std::string& text) {
  const auto start = text.find_first_not_of(" \t");
  if (start == std::string::npos || text.compare(start, 8, "explicit") != 0)
    return parse_periodic_descriptor(text);
  std::istringstream in(text.substr(start + 8));
  std::string word;
  std::optional<std::uint64_t> h;
  std::vector<std::uint64_t> members;
  IndexSet::TailTag tag = IndexSet::TailTag::Unknown;
  while (in >> word) {
    const auto eq = word.find('=');
    if (eq == std::string::npos) throw ParseError(start, "expected key=value, got '" + word + "'");
    const std::string key = word.substr(0, eq), value = word.substr(eq + 1);
    if (key == "H") {
      h = parse_u64(value, start);
    } else if (key == "members") {
      std::stringstream items(value);
      std::string item;
      while (std::getline(items, item, ','))
        if (!item.empty()) members.push_back(parse_u64(item, start));
    } else if (key == "tail") {
      if (value == "finite") tag = IndexSet::TailTag::Finite;
      else if (value == "cofinite") tag = IndexSet::TailTag::Cofinite;
      else if (value == "unknown") tag = IndexSet::TailTag::Unknown;
      else throw ParseError(start, "unknown tail tag '" + value + "'");
    } else {
      throw ParseError(start, "unknown key '" + key + "'");
    }
  }
  if (!h) throw ParseError(start, "explicit set needs H=<n>");
  std::vector<bool> bits(*h + 1, false);
  for (auto m : members) {
    if (m > *h) throw ParseError(start, "member " + std::to_string(m) + " exceeds H");
    bits[m] = true;
  }
  return IndexSet::explicit_set(std::move(bits), tag);
}

SignPattern sign_pattern(const CountingSequence& s) {
  const std::uint64_t h = s.horizon();
  if (!s.has_tail()) {
    std::vector<bool> neg(h + 1), zero(h + 1), pos(h + 1);
    for (std::uint64_t n = 0; n <= h; ++n) {
      const int sg = sgn(s.prefix()[n]);
      (sg < 0 ? neg : sg == 0 ? zero : pos)[n] = true;
    }
    using T = IndexSet::TailTag;
    return {IndexSet::explicit_set(neg, T::Unknown), IndexSet::explicit_set(zero, T::Unknown),
            IndexSet::explicit_set(pos, T::Unknown)};
  }
  const QuasiPolynomial& tail = *s.tail();
  // Past every piece's root bound the sign is that of the leading coefficient.
  std::uint64_t settle = std::max(h + 1, tail.from());
  for (const auto& p : tail.pieces()) {
    std::uint64_t bound = 0;
    if (!to_u64(p.root_bound() + 1, bound) || bound > (1ULL << 32))
      throw Error(ErrorCode::BoundExceeded, "sign of the tail settles too late to decide");
    settle = std::max(settle, bound);
  }
  std::vector<bool> neg(settle), zero(settle), pos(settle);
  for (std::uint64_t n = 0; n < settle; ++n) {
    const int sg = sgn(s.value(n));
    (sg < 0 ? neg : sg == 0 ? zero : pos)[n] = true;
  }
  const std::uint64_t m = tail.period();
  std::vector<bool> mneg(m), mzero(m), mpos(m);
  for (std::uint64_t r = 0; r < m; ++r) {
    const auto& p = tail.pieces()[r];
    const int sg = p.is_zero() ? 0 : sgn(p.leading());
    (sg < 0 ? mneg : sg == 0 ? mzero : mpos)[r] = true;
  }
  return {PeriodicSet::from_parts(neg, mneg), PeriodicSet::from_parts(zero, mzero),
          PeriodicSet::from_parts(pos, mpos)};
}

Tri is_polynomially_bounded(const CountingSequence& s) {
  return s.has_tail() ? Tri::True : Tri::Unknown;
}

}  // namespace asynum
