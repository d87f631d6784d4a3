#include "asynum/numerosity.hpp"

#include <algorithm>
#include <sstream>

#include "asynum/error.hpp"
#include "asynum/qselect.hpp"

namespace asynum {

std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Equal: return "Equal";
    case VerdictKind::Less: return "Less";
    case VerdictKind::Greater: return "Greater";
    case VerdictKind::NotEqual: return "NotEqual";
    case VerdictKind::DependsOnOracle: return "DependsOnOracle";
  }
  return "DependsOnOracle";
}

std::string Verdict::kind_name() const {
  std::string k(to_string(kind));
  return forced ? "Forced" + k : k;
}

std::string Verdict::line() const {
  return "verdict=" + kind_name() + " D=" + decisive.descriptor() +
         " cert=" + (certificate ? certificate->set.descriptor() : std::string("none")) +
         " H=" + std::to_string(horizon);
}

std::string Verdict::report() const {
  std::ostringstream out;
  out << line() << "\n";
  out << "  cell      set\n";
  out << "  Y<X       " << evidence.negative.descriptor() << "\n";
  out << "  Y=X       " << evidence.zero.descriptor() << "\n";
  out << "  Y>X       " << evidence.positive.descriptor() << "\n";
  if (certificate) {
    out << "  certificate uses " << certificate->used.size() << " commitment(s)";
    if (certificate->forced()) out << "; holds for every nonprincipal ultrafilter";
    out << "\n";
  }
  return out.str();
}

namespace {

IndexSet complement_of(const IndexSet& s) { return s.exact().complement(); }

Verdict decide(const CountingSequence& diff, const FilterModel& model, std::uint64_t horizon) {
  SignPattern sp = sign_pattern(diff);
  const Membership qz = model.query(sp.zero);
  const Membership qn = model.query(sp.negative);
  const Membership qp = model.query(sp.positive);
  Verdict v{VerdictKind::DependsOnOracle, sp.zero, std::nullopt, sp, horizon};
  if (qz == Membership::Member) {
    v.kind = VerdictKind::Equal;
    v.certificate = model.decided_superset_witness(sp.zero);
  } else if (qp == Membership::Member) {
    v.kind = VerdictKind::Less;
    v.decisive = sp.positive;
    v.certificate = model.decided_superset_witness(sp.positive);
  } else if (qn == Membership::Member) {
    v.kind = VerdictKind::Greater;
    v.decisive = sp.negative;
    v.certificate = model.decided_superset_witness(sp.negative);
  } else if (qz == Membership::NonMember) {
    v.kind = VerdictKind::NotEqual;
    v.certificate = model.decided_superset_witness(complement_of(sp.zero));
  }
  v.forced = v.certificate && v.certificate->forced();
  return v;
}

CountingSequence difference(const PointSetExpr& x, const PointSetExpr& y, std::uint64_t horizon,
                            WorkBudget& budget) {
  return counting_sequence(y, horizon, budget) - counting_sequence(x, horizon, budget);
}

}  // namespace

Verdict equinumerous(const PointSetExpr& x, const PointSetExpr& y, const FilterModel& model,
                     std::uint64_t horizon, WorkBudget& budget) {
  return decide(difference(x, y, horizon, budget), model, horizon);
}

Verdict compare(const PointSetExpr& x, const PointSetExpr& y, const FilterModel& model,
                std::uint64_t horizon, WorkBudget& budget) {
  return decide(difference(x, y, horizon, budget), model, horizon);
}

Numerosity numerosity(const PointSetExpr& x, std::uint64_t horizon, WorkBudget& budget) {
  return {counting_sequence(x, horizon, budget), x};
}

PointSetExpr tagged_union(const PointSetExpr& a, const PointSetExpr& b) {
  const std::size_t k = std::max(a.dimension(), b.dimension());
  Point pa{std::vector<std::uint64_t>(1 + k - a.dimension(), 0)};
  Point pb{std::vector<std::uint64_t>(1 + k - b.dimension(), 0)};
  pb.coords[0] = 1;
  return PointSetExpr::unite(PointSetExpr::lift(pa, a), PointSetExpr::lift(pb, b));
}

Numerosity num_add(const Numerosity& a, const Numerosity& b, WorkBudget& budget) {
  const auto h = std::max(a.representative.horizon(), b.representative.horizon());
  return numerosity(tagged_union(a.provenance, b.provenance), h, budget);
}

Numerosity num_mul(const Numerosity& a, const Numerosity& b, WorkBudget& budget) {
  const auto h = std::max(a.representative.horizon(), b.representative.horizon());
  return numerosity(PointSetExpr::product(a.provenance, b.provenance), h, budget);
}

namespace {

// Points of truncate(e, horizon) grouped by their largest coordinate, each
// group in lexicographic order.
std::vector<std::vector<Point>> by_level(const PointSetExpr& e, std::uint64_t horizon,
                                         WorkBudget& budget) {
  std::vector<std::vector<Point>> out(horizon + 1);
  for (auto& p : truncate(e, horizon, budget)) out[p.max_coordinate()].push_back(std::move(p));
  return out;
}

// Points with level in (lo, hi], lexicographic; lo = -1 encoded as nullopt.
std::vector<Point> block(const std::vector<std::vector<Point>>& levels,
                         std::optional<std::uint64_t> lo, std::uint64_t hi) {
  std::vector<Point> out;
  for (std::uint64_t l = lo ? *lo + 1 : 0; l <= hi; ++l)
    out.insert(out.end(), levels[l].begin(), levels[l].end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SubsetRepresentative build_subset_representative(const PointSetExpr& x, const PointSetExpr& y,
                                                 const FilterModel& model,
                                                 std::uint64_t horizon, WorkBudget& budget) {
  const CountingSequence lx = counting_sequence(x, horizon, budget);
  const CountingSequence ly = counting_sequence(y, horizon, budget);
  const SignPattern sp = sign_pattern(ly - lx);
  IndexSet at_most = sp.zero.is_exact() && sp.positive.is_exact()
                         ? IndexSet(sp.zero.exact().unite(sp.positive.exact()))
                         : [&] {
                             std::vector<bool> bits(horizon + 1);
                             for (std::uint64_t n = 0; n <= horizon; ++n)
                               bits[n] = sgn(ly.value(n) - lx.value(n)) >= 0;
                             return IndexSet::explicit_set(bits, IndexSet::TailTag::Unknown);
                           }();
  if (model.query(at_most) != Membership::Member)
    throw Error(ErrorCode::PreconditionNotMember,
                "{n : |X_n| <= |Y_n|} = " + at_most.descriptor() + " is not decided a member");
  Certificate cert = model.decided_superset_witness(at_most);
  const auto candidates = cert.set.elements_upto(horizon);
  std::vector<std::vector<BigInt>> keys;
  for (auto n : candidates) {
    BigInt a = lx.value(n), b = ly.value(n);
    keys.push_back({a, b, b - a});
  }
  std::vector<std::uint64_t> checkpoints;
  for (auto i : longest_nondecreasing(keys)) checkpoints.push_back(candidates[i]);
  if (checkpoints.size() < 2)
    throw Error(ErrorCode::HorizonTooSmall, "fewer than two checkpoints up to " +
                                                std::to_string(horizon));
  const auto levels = by_level(y, checkpoints.back(), budget);
  std::vector<Point> chosen;
  std::optional<std::uint64_t> prev;
  BigInt taken = 0;
  for (auto m : checkpoints) {
    const BigInt want = lx.value(m) - taken;
    std::uint64_t k = 0;
    to_u64(want, k);
    auto fresh = block(levels, prev, m);
    if (fresh.size() < k)
      throw Error(ErrorCode::InvalidArgument, "internal: not enough points of Y at checkpoint " +
                                                  std::to_string(m));
    chosen.insert(chosen.end(), fresh.begin(), fresh.begin() + static_cast<std::ptrdiff_t>(k));
    taken += want;
    prev = m;
  }
  std::sort(chosen.begin(), chosen.end());
  SubsetRepresentative out{PointSetExpr::finite(chosen, y.dimension()), checkpoints, cert,
                           "past the horizon, at each further checkpoint m' of the certificate "
                           "(where |X|, |Y|, |Y|-|X| stay nondecreasing) add the "
                           "lexicographically least |X_m'|-|X_m| points of Y_m' \\ Y_m"};
  return out;
}

UCongruence build_u_congruence(const PointSetExpr& x, const PointSetExpr& y,
                               const FilterModel& model, std::uint64_t horizon,
                               WorkBudget& budget) {
  const Verdict v = equinumerous(x, y, model, horizon, budget);
  if (v.kind != VerdictKind::Equal)
    throw Error(ErrorCode::NotEquinumerous, "verdict is " + v.kind_name() + ", not Equal");
  UCongruence out{{}, v.certificate->set.elements_upto(horizon), false};
  if (out.witness.empty())
    throw Error(ErrorCode::HorizonTooSmall, "certificate has no element up to the horizon");
  const std::uint64_t top = out.witness.back();
  const auto xl = by_level(x, top, budget), yl = by_level(y, top, budget);
  std::optional<std::uint64_t> prev;
  for (auto w : out.witness) {
    auto xs = block(xl, prev, w), ys = block(yl, prev, w);
    if (xs.size() != ys.size())
      throw Error(ErrorCode::NotEquinumerous, "block sizes differ at n=" + std::to_string(w));
    for (std::size_t i = 0; i < xs.size(); ++i) out.sigma.emplace_back(xs[i], ys[i]);
    prev = w;
  }
  out.verified = true;
  for (auto w : out.witness) {
    std::vector<Point> image;
    for (const auto& [a, b] : out.sigma)
      if (a.max_coordinate() <= w) image.push_back(b);
    std::sort(image.begin(), image.end());
    if (image != block(yl, std::nullopt, w)) out.verified = false;
  }
  return out;
}

std::string_view to_string(Axiom a) {
  static constexpr std::string_view names[] = {"E0", "E1", "E2", "E3", "E4"};
  return names[static_cast<int>(a)];
}

Axiom parse_axiom(const std::string& name) {
  for (int i = 0; i <= 4; ++i)
    if (name == to_string(static_cast<Axiom>(i))) return static_cast<Axiom>(i);
  throw Error(ErrorCode::InvalidArgument, "unknown axiom '" + name + "' (expected E0..E4)");
}

bool AxiomReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const AxiomEntry& e) { return e.ok; });
}

std::string AxiomReport::to_string() const {
  std::ostringstream out;
  std::size_t ok = 0, vacuous = 0;
  for (const auto& e : entries) {
    ok += e.ok;
    vacuous += e.vacuous;
  }
  out << "axiom=" << asynum::to_string(axiom) << " samples=" << entries.size() << " ok=" << ok
      << " vacuous=" << vacuous << " result=" << (passed() ? "pass" : "FAIL") << "\n";
  for (const auto& e : entries)
    out << "  #" << e.sample << " " << (e.ok ? "ok" : "FAIL") << (e.vacuous ? " (vacuous)" : "")
        << ": " << e.detail << "\n";
  return out.str();
}

namespace {

bool same_verdict(const Verdict& a, const Verdict& b) {
  return a.kind == b.kind && a.forced == b.forced && a.decisive == b.decisive;
}

bool is_singleton(const PointSetExpr& e) {
  return e.kind() == PointSetExpr::Kind::Finite && e.points().size() == 1;
}

AxiomEntry check_e0(const std::vector<PointSetExpr>& s, const FilterModel& model,
                    std::uint64_t horizon, WorkBudget& budget) {
  try {
    auto rep = build_subset_representative(s[0], s[1], model, horizon, budget);
    for (const auto& p : rep.z.points())
      if (!contains(s[1], p)) return {0, false, false, "Z has point " + p.to_string() + " outside Y"};
    for (auto m : rep.checkpoints)
      if (count(rep.z, m, budget) != count(s[0], m, budget))
        return {0, false, false, "|Z_m| != |X_m| at m=" + std::to_string(m)};
    return {0, true, false, std::to_string(rep.checkpoints.size()) + " checkpoints verified"};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::PreconditionNotMember || e.code() == ErrorCode::HorizonTooSmall)
      return {0, true, true, e.what()};
    throw;
  }
}

AxiomEntry check_e1(const std::vector<PointSetExpr>& s, const FilterModel& model,
                    std::uint64_t horizon, WorkBudget& budget) {
  const auto& a = s[0];
  const auto& b = s[1];
  if (a.dimension() != b.dimension()) return {0, false, false, "E1 needs homogeneous sets"};
  auto v1 = equinumerous(a, b, model, horizon, budget);
  auto v2 = equinumerous(PointSetExpr::diff(a, b), PointSetExpr::diff(b, a), model, horizon, budget);
  return {0, same_verdict(v1, v2), false, v1.kind_name() + " vs " + v2.kind_name()};
}

AxiomEntry check_e2(const std::vector<PointSetExpr>& s, const FilterModel& model,
                    std::uint64_t horizon, WorkBudget& budget) {
  auto v = compare(s[0], s[1], model, horizon, budget);
  const IndexSet* cells[] = {&v.evidence.negative, &v.evidence.zero, &v.evidence.positive};
  int members = 0, undecided = 0;
  for (auto* c : cells) {
    auto q = model.query(*c);
    members += q == Membership::Member;
    undecided += q == Membership::Undecided;
  }
  for (std::uint64_t n = 0; n <= horizon; ++n) {
    int hits = 0;
    for (auto* c : cells) hits += c->contains(n).value_or(false);
    if (hits != 1) return {0, false, false, "sign cells do not partition at n=" + std::to_string(n)};
  }
  const bool decided = undecided == 0;
  const bool ok = members <= 1 && (!decided || members == 1);
  return {0, ok, false,
          std::to_string(members) + " attainable alternative(s), " +
              (decided ? "fully decided" : "open") + ", verdict " + v.kind_name()};
}

AxiomEntry check_e3(const std::vector<PointSetExpr>& s, const FilterModel& model,
                    std::uint64_t horizon, WorkBudget& budget) {
  const auto& a = s[0];
  const auto& b = s[1];
  std::vector<std::pair<PointSetExpr, PointSetExpr>> claims;
  if (is_singleton(b)) {
    claims.emplace_back(PointSetExpr::product(a, b), a);
    claims.emplace_back(PointSetExpr::product(b, a), a);
  } else if ((a.kind() == PointSetExpr::Kind::Lift && a.left().structurally_equal(b)) ||
             (a.kind() == PointSetExpr::Kind::Product &&
              ((a.left().structurally_equal(b) && is_singleton(a.right())) ||
               (a.right().structurally_equal(b) && is_singleton(a.left()))))) {
    claims.emplace_back(a, b);
  } else {
    return {0, false, false, "not an E3 sample: expected (A, {P}) or ({P} x A, A)"};
  }
  std::string detail;
  for (const auto& [l, r] : claims) {
    auto v = equinumerous(l, r, model, horizon, budget);
    detail += (detail.empty() ? "" : ", ") + v.kind_name();
    if (v.kind != VerdictKind::Equal || !v.forced) return {0, false, false, detail};
  }
  return {0, true, false, detail};
}

AxiomEntry check_e4(const std::vector<PointSetExpr>& s, const FilterModel& model,
                    std::uint64_t horizon, WorkBudget& budget) {
  auto va = equinumerous(s[0], s[1], model, horizon, budget);
  auto vb = equinumerous(s[2], s[3], model, horizon, budget);
  if (va.kind != VerdictKind::Equal || vb.kind != VerdictKind::Equal)
    return {0, true, true, "premise " + va.kind_name() + "/" + vb.kind_name()};
  auto v = equinumerous(PointSetExpr::product(s[0], s[2]), PointSetExpr::product(s[1], s[3]),
                        model, horizon, budget);
  return {0, v.kind == VerdictKind::Equal, false, "product verdict " + v.kind_name()};
}

}  // namespace

AxiomReport axiom_check(Axiom axiom, const std::vector<std::vector<PointSetExpr>>& samples,
                        const FilterModel& model, std::uint64_t horizon, WorkBudget& budget) {
  AxiomReport report{axiom, std::vector<AxiomEntry>(samples.size())};
  const std::size_t arity = axiom == Axiom::E4 ? 4 : 2;
  const auto count_samples = static_cast<std::int64_t>(samples.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count_samples; ++i) {
    const auto& s = samples[static_cast<std::size_t>(i)];
    AxiomEntry e{0, false, false, ""};
    try {
      if (s.size() != arity) {
        e.detail = "expected " + std::to_string(arity) + " sets";
      } else {
        switch (axiom) {
          case Axiom::E0: e = check_e0(s, model, horizon, budget); break;
          case Axiom::E1: e = check_e1(s, model, horizon, budget); break;
          case Axiom::E2: e = check_e2(s, model, horizon, budget); break;
          case Axiom::E3: e = check_e3(s, model, horizon, budget); break;
          case Axiom::E4: e = check_e4(s, model, horizon, budget); break;
        }
      }
    } catch (const std::exception& ex) {
      e = {0, false, false, ex.what()};
    }
    e.sample = static_cast<std::size_t>(i);
    report.entries[static_cast<std::size_t>(i)] = std::move(e);
  }
  return report;
}

BigInt quasi_numerosity_e(std::uint64_t n) {
  if (n == 0) return 0;
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), n + 1, n);
  BigInt num = big(n + 1) * (p - 1);
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), big(n).get_mpz_t());
  return q;
}

CountingSequence e_sequence(std::uint64_t horizon) {
  std::vector<BigInt> prefix;
  for (std::uint64_t n = 0; n <= horizon; ++n) prefix.push_back(quasi_numerosity_e(n));
  return CountingSequence(std::move(prefix));
}

}  // namespace asynum
