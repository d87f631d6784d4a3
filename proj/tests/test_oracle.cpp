#include "asynum/error.hpp"
#include "asynum/oracle.hpp"
#include "doctest.h"

using namespace asynum;

namespace {
const PeriodicSet odds = PeriodicSet::progression(1, 2);
const PeriodicSet evens = PeriodicSet::progression(0, 2);
const PeriodicSet threes = PeriodicSet::progression(0, 3);

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return ErrorCode::InvalidArgument;
}
}  // namespace

TEST_CASE("commit") {
  FilterModel empty;
  auto m = empty.commit(odds);
  CHECK(m.commitments().size() == 1);
  CHECK(empty.commitments().empty());
  CHECK(code_of([&] { m.commit(evens); }) == ErrorCode::InconsistentCommitment);
  auto m2 = m.commit(threes);
  CHECK(m2.core() == PeriodicSet::residue_classes(6, {3}));
  CHECK(code_of([&] { empty.commit(PeriodicSet::range(0, 9)); }) == ErrorCode::FiniteSetCommitted);
}

TEST_CASE("query") {
  FilterModel empty;
  auto m = empty.commit(odds);
  CHECK(empty.query(PeriodicSet::range(0, 9).complement()) == Membership::Member);
  CHECK(m.query(PeriodicSet::range(0, 9).complement()) == Membership::Member);
  CHECK(m.query(evens) == Membership::NonMember);
  CHECK(empty.query(odds) == Membership::Undecided);
  CHECK(empty.query(PeriodicSet::range(0, 9)) == Membership::NonMember);
  CHECK(m.query(IndexSet::explicit_set({true, true}, IndexSet::TailTag::Unknown)) == Membership::Undecided);
}

TEST_CASE("witnesses") {
  auto m = FilterModel().commit(odds);
  auto c = m.decided_superset_witness(odds.unite(PeriodicSet::singleton(0)));
  CHECK(c.set == odds);
  CHECK(c.used == std::vector<std::size_t>{0});
  auto m2 = m.commit(threes);
  auto c2 = m2.decided_superset_witness(PeriodicSet::residue_classes(6, {3}));
  CHECK(c2.set == odds.intersect(threes));
  CHECK(c2.used.size() == 2);
  CHECK(code_of([&] { FilterModel().decided_superset_witness(odds); }) == ErrorCode::NotAMember);
  auto f = FilterModel().decided_superset_witness(PeriodicSet::range(0, 3).complement());
  CHECK(f.forced());
}

TEST_CASE("monotone and consistent") {
  std::vector<PeriodicSet> probes = {odds, evens, threes, PeriodicSet::residue_classes(4, {1}),
                                     PeriodicSet::range(0, 5).complement(), PeriodicSet::residue_classes(5, {0, 2})};
  FilterModel m;
  std::vector<FilterModel> chain{m};
  for (const auto& s : {PeriodicSet::progression(1, 2), PeriodicSet::residue_classes(3, {0, 1}),
                        PeriodicSet::residue_classes(5, {1, 2, 3})}) {
    m = m.commit(s);
    chain.push_back(m);
  }
  for (const auto& p : probes) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      auto before = chain[i].query(p), after = chain[i + 1].query(p);
      if (before != Membership::Undecided) CHECK(before == after);
    }
    for (const auto& model : chain)
      CHECK_FALSE((model.query(p) == Membership::Member && model.query(p.complement()) == Membership::Member));
  }
  const auto& cs = m.commitments();
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i; j < cs.size(); ++j) {
      CHECK(cs[i].intersect(cs[j]).is_infinite());
      for (std::size_t k = j; k < cs.size(); ++k) CHECK(cs[i].intersect(cs[j]).intersect(cs[k]).is_infinite());
    }
}

TEST_CASE("oracle file") {
  auto m = FilterModel("x").commit(odds).commit(threes);
  auto back = FilterModel::load(m.save());
  CHECK(back.core() == m.core());
  CHECK(back.commitments() == m.commitments());
  auto text = "# odds\ncommit periodic mod=2 residues=1\n\ncommit periodic mod=2 residues=0\n";
  try {
    FilterModel::load(text);
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InconsistentCommitment);
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  CHECK(code_of([] { FilterModel::load("bogus line\n"); }) == ErrorCode::ParseError);
}
