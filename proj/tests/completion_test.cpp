#include <gtest/gtest.h>

#include "htour/completion.hpp"
#include "htour/families.hpp"
#include "htour/random.hpp"
#include "oracles.hpp"

using namespace htour;

namespace {

const oracle::Allowed kH4Free{"C4", "O4"};

oracle::Allowed names(const ConstraintSet& s) {
  oracle::Allowed out;
  for (FourType t : kAllFourTypes)
    if (s.contains(t)) out.insert(std::string(to_string(t)));
  return out;
}

HoleyHT with(HoleyHT A, const Triple& t, Orientation o) {
  A.set(t, o);
  return A;
}

bool extends(const HoleyHT& A, const HoleyHT& C) {
  if (A.size() != C.size() || !C.is_full()) return false;
  for (std::size_t r = 0; r < A.cells().size(); ++r)
    if (A.at_rank(r) != Orientation::Hole && A.at_rank(r) != C.at_rank(r)) return false;
  return true;
}

}  // namespace

TEST(Propagate, GadgetImplications) {
  const HoleyHT G = gadget(LinkKind::Fwd);
  const auto idle = propagate(G, ConstraintSet::h4_free());
  EXPECT_TRUE(idle.ok());
  EXPECT_EQ(idle.structure, G);
  EXPECT_TRUE(idle.forced.empty());

  const auto r = propagate(with(G, {1, 2, 3}, Orientation::Plus), ConstraintSet::h4_free());
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.structure.at({2, 3, 4}), Orientation::Plus);
  ASSERT_EQ(r.forced.size(), 1u);
  EXPECT_EQ(r.forced[0], (ForcedValue{{2, 3, 4}, Orientation::Plus, {1, 2, 3, 4}}));

  // Contrapositive: ¬234 forces ¬123.
  const auto back = propagate(with(G, {2, 3, 4}, Orientation::Minus), ConstraintSet::h4_free());
  EXPECT_EQ(back.structure.at({1, 2, 3}), Orientation::Minus);

  const auto neg = propagate(with(gadget(LinkKind::FwdNeg), {1, 2, 3}, Orientation::Plus),
                             ConstraintSet::h4_free());
  EXPECT_EQ(neg.structure.at({1, 3, 4}), Orientation::Minus);
}

TEST(Propagate, ReportsConflict) {
  HoleyHT A = h4_instance();
  const auto r = propagate(A, ConstraintSet::h4_free());
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(*r.conflict, (Quadruple{1, 2, 3, 4}));
}

TEST(Complete, Examples) {
  const auto h4_free = ConstraintSet::h4_free();
  const SolveResult o6 = complete(gen_on(6), h4_free);
  ASSERT_TRUE(o6.sat());
  EXPECT_TRUE(extends(gen_on(6), *o6.completion));
  EXPECT_TRUE(oracle::member(*o6.completion, kH4Free));

  const SolveResult b6 = complete(gen_bn(6), h4_free);
  EXPECT_FALSE(b6.sat());
  EXPECT_FALSE(b6.completion.has_value());
  EXPECT_FALSE(b6.certificate.empty());
  EXPECT_TRUE(std::is_sorted(b6.certificate.begin(), b6.certificate.end()));
  EXPECT_EQ(std::adjacent_find(b6.certificate.begin(), b6.certificate.end()), b6.certificate.end());

  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const HoleyHT A = random_holey(rng, 7, static_cast<std::size_t>(uniform_int(rng, 0, 35)));
    EXPECT_TRUE(complete(A, ConstraintSet::all()).sat());
  }
}

TEST(Complete, SmallAndAlreadyBadInputs) {
  const SolveResult tiny = complete(HoleyHT(3), ConstraintSet::cyclic());
  ASSERT_TRUE(tiny.sat());
  EXPECT_EQ(tiny.completion->at({1, 2, 3}), Orientation::Plus);

  const SolveResult bad = complete(h4_instance(), ConstraintSet::h4_free());
  EXPECT_FALSE(bad.sat());
  EXPECT_EQ(bad.certificate, (std::vector<Quadruple>{{1, 2, 3, 4}}));
}

TEST(AllCompletions, Gadget) {
  const HoleyHT G = gadget(LinkKind::Fwd);
  const auto all = all_completions(G, ConstraintSet::h4_free());
  EXPECT_EQ(all.size(), 3u);
  EXPECT_EQ(oracle::sorted_cells(all), oracle::sorted_cells(oracle::completions(G, kH4Free)));
  for (const auto& c : all)
    EXPECT_FALSE(c.at({1, 2, 3}) == Orientation::Plus && c.at({2, 3, 4}) == Orientation::Minus);
}

TEST(AllCompletions, ChainForcesFirstTriple) {
  const auto all = all_completions(gen_on(6), ConstraintSet::h4_free());
  ASSERT_FALSE(all.empty());
  for (const auto& c : all) EXPECT_EQ(c.at({1, 2, 3}), Orientation::Minus);
  EXPECT_EQ(all.size(), oracle::completions(gen_on(6), kH4Free).size());
}

TEST(AllCompletions, GuardAndCap) {
  Rng rng(1);
  const HoleyHT A = random_holey(rng, 7, 31);
  EXPECT_THROW(all_completions(A, ConstraintSet::all()), GuardRefusal);
  EXPECT_EQ(all_completions(A, ConstraintSet::all(), 5).size(), 5u);
  EXPECT_TRUE(all_completions(A, ConstraintSet::all(), 0).empty());
}

TEST(AllCompletions, OrderIsLexicographicPlusFirst) {
  const auto all = all_completions(HoleyHT(4), ConstraintSet::all());
  ASSERT_EQ(all.size(), 16u);
  for (std::size_t i = 1; i < all.size(); ++i) {
    const std::vector<Orientation> a(all[i - 1].cells().begin(), all[i - 1].cells().end());
    const std::vector<Orientation> b(all[i].cells().begin(), all[i].cells().end());
    EXPECT_LT(a, b);
  }
}

TEST(Obstruction, Examples) {
  const auto h4_free = ConstraintSet::h4_free();
  EXPECT_TRUE(is_minimal_obstruction(gen_bn(7), h4_free).minimal);
  EXPECT_FALSE(is_minimal_obstruction(gen_on(6), h4_free).minimal);
  EXPECT_TRUE(is_minimal_obstruction(h4_instance(), h4_free).minimal);

  // At n = 6 two deletions already have no completion.
  const ObstructionReport b6 = is_minimal_obstruction(gen_bn(6), h4_free);
  EXPECT_FALSE(b6.minimal);
  EXPECT_FALSE(b6.whole.sat());
  std::vector<Vertex> failing;
  for (std::size_t i = 0; i < b6.deletions.size(); ++i)
    if (!b6.deletions[i].sat()) failing.push_back(static_cast<Vertex>(i + 1));
  EXPECT_EQ(failing, (std::vector<Vertex>{5, 8}));
}

TEST(Obstruction, JobsDoNotChangeResults) {
  const HoleyHT B = gen_bn(7);
  const auto one = is_minimal_obstruction(B, ConstraintSet::h4_free(), 1);
  const auto many = is_minimal_obstruction(B, ConstraintSet::h4_free(), 6);
  ASSERT_EQ(one.deletions.size(), many.deletions.size());
  for (std::size_t i = 0; i < one.deletions.size(); ++i) {
    EXPECT_EQ(one.deletions[i].completion, many.deletions[i].completion);
    EXPECT_EQ(one.deletions[i].stats.decisions, many.deletions[i].stats.decisions);
  }
  EXPECT_EQ(one.whole.certificate, many.whole.certificate);
}

TEST(Amalgamate, Examples) {
  const auto h4_free = ConstraintSet::h4_free();
  Rng rng(41);
  const HoleyHT A = gen_cyclic(random_order(rng, 6));
  const std::array<Vertex, 6> all{1, 2, 3, 4, 5, 6};
  const SolveResult self = amalgamate(A, A, all, h4_free);
  ASSERT_TRUE(self.sat());
  EXPECT_EQ(*self.completion, A);

  // Completions of the two chain structures without vertex 3, glued over {1,2}.
  const HoleyHT c1 = *complete(induced(gen_on(6), {1, 2, 4, 5, 6}), h4_free).completion;
  const HoleyHT c2 = *complete(induced(gen_onneg(6), {1, 2, 4, 5, 6}), h4_free).completion;
  const std::array<Vertex, 2> base{1, 2};
  const SolveResult glued = amalgamate(c1, c2, base, h4_free);
  ASSERT_TRUE(glued.sat());
  EXPECT_EQ(glued.completion->size(), 8);
  EXPECT_EQ(induced(*glued.completion, {1, 2, 3, 4, 5}), c1);

  const HoleyHT tri = gen_cyclic(LinearOrder::natural(3));
  const SolveResult disjoint = amalgamate(tri, tri, std::span<const Vertex>{}, ConstraintSet::cyclic());
  ASSERT_TRUE(disjoint.sat());
  EXPECT_TRUE(oracle::member(*disjoint.completion, {"C4"}));
}

TEST(Amalgamate, Preconditions) {
  const std::array<Vertex, 3> base{1, 2, 3};
  EXPECT_THROW(amalgamate(h4_instance(), h4_instance(), base, ConstraintSet::h4_free()), InputError);
  EXPECT_THROW(amalgamate(gen_on(6), gen_on(6), base, ConstraintSet::h4_free()), HoleyInput);
  const HoleyHT c = gen_cyclic(LinearOrder::natural(4));
  EXPECT_THROW(amalgamate(c, complement(c), base, ConstraintSet::h4_free()), InputError);
}

TEST(Solver, AgreesWithBruteForce) {
  Rng rng(51);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = uniform_int(rng, 4, 6);
    const HoleyHT A = random_near_member(rng, n, static_cast<std::size_t>(uniform_int(rng, 0, 10)));
    const ConstraintSet allowed = random_constraint_set(rng);
    const auto expected = oracle::completions(A, names(allowed));
    const SolveResult s = complete(A, allowed);
    ASSERT_EQ(s.sat(), !expected.empty()) << "trial " << trial;
    if (s.sat()) {
      EXPECT_TRUE(extends(A, *s.completion));
      EXPECT_TRUE(oracle::member(*s.completion, names(allowed)));
    }
    EXPECT_EQ(oracle::sorted_cells(all_completions(A, allowed)), oracle::sorted_cells(expected));

    // Forced values hold in every completion.
    const PropagateResult p = propagate(A, allowed);
    if (!p.ok()) {
      EXPECT_TRUE(expected.empty());
      continue;
    }
    for (const auto& f : p.forced)
      for (const auto& c : expected) EXPECT_EQ(c.at(f.triple), f.value);
  }
}

TEST(Solver, RestrictionOfCompletionCompletesRestriction) {
  Rng rng(61);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const HoleyHT A = random_near_member(rng, 7, static_cast<std::size_t>(uniform_int(rng, 0, 15)));
    const SolveResult s = complete(A, ConstraintSet::h4_free());
    if (!s.sat()) continue;
    ++checked;
    const std::vector<Vertex> S{1, 3, 4, 6, 7};
    const HoleyHT sub = induced(*s.completion, S);
    EXPECT_TRUE(extends(induced(A, S), sub));
    EXPECT_TRUE(class_member(sub, ConstraintSet::h4_free()).member);
  }
  EXPECT_GT(checked, 10);
}

TEST(Solver, Deterministic) {
  Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const HoleyHT A = random_near_member(rng, 8, 20);
    const SolveResult a = complete(A, ConstraintSet::h4_free());
    const SolveResult b = complete(A, ConstraintSet::h4_free());
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_EQ(a.completion, b.completion);
    EXPECT_EQ(a.certificate, b.certificate);
    EXPECT_EQ(a.stats.decisions, b.stats.decisions);
  }
}
