#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "htour/families.hpp"
#include "htour/random.hpp"
#include "htour/ramsey.hpp"
#include "oracles.hpp"

using namespace htour;

namespace {

OrderedHT cyclic(int n) {
  return expand(gen_cyclic(LinearOrder::natural(n)), ExpansionKind::Cyclic, LinearOrder::natural(n));
}

// True if some copy of B in C has all its A-embeddings coloured alike.
bool has_monochromatic_copy(const OrderedHT& C, const OrderedHT& B, const OrderedHT& A,
                            const std::vector<Embedding>& a_in_c, const std::vector<std::uint8_t>& colour) {
  const auto a_in_b = embeddings(A, B);
  for (const auto& g : embeddings(B, C)) {
    std::set<std::uint8_t> seen;
    for (const auto& f : a_in_b) {
      Embedding composed(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) composed[i] = g[f[i] - 1];
      const auto it = std::find(a_in_c.begin(), a_in_c.end(), composed);
      seen.insert(colour[static_cast<std::size_t>(it - a_in_c.begin())]);
    }
    if (seen.size() <= 1) return true;
  }
  return false;
}

}  // namespace

TEST(Embeddings, Examples) {
  const OrderedHT C = cyclic(6);
  EXPECT_EQ(embeddings(cyclic(1), C).size(), 6u);
  EXPECT_EQ(embeddings(cyclic(2), C).size(), 15u);
  EXPECT_EQ(embeddings(cyclic(3), C).size(), 20u);
  const auto self = embeddings(C, C);
  ASSERT_EQ(self.size(), 1u);
  EXPECT_EQ(self[0], (Embedding{1, 2, 3, 4, 5, 6}));
  EXPECT_TRUE(embeddings(cyclic(7), C).empty());

  const OrderedHT all4{HoleyHT(4), LinearOrder::natural(4), std::nullopt, ExpansionKind::All};
  EXPECT_THROW(embeddings(all4, C), InputError);
}

TEST(Embeddings, LexicographicAndDuplicateFree) {
  const auto e = embeddings(cyclic(3), cyclic(6));
  EXPECT_TRUE(std::is_sorted(e.begin(), e.end()));
  EXPECT_EQ(std::set<Embedding>(e.begin(), e.end()).size(), e.size());
}

TEST(Embeddings, EvenRespectsGraph) {
  SimpleGraph g(4);
  g.add_edge(1, 2);
  const auto ord = LinearOrder::natural(4);
  const OrderedHT C = expand(gen_even(g, ord), ExpansionKind::Even, ord, g);
  SimpleGraph e2(2);
  e2.add_edge(1, 2);
  const OrderedHT edge = expand(HoleyHT(2), ExpansionKind::Even, LinearOrder::natural(2), e2);
  const OrderedHT non = expand(HoleyHT(2), ExpansionKind::Even, LinearOrder::natural(2), SimpleGraph(2));
  EXPECT_EQ(embeddings(edge, C), (std::vector<Embedding>{{1, 2}}));
  EXPECT_EQ(embeddings(non, C).size(), 5u);
}

TEST(Arrow, ClassicalTriangleCases) {
  const ArrowVerdict six = arrow_check(cyclic(6), cyclic(3), cyclic(2), {});
  EXPECT_TRUE(six.holds);
  EXPECT_EQ(six.a_embeddings.size(), 15u);
  EXPECT_EQ(six.b_copies, 20u);

  const ArrowVerdict five = arrow_check(cyclic(5), cyclic(3), cyclic(2), {});
  ASSERT_FALSE(five.holds);
  ASSERT_TRUE(five.counterexample.has_value());
  const auto& col = *five.counterexample;
  EXPECT_FALSE(has_monochromatic_copy(cyclic(5), cyclic(3), cyclic(2), five.a_embeddings, col));
  // As a colouring of the pairs of K5: no triangle is monochromatic.
  auto colour_of = [&](int x, int y) {
    const auto it = std::find(five.a_embeddings.begin(), five.a_embeddings.end(), Embedding{x, y});
    return col[static_cast<std::size_t>(it - five.a_embeddings.begin())];
  };
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b)
      for (int c = b + 1; c <= 5; ++c)
        EXPECT_FALSE(colour_of(a, b) == colour_of(a, c) && colour_of(a, c) == colour_of(b, c));
}

TEST(Arrow, PointCases) {
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(arrow_check(cyclic(n), cyclic(1), cyclic(1), {}).holds);
}

TEST(Arrow, EqualAAndBReducesToExistence) {
  for (int c = 1; c <= 5; ++c)
    for (int b = 1; b <= 4; ++b)
      EXPECT_EQ(arrow_check(cyclic(c), cyclic(b), cyclic(b), {}).holds,
                !embeddings(cyclic(b), cyclic(c)).empty())
          << c << "," << b;
}

TEST(Arrow, MonotoneInC) {
  for (int b = 2; b <= 3; ++b)
    for (int a = 1; a < b; ++a) {
      bool held = false;
      for (int c = b; c <= 7; ++c) {
        const bool h = arrow_check(cyclic(c), cyclic(b), cyclic(a), {true, false, 1}).holds;
        if (held) {
          EXPECT_TRUE(h) << c << "," << b << "," << a;
        }
        held = held || h;
      }
      EXPECT_TRUE(held);
    }
}

TEST(Arrow, PruneMatchesExhaustive) {
  for (int c = 2; c <= 6; ++c)
    for (int b = 1; b <= 3; ++b)
      for (int a = 1; a <= b; ++a) {
        const auto ex = arrow_check(cyclic(c), cyclic(b), cyclic(a), {});
        const auto pr = arrow_check(cyclic(c), cyclic(b), cyclic(a), {true, false, 1});
        EXPECT_EQ(ex.holds, pr.holds);
        EXPECT_EQ(ex.counterexample, pr.counterexample);
      }
}

TEST(Arrow, JobsGiveTheSameCounterexample) {
  const auto one = arrow_check(cyclic(5), cyclic(3), cyclic(2), {false, false, 1});
  const auto many = arrow_check(cyclic(5), cyclic(3), cyclic(2), {false, false, 8});
  EXPECT_EQ(one.counterexample, many.counterexample);
  EXPECT_EQ(arrow_check(cyclic(6), cyclic(3), cyclic(2), {false, false, 4}).holds, true);
}

TEST(Arrow, Guard) {
  EXPECT_THROW(arrow_check(cyclic(8), cyclic(3), cyclic(2), {}), GuardRefusal);
  EXPECT_THROW(arrow_check(cyclic(8), cyclic(3), cyclic(2), {false, true, 1}), GuardRefusal);
  EXPECT_TRUE(arrow_check(cyclic(8), cyclic(3), cyclic(2), {true, true, 1}).holds);
}

TEST(Orders, CompatibleCyclicOrders) {
  const auto four = compatible_orders_cyclic(gen_cyclic(LinearOrder::natural(4)));
  ASSERT_EQ(four.size(), 4u);
  EXPECT_EQ(four[0].perm(), (std::vector<Vertex>{1, 2, 3, 4}));
  EXPECT_EQ(four[1].perm(), (std::vector<Vertex>{2, 3, 4, 1}));
  EXPECT_EQ(four[2].perm(), (std::vector<Vertex>{3, 4, 1, 2}));
  EXPECT_EQ(four[3].perm(), (std::vector<Vertex>{4, 1, 2, 3}));
  EXPECT_EQ(compatible_orders_cyclic(gen_cyclic(LinearOrder::natural(3))).size(), 3u);

  Rng rng(91);
  for (int n = 3; n <= 7; ++n) {
    const HoleyHT A = gen_cyclic(random_order(rng, n));
    const auto orders = compatible_orders_cyclic(A);
    ASSERT_EQ(orders.size(), static_cast<std::size_t>(n));
    std::set<Vertex> least;
    for (const auto& o : orders) {
      least.insert(o.perm()[0]);
      EXPECT_NO_THROW(expand(A, ExpansionKind::Cyclic, o));
    }
    EXPECT_EQ(least.size(), static_cast<std::size_t>(n));
    // No other order works (brute force at small n).
    if (n <= 6) {
      std::size_t valid = 0;
      for (const auto& p : oracle::permutations(n)) valid += is_cyclic_under(A, LinearOrder(p));
      EXPECT_EQ(valid, orders.size());
    }
  }
  EXPECT_THROW(compatible_orders_cyclic(h4_instance()), InputError);
  EXPECT_THROW(compatible_orders_cyclic(HoleyHT(4)), InputError);
}

TEST(Expand, Examples) {
  const HoleyHT C5 = gen_cyclic(LinearOrder::natural(5));
  EXPECT_NO_THROW(expand(C5, ExpansionKind::Cyclic, LinearOrder::natural(5)));
  EXPECT_THROW(expand(C5, ExpansionKind::Cyclic, LinearOrder({5, 4, 3, 2, 1})), ExpansionMismatch);
  EXPECT_THROW(expand(C5, ExpansionKind::Cyclic, LinearOrder::natural(4)), ExpansionMismatch);

  Rng rng(93);
  const SimpleGraph g = random_graph(rng, 6);
  const LinearOrder ord = random_order(rng, 6);
  EXPECT_NO_THROW(expand(gen_even(g, ord), ExpansionKind::Even, ord, g));
  SimpleGraph other = g;
  other.add_edge(1, 2);
  if (!g.has_edge(1, 2)) {
    EXPECT_THROW(expand(gen_even(g, ord), ExpansionKind::Even, ord, other), ExpansionMismatch);
  }
  EXPECT_THROW(expand(gen_even(g, ord), ExpansionKind::Even, ord), ExpansionMismatch);
  EXPECT_THROW(expand(C5, ExpansionKind::Cyclic, LinearOrder::natural(5), SimpleGraph(5)), ExpansionMismatch);
  EXPECT_NO_THROW(expand(HoleyHT(5), ExpansionKind::All, LinearOrder::natural(5)));
  EXPECT_EQ(parse_expansion_kind("even"), ExpansionKind::Even);
  EXPECT_THROW(parse_expansion_kind("odd"), InputError);
}

TEST(FillHoles, Behaviour) {
  Rng rng(95);
  const OrderedHT full{random_full(rng, 5), LinearOrder::natural(5), std::nullopt, ExpansionKind::All};
  EXPECT_EQ(fill_holes_ordered(full).ht, full.ht);
  EXPECT_THROW(fill_holes_ordered(cyclic(4)), InputError);

  for (int trial = 0; trial < 30; ++trial) {
    const OrderedHT C{random_holey(rng, 6, static_cast<std::size_t>(uniform_int(rng, 1, 12))),
                      random_order(rng, 6), std::nullopt, ExpansionKind::All};
    const OrderedHT F = fill_holes_ordered(C);
    EXPECT_EQ(F.ht.hole_count(), 0u);
    const OrderedHT A{random_full(rng, 3), LinearOrder::natural(3), std::nullopt, ExpansionKind::All};
    const auto before = embeddings(A, C);
    const auto after = embeddings(A, F);
    for (const auto& e : before) EXPECT_NE(std::find(after.begin(), after.end(), e), after.end());
  }
}
