#include <gtest/gtest.h>

#include <map>

#include "htour/classify.hpp"
#include "htour/families.hpp"
#include "htour/random.hpp"
#include "oracles.hpp"

using namespace htour;

namespace {

std::vector<HoleyHT> all_four_vertex() {
  std::vector<HoleyHT> out;
  const auto ts = all_triples(4);
  for (unsigned m = 0; m < 16; ++m) {
    HoleyHT A(4);
    for (int i = 0; i < 4; ++i) A.set(ts[i], (m >> i) & 1u ? Orientation::Plus : Orientation::Minus);
    out.push_back(A);
  }
  return out;
}

oracle::Allowed names(const ConstraintSet& s) {
  oracle::Allowed out;
  for (FourType t : kAllFourTypes)
    if (s.contains(t)) out.insert(std::string(to_string(t)));
  return out;
}

}  // namespace

TEST(FourType, Examples) {
  EXPECT_EQ(four_type(unhat({4, all_triples(4)}, LinearOrder::natural(4))), FourType::C4);
  EXPECT_EQ(four_type(unhat({4, {{1, 2, 3}, {1, 3, 4}}}, LinearOrder::natural(4))), FourType::H4);
  EXPECT_EQ(four_type(unhat({4, {{1, 2, 3}}}, LinearOrder::natural(4))), FourType::O4);
  EXPECT_EQ(four_type(unhat({4, {}}, LinearOrder::natural(4))), FourType::C4);
}

TEST(FourType, Errors) {
  EXPECT_THROW(four_type(HoleyHT(5)), InputError);
  EXPECT_THROW(four_type(HoleyHT(4)), HoleyInput);
}

TEST(Census, CountsMatchAutomorphismOracle) {
  const Census4 c = census4();
  EXPECT_EQ(c.total, 16);
  std::map<std::string, int> oracle_counts;
  for (const auto& A : all_four_vertex()) {
    const std::string name = oracle::type_name(oracle::tuples_of(A));
    ++oracle_counts[name];
    EXPECT_EQ(to_string(four_type(A)), name);
  }
  EXPECT_EQ(oracle_counts.size(), 3u);
  for (FourType t : kAllFourTypes) EXPECT_EQ(c.count(t), oracle_counts[std::string(to_string(t))]);
  EXPECT_EQ(c.count(FourType::H4), 2);
  EXPECT_EQ(c.count(FourType::O4), 8);
  EXPECT_EQ(c.count(FourType::C4), 6);
  // The O4 structures are exactly the odd-size hyperedge sets: C(4,1) + C(4,3).
  EXPECT_EQ(c.count(FourType::O4), 4 + 4);
}

TEST(Census, InvariantUnderAllRelabelings) {
  for (const auto& A : all_four_vertex())
    for (const auto& p : oracle::permutations(4)) EXPECT_EQ(four_type(relabel(A, p)), four_type(A));
}

TEST(Census, ParitySoundness) {
  for (const auto& A : all_four_vertex()) {
    bool odd_everywhere = true, even_everywhere = true;
    for (const auto& p : oracle::permutations(4)) {
      const bool odd = hat(A, LinearOrder(p)).hyperedges.size() % 2 == 1;
      odd_everywhere = odd_everywhere && odd;
      even_everywhere = even_everywhere && !odd;
    }
    EXPECT_TRUE(odd_everywhere || even_everywhere);
    EXPECT_EQ(four_type(A) == FourType::O4, odd_everywhere);
  }
}

TEST(ConstraintSetTest, ParseAndFlags) {
  EXPECT_EQ(ConstraintSet::parse("C4,O4"), ConstraintSet::h4_free());
  EXPECT_EQ(ConstraintSet::parse("o4, c4"), ConstraintSet::h4_free());
  EXPECT_EQ(ConstraintSet::parse("H4,O4,C4"), ConstraintSet::all());
  EXPECT_EQ(ConstraintSet::parse("C4,O4,H4").to_string(), "C4,O4,H4");
  EXPECT_EQ(ConstraintSet::even().to_string(), "C4,H4");
  EXPECT_THROW(ConstraintSet::parse("C5"), InputError);
  EXPECT_THROW(ConstraintSet::parse(""), InputError);
  EXPECT_TRUE(ConstraintSet::cyclic().subset_of(ConstraintSet::h4_free()));
  EXPECT_FALSE(ConstraintSet::even().subset_of(ConstraintSet::h4_free()));
  int amalgamation = 0;
  for (std::uint8_t m = 1; m < 8; ++m) amalgamation += ConstraintSet::from_mask(m).is_amalgamation_class();
  EXPECT_EQ(amalgamation, 4);
}

TEST(ClassMember, Examples) {
  const HoleyHT cyc = gen_cyclic(LinearOrder::natural(5));
  for (const auto& s : {ConstraintSet::cyclic(), ConstraintSet::h4_free(), ConstraintSet::even(),
                        ConstraintSet::all()})
    EXPECT_TRUE(class_member(cyc, s).member);

  const Membership m = class_member(h4_instance(), ConstraintSet::h4_free());
  EXPECT_FALSE(m.member);
  EXPECT_EQ(*m.witness, (Quadruple{1, 2, 3, 4}));
  EXPECT_EQ(*m.witness_type, FourType::H4);

  EXPECT_TRUE(class_member(from_tuples(4, {{1, 3, 4}, {1, 4, 2}}), ConstraintSet::h4_free()).member);
}

TEST(ClassMember, WitnessIsLeastOffender) {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const HoleyHT A = random_full(rng, 6);
    const Membership m = class_member(A, ConstraintSet::cyclic());
    if (m.member) continue;
    const auto q = *m.witness;
    EXPECT_NE(*quad_type(A, q), FourType::C4);
    // Nothing lexicographically smaller offends.
    for (Vertex a = 1; a <= 6; ++a)
      for (Vertex b = a + 1; b <= 6; ++b)
        for (Vertex c = b + 1; c <= 6; ++c)
          for (Vertex d = c + 1; d <= 6; ++d) {
            const Quadruple p{a, b, c, d};
            if (p < q) {
              EXPECT_EQ(*quad_type(A, p), FourType::C4);
            }
          }
  }
}

TEST(ClassMember, AgreesWithOracleMonotoneAndHereditary) {
  Rng rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    const HoleyHT A = random_near_member(rng, 6, static_cast<std::size_t>(uniform_int(rng, 0, 6)));
    EXPECT_TRUE(class_member(A, ConstraintSet::all()).member);
    for (std::uint8_t m = 1; m < 8; ++m) {
      const auto s = ConstraintSet::from_mask(m);
      const bool in = class_member(A, s).member;
      EXPECT_EQ(in, oracle::member(A, names(s)));
      for (std::uint8_t m2 = 1; m2 < 8; ++m2) {
        const auto s2 = ConstraintSet::from_mask(m2);
        if (s.subset_of(s2) && in) {
          EXPECT_TRUE(class_member(A, s2).member);
        }
      }
      if (in) {
        EXPECT_TRUE(class_member(induced(A, {1, 2, 4, 6}), s).member);
        EXPECT_TRUE(class_member(induced(A, {2, 3, 4, 5, 6}), s).member);
      }
    }
  }
}
