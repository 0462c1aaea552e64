#include <gtest/gtest.h>

#include <algorithm>

#include "gauss/construct.hpp"
#include "gauss/spec_string.hpp"
#include "oracles.hpp"

using namespace gauss;

namespace {

Group make(const char* spec) { return construct(parse_spec(spec)); }

std::uint64_t count_order(const Group& g, std::uint64_t d) { return oracle::count_of_order(g.table(), g.order(), d); }

}  // namespace

TEST(Construct, CyclicIsAdditionModN) {
  const auto g = make("cyclic:6");
  ASSERT_EQ(g.order(), 6U);
  for (Element a = 0; a < 6; ++a) {
    for (Element b = 0; b < 6; ++b) EXPECT_EQ(g.mul(a, b), (a + b) % 6);
  }
}

TEST(Construct, DihedralThreeHasThreeInvolutions) {
  const auto g = make("dihedral:3");
  EXPECT_EQ(g.order(), 6U);
  EXPECT_FALSE(is_abelian(g));
  EXPECT_EQ(count_order(g, 2), 3U);
}

TEST(Construct, QuaternionEightHasUniqueInvolution) {
  const auto g = make("quaternion:8");
  EXPECT_EQ(g.order(), 8U);
  EXPECT_EQ(count_order(g, 2), 1U);
  EXPECT_EQ(count_order(g, 4), 6U);
  EXPECT_FALSE(is_abelian(g));
}

TEST(Construct, SemidirectOrderTwentyOne) {
  const auto g = make("sdp:7,3,2");
  EXPECT_EQ(g.order(), 21U);
  EXPECT_FALSE(is_abelian(g));
  EXPECT_EQ(count_order(g, 3), 14U);
  EXPECT_EQ(count_order(g, 7), 6U);
}

TEST(Construct, EveryFamilySatisfiesGroupAxioms) {
  for (const char* s : {"cyclic:1", "cyclic:12", "abelian:2,4,3", "dihedral:2", "dihedral:9", "quaternion:16",
                        "semidihedral:32", "modular:2,4", "modular:3,3", "heisenberg:3", "sdp:7,3,2", "sdp:15,2,4",
                        "product:(dihedral:4)x(cyclic:3)", "product:(quaternion:8)x(heisenberg:3)"}) {
    const auto g = make(s);
    EXPECT_NO_THROW(validate_cayley_table(g.order(), g.table())) << s;
  }
}

TEST(Construct, PresentationsHold) {
  // Q_16: x = index 1 of order 8, y = index 8; y^2 = x^4, y^-1 x y = x^-1
  const auto q = make("quaternion:16");
  EXPECT_EQ(q.order_of(1), 8U);
  EXPECT_EQ(q.mul(8, 8), q.power(1, 4));
  EXPECT_EQ(q.mul(q.mul(q.inverse(8), 1), 8), q.inverse(1));
  // SD_16: y^-1 x y = x^3
  const auto sd = make("semidihedral:16");
  EXPECT_EQ(sd.order_of(8), 2U);
  EXPECT_EQ(sd.mul(sd.mul(8, 1), 8), sd.power(1, 3));
  // M(27): x of order 9, y of order 3, y^-1 x y = x^4
  const auto m = make("modular:3,3");
  EXPECT_EQ(m.order_of(1), 9U);
  EXPECT_EQ(m.order_of(9), 3U);
  EXPECT_EQ(m.mul(m.mul(m.inverse(9), 1), 9), m.power(1, 4));
}

TEST(Construct, HeisenbergGeneratorsDoNotCommute) {
  const auto g = make("heisenberg:3");
  EXPECT_EQ(g.order(), 27U);
  EXPECT_NE(g.mul(1, 3), g.mul(3, 1));
  EXPECT_FALSE(is_abelian(g));
  EXPECT_EQ(g.exponent(), 3U);
}

TEST(Construct, RejectsInvalidParameters) {
  auto kind_of = [](const char* s) {
    try {
      (void)make(s);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::IoError;
  };
  EXPECT_EQ(kind_of("dihedral:1"), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of("quaternion:4"), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of("quaternion:12"), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of("semidihedral:8"), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of("modular:2,3"), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of("modular:4,4"), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of("heisenberg:2"), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of("sdp:7,3,1"), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of("sdp:7,3,3"), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of("sdp:6,3,5"), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of("abelian:6"), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of("cyclic:20001"), ErrorKind::OrderOverflow);
  EXPECT_EQ(kind_of("product:(cyclic:200)x(cyclic:200)"), ErrorKind::OrderOverflow);
}

TEST(Construct, ConfigurableOrderCap) {
  Limits small{.max_order = 10, .max_subgroups = 100};
  EXPECT_THROW(construct(parse_spec("dihedral:6"), small), Error);
  EXPECT_NO_THROW(construct(parse_spec("dihedral:5"), small));
}

TEST(Construct, DeterministicIndexing) {
  const auto a = make("product:(dihedral:4)x(cyclic:3)");
  const auto b = make("product:(dihedral:4)x(cyclic:3)");
  EXPECT_TRUE(std::equal(a.table().begin(), a.table().end(), b.table().begin()));
}

TEST(DirectProduct, KleinFourGroup) {
  const auto z2 = make("cyclic:2");
  const auto v = direct_product({z2, z2});
  EXPECT_EQ(v.order(), 4U);
  EXPECT_EQ(exponent(v), 2U);
  EXPECT_FALSE(is_cyclic(v));
}

TEST(DirectProduct, TrivialFactorKeepsTable) {
  const auto g = make("dihedral:5");
  const auto p = direct_product({make("cyclic:1"), g});
  EXPECT_TRUE(std::equal(g.table().begin(), g.table().end(), p.table().begin()));
}

TEST(DirectProduct, CoprimeCyclicIsCyclic) {
  const auto g = direct_product({make("cyclic:4"), make("cyclic:9")});
  EXPECT_EQ(g.order(), 36U);
  EXPECT_EQ(exponent(g), 36U);
  EXPECT_TRUE(is_cyclic(g));
}

TEST(DirectProduct, Overflow) {
  Limits small{.max_order = 50, .max_subgroups = 100};
  try {
    direct_product({make("cyclic:8"), make("cyclic:9")}, small);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderOverflow);
  }
}

TEST(ElementOrder, Basics) {
  const auto z12 = make("cyclic:12");
  EXPECT_EQ(element_order(z12, 0), 1U);
  EXPECT_EQ(element_order(z12, 4), 3U);
  EXPECT_THROW(element_order(z12, 12), Error);
  const auto q8 = make("quaternion:8");
  for (Element a = 0; a < 8; ++a) {
    if (q8.mul(a, a) != 0) {
      EXPECT_EQ(element_order(q8, a), 4U);
    }
  }
}

TEST(ElementOrder, MatchesNaivePowering) {
  for (const char* s : {"dihedral:12", "semidihedral:32", "modular:3,4", "sdp:13,3,3", "product:(quaternion:8)x(cyclic:5)"}) {
    const auto g = make(s);
    for (Element a = 0; a < g.order(); ++a) EXPECT_EQ(g.order_of(a), oracle::order_of(g.table(), g.order(), a)) << s;
  }
}

TEST(Exponent, Examples) {
  EXPECT_EQ(exponent(make("cyclic:10")), 10U);
  EXPECT_EQ(exponent(make("abelian:2,2")), 2U);
  const auto d6 = make("dihedral:3");
  EXPECT_EQ(exponent(d6), 6U);
  EXPECT_EQ(count_order(d6, 6), 0U);
}

TEST(IsCyclic, ExponentEqualToOrderIsNotEnough) {
  EXPECT_TRUE(is_cyclic(make("cyclic:6")));
  EXPECT_FALSE(is_cyclic(make("abelian:2,2")));
  const auto d6 = make("dihedral:3");
  EXPECT_EQ(exponent(d6), d6.order());
  EXPECT_FALSE(is_cyclic(d6));
}

TEST(IsAbelian, Examples) {
  EXPECT_TRUE(is_abelian(make("cyclic:8")));
  EXPECT_FALSE(is_abelian(make("dihedral:4")));
  EXPECT_FALSE(is_abelian(make("heisenberg:3")));
  EXPECT_TRUE(is_abelian(make("dihedral:2")));
}

TEST(AbelianInvariants, Examples) {
  EXPECT_EQ(abelian_invariants(make("cyclic:12")).parts, (std::vector<std::uint64_t>{4, 3}));
  const auto klein = abelian_invariants(make("abelian:2,2"));
  EXPECT_EQ(klein.parts, (std::vector<std::uint64_t>{2, 2}));
  EXPECT_EQ(klein.rank(2), 2U);
  EXPECT_EQ(abelian_invariants(make("abelian:2,4,8")).parts, (std::vector<std::uint64_t>{2, 4, 8}));
  EXPECT_EQ(abelian_invariants(make("cyclic:1")).parts.size(), 0U);
}

TEST(AbelianInvariants, RejectsNonAbelian) {
  try {
    abelian_invariants(make("dihedral:3"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAbelian);
  }
}

TEST(AbelianInvariants, RoundTripsEveryTypeUpTo64) {
  // Partitions of each prime exponent, assembled into types with product <= 64.
  const std::vector<std::vector<std::uint64_t>> types = {
      {2}, {4}, {2, 2}, {8}, {2, 4}, {2, 2, 2}, {16}, {4, 4}, {2, 8}, {2, 2, 4}, {2, 2, 2, 2}, {32}, {2, 16},
      {4, 8}, {2, 2, 8}, {2, 4, 4}, {2, 2, 2, 4}, {2, 2, 2, 2, 2}, {64}, {8, 8}, {2, 4, 8}, {4, 4, 4}, {2, 2, 16},
      {3}, {9}, {3, 3}, {27}, {3, 9}, {3, 3, 3}, {3, 3, 5}, {2, 2, 3, 3}, {5, 5}, {7, 7}, {2, 2, 2, 7}};
  for (const auto& parts : types) {
    const auto g = construct(GroupSpec{AbelianOfType{parts}});
    auto expected = parts;
    std::sort(expected.begin(), expected.end(), [](auto a, auto b) {
      const auto pa = nt::factorize(a)[0].prime, pb = nt::factorize(b)[0].prime;
      return pa != pb ? pa < pb : a < b;
    });
    EXPECT_EQ(abelian_invariants(g).parts, expected);
  }
}

TEST(Validation, RejectsBadTables) {
  // identity not at 0
  EXPECT_THROW(Group::from_table(2, {1, 0, 0, 1}), Error);
  // Latin square failure
  try {
    Group::from_table(3, {0, 1, 2, 1, 1, 0, 2, 0, 1});
    FAIL();
  } catch (const NotAGroupError& e) {
    EXPECT_EQ(e.axiom(), "latin-square row");
  }
}

TEST(SpecString, RoundTrip) {
  for (const char* s : {"cyclic:6", "abelian:2,2,4", "dihedral:6", "quaternion:16", "semidihedral:16", "modular:3,4",
                        "heisenberg:3", "sdp:7,3,2", "product:(cyclic:4)x(cyclic:9)",
                        "product:(product:(cyclic:2)x(cyclic:3))x(dihedral:5)"}) {
    EXPECT_EQ(format_spec(parse_spec(s)), s);
  }
}

TEST(SpecString, Errors) {
  EXPECT_THROW(parse_spec("cyclic"), ParseError);
  EXPECT_THROW(parse_spec("cyclic:"), ParseError);
  EXPECT_THROW(parse_spec("torus:3"), ParseError);
  EXPECT_THROW(parse_spec("sdp:7,3"), ParseError);
  EXPECT_THROW(parse_spec("product:(cyclic:2)(cyclic:3)"), ParseError);
  EXPECT_THROW(parse_spec("cyclic:6x"), ParseError);
}
