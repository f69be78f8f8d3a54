#include <map>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace galois_span;

namespace {

bool axioms_hold(const FiniteGroup& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    if (g.mul(a, g.inv(a)) != g.identity()) return false;
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  }
  return true;
}

// Multiset of element orders, a cheap isomorphism invariant.
std::map<int, int> order_profile(const FiniteGroup& g) {
  std::map<int, int> m;
  for (int a = 0; a < g.order(); ++a) {
    int k = 1;
    for (int x = a; x != g.identity(); x = g.mul(x, a)) ++k;
    ++m[k];
  }
  return m;
}

}  // namespace

TEST(Group, SpecsParseToExpectedOrders) {
  const std::map<std::string, int> orders{{"C1", 1},     {"C7", 7},      {"C2xC6", 12}, {"C2^3", 8},   {"D4", 8},
                                          {"D12", 24},   {"Q8", 8},      {"Q16", 16},   {"Dic3", 12},  {"Dic6", 24},
                                          {"S4", 24},    {"A4", 12},     {"C2xA4", 24}, {"C3xS3", 18}, {"C4^2", 16},
                                          {"perm:(1 2 3);(1 2)", 6}};
  for (const auto& [spec, n] : orders) {
    const FiniteGroup g = parse_group_spec(spec);
    EXPECT_EQ(g.order(), n) << spec;
    EXPECT_TRUE(axioms_hold(g)) << spec;
  }
  EXPECT_THROW(parse_group_spec("X5"), Error);
  EXPECT_THROW(parse_group_spec("C2xx"), Error);
  EXPECT_EQ(parse_group_spec("Q12").order(), 12);
}

TEST(Group, ElementOrderProfiles) {
  EXPECT_EQ(order_profile(parse_group_spec("Q8")), (std::map<int, int>{{1, 1}, {2, 1}, {4, 6}}));
  EXPECT_EQ(order_profile(parse_group_spec("D4")), (std::map<int, int>{{1, 1}, {2, 5}, {4, 2}}));
  EXPECT_EQ(order_profile(parse_group_spec("A4")), (std::map<int, int>{{1, 1}, {2, 3}, {3, 8}}));
  EXPECT_EQ(order_profile(parse_group_spec("Dic3")), (std::map<int, int>{{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}}));
}

TEST(Group, Predicates) {
  EXPECT_TRUE(is_cyclic(parse_group_spec("C2xC3")));
  EXPECT_FALSE(is_cyclic(parse_group_spec("C2xC2")));
  EXPECT_TRUE(is_abelian(parse_group_spec("C2xC6")));
  EXPECT_FALSE(is_abelian(parse_group_spec("S3")));
  EXPECT_EQ(exponent(parse_group_spec("C2xC6")), 6);
}

TEST(Group, ConjugacyClassCounts) {
  const std::map<std::string, std::size_t> counts{{"S3", 3}, {"D4", 5}, {"Q8", 5}, {"A4", 4}, {"S4", 5}, {"Dic3", 6}, {"D5", 4}};
  for (const auto& [spec, k] : counts) {
    const FiniteGroup g = parse_group_spec(spec);
    const auto cls = conjugacy_classes(g);
    EXPECT_EQ(cls.size(), k) << spec;
    std::size_t total = 0;
    for (const auto& c : cls) total += c.size();
    EXPECT_EQ(total, static_cast<std::size_t>(g.order()));
  }
}

TEST(Group, SubgroupCounts) {
  const std::map<std::string, std::size_t> counts{{"S3", 6},  {"D4", 10},  {"Q8", 6},    {"C2xC6", 10},
                                                  {"A4", 10}, {"S4", 30},  {"C2^3", 16}, {"C7", 2}};
  for (const auto& [spec, k] : counts) {
    const FiniteGroup g = parse_group_spec(spec);
    const auto subs = all_subgroups(g);
    EXPECT_EQ(subs.size(), k) << spec;
    for (const auto& h : subs) {
      EXPECT_TRUE(is_subgroup(g, h));
      EXPECT_EQ(g.order() % h.order(), 0);
    }
  }
  EXPECT_EQ(cyclic_subgroups(parse_group_spec("Q8")).size(), 5u);
  EXPECT_EQ(cyclic_subgroups(parse_group_spec("C2xC6")).size(), 8u);
}

TEST(Group, OrderGuard) {
  EXPECT_THROW(all_subgroups(parse_group_spec("S5"), 100), Error);
}

TEST(Group, NormalityAndQuotients) {
  const FiniteGroup s3 = parse_group_spec("S3");
  const Subgroup a3 = generated_subgroup(s3, {s3.element("(1 2 3)")});
  const Subgroup c2 = generated_subgroup(s3, {s3.element("(1 2)")});
  EXPECT_TRUE(is_normal(s3, a3));
  EXPECT_FALSE(is_normal(s3, c2));
  EXPECT_THROW(quotient_group(s3, c2), Error);
  const QuotientGroup q = quotient_group(s3, a3);
  EXPECT_EQ(q.group.order(), 2);
  for (int a = 0; a < s3.order(); ++a)
    for (int b = 0; b < s3.order(); ++b)
      EXPECT_EQ(q.projection[static_cast<std::size_t>(s3.mul(a, b))],
                q.group.mul(q.projection[static_cast<std::size_t>(a)], q.projection[static_cast<std::size_t>(b)]));
  const Subgroup other = generated_subgroup(s3, {s3.element("(1 3)")});
  EXPECT_TRUE(are_conjugate_subgroups(s3, c2, other));
}

TEST(Group, CosetsPartitionTheGroup) {
  const FiniteGroup g = parse_group_spec("D4");
  for (const auto& h : all_subgroups(g)) {
    const auto cosets = left_cosets(g, h);
    EXPECT_EQ(cosets.size(), static_cast<std::size_t>(index(g, h)));
    std::set<int> seen;
    for (const auto& c : cosets) seen.insert(c.begin(), c.end());
    EXPECT_EQ(seen.size(), static_cast<std::size_t>(g.order()));
  }
}

TEST(Group, ElementLookup) {
  const FiniteGroup s3 = parse_group_spec("S3");
  EXPECT_EQ(s3.element("(12)"), s3.element("(1 2)"));
  EXPECT_EQ(element_order(s3, s3.element("(123)")), 3);
  const FiniteGroup q8 = parse_group_spec("Q8");
  EXPECT_EQ(q8.mul(q8.element("i"), q8.element("j")), q8.element("k"));
  EXPECT_THROW(q8.element("z"), Error);
}

TEST(Group, CayleyTableValidation) {
  EXPECT_THROW(from_cayley_table({{0, 1}, {0, 1}}), Error);
  const FiniteGroup c2 = from_cayley_table({{0, 1}, {1, 0}});
  EXPECT_EQ(c2.order(), 2);
}
