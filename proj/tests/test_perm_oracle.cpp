#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bollobas/constructions.hpp"
#include "bollobas/errors.hpp"
#include "bollobas/perm_oracle.hpp"
#include "oracles.hpp"

using namespace bollobas;

TEST(BlockPermutations, Counts) {
    const Family one(GroundSet(2), 2, {DPartition{{1}, {2}}});
    EXPECT_EQ(block_permutations(one).size(), 2U);

    const GroundSet blocked(3, {ElementSet{1, 2}, ElementSet{3}});
    const Family two(blocked, 2, {DPartition{{1}, {2, 3}}});
    const auto perms = block_permutations(two);
    EXPECT_EQ(perms.size(), 2U);
    for (const auto& p : perms) EXPECT_EQ(p(3), 3);

    const Family empty(GroundSet(3), 2, {});
    EXPECT_EQ(block_permutations(empty).size(), 1U);
    EXPECT_EQ(block_permutation_count(empty), 1);
}

TEST(BlockPermutations, EachExactlyOnceAndBlockPreserving) {
    const GroundSet g(6, {ElementSet{1, 4, 5}, ElementSet{2, 3, 6}});
    const Family f(g, 2, {DPartition{{1, 2}, {3, 4}}, DPartition{{5}, {6}}});
    std::set<std::vector<int>> seen;
    for_each_block_permutation(f, [&](const BlockPermutation& p) {
        for (int x : {1, 4, 5}) EXPECT_TRUE(x == p(1) || x == p(4) || x == p(5));
        EXPECT_TRUE(seen.insert(p.image).second);
    });
    EXPECT_EQ(seen.size(), 36U);
    EXPECT_THROW(for_each_block_permutation(f, [](const BlockPermutation&) {}, 10), CapExceeded);
}

TEST(ISigma, Examples) {
    const Family f(GroundSet(2), 2, {DPartition{{1}, {2}}});
    const BlockPermutation identity{{1, 2}, {1, 2}};
    const BlockPermutation swap{{1, 2}, {2, 1}};
    EXPECT_EQ(i_sigma(f, identity), (std::vector<std::size_t>{0}));
    EXPECT_TRUE(i_sigma(f, swap).empty());

    // Member 1 has all parts empty inside block {3}.
    const GroundSet g(3, {ElementSet{1, 2}, ElementSet{3}});
    const Family h(g, 2, {DPartition{{1}, {2}}, DPartition{{3}, {}}});
    const BlockPermutation id3{{1, 2, 3}, {1, 2, 3}};
    EXPECT_EQ(i_sigma(h, id3), (std::vector<std::size_t>{0, 1}));
    const BlockPermutation crossing{{1, 2, 3}, {3, 2, 1}};
    EXPECT_THROW((void)i_sigma(h, crossing), InvalidInput);
}

TEST(DoubleCount, Examples) {
    const Family f(GroundSet(2), 2, {DPartition{{1}, {2}}});
    auto r = double_count_identity(f);
    EXPECT_EQ(r.lhs, 1);
    EXPECT_EQ(r.rhs, 1);
    EXPECT_TRUE(r.equal);

    const Family example(GroundSet(2), 3, {DPartition{{1}, {}, {2}}, DPartition{{}, {1, 2}, {}}});
    r = double_count_identity(example);
    EXPECT_EQ(r.lhs, 3);
    EXPECT_EQ(r.rhs, 3);

    r = double_count_identity(Family(GroundSet(2), 2, {}));
    EXPECT_EQ(r.lhs, 0);
    EXPECT_EQ(r.rhs, 0);
    EXPECT_TRUE(r.equal);
}

TEST(DoubleCount, RightSideMatchesFullGroupFilter) {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 1 + trial % 6;
        const int e = 1 + (trial / 6) % std::min(2, n);
        const Family f = oracle::random_family(rng, oracle::random_ground(rng, n, e), 2 + trial % 3, 1 + trial % 5,
                                               oracle::random_partition);
        const auto r = double_count_identity(f);
        EXPECT_EQ(r.rhs, BigInt(oracle::double_count_rhs(f))) << "trial " << trial;
        EXPECT_TRUE(r.equal);
    }
}

TEST(DoubleCount, ThreadsGiveTheSameCount) {
    const Family f = lex_full_family(6, 2);
    const auto one = double_count_identity(f, kDefaultPermutationLimit, 1);
    for (unsigned t : {2U, 3U, 5U}) {
        const auto many = double_count_identity(f, kDefaultPermutationLimit, t);
        EXPECT_EQ(many.rhs, one.rhs);
        EXPECT_TRUE(many.equal);
    }
}
