#include <gtest/gtest.h>

#include <random>

#include "bollobas/errors.hpp"
#include "bollobas/partition.hpp"
#include "oracles.hpp"

using namespace bollobas;

namespace {

ElementSet set_of(std::initializer_list<int> xs) { return ElementSet(xs); }

std::string message_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const InvalidInput& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST(ElementSet, BasicOperations) {
    ElementSet s{3, 1, 70};
    EXPECT_EQ(s.size(), 3U);
    EXPECT_EQ(s.min(), 1);
    EXPECT_EQ(s.max(), 70);
    EXPECT_TRUE(s.contains(70));
    EXPECT_FALSE(s.contains(2));
    EXPECT_EQ(s.elements(), (std::vector<int>{1, 3, 70}));
    s.erase(70);
    EXPECT_EQ(s, set_of({1, 3}));
    EXPECT_EQ(s.words().size(), 1U);
    EXPECT_TRUE(set_of({1}).subset_of(s));
    EXPECT_TRUE(s.intersects(set_of({3, 9})));
    EXPECT_FALSE(s.intersects(ElementSet{}));
    EXPECT_EQ(ElementSet::interval(2, 4), set_of({2, 3, 4}));
    EXPECT_TRUE(ElementSet::interval(5, 4).empty());
    EXPECT_EQ(set_of({1, 2}) | set_of({2, 5}), set_of({1, 2, 5}));
    EXPECT_EQ(set_of({1, 2}) & set_of({2, 5}), set_of({2}));
    EXPECT_EQ(set_of({1, 2}) - set_of({2, 5}), set_of({1}));
}

TEST(ElementSet, OrderIsLexicographicOnSortedElements) {
    EXPECT_LT(set_of({1, 5}), set_of({2}));
    EXPECT_LT(ElementSet{}, set_of({1}));
    EXPECT_LT(set_of({1}), set_of({1, 2}));
}

TEST(GroundSet, ValidatesBlocks) {
    EXPECT_NO_THROW(GroundSet(3, {set_of({1, 3}), set_of({2})}));
    EXPECT_NE(message_of([] { GroundSet(3, {set_of({1, 2}), set_of({2, 3})}); }).find("blocks pairwise disjoint"),
              std::string::npos);
    EXPECT_NE(message_of([] { GroundSet(3, {set_of({1}), set_of({2})}); }).find("union of blocks equals [n]"),
              std::string::npos);
    EXPECT_THROW(GroundSet(0), InvalidInput);
    const GroundSet g(4);
    EXPECT_EQ(g.block_count(), 1U);
    EXPECT_EQ(g.block_sizes(), (std::vector<int>{4}));
}

TEST(DPartition, RejectsOverlappingParts) {
    EXPECT_NE(message_of([] { DPartition({{1, 2}, {2}}); }).find("parts pairwise disjoint"), std::string::npos);
    EXPECT_THROW(DPartition({{1}}), InvalidInput);
    const DPartition p{{1}, {}, {2, 3}};
    EXPECT_EQ(p.d(), 3);
    EXPECT_EQ(p.part_sizes(), (std::vector<int>{1, 0, 2}));
    EXPECT_EQ(p.support(), set_of({1, 2, 3}));
    EXPECT_TRUE(p.is_full_over(set_of({1, 2, 3})));
    EXPECT_FALSE(p.is_full_over(set_of({1, 2, 3, 4})));
}

TEST(Family, ValidatesMembers) {
    const GroundSet g(3);
    EXPECT_NE(message_of([&] { Family(g, 2, {DPartition{{1}, {2}}, DPartition{{1}, {2}}}); })
                  .find("members pairwise distinct"),
              std::string::npos);
    EXPECT_NE(message_of([&] { Family(g, 2, {DPartition{{1}, {4}}}); }).find("every element lies in [n]"),
              std::string::npos);
    EXPECT_NE(message_of([&] { Family(g, 2, {DPartition{{1}, {2}, {}}}); }).find("all members share one d"),
              std::string::npos);
    EXPECT_NO_THROW(Family(g, 3, {}));
}

TEST(Order, SetLessTreatsEmptySidesAsTrue) {
    EXPECT_TRUE(set_less(set_of({1, 2}), set_of({3})));
    EXPECT_FALSE(set_less(set_of({1, 3}), set_of({2})));
    EXPECT_TRUE(set_less(ElementSet{}, set_of({1})));
    EXPECT_TRUE(set_less(set_of({1}), ElementSet{}));
    EXPECT_TRUE(set_less(ElementSet{}, ElementSet{}));
}

TEST(Order, PartsIncreasingIsPairwise) {
    EXPECT_TRUE(parts_increasing(DPartition{{1}, {}, {2, 3}}));
    // Consecutive pairs hold through the empty middle part, but 3 > 2.
    EXPECT_FALSE(parts_increasing(DPartition{{3}, {}, {2}}));
    EXPECT_FALSE(parts_increasing(DPartition{{1, 3}, {2}}));
}

TEST(Order, LexLeq) {
    const std::vector<int> a{2, 0, 1}, b{2, 1, 0}, c{2, 1};
    EXPECT_TRUE(lex_leq(a, b));
    EXPECT_FALSE(lex_leq(b, a));
    EXPECT_TRUE(lex_leq(a, a));
    EXPECT_THROW((void)lex_leq(a, c), InvalidInput);
}

TEST(SizeProfile, RowsFollowBlocks) {
    const GroundSet g(4, {set_of({1, 4}), set_of({2, 3})});
    const SizeProfile sp = size_profile(DPartition{{1, 2}, {3}, {}}, g);
    EXPECT_EQ(sp.at(0, 0), 1);
    EXPECT_EQ(sp.at(1, 0), 1);
    EXPECT_EQ(sp.at(1, 1), 1);
    EXPECT_EQ(sp.row_sum(0), 1);
    EXPECT_EQ(sp.row_sum(1), 2);
    EXPECT_EQ(sp.part_totals(), (std::vector<int>{2, 1, 0}));
    // Full partitions have row sums equal to block sizes.
    const SizeProfile full = size_profile(DPartition{{1, 2}, {3, 4}}, g);
    EXPECT_EQ(full.row_sum(0), 2);
    EXPECT_EQ(full.row_sum(1), 2);
}

TEST(Support, PerBlock) {
    const GroundSet g(5, {set_of({1, 2, 3}), set_of({4, 5})});
    const Family f(g, 2, {DPartition{{1}, {4}}, DPartition{{2}, {}}});
    const Support s = support(f);
    EXPECT_EQ(s.elements, set_of({1, 2, 4}));
    EXPECT_EQ(s.block_sizes(), (std::vector<int>{2, 1}));
}

TEST(FillToFull, PlacesMissingElementsByTheLowerPartRule) {
    const Family f(GroundSet(3), 3, {DPartition{{1}, {}, {3}}, DPartition{{}, {2}, {}}});
    const Family filled = fill_to_full(f);
    EXPECT_EQ(filled[0], (DPartition{{1, 2}, {}, {3}}));
    EXPECT_EQ(filled[1], (DPartition{{1}, {2, 3}, {}}));
}

TEST(FillToFull, FullFamilyUnchangedAndBadInputRejected) {
    const Family full(GroundSet(2), 2, {DPartition{{1}, {2}}, DPartition{{1, 2}, {}}});
    EXPECT_EQ(fill_to_full(full), full);
    const Family crossing(GroundSet(2), 2, {DPartition{{2}, {1}}});
    EXPECT_THROW((void)fill_to_full(crossing), InvalidInput);
    // Both fill to ({1,2}, {}) and collide.
    const Family collide(GroundSet(2), 2, {DPartition{{1}, {}}, DPartition{{2}, {}}});
    EXPECT_THROW((void)fill_to_full(collide), InvalidInput);
}

TEST(FillToFull, FullIncreasingPartitionsAreRunsOfIntegers) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const int s = 1 + trial % 8;
        const int d = 2 + trial % 3;
        const auto p = oracle::random_increasing(rng, s, d);
        const Family f(GroundSet(s), d, {p});
        const auto full = fill_to_full(f)[0];
        EXPECT_TRUE(parts_increasing(full));
        EXPECT_TRUE(full.is_full_over(p.support()));
        // Each non-empty part is a run of consecutive support elements.
        const auto sup = p.support().elements();
        for (const auto& part : full.parts()) {
            if (part.empty()) continue;
            const auto inside = std::count_if(sup.begin(), sup.end(),
                                              [&](int x) { return x >= part.min() && x <= part.max(); });
            EXPECT_EQ(static_cast<std::size_t>(inside), part.size());
        }
    }
}
