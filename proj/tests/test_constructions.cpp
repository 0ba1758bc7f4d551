#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "bollobas/classifier.hpp"
#include "bollobas/constructions.hpp"
#include "bollobas/errors.hpp"
#include "bollobas/weights.hpp"
#include "oracles.hpp"

using namespace bollobas;

namespace {

int pow_int(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

oracle::Int falling_choose(int n, int k) { return oracle::factorial(n) / (oracle::factorial(k) * oracle::factorial(n - k)); }

}  // namespace

TEST(TypedPartitions, CountMatchesMultinomial) {
    const std::vector<int> elements{2, 4, 5, 9};
    const std::vector<int> sizes{1, 2, 0};
    std::set<std::vector<std::vector<int>>> seen;
    for_each_typed_partition(elements, sizes, [&](const std::vector<ElementSet>& parts) {
        std::vector<std::vector<int>> key;
        for (const auto& p : parts) key.push_back(p.elements());
        EXPECT_EQ(key[0].size(), 1U);
        EXPECT_EQ(key[1].size(), 2U);
        seen.insert(key);
    });
    EXPECT_EQ(seen.size(), 12U);  // 4 * C(3, 2)
}

TEST(LexFull, SizeOrderAndClass) {
    for (auto [n, d] : {std::pair{3, 2}, {3, 3}, {4, 2}, {2, 4}}) {
        const Family f = lex_full_family(n, d);
        EXPECT_EQ(f.size(), static_cast<std::size_t>(pow_int(d, n)));
        for (const auto& m : f.members()) EXPECT_TRUE(m.is_full_over(ElementSet::interval(1, n)));
        for (std::size_t i = 1; i < f.size(); ++i) {
            // Size vectors never increase along the list.
            EXPECT_TRUE(lex_leq(f[i].part_sizes(), f[i - 1].part_sizes()));
        }
        EXPECT_TRUE(classify(f).flags.skew);
    }
    EXPECT_THROW((void)lex_full_family(10, 4, 1000), CapExceeded);
    EXPECT_THROW((void)lex_full_family(3, 1), InvalidInput);
}

TEST(ChainD3, Shape) {
    const Family f = chain_family_d3(7);
    ASSERT_EQ(f.size(), 4U);
    EXPECT_EQ(f[0], (DPartition{{}, {1, 2, 3, 4, 5, 6, 7}, {}}));
    EXPECT_EQ(f[3], (DPartition{{1, 2, 3}, {4}, {5, 6, 7}}));
    EXPECT_TRUE(classify(f).flags.bollobas);
    for (int s = 1; s <= 12; ++s) EXPECT_EQ(chain_family_d3(s).size(), static_cast<std::size_t>(s / 2 + 1));
}

TEST(TypeExpansion, CountsAndSum) {
    for (int s = 2; s <= 7; ++s) {
        const Family base = chain_family_d3(s);
        const Family expanded = type_expansion(base);
        oracle::Int expected = 0;
        for (const auto& m : base.members()) expected += oracle::multinomial(s, m.part_sizes());
        EXPECT_EQ(BigInt(expanded.size()), expected);
        EXPECT_EQ(inverse_multinomial_sum(expanded), ExactRational(s / 2 + 1));
        EXPECT_TRUE(classify(expanded).flags.bollobas);
    }
}

TEST(TypeExpansion, RejectsRepeatedTypesAndPartialMembers) {
    const Family repeated(GroundSet(2), 2, {DPartition{{1}, {2}}, DPartition{{2}, {1}}});
    EXPECT_THROW((void)type_expansion(repeated), InvalidInput);
    const Family partial(GroundSet(2), 2, {DPartition{{1}, {2}}, DPartition{{1}, {}}});
    EXPECT_THROW((void)type_expansion(partial), InvalidInput);
    EXPECT_THROW((void)type_expansion(chain_family_d3(14), 1000), CapExceeded);
}

TEST(Permutation, CountAndClass) {
    for (int n = 2; n <= 5; ++n) {
        const Family f = permutation_family(n);
        EXPECT_EQ(BigInt(f.size()), oracle::factorial(n));
        EXPECT_TRUE(classify(f).flags.strong);
        EXPECT_EQ(inverse_multinomial_sum(f), ExactRational(1));
    }
    EXPECT_THROW((void)permutation_family(1), InvalidInput);
    EXPECT_THROW((void)permutation_family(9, 1000), CapExceeded);
}

TEST(ComplementPair, CountAndClass) {
    for (int n = 1; n <= 5; ++n) {
        for (int k = 0; k <= n; ++k) {
            const Family f = complement_pair_family(n, k, 3);
            EXPECT_EQ(BigInt(f.size()), falling_choose(n, k));
            EXPECT_TRUE(classify(f).flags.symmetric);
            EXPECT_EQ(inverse_multinomial_sum(f), ExactRational(1));
        }
    }
    EXPECT_THROW((void)complement_pair_family(3, 4, 2), InvalidInput);
}

TEST(Matchbox, SmallInstance) {
    // a = (1, 1): the first draw already empties a pocket.
    const std::vector<int> a{1, 1};
    const Family f = matchbox_weak_family(a);
    EXPECT_EQ(f.members(), (std::vector<DPartition>{DPartition{{1}, {}}, DPartition{{}, {1}}}));
    EXPECT_EQ(f.ground().n(), matchbox_degree_bound(a));
    EXPECT_TRUE(classify(f).flags.weak);
    for (const auto& m : f.members()) {
        for (int r = 0; r < 2; ++r) EXPECT_LE(m.part(r).size(), static_cast<std::size_t>(a[static_cast<std::size_t>(r)]));
    }
    const std::vector<ExactRational> p{ExactRational(BigInt(1), BigInt(3)), ExactRational(BigInt(2), BigInt(3))};
    EXPECT_EQ(tuza_product_sum(f, p), ExactRational(1));
}

TEST(Matchbox, IdentityAtSeveralWeights) {
    std::mt19937 rng(17);
    for (const auto& a : std::vector<std::vector<int>>{{1, 2}, {2, 2}, {1, 1, 1}, {2, 1, 2}, {3, 2}, {1, 2, 3}}) {
        const Family f = matchbox_weak_family(a);
        EXPECT_TRUE(classify(f).flags.weak);
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<int> raw(a.size());
            int total = 0;
            for (auto& x : raw) total += (x = std::uniform_int_distribution<int>(1, 9)(rng));
            std::vector<ExactRational> p;
            for (int x : raw) p.emplace_back(BigInt(x), BigInt(total));
            EXPECT_EQ(tuza_product_sum(f, p), ExactRational(1));
        }
    }
    EXPECT_THROW((void)matchbox_weak_family(std::vector<int>{1}), InvalidInput);
    EXPECT_THROW((void)matchbox_weak_family(std::vector<int>{1, 0}), InvalidInput);
}

TEST(Matchbox, MembersAreStoppedDrawSequences) {
    // Independent count: sequences whose last letter u reaches a_u while every
    // other letter stays below its pocket size.
    const auto stopped = [](const std::vector<int>& a) {
        std::set<std::vector<int>> words;
        std::vector<std::vector<int>> frontier{{}};
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            for (const auto& w : frontier) {
                for (int r = 0; r < static_cast<int>(a.size()); ++r) {
                    auto longer = w;
                    longer.push_back(r);
                    const auto used = std::count(longer.begin(), longer.end(), r);
                    if (used == a[static_cast<std::size_t>(r)]) {
                        words.insert(longer);
                    } else {
                        next.push_back(longer);
                    }
                }
            }
            frontier = std::move(next);
        }
        return words;
    };
    for (const auto& a : std::vector<std::vector<int>>{{1, 1, 1}, {2, 2}, {1, 2, 3}, {2, 1, 1, 2}}) {
        const Family f = matchbox_weak_family(a);
        std::set<std::vector<int>> words;
        for (const auto& m : f.members()) {
            std::vector<int> w(m.support().size(), -1);
            for (int r = 0; r < m.d(); ++r) {
                for (int x : m.part(r).elements()) w[static_cast<std::size_t>(x - 1)] = r;
            }
            words.insert(w);
        }
        EXPECT_EQ(words.size(), f.size());
        EXPECT_EQ(words, stopped(a));
    }
}

TEST(Registry, BuildByName) {
    EXPECT_EQ(build_construction({"chain-d3", {{"s", 5}}}), chain_family_d3(5));
    EXPECT_EQ(build_construction({"matchbox", {{"a1", 1}, {"a2", 2}}}), matchbox_weak_family(std::vector<int>{1, 2}));
    EXPECT_EQ(build_construction({"complement-pair", {{"n", 3}, {"k", 1}, {"d", 2}}}), complement_pair_family(3, 1, 2));
    EXPECT_THROW((void)build_construction({"chain-d3", {}}), InvalidInput);
    EXPECT_THROW((void)build_construction({"chain-d3", {{"s", 3}, {"t", 1}}}), InvalidInput);
    EXPECT_THROW((void)build_construction({"nope", {}}), InvalidInput);
    EXPECT_EQ(construction_registry().size(), 6U);
}
