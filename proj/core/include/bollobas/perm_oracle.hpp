#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "bollobas/partition.hpp"
#include "bollobas/rational.hpp"

namespace bollobas {

/// 10!, the default limit on the number of block permutations enumerated.
inline constexpr std::uint64_t kDefaultPermutationLimit = 3'628'800;

/// A bijection of the family support S that maps every block support S_k onto
/// itself. `domain` is S in increasing order and `image[j]` is the image of
/// `domain[j]`.
struct BlockPermutation {
    std::vector<int> domain;
    std::vector<int> image;

    /// Image of x; x must lie in the domain.
    [[nodiscard]] int operator()(int x) const;
    friend bool operator==(const BlockPermutation&, const BlockPermutation&) = default;
};

/// Product over blocks of s_k!. Exact.
[[nodiscard]] BigInt block_permutation_count(const Family& family);

/// Calls `visit` once for every block permutation of the family support, in a
/// fixed order (blocks vary like an odometer, the last block fastest). Throws
/// CapExceeded when the count is above `limit`.
void for_each_block_permutation(const Family& family, const std::function<void(const BlockPermutation&)>& visit,
                                std::uint64_t limit = kDefaultPermutationLimit);

/// All block permutations, materialized.
[[nodiscard]] std::vector<BlockPermutation> block_permutations(const Family& family,
                                                               std::uint64_t limit = kDefaultPermutationLimit);

/// Indices of the members whose images under sigma are chained inside every
/// block: sigma(A^(p) ∩ X_k) < sigma(A^(q) ∩ X_k) for all p < q.
[[nodiscard]] std::vector<std::size_t> i_sigma(const Family& family, const BlockPermutation& sigma);

struct DoubleCount {
    /// Sum over members of prod_k s_k! / multinomial of the member's row in block k.
    BigInt lhs;
    /// Sum over block permutations sigma of |I_sigma|.
    BigInt rhs;
    bool equal = false;
    std::uint64_t permutations = 0;
};

/// Computes both sides of the double-counting identity. The right side is a
/// brute-force enumeration, split over `threads` workers with an exact integer
/// reduction. Throws InternalError if the left side is not an integer.
[[nodiscard]] DoubleCount double_count_identity(const Family& family,
                                                std::uint64_t limit = kDefaultPermutationLimit,
                                                unsigned threads = 1);

}  // namespace bollobas
