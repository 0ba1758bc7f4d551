#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bollobas/partition.hpp"

namespace bollobas {

/// Default member limit for the exponential and factorial generators.
inline constexpr std::size_t kDefaultMemberCap = 1'000'000;

/// Calls `visit` once for every full d-partition of `elements` whose part r has
/// exactly sizes[r] elements. Precondition: sizes sum to elements.size().
void for_each_typed_partition(std::span<const int> elements, std::span<const int> sizes,
                              const std::function<void(const std::vector<ElementSet>&)>& visit);

/// All d^n full d-partitions of [n], ordered by size vector from ≤_L-largest to
/// smallest; members sharing a size vector follow the part-tuple order. The
/// result is a skew system.
[[nodiscard]] Family lex_full_family(int n, int d, std::size_t cap = kDefaultMemberCap);

/// The floor(s/2) + 1 interval 3-partitions ([1, l-1], [l, s-l+1], [s-l+2, s]).
[[nodiscard]] Family chain_family_d3(int s);

/// Replaces every member by all full d-partitions of the family support with
/// the same size vector. Members must be full over the support and have
/// pairwise distinct size vectors.
[[nodiscard]] Family type_expansion(const Family& family, std::size_t cap = kDefaultMemberCap);

/// All n! orderings of [n] as n-partitions with singleton parts. Needs n >= 2.
[[nodiscard]] Family permutation_family(int n, std::size_t cap = kDefaultMemberCap);

/// ([n] split as F, [n] \ F, then d - 2 empty parts) for every k-subset F.
[[nodiscard]] Family complement_pair_family(int n, int k, int d, std::size_t cap = kDefaultMemberCap);

/// The pocket-process weak system for sizes a_1..a_d over [a_1 + ... + a_d - 1].
/// Matches are drawn one at a time and the process stops as soon as some pocket
/// r has given up all a_r of its matches. Each stopped draw sequence w becomes
/// the member whose part r holds the positions t with w_t = r. Members come in
/// lexicographic order of their draw sequences.
[[nodiscard]] Family matchbox_weak_family(std::span<const int> a, std::size_t cap = kDefaultMemberCap);

/// Highest total degree of any term of the matchbox product-weight sum.
[[nodiscard]] int matchbox_degree_bound(std::span<const int> a);

struct ConstructionSpec {
    std::string name;
    std::map<std::string, std::int64_t> parameters;
};

struct ConstructionInfo {
    std::string_view name;
    std::string_view parameters;
    std::string_view description;
};

[[nodiscard]] std::span<const ConstructionInfo> construction_registry() noexcept;

/// Dispatches by name: lex-full (n, d), chain-d3 (s), expanded-chain-d3 (s),
/// permutation (n), complement-pair (n, k, d), matchbox (a1, a2, ...).
[[nodiscard]] Family build_construction(const ConstructionSpec& spec, std::size_t cap = kDefaultMemberCap);

}  // namespace bollobas
