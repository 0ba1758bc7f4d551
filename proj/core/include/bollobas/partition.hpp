#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "bollobas/element_set.hpp"

namespace bollobas {

/// The ground set [n] = {1..n} written as an ordered disjoint union of blocks.
class GroundSet {
public:
    /// [n] as a single block.
    explicit GroundSet(int n);
    /// Blocks must be non-empty, pairwise disjoint, and cover [n] exactly.
    GroundSet(int n, std::vector<ElementSet> blocks);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] std::size_t block_count() const noexcept { return blocks_.size(); }
    [[nodiscard]] const std::vector<ElementSet>& blocks() const noexcept { return blocks_; }
    [[nodiscard]] const ElementSet& block(std::size_t k) const { return blocks_.at(k); }
    [[nodiscard]] const ElementSet& universe() const noexcept { return universe_; }
    [[nodiscard]] std::vector<int> block_sizes() const;

    friend bool operator==(const GroundSet& a, const GroundSet& b) noexcept {
        return a.n_ == b.n_ && a.blocks_ == b.blocks_;
    }

private:
    int n_;
    std::vector<ElementSet> blocks_;
    ElementSet universe_;
};

/// A d-partition (A^(1), ..., A^(d)): d pairwise disjoint sets, any of which
/// may be empty. Part indices are 0-based in the API.
class DPartition {
public:
    explicit DPartition(std::vector<ElementSet> parts);
    DPartition(std::initializer_list<std::initializer_list<int>> parts);

    [[nodiscard]] int d() const noexcept { return static_cast<int>(parts_.size()); }
    [[nodiscard]] const ElementSet& part(int r) const { return parts_.at(static_cast<std::size_t>(r)); }
    [[nodiscard]] const std::vector<ElementSet>& parts() const noexcept { return parts_; }

    [[nodiscard]] ElementSet support() const;
    [[nodiscard]] std::vector<int> part_sizes() const;
    [[nodiscard]] bool is_full_over(const ElementSet& set) const;

    friend bool operator==(const DPartition&, const DPartition&) = default;
    /// Part tuples compared part by part, each part as a sorted element list.
    friend std::strong_ordering operator<=>(const DPartition& a, const DPartition& b);

    [[nodiscard]] std::size_t hash() const noexcept;

private:
    std::vector<ElementSet> parts_;
};

/// Upper limit on d. Pairwise predicates pack a d x d intersection matrix into
/// 64-bit rows.
inline constexpr int kMaxParts = 64;

/// An ordered list of distinct d-partitions over one ground set.
class Family {
public:
    Family(GroundSet ground, int d, std::vector<DPartition> members);

    [[nodiscard]] const GroundSet& ground() const noexcept { return ground_; }
    [[nodiscard]] int d() const noexcept { return d_; }
    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
    [[nodiscard]] const std::vector<DPartition>& members() const noexcept { return members_; }
    [[nodiscard]] const DPartition& operator[](std::size_t i) const { return members_.at(i); }

    /// Same members over a different blocking of the same [n].
    [[nodiscard]] Family with_ground(GroundSet ground) const;

    friend bool operator==(const Family&, const Family&) = default;

private:
    GroundSet ground_;
    int d_;
    std::vector<DPartition> members_;
};

/// Per-block, per-part cardinalities |A^(r) ∩ X_k| of one member (its type).
class SizeProfile {
public:
    SizeProfile(std::size_t blocks, int d);

    [[nodiscard]] std::size_t block_count() const noexcept { return blocks_; }
    [[nodiscard]] int d() const noexcept { return d_; }
    [[nodiscard]] int& at(std::size_t k, int r) { return cells_.at(k * static_cast<std::size_t>(d_) + static_cast<std::size_t>(r)); }
    [[nodiscard]] int at(std::size_t k, int r) const { return cells_.at(k * static_cast<std::size_t>(d_) + static_cast<std::size_t>(r)); }
    [[nodiscard]] std::span<const int> row(std::size_t k) const;
    /// Row-major flattening; the order used when types are compared.
    [[nodiscard]] std::span<const int> cells() const noexcept { return cells_; }
    [[nodiscard]] int row_sum(std::size_t k) const;
    /// Part sizes summed over all blocks.
    [[nodiscard]] std::vector<int> part_totals() const;

    friend bool operator==(const SizeProfile&, const SizeProfile&) = default;
    friend auto operator<=>(const SizeProfile&, const SizeProfile&) = default;

private:
    std::size_t blocks_;
    int d_;
    std::vector<int> cells_;
};

/// S, the union of all parts of all members, and its block pieces S_k.
struct Support {
    ElementSet elements;
    std::vector<ElementSet> per_block;

    [[nodiscard]] int size() const noexcept { return static_cast<int>(elements.size()); }
    [[nodiscard]] std::vector<int> block_sizes() const;
};

[[nodiscard]] Support support(const Family& family);

/// F1 < F2: every element of F1 is below every element of F2. Holds whenever
/// either side is empty.
[[nodiscard]] bool set_less(const ElementSet& lhs, const ElementSet& rhs);

/// set_less(A^(p), A^(q)) for every pair of part indices p < q.
[[nodiscard]] bool parts_increasing(const DPartition& p);

/// a ≤_L b. Throws InvalidInput when the lengths differ.
[[nodiscard]] bool lex_leq(std::span<const int> a, std::span<const int> b);

[[nodiscard]] SizeProfile size_profile(const DPartition& p, const GroundSet& ground);

/// Extends every member to a full d-partition of the family support. Each
/// missing element x is appended to the highest-indexed part that holds an
/// element smaller than x, or to the first part when there is none.
///
/// Throws InvalidInput if a member does not have increasing parts, or if two
/// members become equal after filling (the input was not a weak system).
[[nodiscard]] Family fill_to_full(const Family& family);

}  // namespace bollobas
