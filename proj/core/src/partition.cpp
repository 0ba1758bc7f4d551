#include "bollobas/partition.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "bollobas/errors.hpp"

namespace bollobas {

namespace {

struct PartitionHash {
    std::size_t operator()(const DPartition& p) const noexcept { return p.hash(); }
};

}  // namespace

// ---------------------------------------------------------------- GroundSet

GroundSet::GroundSet(int n) : GroundSet(n, {ElementSet::interval(1, n)}) {}

GroundSet::GroundSet(int n, std::vector<ElementSet> blocks)
    : n_(n), blocks_(std::move(blocks)), universe_(ElementSet::interval(1, n)) {
    if (n < 1) throw InvalidInput("ground set size n must be positive");
    if (blocks_.empty()) throw InvalidInput("ground set needs at least one block");
    ElementSet seen;
    for (const auto& block : blocks_) {
        if (block.empty()) throw InvalidInput("blocks must be non-empty");
        if (block.intersects(seen)) throw InvalidInput("blocks pairwise disjoint");
        seen |= block;
    }
    if (seen != universe_) throw InvalidInput("union of blocks equals [n]");
}

std::vector<int> GroundSet::block_sizes() const {
    std::vector<int> sizes;
    sizes.reserve(blocks_.size());
    for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
    return sizes;
}

// ---------------------------------------------------------------- DPartition

DPartition::DPartition(std::vector<ElementSet> parts) : parts_(std::move(parts)) {
    if (parts_.size() < 2) throw InvalidInput("a d-partition needs d >= 2 parts");
    if (parts_.size() > static_cast<std::size_t>(kMaxParts)) {
        throw InvalidInput("d above " + std::to_string(kMaxParts) + " is not supported");
    }
    ElementSet seen;
    for (const auto& part : parts_) {
        if (part.intersects(seen)) throw InvalidInput("parts pairwise disjoint");
        seen |= part;
    }
}

DPartition::DPartition(std::initializer_list<std::initializer_list<int>> parts)
    : DPartition([&] {
          std::vector<ElementSet> sets;
          sets.reserve(parts.size());
          for (auto list : parts) sets.emplace_back(list);
          return sets;
      }()) {}

ElementSet DPartition::support() const {
    ElementSet s;
    for (const auto& part : parts_) s |= part;
    return s;
}

std::vector<int> DPartition::part_sizes() const {
    std::vector<int> sizes;
    sizes.reserve(parts_.size());
    for (const auto& part : parts_) sizes.push_back(static_cast<int>(part.size()));
    return sizes;
}

bool DPartition::is_full_over(const ElementSet& set) const { return support() == set; }

std::strong_ordering operator<=>(const DPartition& a, const DPartition& b) {
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                  b.parts_.begin(), b.parts_.end());
}

std::size_t DPartition::hash() const noexcept {
    std::size_t h = parts_.size();
    for (const auto& part : parts_) h = h * 1000003u ^ part.hash();
    return h;
}

// ---------------------------------------------------------------- Family

Family::Family(GroundSet ground, int d, std::vector<DPartition> members)
    : ground_(std::move(ground)), d_(d), members_(std::move(members)) {
    if (d_ < 2 || d_ > kMaxParts) {
        throw InvalidInput("d must lie in [2, " + std::to_string(kMaxParts) + "]");
    }
    std::unordered_set<DPartition, PartitionHash> seen;
    seen.reserve(members_.size());
    for (std::size_t i = 0; i < members_.size(); ++i) {
        const auto& m = members_[i];
        if (m.d() != d_) {
            throw InvalidInput("all members share one d (member " + std::to_string(i) + ")");
        }
        if (!m.support().subset_of(ground_.universe())) {
            throw InvalidInput("every element lies in [n] (member " + std::to_string(i) + ")");
        }
        if (!seen.insert(m).second) {
            throw InvalidInput("members pairwise distinct (member " + std::to_string(i) +
                               " repeats an earlier member)");
        }
    }
}

Family Family::with_ground(GroundSet ground) const {
    if (ground.n() != ground_.n()) throw InvalidInput("re-blocking must keep n");
    return Family(std::move(ground), d_, members_);
}

// ---------------------------------------------------------------- SizeProfile

SizeProfile::SizeProfile(std::size_t blocks, int d)
    : blocks_(blocks), d_(d), cells_(blocks * static_cast<std::size_t>(d), 0) {}

std::span<const int> SizeProfile::row(std::size_t k) const {
    if (k >= blocks_) throw std::out_of_range("size profile row");
    return std::span<const int>(cells_).subspan(k * static_cast<std::size_t>(d_),
                                                static_cast<std::size_t>(d_));
}

int SizeProfile::row_sum(std::size_t k) const {
    int total = 0;
    for (int v : row(k)) total += v;
    return total;
}

std::vector<int> SizeProfile::part_totals() const {
    std::vector<int> totals(static_cast<std::size_t>(d_), 0);
    for (std::size_t k = 0; k < blocks_; ++k) {
        for (int r = 0; r < d_; ++r) totals[static_cast<std::size_t>(r)] += at(k, r);
    }
    return totals;
}

// ---------------------------------------------------------------- operations

std::vector<int> Support::block_sizes() const {
    std::vector<int> sizes;
    sizes.reserve(per_block.size());
    for (const auto& b : per_block) sizes.push_back(static_cast<int>(b.size()));
    return sizes;
}

Support support(const Family& family) {
    Support s;
    for (const auto& member : family.members()) s.elements |= member.support();
    s.per_block.reserve(family.ground().block_count());
    for (const auto& block : family.ground().blocks()) s.per_block.push_back(s.elements & block);
    return s;
}

bool set_less(const ElementSet& lhs, const ElementSet& rhs) {
    if (lhs.empty() || rhs.empty()) return true;
    return lhs.max() < rhs.min();
}

bool parts_increasing(const DPartition& p) {
    // Pairwise over all p < q reduces to consecutive checks between the
    // non-empty parts, since set_less is transitive on non-empty sets.
    const ElementSet* previous = nullptr;
    for (const auto& part : p.parts()) {
        if (part.empty()) continue;
        if (previous != nullptr && !set_less(*previous, part)) return false;
        previous = &part;
    }
    return true;
}

bool lex_leq(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size()) throw InvalidInput("lex_leq needs sequences of equal length");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return true;
}

SizeProfile size_profile(const DPartition& p, const GroundSet& ground) {
    SizeProfile profile(ground.block_count(), p.d());
    for (std::size_t k = 0; k < ground.block_count(); ++k) {
        for (int r = 0; r < p.d(); ++r) {
            profile.at(k, r) = static_cast<int>((p.part(r) & ground.block(k)).size());
        }
    }
    return profile;
}

Family fill_to_full(const Family& family) {
    const ElementSet s = support(family).elements;
    const std::vector<int> all = s.elements();

    std::vector<DPartition> filled;
    filled.reserve(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& member = family[i];
        if (!parts_increasing(member)) {
            throw InvalidInput("fill_to_full: member " + std::to_string(i) +
                               " does not have increasing parts");
        }
        std::vector<ElementSet> parts = member.parts();
        const ElementSet present = member.support();
        for (int x : all) {
            if (present.contains(x)) continue;
            // Highest part holding something below x. Elements placed earlier in
            // this loop are below x too, but they went to a part no higher than
            // this one, so the choice is the same with or without them.
            int target = 0;
            for (int r = member.d() - 1; r >= 0; --r) {
                const auto& part = member.part(r);
                if (!part.empty() && part.min() < x) {
                    target = r;
                    break;
                }
            }
            parts[static_cast<std::size_t>(target)].insert(x);
        }
        filled.emplace_back(std::move(parts));
    }

    try {
        return Family(family.ground(), family.d(), std::move(filled));
    } catch (const InvalidInput&) {
        throw InvalidInput("fill_to_full: two members collide after filling (input is not a weak system)");
    }
}

}  // namespace bollobas
