#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>

#include "bollobas/partition.hpp"

namespace bollobas {

/// The five system classes, weakest first.
enum class SystemClass { weak, skew, bollobas, strong, symmetric };

inline constexpr std::array<SystemClass, 5> kAllClasses = {
    SystemClass::weak, SystemClass::skew, SystemClass::bollobas, SystemClass::strong,
    SystemClass::symmetric};

[[nodiscard]] std::string_view to_string(SystemClass c) noexcept;
/// Throws InvalidInput for an unknown name.
[[nodiscard]] SystemClass parse_system_class(std::string_view name);

struct ClassFlags {
    bool weak = true;
    bool skew = true;
    bool bollobas = true;
    bool strong = true;
    bool symmetric = true;

    [[nodiscard]] bool has(SystemClass c) const noexcept;
    void set(SystemClass c, bool value) noexcept;

    friend bool operator==(const ClassFlags&, const ClassFlags&) = default;
};

/// Member indices (0-based, first < second) of a pair violating a class.
struct PairIndices {
    std::size_t first;
    std::size_t second;

    friend auto operator<=>(const PairIndices&, const PairIndices&) = default;
};

struct Classification {
    ClassFlags flags;
    /// First violating pair in (first, second) lexicographic order, per class.
    std::array<std::optional<PairIndices>, 5> violations;

    [[nodiscard]] const std::optional<PairIndices>& violation(SystemClass c) const noexcept {
        return violations[static_cast<std::size_t>(c)];
    }
};

// Pair predicates. Both arguments must have the same d (InvalidInput otherwise).

/// Exists p < q with earlier^(p) ∩ later^(q) non-empty. Order matters.
[[nodiscard]] bool pair_skew(const DPartition& earlier, const DPartition& later);
[[nodiscard]] bool pair_weak(const DPartition& a, const DPartition& b);
[[nodiscard]] bool pair_bollobas(const DPartition& a, const DPartition& b);
/// Crossing pair (u1 < u2, v1 < v2, a^(u1) meets b^(v2), a^(u2) meets b^(v1)) in which
/// both cells are forward: u1 < v2 and v1 < u2. Implies pair_bollobas.
[[nodiscard]] bool pair_strong(const DPartition& a, const DPartition& b);
/// The crossing condition alone, without the forward requirement. Not contained in
/// pair_bollobas: ({}, {1}, {2}) and ({2}, {1}, {}) cross but 1 never meets a later part.
[[nodiscard]] bool pair_crossing(const DPartition& a, const DPartition& b);
[[nodiscard]] bool pair_symmetric(const DPartition& a, const DPartition& b);
/// Dispatch by class; for skew, a is the earlier member.
[[nodiscard]] bool pair_in_class(SystemClass c, const DPartition& a, const DPartition& b);

/// Lexicographically first (p, q), p < q, 0-based, with earlier^(p) ∩ later^(q)
/// non-empty; nullopt when pair_skew is false.
[[nodiscard]] std::optional<std::pair<int, int>> skew_witness(const DPartition& earlier,
                                                              const DPartition& later);

/// Evaluates all five classes. Skew uses the listed member order. The result
/// does not depend on the thread count.
[[nodiscard]] Classification classify(const Family& family, unsigned threads = 1);

}  // namespace bollobas
