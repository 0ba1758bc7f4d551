#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bollobas/classifier.hpp"
#include "bollobas/partition.hpp"
#include "bollobas/rational.hpp"

namespace bollobas {

/// n! / (a_1! ... a_d! (n - a_1 - ... - a_d)!). Throws InvalidInput when the
/// sizes are negative or sum past n.
[[nodiscard]] BigInt multinomial(int n, std::span<const int> sizes);

[[nodiscard]] BigInt binomial(int n, int k);

/// Sum over members of 1 / multinomial(|A^(1)|+...+|A^(d)|; |A^(1)|, ..., |A^(d)|).
[[nodiscard]] ExactRational inverse_multinomial_sum(const Family& family);

/// Sum over members of the product over blocks X_k of the inverse multinomial
/// of (|A^(1) ∩ X_k|, ..., |A^(d) ∩ X_k|).
[[nodiscard]] ExactRational blocked_inverse_sum(const Family& family);

/// Sum over members of p_1^|A^(1)| ... p_d^|A^(d)|. The weights must be d
/// positive rationals summing to exactly 1 (InvalidInput otherwise).
[[nodiscard]] ExactRational tuza_product_sum(const Family& family, std::span<const ExactRational> p);

enum class BoundClass { skew, weak, strong, symmetric, bollobas_d3 };

[[nodiscard]] BoundClass parse_bound_class(std::string_view name);

/// Closed-form right-hand sides in terms of the support block sizes s_k:
///   skew, weak          prod_k C(s_k + d - 1, d - 1)
///   strong, symmetric   min_l prod_{k != l} C(s_k + d - 1, d - 1)
///   bollobas_d3         floor(s / 2) + 1 (d = 3, one block)
[[nodiscard]] ExactRational class_bound(BoundClass c, int d, std::span<const int> block_sizes);

struct InequalityReport {
    std::string theorem_id;
    ExactRational lhs;
    ExactRational rhs;
    bool holds = false;
    bool tight = false;
    /// Set only when the evaluation was forced past a failed class hypothesis.
    bool hypothesis_failed = false;
};

/// One entry of the theorem registry.
struct TheoremInfo {
    std::string_view id;
    SystemClass hypothesis;
    /// Required d, or 0 for any.
    int required_d;
    /// Required number of blocks, or 0 for any.
    int required_blocks;
    std::string_view lhs;
    std::string_view rhs;
};

[[nodiscard]] std::span<const TheoremInfo> theorem_registry() noexcept;
/// Throws InvalidInput for an unknown id.
[[nodiscard]] const TheoremInfo& theorem_info(std::string_view id);

struct CheckOptions {
    /// Evaluate even when the class hypothesis fails; the report is flagged.
    bool force = false;
    /// Weights for the product-weight inequality; uniform 1/d when absent.
    std::optional<std::vector<ExactRational>> p;
};

/// Evaluates one registered inequality on a family. Throws InvalidInput when
/// d or the block count does not fit the theorem, HypothesisFailed when the
/// family is outside the hypothesis class and force is off.
[[nodiscard]] InequalityReport check_theorem(const Family& family, std::string_view theorem_id,
                                             const CheckOptions& options = {});

/// m against prod_k C(a_{1,k} + a_{2,k}, a_{1,k}) for a skew family of
/// 2-partitions whose members all share one size profile.
[[nodiscard]] InequalityReport uniform_cardinality_check(const Family& family, bool force = false);

}  // namespace bollobas
