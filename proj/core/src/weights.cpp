#include "bollobas/weights.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "bollobas/errors.hpp"

namespace bollobas {

namespace {

constexpr std::array<TheoremInfo, 12> kTheorems = {{
    {"bollobas-pairs", SystemClass::bollobas, 2, 0,
     "sum_i 1/C(|A_i^1|+|A_i^2|, |A_i^1|)", "1"},
    {"skew-pairs", SystemClass::skew, 2, 0,
     "sum_i 1/C(|A_i^1|+|A_i^2|, |A_i^1|)", "n + 1"},
    {"skew-blocked", SystemClass::skew, 0, 0,
     "sum_i prod_k 1/multinomial(|A_i^1 & X_k|, ..., |A_i^d & X_k|)", "prod_k C(s_k + d - 1, d - 1)"},
    {"weak-blocked", SystemClass::weak, 0, 0,
     "sum_i prod_k 1/multinomial(|A_i^1 & X_k|, ..., |A_i^d & X_k|)", "prod_k C(s_k + d - 1, d - 1)"},
    {"bollobas-d3", SystemClass::bollobas, 3, 0,
     "sum_i 1/multinomial(|A_i^1|, |A_i^2|, |A_i^3|)", "floor(s / 2) + 1"},
    {"strong-blocked", SystemClass::strong, 0, 0,
     "sum_i prod_k 1/multinomial(|A_i^1 & X_k|, ..., |A_i^d & X_k|)",
     "min_l prod_{k != l} C(s_k + d - 1, d - 1)"},
    {"strong", SystemClass::strong, 0, 0,
     "sum_i 1/multinomial(|A_i^1|, ..., |A_i^d|)", "1"},
    {"symmetric", SystemClass::symmetric, 0, 0,
     "sum_i 1/multinomial(|A_i^1|, ..., |A_i^d|)", "1"},
    {"symmetric-blocked", SystemClass::symmetric, 0, 0,
     "sum_i prod_k 1/multinomial(|A_i^1 & X_k|, ..., |A_i^d & X_k|)",
     "min_l prod_{k != l} C(s_k + d - 1, d - 1)"},
    {"strong-two-blocks", SystemClass::strong, 0, 2,
     "sum_i prod_{k=1,2} 1/multinomial(|A_i^1 & X_k|, ..., |A_i^d & X_k|)",
     "C(floor(n / 2) + d - 1, d - 1)"},
    {"product-weights", SystemClass::weak, 0, 0,
     "sum_i prod_r p_r^|A_i^r|  (p_r > 0, sum_r p_r = 1)", "1"},
    {"multinomial-conjecture", SystemClass::bollobas, 0, 0,
     "sum_i 1/multinomial(|A_i^1|, ..., |A_i^d|)", "1 (conjectured; false for d >= 3)"},
}};

ExactRational inverse(const BigInt& value) { return ExactRational(BigInt(1), value); }

ExactRational stars_and_bars(int s, int d) { return ExactRational(binomial(s + d - 1, d - 1)); }

InequalityReport make_report(std::string_view id, ExactRational lhs, ExactRational rhs) {
    InequalityReport report;
    report.theorem_id = std::string(id);
    report.holds = lhs <= rhs;
    report.tight = lhs == rhs;
    report.lhs = std::move(lhs);
    report.rhs = std::move(rhs);
    return report;
}

// Returns true when the hypothesis holds; throws unless forced.
bool require_class(const Family& family, SystemClass c, std::string_view id, bool force) {
    const bool ok = classify(family).flags.has(c);
    if (!ok && !force) {
        throw HypothesisFailed(std::string(id) + ": family is not a " + std::string(to_string(c)) +
                               " system");
    }
    return ok;
}

}  // namespace

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt multinomial(int n, std::span<const int> sizes) {
    if (n < 0) throw InvalidInput("multinomial: n must be non-negative");
    int running = 0;
    BigInt result = 1;
    for (int a : sizes) {
        if (a < 0) throw InvalidInput("multinomial: sizes must be non-negative");
        running += a;
        if (running > n) throw InvalidInput("multinomial: sizes sum past n");
        result *= binomial(running, a);
    }
    return result * binomial(n, running);
}

ExactRational inverse_multinomial_sum(const Family& family) {
    ExactRational total;
    for (const auto& member : family.members()) {
        const auto sizes = member.part_sizes();
        int n = 0;
        for (int a : sizes) n += a;
        total += inverse(multinomial(n, sizes));
    }
    return total;
}

ExactRational blocked_inverse_sum(const Family& family) {
    ExactRational total;
    for (const auto& member : family.members()) {
        const SizeProfile profile = size_profile(member, family.ground());
        BigInt product = 1;
        for (std::size_t k = 0; k < profile.block_count(); ++k) {
            product *= multinomial(profile.row_sum(k), profile.row(k));
        }
        total += inverse(product);
    }
    return total;
}

ExactRational tuza_product_sum(const Family& family, std::span<const ExactRational> p) {
    if (p.size() != static_cast<std::size_t>(family.d())) {
        throw InvalidInput("product weights: need exactly d = " + std::to_string(family.d()) + " weights");
    }
    ExactRational sum;
    for (const auto& w : p) {
        if (w.sign() <= 0) throw InvalidInput("product weights must be positive");
        sum += w;
    }
    if (sum != ExactRational(1)) throw InvalidInput("product weights must sum to exactly 1");

    ExactRational total;
    for (const auto& member : family.members()) {
        ExactRational term(1);
        for (int r = 0; r < family.d(); ++r) {
            term *= p[static_cast<std::size_t>(r)].pow(static_cast<unsigned>(member.part(r).size()));
        }
        total += term;
    }
    return total;
}

BoundClass parse_bound_class(std::string_view name) {
    if (name == "skew") return BoundClass::skew;
    if (name == "weak") return BoundClass::weak;
    if (name == "strong") return BoundClass::strong;
    if (name == "symmetric") return BoundClass::symmetric;
    if (name == "bollobas-d3") return BoundClass::bollobas_d3;
    throw InvalidInput("no closed-form bound for class '" + std::string(name) + "'");
}

ExactRational class_bound(BoundClass c, int d, std::span<const int> block_sizes) {
    if (d < 2) throw InvalidInput("class_bound: d must be at least 2");
    if (block_sizes.empty()) throw InvalidInput("class_bound: need at least one block size");
    for (int s : block_sizes) {
        if (s < 0) throw InvalidInput("class_bound: block sizes must be non-negative");
    }
    switch (c) {
        case BoundClass::skew:
        case BoundClass::weak: {
            ExactRational product(1);
            for (int s : block_sizes) product *= stars_and_bars(s, d);
            return product;
        }
        case BoundClass::strong:
        case BoundClass::symmetric: {
            std::optional<ExactRational> best;
            for (std::size_t l = 0; l < block_sizes.size(); ++l) {
                ExactRational product(1);
                for (std::size_t k = 0; k < block_sizes.size(); ++k) {
                    if (k != l) product *= stars_and_bars(block_sizes[k], d);
                }
                if (!best || product < *best) best = product;
            }
            return *best;
        }
        case BoundClass::bollobas_d3:
            if (d != 3 || block_sizes.size() != 1) {
                throw InvalidInput("bollobas-d3 bound needs d = 3 and a single block; "
                                   "other Bollobas bounds come from the extremal search");
            }
            return ExactRational(block_sizes[0] / 2 + 1);
    }
    throw InvalidInput("unsupported bound class");
}

std::span<const TheoremInfo> theorem_registry() noexcept { return kTheorems; }

const TheoremInfo& theorem_info(std::string_view id) {
    for (const auto& t : kTheorems) {
        if (t.id == id) return t;
    }
    throw InvalidInput("unknown theorem id '" + std::string(id) + "'");
}

InequalityReport check_theorem(const Family& family, std::string_view theorem_id, const CheckOptions& options) {
    const TheoremInfo& info = theorem_info(theorem_id);
    if (info.required_d != 0 && family.d() != info.required_d) {
        throw InvalidInput(std::string(info.id) + " needs d = " + std::to_string(info.required_d) +
                           ", family has d = " + std::to_string(family.d()));
    }
    const auto blocks = static_cast<int>(family.ground().block_count());
    if (info.required_blocks != 0 && blocks != info.required_blocks) {
        throw InvalidInput(std::string(info.id) + " needs " + std::to_string(info.required_blocks) +
                           " blocks, family has " + std::to_string(blocks));
    }
    const bool hypothesis_ok = require_class(family, info.hypothesis, info.id, options.force);

    const Support sup = support(family);
    const std::vector<int> block_sizes = sup.block_sizes();
    const int d = family.d();
    const std::vector<int> whole{sup.size()};

    ExactRational lhs;
    ExactRational rhs;
    const std::string_view id = info.id;
    if (id == "bollobas-pairs" || id == "strong" || id == "symmetric" || id == "multinomial-conjecture") {
        lhs = inverse_multinomial_sum(family);
        rhs = ExactRational(1);
    } else if (id == "skew-pairs") {
        lhs = inverse_multinomial_sum(family);
        rhs = ExactRational(family.ground().n() + 1);
    } else if (id == "skew-blocked" || id == "weak-blocked") {
        lhs = blocked_inverse_sum(family);
        rhs = class_bound(BoundClass::skew, d, block_sizes);
    } else if (id == "bollobas-d3") {
        lhs = inverse_multinomial_sum(family);
        rhs = class_bound(BoundClass::bollobas_d3, d, whole);
    } else if (id == "strong-blocked" || id == "symmetric-blocked") {
        lhs = blocked_inverse_sum(family);
        rhs = class_bound(BoundClass::strong, d, block_sizes);
    } else if (id == "strong-two-blocks") {
        lhs = blocked_inverse_sum(family);
        rhs = ExactRational(binomial(family.ground().n() / 2 + d - 1, d - 1));
    } else if (id == "product-weights") {
        std::vector<ExactRational> p;
        if (options.p) {
            p = *options.p;
        } else {
            p.assign(static_cast<std::size_t>(d), ExactRational(BigInt(1), BigInt(d)));
        }
        lhs = tuza_product_sum(family, p);
        rhs = ExactRational(1);
    } else {
        throw InvalidInput("theorem '" + std::string(id) + "' has no evaluator");
    }

    InequalityReport report = make_report(id, std::move(lhs), std::move(rhs));
    report.hypothesis_failed = !hypothesis_ok;
    return report;
}

InequalityReport uniform_cardinality_check(const Family& family, bool force) {
    if (family.d() != 2) throw InvalidInput("uniform cardinality bound needs d = 2");
    if (family.empty()) throw InvalidInput("uniform cardinality bound needs at least one member");
    const SizeProfile profile = size_profile(family[0], family.ground());
    for (std::size_t i = 1; i < family.size(); ++i) {
        if (size_profile(family[i], family.ground()) != profile) {
            throw InvalidInput("uniform cardinality bound needs one shared size profile (member " +
                               std::to_string(i) + " differs)");
        }
    }
    const bool hypothesis_ok = require_class(family, SystemClass::skew, "uniform-cardinality", force);

    BigInt bound = 1;
    for (std::size_t k = 0; k < profile.block_count(); ++k) {
        bound *= binomial(profile.at(k, 0) + profile.at(k, 1), profile.at(k, 0));
    }
    InequalityReport report = make_report("uniform-cardinality",
                                          ExactRational(static_cast<std::int64_t>(family.size())),
                                          ExactRational(bound));
    report.hypothesis_failed = !hypothesis_ok;
    return report;
}

}  // namespace bollobas
