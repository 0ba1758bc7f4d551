#include "bollobas/perm_oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <thread>

#include "bollobas/errors.hpp"
#include "bollobas/weights.hpp"

namespace bollobas {

namespace {

// Block supports as sorted element lists, plus a lookup from element to its
// position in the sorted support.
struct Layout {
    std::vector<std::vector<int>> blocks;
    std::vector<int> domain;
    std::vector<int> position;  // indexed by element, -1 outside S
};

Layout make_layout(const Family& family) {
    const Support s = support(family);
    Layout layout;
    layout.domain = s.elements.elements();
    layout.position.assign(static_cast<std::size_t>(family.ground().n()) + 1, -1);
    for (std::size_t j = 0; j < layout.domain.size(); ++j) {
        layout.position[static_cast<std::size_t>(layout.domain[j])] = static_cast<int>(j);
    }
    for (const auto& piece : s.per_block) layout.blocks.push_back(piece.elements());
    return layout;
}

std::uint64_t checked_count(const Layout& layout, std::uint64_t limit) {
    BigInt count = 1;
    for (const auto& b : layout.blocks) {
        for (std::size_t i = 2; i <= b.size(); ++i) count *= i;
    }
    if (count > limit) {
        throw CapExceeded("block permutation group has " + to_string(count) + " elements, above the limit of " +
                          std::to_string(limit));
    }
    return static_cast<std::uint64_t>(count);
}

// For every member and block, the non-empty parts restricted to that block,
// in part order.
class ChainChecker {
public:
    explicit ChainChecker(const Family& family) {
        const auto& ground = family.ground();
        pieces_.resize(family.size());
        for (std::size_t i = 0; i < family.size(); ++i) {
            for (std::size_t k = 0; k < ground.block_count(); ++k) {
                std::vector<std::vector<int>> chain;
                for (const auto& part : family[i].parts()) {
                    const ElementSet piece = part & ground.block(k);
                    if (!piece.empty()) chain.push_back(piece.elements());
                }
                if (chain.size() >= 2) pieces_[i].push_back(std::move(chain));
            }
        }
    }

    // `image` is indexed by element.
    [[nodiscard]] bool chained(std::size_t i, const std::vector<int>& image) const {
        for (const auto& chain : pieces_[i]) {
            int previous_max = std::numeric_limits<int>::min();
            for (const auto& piece : chain) {
                int lo = std::numeric_limits<int>::max();
                int hi = std::numeric_limits<int>::min();
                for (int x : piece) {
                    const int y = image[static_cast<std::size_t>(x)];
                    lo = std::min(lo, y);
                    hi = std::max(hi, y);
                }
                if (lo <= previous_max) return false;
                previous_max = hi;
            }
        }
        return true;
    }

    [[nodiscard]] std::size_t members() const noexcept { return pieces_.size(); }

private:
    std::vector<std::vector<std::vector<std::vector<int>>>> pieces_;
};

// Per-block permutations of the block elements; state[k][j] is the image of
// layout.blocks[k][j]. Rank order: odometer with the last block fastest, each
// block in lexicographic order.
class Odometer {
public:
    Odometer(const Layout& layout, std::uint64_t rank) : layout_(layout) {
        state_.resize(layout.blocks.size());
        for (std::size_t k = layout.blocks.size(); k-- > 0;) {
            const std::size_t m = layout.blocks[k].size();
            std::uint64_t radix = 1;
            for (std::size_t i = 2; i <= m; ++i) radix *= i;
            state_[k] = unrank(layout.blocks[k], rank % radix);
            rank /= radix;
        }
    }

    void advance() {
        for (std::size_t k = state_.size(); k-- > 0;) {
            if (std::next_permutation(state_[k].begin(), state_[k].end())) return;
        }
    }

    void write_image(std::vector<int>& image) const {
        for (std::size_t k = 0; k < state_.size(); ++k) {
            for (std::size_t j = 0; j < state_[k].size(); ++j) {
                image[static_cast<std::size_t>(layout_.blocks[k][j])] = state_[k][j];
            }
        }
    }

private:
    static std::vector<int> unrank(std::vector<int> pool, std::uint64_t rank) {
        std::vector<int> out;
        out.reserve(pool.size());
        std::uint64_t fact = 1;
        for (std::size_t i = 2; i < pool.size(); ++i) fact *= i;
        while (!pool.empty()) {
            const std::size_t pick = static_cast<std::size_t>(rank / fact);
            rank %= fact;
            out.push_back(pool[pick]);
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
            if (pool.size() > 1) fact /= pool.size();
        }
        return out;
    }

    const Layout& layout_;
    std::vector<std::vector<int>> state_;
};

}  // namespace

int BlockPermutation::operator()(int x) const {
    const auto it = std::lower_bound(domain.begin(), domain.end(), x);
    if (it == domain.end() || *it != x) throw InvalidInput("element " + std::to_string(x) + " is outside the support");
    return image[static_cast<std::size_t>(it - domain.begin())];
}

BigInt block_permutation_count(const Family& family) {
    BigInt count = 1;
    for (int size : support(family).block_sizes()) {
        for (int i = 2; i <= size; ++i) count *= i;
    }
    return count;
}

void for_each_block_permutation(const Family& family, const std::function<void(const BlockPermutation&)>& visit,
                                std::uint64_t limit) {
    const Layout layout = make_layout(family);
    const std::uint64_t total = checked_count(layout, limit);
    std::vector<int> image(layout.position.size(), 0);
    BlockPermutation sigma{layout.domain, std::vector<int>(layout.domain.size(), 0)};
    Odometer odometer(layout, 0);
    for (std::uint64_t r = 0; r < total; ++r) {
        odometer.write_image(image);
        for (std::size_t j = 0; j < layout.domain.size(); ++j) {
            sigma.image[j] = image[static_cast<std::size_t>(layout.domain[j])];
        }
        visit(sigma);
        odometer.advance();
    }
}

std::vector<BlockPermutation> block_permutations(const Family& family, std::uint64_t limit) {
    std::vector<BlockPermutation> out;
    for_each_block_permutation(family, [&](const BlockPermutation& sigma) { out.push_back(sigma); }, limit);
    return out;
}

std::vector<std::size_t> i_sigma(const Family& family, const BlockPermutation& sigma) {
    const Layout layout = make_layout(family);
    if (sigma.domain != layout.domain || sigma.image.size() != layout.domain.size()) {
        throw InvalidInput("permutation domain differs from the family support");
    }
    std::vector<int> image(layout.position.size(), 0);
    for (std::size_t j = 0; j < sigma.domain.size(); ++j) {
        const int y = sigma.image[j];
        const bool same_block = std::any_of(layout.blocks.begin(), layout.blocks.end(), [&](const auto& b) {
            return std::binary_search(b.begin(), b.end(), sigma.domain[j]) && std::binary_search(b.begin(), b.end(), y);
        });
        if (!same_block) throw InvalidInput("permutation does not preserve the blocks");
        image[static_cast<std::size_t>(sigma.domain[j])] = y;
    }
    const ChainChecker checker(family);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < checker.members(); ++i) {
        if (checker.chained(i, image)) out.push_back(i);
    }
    return out;
}

DoubleCount double_count_identity(const Family& family, std::uint64_t limit, unsigned threads) {
    const Layout layout = make_layout(family);
    const std::uint64_t total = checked_count(layout, limit);

    DoubleCount result;
    result.permutations = total;

    ExactRational lhs;
    BigInt group_order = 1;
    for (const auto& b : layout.blocks) {
        for (std::size_t i = 2; i <= b.size(); ++i) group_order *= i;
    }
    for (const auto& member : family.members()) {
        const SizeProfile profile = size_profile(member, family.ground());
        BigInt denominator = 1;
        for (std::size_t k = 0; k < profile.block_count(); ++k) {
            denominator *= multinomial(profile.row_sum(k), profile.row(k));
        }
        lhs += ExactRational(group_order, denominator);
    }
    if (!lhs.is_integer()) throw InternalError("double counting left side is not an integer: " + lhs.to_string());
    result.lhs = lhs.numerator();

    const ChainChecker checker(family);
    const unsigned workers = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(total, 1)));
    std::vector<std::uint64_t> partial(workers, 0);
    auto work = [&](unsigned w) {
        const std::uint64_t begin = total * w / workers;
        const std::uint64_t end = total * (w + 1) / workers;
        if (begin == end) return;
        std::vector<int> image(layout.position.size(), 0);
        Odometer odometer(layout, begin);
        std::uint64_t sum = 0;
        for (std::uint64_t r = begin; r < end; ++r) {
            odometer.write_image(image);
            for (std::size_t i = 0; i < checker.members(); ++i) {
                if (checker.chained(i, image)) ++sum;
            }
            odometer.advance();
        }
        partial[w] = sum;
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    result.rhs = 0;
    for (std::uint64_t p : partial) result.rhs += p;
    result.equal = result.lhs == result.rhs;
    return result;
}

}  // namespace bollobas
