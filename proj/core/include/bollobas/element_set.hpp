#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace bollobas {

/// Finite set of positive integers backed by a bit vector.
///
/// Element x occupies bit x-1. Trailing zero words are trimmed after every
/// mutation so that equal sets have identical storage.
class ElementSet {
public:
    ElementSet() = default;
    ElementSet(std::initializer_list<int> elements);
    explicit ElementSet(std::span<const int> elements);

    /// The interval {first, ..., last}; empty when first > last.
    static ElementSet interval(int first, int last);

    void insert(int x);
    void erase(int x);

    [[nodiscard]] bool contains(int x) const noexcept;
    [[nodiscard]] bool empty() const noexcept { return words_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept;
    /// Smallest / largest element. Precondition: non-empty.
    [[nodiscard]] int min() const;
    [[nodiscard]] int max() const;

    [[nodiscard]] bool intersects(const ElementSet& other) const noexcept;
    [[nodiscard]] bool subset_of(const ElementSet& other) const noexcept;

    ElementSet& operator|=(const ElementSet& other);
    ElementSet& operator&=(const ElementSet& other);
    ElementSet& operator-=(const ElementSet& other);

    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

    /// Ascending element list.
    [[nodiscard]] std::vector<int> elements() const;
    [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int bit = __builtin_ctzll(bits);
                fn(static_cast<int>(w * 64) + bit + 1);
                bits &= bits - 1;
            }
        }
    }

    friend bool operator==(const ElementSet& a, const ElementSet& b) noexcept {
        return a.words_ == b.words_;
    }
    /// Lexicographic order on the ascending element lists.
    friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b);

    [[nodiscard]] std::size_t hash() const noexcept;

private:
    void trim() noexcept;

    std::vector<std::uint64_t> words_;
};

}  // namespace bollobas
