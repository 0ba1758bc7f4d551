#include "bollobas/element_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bollobas {

namespace {

constexpr std::size_t word_of(int x) { return static_cast<std::size_t>(x - 1) / 64; }
constexpr std::uint64_t bit_of(int x) { return std::uint64_t{1} << (static_cast<unsigned>(x - 1) % 64); }

}  // namespace

ElementSet::ElementSet(std::initializer_list<int> elements) {
    for (int x : elements) insert(x);
}

ElementSet::ElementSet(std::span<const int> elements) {
    for (int x : elements) insert(x);
}

ElementSet ElementSet::interval(int first, int last) {
    ElementSet result;
    for (int x = first; x <= last; ++x) result.insert(x);
    return result;
}

void ElementSet::insert(int x) {
    if (x < 1) throw std::invalid_argument("set elements must be positive integers");
    const std::size_t w = word_of(x);
    if (words_.size() <= w) words_.resize(w + 1, 0);
    words_[w] |= bit_of(x);
}

void ElementSet::erase(int x) {
    if (!contains(x)) return;
    words_[word_of(x)] &= ~bit_of(x);
    trim();
}

bool ElementSet::contains(int x) const noexcept {
    if (x < 1) return false;
    const std::size_t w = word_of(x);
    return w < words_.size() && (words_[w] & bit_of(x)) != 0;
}

std::size_t ElementSet::size() const noexcept {
    std::size_t count = 0;
    for (std::uint64_t w : words_) count += static_cast<std::size_t>(std::popcount(w));
    return count;
}

int ElementSet::min() const {
    if (words_.empty()) throw std::logic_error("min() of empty set");
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) return static_cast<int>(w * 64) + std::countr_zero(words_[w]) + 1;
    }
    throw std::logic_error("unreachable");
}

int ElementSet::max() const {
    if (words_.empty()) throw std::logic_error("max() of empty set");
    const std::size_t w = words_.size() - 1;
    return static_cast<int>(w * 64) + 63 - std::countl_zero(words_[w]) + 1;
}

bool ElementSet::intersects(const ElementSet& other) const noexcept {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < n; ++w) {
        if ((words_[w] & other.words_[w]) != 0) return true;
    }
    return false;
}

bool ElementSet::subset_of(const ElementSet& other) const noexcept {
    if (words_.size() > other.words_.size()) return false;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
    if (words_.size() < other.words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t w = 0; w < other.words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
    if (words_.size() > other.words_.size()) words_.resize(other.words_.size());
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    trim();
    return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < n; ++w) words_[w] &= ~other.words_[w];
    trim();
    return *this;
}

std::vector<int> ElementSet::elements() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int x) { out.push_back(x); });
    return out;
}

std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    const auto ea = a.elements();
    const auto eb = b.elements();
    return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::size_t ElementSet::hash() const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t w : words_) {
        h ^= static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

void ElementSet::trim() noexcept {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

}  // namespace bollobas
