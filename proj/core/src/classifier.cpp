#include "bollobas/classifier.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "bollobas/errors.hpp"

namespace bollobas {

namespace {

// row[p] has bit q set iff P^(p) ∩ Q^(q) is non-empty.
struct CrossMatrix {
    int d = 0;
    std::array<std::uint64_t, kMaxParts> row{};
};

constexpr std::uint64_t bits_above(int p) {
    return p + 1 >= 64 ? 0 : ~std::uint64_t{0} << (p + 1);
}
constexpr std::uint64_t bits_below(int p) { return (std::uint64_t{1} << p) - 1; }

bool forward(const CrossMatrix& m) {
    for (int p = 0; p < m.d; ++p) {
        if ((m.row[p] & bits_above(p)) != 0) return true;
    }
    return false;
}

bool backward(const CrossMatrix& m) {
    for (int q = 1; q < m.d; ++q) {
        if ((m.row[q] & bits_below(q)) != 0) return true;
    }
    return false;
}

bool symmetric(const CrossMatrix& m) {
    for (int p = 0; p < m.d; ++p) {
        std::uint64_t qs = m.row[p] & bits_above(p);
        while (qs != 0) {
            const int q = std::countr_zero(qs);
            if ((m.row[q] >> p) & 1U) return true;
            qs &= qs - 1;
        }
    }
    return false;
}

// Exists u1 < u2, v1 < v2 with row[u1] bit v2 and row[u2] bit v1: for each u2,
// pair its lowest column with the highest column seen in earlier rows.
bool crossing(const CrossMatrix& m) {
    std::uint64_t earlier = 0;
    for (int u = 0; u < m.d; ++u) {
        if (earlier != 0 && m.row[u] != 0) {
            const int lowest = std::countr_zero(m.row[u]);
            const int highest = 63 - std::countl_zero(earlier);
            if (highest > lowest) return true;
        }
        earlier |= m.row[u];
    }
    return false;
}

// A crossing whose two cells are both forward witnesses: u1 < v2 and v1 < u2.
// For fixed u1 the largest admissible v2 is the best choice.
bool strong(const CrossMatrix& m) {
    for (int u1 = 0; u1 + 1 < m.d; ++u1) {
        const std::uint64_t right = m.row[u1] & bits_above(u1);
        if (right == 0) continue;
        const int v2 = 63 - std::countl_zero(right);
        for (int u2 = u1 + 1; u2 < m.d; ++u2) {
            if ((m.row[u2] & bits_below(std::min(v2, u2))) != 0) return true;
        }
    }
    return false;
}

CrossMatrix cross(const DPartition& a, const DPartition& b) {
    if (a.d() != b.d()) throw InvalidInput("pair predicate on members with different d");
    CrossMatrix m;
    m.d = a.d();
    for (int p = 0; p < m.d; ++p) {
        for (int q = 0; q < m.d; ++q) {
            if (a.part(p).intersects(b.part(q))) m.row[p] |= std::uint64_t{1} << q;
        }
    }
    return m;
}

// Members flattened to fixed-width word blocks for the m^2 loop.
class PackedFamily {
public:
    explicit PackedFamily(const Family& family)
        : d_(family.d()),
          width_(static_cast<std::size_t>((family.ground().n() + 63) / 64)),
          words_(family.size() * static_cast<std::size_t>(d_) * width_, 0) {
        for (std::size_t i = 0; i < family.size(); ++i) {
            for (int r = 0; r < d_; ++r) {
                const auto src = family[i].part(r).words();
                std::copy(src.begin(), src.end(), words_.begin() + static_cast<std::ptrdiff_t>(offset(i, r)));
            }
        }
    }

    CrossMatrix cross(std::size_t i, std::size_t j) const {
        CrossMatrix m;
        m.d = d_;
        for (int p = 0; p < d_; ++p) {
            const std::uint64_t* a = &words_[offset(i, p)];
            for (int q = 0; q < d_; ++q) {
                const std::uint64_t* b = &words_[offset(j, q)];
                for (std::size_t w = 0; w < width_; ++w) {
                    if ((a[w] & b[w]) != 0) {
                        m.row[p] |= std::uint64_t{1} << q;
                        break;
                    }
                }
            }
        }
        return m;
    }

private:
    std::size_t offset(std::size_t i, int r) const {
        return (i * static_cast<std::size_t>(d_) + static_cast<std::size_t>(r)) * width_;
    }

    int d_;
    std::size_t width_;
    std::vector<std::uint64_t> words_;
};

using Violations = std::array<std::optional<PairIndices>, 5>;

void note(Violations& v, SystemClass c, std::size_t i, std::size_t j) {
    auto& slot = v[static_cast<std::size_t>(c)];
    if (!slot || PairIndices{i, j} < *slot) slot = PairIndices{i, j};
}

// Rows i = start, start + stride, ... Rows are visited in increasing order so
// the first violation recorded per class is this worker's minimum.
Violations scan_rows(const PackedFamily& packed, std::size_t m, std::size_t start, std::size_t stride) {
    Violations v;
    for (std::size_t i = start; i < m; i += stride) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const CrossMatrix c = packed.cross(i, j);
            const bool fwd = forward(c);
            const bool bwd = backward(c);
            if (!fwd && !bwd) note(v, SystemClass::weak, i, j);
            if (!fwd) note(v, SystemClass::skew, i, j);
            if (!(fwd && bwd)) note(v, SystemClass::bollobas, i, j);
            if (!strong(c)) note(v, SystemClass::strong, i, j);
            if (!symmetric(c)) note(v, SystemClass::symmetric, i, j);
        }
    }
    return v;
}

}  // namespace

std::string_view to_string(SystemClass c) noexcept {
    switch (c) {
        case SystemClass::weak: return "weak";
        case SystemClass::skew: return "skew";
        case SystemClass::bollobas: return "bollobas";
        case SystemClass::strong: return "strong";
        case SystemClass::symmetric: return "symmetric";
    }
    return "unknown";
}

SystemClass parse_system_class(std::string_view name) {
    for (SystemClass c : kAllClasses) {
        if (to_string(c) == name) return c;
    }
    throw InvalidInput("unknown system class '" + std::string(name) + "'");
}

bool ClassFlags::has(SystemClass c) const noexcept {
    switch (c) {
        case SystemClass::weak: return weak;
        case SystemClass::skew: return skew;
        case SystemClass::bollobas: return bollobas;
        case SystemClass::strong: return strong;
        case SystemClass::symmetric: return symmetric;
    }
    return false;
}

void ClassFlags::set(SystemClass c, bool value) noexcept {
    switch (c) {
        case SystemClass::weak: weak = value; break;
        case SystemClass::skew: skew = value; break;
        case SystemClass::bollobas: bollobas = value; break;
        case SystemClass::strong: strong = value; break;
        case SystemClass::symmetric: symmetric = value; break;
    }
}

bool pair_skew(const DPartition& earlier, const DPartition& later) {
    return forward(cross(earlier, later));
}

bool pair_weak(const DPartition& a, const DPartition& b) {
    const CrossMatrix m = cross(a, b);
    return forward(m) || backward(m);
}

bool pair_bollobas(const DPartition& a, const DPartition& b) {
    const CrossMatrix m = cross(a, b);
    return forward(m) && backward(m);
}

bool pair_strong(const DPartition& a, const DPartition& b) { return strong(cross(a, b)); }

bool pair_crossing(const DPartition& a, const DPartition& b) { return crossing(cross(a, b)); }

bool pair_symmetric(const DPartition& a, const DPartition& b) { return symmetric(cross(a, b)); }

bool pair_in_class(SystemClass c, const DPartition& a, const DPartition& b) {
    switch (c) {
        case SystemClass::weak: return pair_weak(a, b);
        case SystemClass::skew: return pair_skew(a, b);
        case SystemClass::bollobas: return pair_bollobas(a, b);
        case SystemClass::strong: return pair_strong(a, b);
        case SystemClass::symmetric: return pair_symmetric(a, b);
    }
    return false;
}

std::optional<std::pair<int, int>> skew_witness(const DPartition& earlier, const DPartition& later) {
    const CrossMatrix m = cross(earlier, later);
    for (int p = 0; p < m.d; ++p) {
        const std::uint64_t qs = m.row[p] & bits_above(p);
        if (qs != 0) return std::pair{p, std::countr_zero(qs)};
    }
    return std::nullopt;
}

Classification classify(const Family& family, unsigned threads) {
    const PackedFamily packed(family);
    const std::size_t m = family.size();
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, m));

    std::vector<Violations> partial(workers);
    if (workers == 1) {
        partial[0] = scan_rows(packed, m, 0, 1);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] { partial[t] = scan_rows(packed, m, t, workers); });
        }
    }

    Classification result;
    for (const auto& v : partial) {
        for (SystemClass c : kAllClasses) {
            if (const auto& w = v[static_cast<std::size_t>(c)]) note(result.violations, c, w->first, w->second);
        }
    }
    for (SystemClass c : kAllClasses) result.flags.set(c, !result.violation(c).has_value());
    return result;
}

}  // namespace bollobas
