#pragma once

// Slow reference implementations used as test oracles. They work on plain
// std::set values and follow the definitions literally, sharing no code with
// the library beyond the value types used to hand data over.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bollobas/partition.hpp"

namespace oracle {

using Plain = std::vector<std::set<int>>;
using Rational = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline Plain plain(const bollobas::DPartition& p) {
    Plain out;
    for (const auto& part : p.parts()) {
        const auto e = part.elements();
        out.emplace_back(e.begin(), e.end());
    }
    return out;
}

inline bool meets(const std::set<int>& a, const std::set<int>& b) {
    return std::any_of(a.begin(), a.end(), [&](int x) { return b.count(x) != 0; });
}

inline bool skew(const Plain& P, const Plain& Q) {
    for (std::size_t p = 0; p < P.size(); ++p)
        for (std::size_t q = p + 1; q < P.size(); ++q)
            if (meets(P[p], Q[q])) return true;
    return false;
}

inline bool weak(const Plain& P, const Plain& Q) { return skew(P, Q) || skew(Q, P); }
inline bool bollobas(const Plain& P, const Plain& Q) { return skew(P, Q) && skew(Q, P); }

// Both crossing cells must also point forward: u1 < v2 and v1 < u2.
inline bool strong(const Plain& P, const Plain& Q) {
    const std::size_t d = P.size();
    for (std::size_t u1 = 0; u1 < d; ++u1)
        for (std::size_t u2 = u1 + 1; u2 < d; ++u2)
            for (std::size_t v1 = 0; v1 < d; ++v1)
                for (std::size_t v2 = v1 + 1; v2 < d; ++v2)
                    if (u1 < v2 && v1 < u2 && meets(P[u1], Q[v2]) && meets(P[u2], Q[v1])) return true;
    return false;
}

inline bool crossing(const Plain& P, const Plain& Q) {
    const std::size_t d = P.size();
    for (std::size_t u1 = 0; u1 < d; ++u1)
        for (std::size_t u2 = u1 + 1; u2 < d; ++u2)
            for (std::size_t v1 = 0; v1 < d; ++v1)
                for (std::size_t v2 = v1 + 1; v2 < d; ++v2)
                    if (meets(P[u1], Q[v2]) && meets(P[u2], Q[v1])) return true;
    return false;
}

inline bool symmetric(const Plain& P, const Plain& Q) {
    for (std::size_t p = 0; p < P.size(); ++p)
        for (std::size_t q = p + 1; q < P.size(); ++q)
            if (meets(P[p], Q[q]) && meets(Q[p], P[q])) return true;
    return false;
}

struct Flags {
    bool weak = true, skew = true, bollobas = true, strong = true, symmetric = true;
};

inline Flags classify(const bollobas::Family& f) {
    std::vector<Plain> m;
    for (const auto& p : f.members()) m.push_back(plain(p));
    Flags flags;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            flags.weak = flags.weak && weak(m[i], m[j]);
            flags.skew = flags.skew && skew(m[i], m[j]);
            flags.bollobas = flags.bollobas && bollobas(m[i], m[j]);
            flags.strong = flags.strong && strong(m[i], m[j]);
            flags.symmetric = flags.symmetric && symmetric(m[i], m[j]);
        }
    }
    return flags;
}

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// n! / (a_1! ... a_d! (n - sum a)!).
inline Int multinomial(int n, const std::vector<int>& a) {
    Int den = 1;
    int total = 0;
    for (int x : a) {
        den *= factorial(x);
        total += x;
    }
    return factorial(n) / (den * factorial(n - total));
}

/// Number of words over {0, 1..d} of length n with letter r used a_r times,
/// counted by enumerating all words. Only for tiny n.
inline std::uint64_t count_words(int n, const std::vector<int>& a) {
    const int letters = static_cast<int>(a.size()) + 1;
    std::uint64_t total = 1, hits = 0;
    for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(letters);
    for (std::uint64_t w = 0; w < total; ++w) {
        std::vector<int> used(a.size(), 0);
        std::uint64_t x = w;
        for (int i = 0; i < n; ++i) {
            const int letter = static_cast<int>(x % static_cast<std::uint64_t>(letters));
            x /= static_cast<std::uint64_t>(letters);
            if (letter) ++used[static_cast<std::size_t>(letter - 1)];
        }
        if (used == a) ++hits;
    }
    return hits;
}

inline std::vector<int> sizes(const Plain& p) {
    std::vector<int> out;
    for (const auto& s : p) out.push_back(static_cast<int>(s.size()));
    return out;
}

inline Rational inverse_sum(const bollobas::Family& f) {
    Rational total = 0;
    for (const auto& member : f.members()) {
        const auto a = sizes(plain(member));
        int n = 0;
        for (int x : a) n += x;
        total += Rational(1) / Rational(multinomial(n, a));
    }
    return total;
}

inline std::vector<std::set<int>> block_sets(const bollobas::GroundSet& g) {
    std::vector<std::set<int>> out;
    for (const auto& b : g.blocks()) {
        const auto e = b.elements();
        out.emplace_back(e.begin(), e.end());
    }
    return out;
}

inline Plain restrict(const Plain& p, const std::set<int>& block) {
    Plain out;
    for (const auto& part : p) {
        std::set<int> piece;
        for (int x : part)
            if (block.count(x)) piece.insert(x);
        out.push_back(piece);
    }
    return out;
}

inline Rational blocked_sum(const bollobas::Family& f) {
    Rational total = 0;
    const auto blocks = block_sets(f.ground());
    for (const auto& member : f.members()) {
        Rational term = 1;
        for (const auto& b : blocks) {
            const auto a = sizes(restrict(plain(member), b));
            int n = 0;
            for (int x : a) n += x;
            term /= Rational(multinomial(n, a));
        }
        total += term;
    }
    return total;
}

inline std::set<int> support(const bollobas::Family& f) {
    std::set<int> s;
    for (const auto& m : f.members())
        for (const auto& part : plain(m)) s.insert(part.begin(), part.end());
    return s;
}

/// Every set in `earlier` lies wholly below every set in `later`; empty sets
/// never obstruct.
inline bool chained(const Plain& parts) {
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (std::size_t q = p + 1; q < parts.size(); ++q)
            for (int x : parts[p])
                for (int y : parts[q])
                    if (!(x < y)) return false;
    return true;
}

/// Sum over all permutations of the support that fix every block support of
/// the number of members chained in every block. Enumerates the full
/// symmetric group on the support and filters.
inline std::uint64_t double_count_rhs(const bollobas::Family& f) {
    const std::set<int> s = oracle::support(f);
    const std::vector<int> dom(s.begin(), s.end());
    std::vector<std::set<int>> blocks;
    for (const auto& b : block_sets(f.ground())) {
        std::set<int> piece;
        for (int x : b)
            if (s.count(x)) piece.insert(x);
        blocks.push_back(piece);
    }
    std::vector<Plain> members;
    for (const auto& m : f.members()) members.push_back(plain(m));

    std::vector<int> img = dom;
    std::uint64_t total = 0;
    do {
        std::map<int, int> sigma;
        for (std::size_t j = 0; j < dom.size(); ++j) sigma[dom[j]] = img[j];
        bool preserves = true;
        for (const auto& b : blocks)
            for (int x : b) preserves = preserves && b.count(sigma[x]);
        if (!preserves) continue;
        for (const auto& m : members) {
            bool ok = true;
            for (const auto& b : blocks) {
                Plain moved;
                for (const auto& part : restrict(m, b)) {
                    std::set<int> image;
                    for (int x : part) image.insert(sigma[x]);
                    moved.push_back(image);
                }
                ok = ok && chained(moved);
            }
            if (ok) ++total;
        }
    } while (std::next_permutation(img.begin(), img.end()));
    return total;
}

/// Size of a maximum clique and the lexicographically least one, by trying
/// every vertex subset. Only for tiny graphs.
inline std::vector<std::size_t> brute_clique(std::size_t n, const std::vector<std::vector<bool>>& adj,
                                             const std::vector<std::uint64_t>* masks = nullptr,
                                             std::uint64_t target = 0) {
    std::vector<std::size_t> best;
    bool found = false;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n); ++sub) {
        std::vector<std::size_t> vs;
        for (std::size_t v = 0; v < n; ++v)
            if ((sub >> v) & 1U) vs.push_back(v);
        bool clique = true;
        for (std::size_t a = 0; a < vs.size() && clique; ++a)
            for (std::size_t b = a + 1; b < vs.size() && clique; ++b) clique = adj[vs[a]][vs[b]];
        if (!clique) continue;
        if (masks) {
            std::uint64_t cover = 0;
            for (auto v : vs) cover |= (*masks)[v];
            if (cover != target) continue;
        }
        if (!found || vs.size() > best.size() || (vs.size() == best.size() && vs < best)) {
            best = vs;
            found = true;
        }
    }
    return best;
}

/// Random d-partition of [n]: each element lands in one of the parts or in
/// none, each outcome with the same probability.
inline bollobas::DPartition random_partition(std::mt19937& rng, int n, int d) {
    std::vector<bollobas::ElementSet> parts(static_cast<std::size_t>(d));
    std::uniform_int_distribution<int> pick(0, d);
    for (int x = 1; x <= n; ++x) {
        const int r = pick(rng);
        if (r) parts[static_cast<std::size_t>(r - 1)].insert(x);
    }
    return bollobas::DPartition(std::move(parts));
}

/// Random increasing-parts d-partition of [n]: a random subset cut into d
/// consecutive runs.
inline bollobas::DPartition random_increasing(std::mt19937& rng, int n, int d) {
    std::vector<int> chosen;
    std::bernoulli_distribution keep(0.7);
    for (int x = 1; x <= n; ++x)
        if (keep(rng)) chosen.push_back(x);
    std::vector<int> cuts;
    std::uniform_int_distribution<int> cut(0, static_cast<int>(chosen.size()));
    for (int r = 0; r + 1 < d; ++r) cuts.push_back(cut(rng));
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(static_cast<int>(chosen.size()));
    std::vector<bollobas::ElementSet> parts(static_cast<std::size_t>(d));
    int at = 0;
    for (int r = 0; r < d; ++r) {
        for (; at < cuts[static_cast<std::size_t>(r)]; ++at) parts[static_cast<std::size_t>(r)].insert(chosen[static_cast<std::size_t>(at)]);
    }
    return bollobas::DPartition(std::move(parts));
}

/// Random blocking of [n] into e non-empty blocks (e <= n).
inline bollobas::GroundSet random_ground(std::mt19937& rng, int n, int e) {
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) order[static_cast<std::size_t>(x - 1)] = x;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<bollobas::ElementSet> blocks(static_cast<std::size_t>(e));
    for (int i = 0; i < n; ++i) {
        const std::size_t k = i < e ? static_cast<std::size_t>(i) : std::uniform_int_distribution<std::size_t>(0, static_cast<std::size_t>(e - 1))(rng);
        blocks[k].insert(order[static_cast<std::size_t>(i)]);
    }
    return bollobas::GroundSet(n, std::move(blocks));
}

/// Random family of distinct members, `m` draws before de-duplication.
template <class Gen>
bollobas::Family random_family(std::mt19937& rng, const bollobas::GroundSet& ground, int d, int m, Gen gen) {
    std::vector<bollobas::DPartition> members;
    for (int i = 0; i < m; ++i) {
        auto p = gen(rng, ground.n(), d);
        if (std::find(members.begin(), members.end(), p) == members.end()) members.push_back(std::move(p));
    }
    return bollobas::Family(ground, d, std::move(members));
}

/// Random family grown greedily: each draw is kept only if it forms an
/// allowed pair with every member kept so far (`ok(earlier, later)`).
template <class Gen, class Ok>
bollobas::Family greedy_family(std::mt19937& rng, const bollobas::GroundSet& ground, int d, int draws, Gen gen,
                               Ok ok) {
    std::vector<bollobas::DPartition> members;
    for (int i = 0; i < draws; ++i) {
        auto p = gen(rng, ground.n(), d);
        if (std::find(members.begin(), members.end(), p) != members.end()) continue;
        const Plain candidate = plain(p);
        bool fits = true;
        for (const auto& m : members) fits = fits && ok(plain(m), candidate);
        if (fits) members.push_back(std::move(p));
    }
    return bollobas::Family(ground, d, std::move(members));
}

}  // namespace oracle
