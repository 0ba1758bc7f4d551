#include "bollobas/clique.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bollobas {

namespace {

using Words = std::vector<std::uint64_t>;

bool any(const Words& w) {
    return std::any_of(w.begin(), w.end(), [](std::uint64_t x) { return x != 0; });
}

void reset(Words& w, std::size_t v) { w[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
bool test(const Words& w, std::size_t v) { return ((w[v / 64] >> (v % 64)) & 1U) != 0; }

std::size_t first(const Words& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(w[i]));
    }
    return static_cast<std::size_t>(-1);
}

}  // namespace

class CliqueSearch {
public:
    CliqueSearch(const MaxCliqueSolver& g, std::size_t best, std::size_t stop_at)
        : g_(g), best_(best), stop_at_(stop_at) {}

    void run(Words candidates, std::uint64_t cover) { expand(std::move(candidates), cover, 0); }

    [[nodiscard]] std::size_t best() const noexcept { return best_; }
    [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }

private:
    const std::uint64_t* row(std::size_t v) const { return &g_.adjacency_[v * g_.words_]; }

    bool admissible(std::uint64_t cover) const { return !g_.use_cover_ || cover == g_.cover_target_; }

    // Greedy sequential colouring; order is sorted by non-decreasing colour.
    void colour(Words pool, std::vector<std::size_t>& order, std::vector<std::size_t>& colours) const {
        std::size_t k = 0;
        Words q(pool.size());
        while (any(pool)) {
            ++k;
            q = pool;
            while (any(q)) {
                const std::size_t v = first(q);
                reset(q, v);
                reset(pool, v);
                const std::uint64_t* adj = row(v);
                for (std::size_t i = 0; i < q.size(); ++i) q[i] &= ~adj[i];
                order.push_back(v);
                colours.push_back(k);
            }
        }
    }

    void expand(Words candidates, std::uint64_t cover, std::size_t depth) {
        ++nodes_;
        std::vector<std::size_t> order;
        std::vector<std::size_t> colours;
        colour(candidates, order, colours);
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (depth + colours[idx] <= best_) return;
            const std::size_t v = order[idx];
            const std::uint64_t next_cover = cover | (g_.use_cover_ ? g_.cover_masks_[v] : 0);
            if (depth + 1 > best_ && admissible(next_cover)) {
                best_ = depth + 1;
                if (best_ >= stop_at_) {
                    done_ = true;
                    return;
                }
            }
            Words next(candidates.size());
            const std::uint64_t* adj = row(v);
            for (std::size_t i = 0; i < next.size(); ++i) next[i] = candidates[i] & adj[i];
            if (any(next)) {
                expand(std::move(next), next_cover, depth + 1);
                if (done_) return;
            }
            reset(candidates, v);
        }
    }

    const MaxCliqueSolver& g_;
    std::size_t best_;
    std::size_t stop_at_;
    std::uint64_t nodes_ = 0;
    bool done_ = false;
};

MaxCliqueSolver::MaxCliqueSolver(std::size_t vertex_count)
    : n_(vertex_count), words_((vertex_count + 63) / 64), adjacency_(n_ * words_, 0) {}

void MaxCliqueSolver::add_edge(std::size_t u, std::size_t v) {
    if (u >= n_ || v >= n_) throw std::out_of_range("clique solver vertex");
    if (u == v) return;
    adjacency_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    adjacency_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

bool MaxCliqueSolver::adjacent(std::size_t u, std::size_t v) const {
    return ((adjacency_.at(u * words_ + v / 64) >> (v % 64)) & 1U) != 0;
}

void MaxCliqueSolver::require_cover(std::vector<std::uint64_t> masks, std::uint64_t target) {
    if (masks.size() != n_) throw std::invalid_argument("one cover mask per vertex required");
    cover_masks_ = std::move(masks);
    cover_target_ = target;
    use_cover_ = true;
}

MaxCliqueSolver::Result MaxCliqueSolver::solve() const {
    Result result;
    Words all(words_, 0);
    for (std::size_t v = 0; v < n_; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);

    CliqueSearch full(*this, 0, static_cast<std::size_t>(-1));
    full.run(all, 0);
    result.nodes += full.nodes();
    const std::size_t omega = full.best();

    // Lexicographically least admissible clique of size omega, one vertex at a
    // time: keep v if some admissible omega-clique extends chosen + v using
    // only vertices after v.
    Words allowed = all;
    std::uint64_t cover = 0;
    for (std::size_t v = 0; v < n_ && result.clique.size() < omega; ++v) {
        if (!test(allowed, v)) continue;
        const std::size_t need = omega - result.clique.size() - 1;
        Words next(words_, 0);
        const std::uint64_t* adj = &adjacency_[v * words_];
        for (std::size_t i = 0; i < words_; ++i) next[i] = allowed[i] & adj[i];
        for (std::size_t u = 0; u <= v; ++u) reset(next, u);
        const std::uint64_t next_cover = cover | (use_cover_ ? cover_masks_[v] : 0);

        bool extendable = false;
        if (need == 0) {
            extendable = !use_cover_ || next_cover == cover_target_;
        } else {
            CliqueSearch probe(*this, need - 1, need);
            probe.run(next, next_cover);
            result.nodes += probe.nodes();
            extendable = probe.best() >= need;
        }
        if (extendable) {
            result.clique.push_back(v);
            allowed = std::move(next);
            cover = next_cover;
        }
    }
    if (result.clique.size() != omega) throw std::logic_error("clique extraction lost the optimum");
    return result;
}

}  // namespace bollobas
