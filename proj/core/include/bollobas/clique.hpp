#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bollobas {

/// Exact maximum clique by branch and bound with a greedy-colouring bound over
/// bit-set adjacency rows.
///
/// An optional cover constraint restricts the admissible cliques to those
/// whose per-vertex masks OR to a target mask. Among the admissible cliques of
/// maximum size the lexicographically least sorted vertex list is returned.
class MaxCliqueSolver {
public:
    explicit MaxCliqueSolver(std::size_t vertex_count);

    [[nodiscard]] std::size_t vertex_count() const noexcept { return n_; }
    void add_edge(std::size_t u, std::size_t v);
    [[nodiscard]] bool adjacent(std::size_t u, std::size_t v) const;
    void require_cover(std::vector<std::uint64_t> masks, std::uint64_t target);

    struct Result {
        std::vector<std::size_t> clique;
        std::uint64_t nodes = 0;
    };

    [[nodiscard]] Result solve() const;

private:
    friend class CliqueSearch;

    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> adjacency_;  // n_ rows of words_ words
    std::vector<std::uint64_t> cover_masks_;
    std::uint64_t cover_target_ = 0;
    bool use_cover_ = false;
};

}  // namespace bollobas
