#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bollobas/classifier.hpp"
#include "bollobas/partition.hpp"

namespace bollobas {

/// Default limit on the number of vertices of one search graph.
inline constexpr std::size_t kDefaultVertexCap = 5000;

/// A full d-partition of [s] with increasing parts, given by its part sizes:
/// part r is the run of consecutive integers after parts 0..r-1.
struct IntervalVertex {
    std::vector<int> composition;

    [[nodiscard]] DPartition partition() const;
    friend bool operator==(const IntervalVertex&, const IntervalVertex&) = default;
};

/// All compositions of s into d non-negative parts, lex-increasing. There are
/// C(s + d - 1, d - 1) of them; CapExceeded above `cap`.
[[nodiscard]] std::vector<IntervalVertex> interval_vertices(int d, int s, std::size_t cap = kDefaultVertexCap);

enum class SearchMode {
    /// Vertices are the interval partitions of [s].
    full_only,
    /// Vertices are all increasing-parts partitions with support inside [s];
    /// cliques must cover [s]. Only meant for tiny s.
    general,
};

[[nodiscard]] std::string_view to_string(SearchMode mode) noexcept;

struct SearchOutcome {
    SystemClass system_class;
    int d;
    int s;
    std::size_t value;
    Family witness;
    SearchMode mode;
    bool exhaustive;
    std::size_t vertices;
    std::uint64_t search_nodes;
};

struct SearchOptions {
    SearchMode mode = SearchMode::full_only;
    std::size_t vertex_cap = kDefaultVertexCap;
};

/// Largest Bollobas system of increasing-parts d-partitions with support of
/// size s, by exact maximum clique search. The reported witness is the
/// lexicographically least maximum clique and is re-verified by the classifier.
[[nodiscard]] SearchOutcome n_bollobas(int d, int s, const SearchOptions& options = {});

/// C(s + d - 1, d - 1), witnessed by every interval vertex in lex-decreasing
/// order. Throws InternalError if the witness fails to verify as skew.
[[nodiscard]] SearchOutcome n_skew(int d, int s, std::size_t vertex_cap = kDefaultVertexCap);

/// 1, after checking that no two distinct interval vertices form a strong
/// pair (InternalError otherwise).
[[nodiscard]] SearchOutcome n_strong(int d, int s, std::size_t vertex_cap = kDefaultVertexCap);

/// Same value and witness as n_skew, verified weak.
[[nodiscard]] SearchOutcome n_weak(int d, int s, std::size_t vertex_cap = kDefaultVertexCap);

/// Dispatch by class. Only Bollobas supports the general mode.
[[nodiscard]] SearchOutcome search_extremal(SystemClass c, int d, int s, const SearchOptions& options = {});

struct TableCell {
    int d;
    int s;
    std::optional<SearchOutcome> outcome;
    /// Why the cell was not computed (cap exceeded); empty when computed.
    std::string skipped_reason;
    /// For d >= 3: floor(s/2) + 1 <= value <= C(s + d - 1, d - 1). For d = 2: value = 1.
    bool within_bounds = false;
};

struct ExtremalTable {
    std::vector<int> d_values;
    std::vector<int> s_values;
    std::vector<TableCell> cells;  // row-major over d_values x s_values

    [[nodiscard]] const TableCell& at(int d, int s) const;
};

/// n_bollobas over a grid. Cells over the cap are reported as skipped.
[[nodiscard]] ExtremalTable n_table(std::span<const int> d_values, std::span<const int> s_values,
                                    std::size_t vertex_cap = kDefaultVertexCap);

}  // namespace bollobas
