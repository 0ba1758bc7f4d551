#include "bollobas/extremal.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "bollobas/clique.hpp"
#include "bollobas/errors.hpp"
#include "bollobas/weights.hpp"

namespace bollobas {

namespace {

void check_shape(int d, int s) {
    if (d < 2 || d > kMaxParts) throw InvalidInput("search needs 2 <= d <= 64");
    if (s < 0) throw InvalidInput("search needs s >= 0");
}

void check_vertex_cap(const BigInt& count, std::size_t cap) {
    if (count > cap) {
        throw CapExceeded("search graph would have " + to_string(count) + " vertices, above the cap of " +
                          std::to_string(cap));
    }
}

GroundSet ground_for(int s) { return GroundSet(std::max(s, 1)); }

void for_each_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> current(static_cast<std::size_t>(parts), 0);
    std::function<void(int, int)> rec = [&](int index, int remaining) {
        if (index == parts - 1) {
            current[static_cast<std::size_t>(index)] = remaining;
            visit(current);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            current[static_cast<std::size_t>(index)] = v;
            rec(index + 1, remaining - v);
        }
    };
    rec(0, total);
}

// Parts take consecutive runs of `elements` in order.
DPartition interval_partition(std::span<const int> elements, const std::vector<int>& composition) {
    std::vector<ElementSet> parts(composition.size());
    std::size_t at = 0;
    for (std::size_t r = 0; r < composition.size(); ++r) {
        for (int c = 0; c < composition[r]; ++c) parts[r].insert(elements[at++]);
    }
    return DPartition(std::move(parts));
}

// The checks below only use the classifier and set predicates, never the
// search graph.
void verify_witness(const SearchOutcome& o) {
    const Family& w = o.witness;
    const bool increasing = std::all_of(w.members().begin(), w.members().end(),
                                        [](const DPartition& p) { return parts_increasing(p); });
    if (w.size() != o.value || !increasing || support(w).size() != o.s ||
        !classify(w).flags.has(o.system_class)) {
        throw InternalError("witness for " + std::string(to_string(o.system_class)) + " (d = " +
                            std::to_string(o.d) + ", s = " + std::to_string(o.s) + ") failed verification");
    }
}

SearchOutcome bollobas_full_only(int d, int s, std::size_t cap) {
    const auto vertices = interval_vertices(d, s, cap);
    std::vector<DPartition> parts;
    parts.reserve(vertices.size());
    for (const auto& v : vertices) parts.push_back(v.partition());

    MaxCliqueSolver solver(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            if (pair_bollobas(parts[i], parts[j])) solver.add_edge(i, j);
        }
    }
    const auto result = solver.solve();
    std::vector<DPartition> members;
    for (std::size_t v : result.clique) members.push_back(parts[v]);
    return SearchOutcome{SystemClass::bollobas, d, s, members.size(),
                         Family(ground_for(s), d, std::move(members)), SearchMode::full_only, true,
                         parts.size(), result.nodes};
}

SearchOutcome bollobas_general(int d, int s, std::size_t cap) {
    if (s > 20) throw CapExceeded("general mode is limited to s <= 20");
    BigInt count = 0;
    for (int t = 0; t <= s; ++t) count += binomial(s, t) * binomial(t + d - 1, d - 1);
    check_vertex_cap(count, cap);

    std::vector<DPartition> parts;
    std::vector<std::uint64_t> masks;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << s); ++subset) {
        std::vector<int> elements;
        for (int x = 1; x <= s; ++x) {
            if ((subset >> (x - 1)) & 1U) elements.push_back(x);
        }
        for_each_composition(static_cast<int>(elements.size()), d, [&](const std::vector<int>& c) {
            parts.push_back(interval_partition(elements, c));
            masks.push_back(subset);
        });
    }

    MaxCliqueSolver solver(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            if (pair_bollobas(parts[i], parts[j])) solver.add_edge(i, j);
        }
    }
    const std::uint64_t target = s == 0 ? 0 : (~std::uint64_t{0} >> (64 - s));
    solver.require_cover(std::move(masks), target);
    const auto result = solver.solve();
    std::vector<DPartition> members;
    for (std::size_t v : result.clique) members.push_back(parts[v]);
    return SearchOutcome{SystemClass::bollobas, d, s, members.size(),
                         Family(ground_for(s), d, std::move(members)), SearchMode::general, true,
                         parts.size(), result.nodes};
}

}  // namespace

DPartition IntervalVertex::partition() const {
    int s = 0;
    for (int c : composition) s += c;
    std::vector<int> elements(static_cast<std::size_t>(s));
    for (int x = 1; x <= s; ++x) elements[static_cast<std::size_t>(x - 1)] = x;
    return interval_partition(elements, composition);
}

std::vector<IntervalVertex> interval_vertices(int d, int s, std::size_t cap) {
    check_shape(d, s);
    check_vertex_cap(binomial(s + d - 1, d - 1), cap);
    std::vector<IntervalVertex> out;
    for_each_composition(s, d, [&](const std::vector<int>& c) { out.push_back(IntervalVertex{c}); });
    return out;
}

std::string_view to_string(SearchMode mode) noexcept {
    return mode == SearchMode::full_only ? "full-only" : "general";
}

SearchOutcome n_bollobas(int d, int s, const SearchOptions& options) {
    check_shape(d, s);
    SearchOutcome outcome = options.mode == SearchMode::full_only
                                ? bollobas_full_only(d, s, options.vertex_cap)
                                : bollobas_general(d, s, options.vertex_cap);
    verify_witness(outcome);
    return outcome;
}

SearchOutcome n_skew(int d, int s, std::size_t vertex_cap) {
    const auto vertices = interval_vertices(d, s, vertex_cap);
    std::vector<DPartition> members;
    members.reserve(vertices.size());
    for (auto it = vertices.rbegin(); it != vertices.rend(); ++it) members.push_back(it->partition());

    SearchOutcome outcome{SystemClass::skew, d, s, members.size(), Family(ground_for(s), d, std::move(members)),
                          SearchMode::full_only, true, vertices.size(), 0};
    verify_witness(outcome);
    if (BigInt(outcome.value) != binomial(s + d - 1, d - 1)) {
        throw InternalError("skew witness size differs from C(s + d - 1, d - 1)");
    }
    return outcome;
}

SearchOutcome n_strong(int d, int s, std::size_t vertex_cap) {
    const auto vertices = interval_vertices(d, s, vertex_cap);
    std::vector<DPartition> parts;
    parts.reserve(vertices.size());
    for (const auto& v : vertices) parts.push_back(v.partition());

    std::uint64_t checked = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            ++checked;
            // Increasing parts rule out even the bare crossing, which is weaker than strong.
            if (pair_crossing(parts[i], parts[j]) || pair_strong(parts[i], parts[j])) {
                throw InternalError("interval vertices " + std::to_string(i) + " and " + std::to_string(j) +
                                    " form a crossing pair");
            }
        }
    }
    SearchOutcome outcome{SystemClass::strong, d, s, 1, Family(ground_for(s), d, {parts.front()}),
                          SearchMode::full_only, true, parts.size(), checked};
    verify_witness(outcome);
    return outcome;
}

SearchOutcome n_weak(int d, int s, std::size_t vertex_cap) {
    SearchOutcome outcome = n_skew(d, s, vertex_cap);
    outcome.system_class = SystemClass::weak;
    verify_witness(outcome);
    return outcome;
}

SearchOutcome search_extremal(SystemClass c, int d, int s, const SearchOptions& options) {
    if (options.mode == SearchMode::general && c != SystemClass::bollobas) {
        throw InvalidInput("general mode is only available for the bollobas class");
    }
    switch (c) {
        case SystemClass::bollobas: return n_bollobas(d, s, options);
        case SystemClass::skew: return n_skew(d, s, options.vertex_cap);
        case SystemClass::strong: return n_strong(d, s, options.vertex_cap);
        case SystemClass::weak: return n_weak(d, s, options.vertex_cap);
        case SystemClass::symmetric: break;
    }
    throw InvalidInput("no extremal search for class '" + std::string(to_string(c)) + "'");
}

const TableCell& ExtremalTable::at(int d, int s) const {
    for (const auto& cell : cells) {
        if (cell.d == d && cell.s == s) return cell;
    }
    throw std::out_of_range("no table cell for d = " + std::to_string(d) + ", s = " + std::to_string(s));
}

ExtremalTable n_table(std::span<const int> d_values, std::span<const int> s_values, std::size_t vertex_cap) {
    ExtremalTable table{{d_values.begin(), d_values.end()}, {s_values.begin(), s_values.end()}, {}};
    for (int d : d_values) {
        for (int s : s_values) {
            TableCell cell{d, s, std::nullopt, {}, false};
            try {
                cell.outcome = n_bollobas(d, s, SearchOptions{SearchMode::full_only, vertex_cap});
            } catch (const CapExceeded& e) {
                cell.skipped_reason = e.what();
            }
            if (cell.outcome) {
                const BigInt value(cell.outcome->value);
                if (d == 2) {
                    cell.within_bounds = value == 1;
                } else {
                    cell.within_bounds = value >= s / 2 + 1 && value <= binomial(s + d - 1, d - 1);
                }
            }
            table.cells.push_back(std::move(cell));
        }
    }
    return table;
}

}  // namespace bollobas
