#include "bollobas/constructions.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>

#include "bollobas/errors.hpp"
#include "bollobas/weights.hpp"

namespace bollobas {

namespace {

void check_cap(const BigInt& count, std::size_t cap, std::string_view what) {
    if (count > cap) {
        throw CapExceeded(std::string(what) + " would produce " + to_string(count) +
                          " members, above the cap of " + std::to_string(cap));
    }
}

void require(bool ok, const std::string& message) {
    if (!ok) throw InvalidInput(message);
}

// Compositions of `total` into `parts` non-negative summands, lex-decreasing.
void for_each_composition_desc(int total, int parts, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> current(static_cast<std::size_t>(parts), 0);
    std::function<void(int, int)> rec = [&](int index, int remaining) {
        if (index == parts - 1) {
            current[static_cast<std::size_t>(index)] = remaining;
            visit(current);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            current[static_cast<std::size_t>(index)] = v;
            rec(index + 1, remaining - v);
        }
    };
    rec(0, total);
}

std::vector<DPartition> typed_members(std::span<const int> elements, std::span<const int> sizes) {
    std::vector<DPartition> out;
    for_each_typed_partition(elements, sizes, [&](const std::vector<ElementSet>& parts) {
        out.emplace_back(parts);
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> iota_elements(int n) {
    std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(v.begin(), v.end(), 1);
    return v;
}

}  // namespace

void for_each_typed_partition(std::span<const int> elements, std::span<const int> sizes,
                              const std::function<void(const std::vector<ElementSet>&)>& visit) {
    const std::size_t d = sizes.size();
    std::vector<ElementSet> parts(d);
    std::vector<bool> used(elements.size(), false);

    // Fill part r by choosing sizes[r] unused elements in increasing position.
    std::function<void(std::size_t, int, std::size_t)> rec = [&](std::size_t r, int need, std::size_t from) {
        if (r == d) {
            visit(parts);
            return;
        }
        if (need == 0) {
            const int next = r + 1 < d ? sizes[r + 1] : 0;
            rec(r + 1, next, 0);
            return;
        }
        for (std::size_t i = from; i < elements.size(); ++i) {
            if (used[i]) continue;
            used[i] = true;
            parts[r].insert(elements[i]);
            rec(r, need - 1, i + 1);
            parts[r].erase(elements[i]);
            used[i] = false;
        }
    };
    if (d != 0) rec(0, sizes[0], 0);
}

Family lex_full_family(int n, int d, std::size_t cap) {
    require(n >= 1, "lex_full_family needs n >= 1");
    require(d >= 2 && d <= kMaxParts, "lex_full_family needs 2 <= d <= 64");
    check_cap(boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(n)), cap, "lex_full_family");

    const std::vector<int> elements = iota_elements(n);
    std::vector<DPartition> members;
    for_each_composition_desc(n, d, [&](const std::vector<int>& sizes) {
        auto block = typed_members(elements, sizes);
        std::move(block.begin(), block.end(), std::back_inserter(members));
    });
    return Family(GroundSet(n), d, std::move(members));
}

Family chain_family_d3(int s) {
    require(s >= 1, "chain_family_d3 needs s >= 1");
    std::vector<DPartition> members;
    for (int l = 1; l <= s / 2 + 1; ++l) {
        members.emplace_back(std::vector<ElementSet>{ElementSet::interval(1, l - 1),
                                                     ElementSet::interval(l, s - l + 1),
                                                     ElementSet::interval(s - l + 2, s)});
    }
    return Family(GroundSet(s), 3, std::move(members));
}

Family type_expansion(const Family& family, std::size_t cap) {
    const ElementSet s = support(family).elements;
    const std::vector<int> elements = s.elements();
    const int total = static_cast<int>(elements.size());

    std::set<std::vector<int>> seen;
    BigInt count = 0;
    for (std::size_t i = 0; i < family.size(); ++i) {
        require(family[i].is_full_over(s),
                "type_expansion: member " + std::to_string(i) + " is not full over the family support");
        const auto sizes = family[i].part_sizes();
        require(seen.insert(sizes).second,
                "type_expansion: member " + std::to_string(i) + " repeats an earlier size vector");
        count += multinomial(total, sizes);
    }
    check_cap(count, cap, "type_expansion");

    std::vector<DPartition> members;
    for (const auto& member : family.members()) {
        auto block = typed_members(elements, member.part_sizes());
        std::move(block.begin(), block.end(), std::back_inserter(members));
    }
    return Family(family.ground(), family.d(), std::move(members));
}

Family permutation_family(int n, std::size_t cap) {
    require(n >= 2 && n <= kMaxParts, "permutation_family needs 2 <= n <= 64");
    BigInt count = 1;
    for (int i = 2; i <= n; ++i) count *= i;
    check_cap(count, cap, "permutation_family");

    std::vector<int> order = iota_elements(n);
    std::vector<DPartition> members;
    do {
        std::vector<ElementSet> parts;
        parts.reserve(static_cast<std::size_t>(n));
        for (int x : order) parts.push_back(ElementSet{x});
        members.emplace_back(std::move(parts));
    } while (std::next_permutation(order.begin(), order.end()));
    return Family(GroundSet(n), n, std::move(members));
}

Family complement_pair_family(int n, int k, int d, std::size_t cap) {
    require(n >= 1, "complement_pair_family needs n >= 1");
    require(k >= 0 && k <= n, "complement_pair_family needs 0 <= k <= n");
    require(d >= 2 && d <= kMaxParts, "complement_pair_family needs 2 <= d <= 64");
    check_cap(binomial(n, k), cap, "complement_pair_family");

    const ElementSet universe = ElementSet::interval(1, n);
    std::vector<DPartition> members;
    // k-subsets in lexicographic order via a selection mask.
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
        ElementSet chosen;
        for (int i = 0; i < n; ++i) {
            if (pick[static_cast<std::size_t>(i)]) chosen.insert(i + 1);
        }
        std::vector<ElementSet> parts(static_cast<std::size_t>(d));
        parts[0] = chosen;
        parts[1] = universe - chosen;
        members.emplace_back(std::move(parts));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return Family(GroundSet(n), d, std::move(members));
}

int matchbox_degree_bound(std::span<const int> a) {
    return std::accumulate(a.begin(), a.end(), 0) - 1;
}

Family matchbox_weak_family(std::span<const int> a, std::size_t cap) {
    const int d = static_cast<int>(a.size());
    require(d >= 2 && d <= kMaxParts, "matchbox_weak_family needs 2 <= d <= 64 pocket sizes");
    for (int v : a) require(v >= 1, "matchbox_weak_family needs positive pocket sizes");
    const int n = matchbox_degree_bound(a);

    // Draw sequences that stop the first time some pocket runs empty; letter r at
    // position t puts t into part r. Words are visited in lexicographic order.
    std::vector<DPartition> members;
    std::vector<std::vector<int>> parts(static_cast<std::size_t>(d));
    std::vector<int> drawn(static_cast<std::size_t>(d), 0);
    int length = 0;
    const auto grow = [&](const auto& self) -> void {
        for (int r = 0; r < d; ++r) {
            const auto ur = static_cast<std::size_t>(r);
            parts[ur].push_back(++length);
            ++drawn[ur];
            if (drawn[ur] == a[ur]) {
                if (members.size() == cap) {
                    throw CapExceeded("matchbox_weak_family exceeds the cap of " + std::to_string(cap) + " members");
                }
                std::vector<ElementSet> sets;
                sets.reserve(parts.size());
                for (const auto& p : parts) sets.emplace_back(p);
                members.emplace_back(std::move(sets));
            } else {
                self(self);
            }
            --drawn[ur];
            --length;
            parts[ur].pop_back();
        }
    };
    grow(grow);
    return Family(GroundSet(n), d, std::move(members));
}

namespace {

constexpr std::array<ConstructionInfo, 6> kConstructions = {{
    {"lex-full", "n, d", "all full d-partitions of [n], size vectors lex-decreasing (skew, tight blocked bound)"},
    {"chain-d3", "s", "interval 3-partitions ([1,l-1],[l,s-l+1],[s-l+2,s]) (Bollobas, floor(s/2)+1 members)"},
    {"expanded-chain-d3", "s", "type expansion of chain-d3 (Bollobas, sum floor(s/2)+1)"},
    {"permutation", "n", "singleton n-partitions of [n] in every order (strong, sum 1)"},
    {"complement-pair", "n, k, d", "(F, [n] minus F, empty...) for all k-subsets F (symmetric, sum 1)"},
    {"matchbox", "a1, a2, ..., ad", "pocket-process weak system (product-weight sum exactly 1)"},
}};

std::int64_t param(const ConstructionSpec& spec, const std::string& key) {
    const auto it = spec.parameters.find(key);
    if (it == spec.parameters.end()) {
        throw InvalidInput("construction '" + spec.name + "' needs parameter '" + key + "'");
    }
    if (it->second < -1'000'000 || it->second > 1'000'000) {
        throw InvalidInput("parameter '" + key + "' out of range");
    }
    return it->second;
}

void only_params(const ConstructionSpec& spec, std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, value] : spec.parameters) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw InvalidInput("construction '" + spec.name + "' has no parameter '" + key + "'");
        }
    }
}

}  // namespace

std::span<const ConstructionInfo> construction_registry() noexcept { return kConstructions; }

Family build_construction(const ConstructionSpec& spec, std::size_t cap) {
    const auto as_int = [&](const char* key) { return static_cast<int>(param(spec, key)); };
    if (spec.name == "lex-full") {
        only_params(spec, {"n", "d"});
        return lex_full_family(as_int("n"), as_int("d"), cap);
    }
    if (spec.name == "chain-d3") {
        only_params(spec, {"s"});
        return chain_family_d3(as_int("s"));
    }
    if (spec.name == "expanded-chain-d3") {
        only_params(spec, {"s"});
        return type_expansion(chain_family_d3(as_int("s")), cap);
    }
    if (spec.name == "permutation") {
        only_params(spec, {"n"});
        return permutation_family(as_int("n"), cap);
    }
    if (spec.name == "complement-pair") {
        only_params(spec, {"n", "k", "d"});
        return complement_pair_family(as_int("n"), as_int("k"), as_int("d"), cap);
    }
    if (spec.name == "matchbox") {
        std::vector<int> a;
        for (std::size_t r = 1; r <= spec.parameters.size(); ++r) {
            a.push_back(as_int(("a" + std::to_string(r)).c_str()));
        }
        return matchbox_weak_family(a, cap);
    }
    throw InvalidInput("unknown construction '" + spec.name + "'");
}

}  // namespace bollobas
