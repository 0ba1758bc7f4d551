#include "bollobas/family_json.hpp"

#include <fstream>
#include <limits>
#include <string>

#include "bollobas/errors.hpp"

namespace bollobas {

namespace {

using nlohmann::json;

int as_int(const json& value, const std::string& where) {
    if (!value.is_number_integer()) throw InvalidInput(where + " must be an integer");
    const auto v = value.get<std::int64_t>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
        throw InvalidInput(where + " is out of range");
    }
    return static_cast<int>(v);
}

ElementSet as_set(const json& value, int n, const std::string& where) {
    if (!value.is_array()) throw InvalidInput(where + " must be an array of elements");
    ElementSet set;
    for (const auto& item : value) {
        const int x = as_int(item, where + " element");
        if (x < 1 || x > n) {
            throw InvalidInput("every element lies in [n] (" + where + " has " + std::to_string(x) + ")");
        }
        if (set.contains(x)) throw InvalidInput(where + " lists element " + std::to_string(x) + " twice");
        set.insert(x);
    }
    return set;
}

json set_to_json(const ElementSet& set) { return set.elements(); }

}  // namespace

json family_to_json(const Family& family) {
    json doc;
    doc["n"] = family.ground().n();
    doc["d"] = family.d();
    if (family.ground().block_count() > 1) {
        json blocks = json::array();
        for (const auto& b : family.ground().blocks()) blocks.push_back(set_to_json(b));
        doc["blocks"] = std::move(blocks);
    }
    json members = json::array();
    for (const auto& m : family.members()) {
        json parts = json::array();
        for (const auto& part : m.parts()) parts.push_back(set_to_json(part));
        members.push_back(std::move(parts));
    }
    doc["members"] = std::move(members);
    return doc;
}

Family family_from_json(const json& doc) {
    if (!doc.is_object()) throw InvalidInput("family document must be a JSON object");
    if (!doc.contains("n")) throw InvalidInput("family document needs \"n\"");
    if (!doc.contains("d")) throw InvalidInput("family document needs \"d\"");
    if (!doc.contains("members")) throw InvalidInput("family document needs \"members\"");
    const int n = as_int(doc["n"], "\"n\"");
    const int d = as_int(doc["d"], "\"d\"");
    if (n < 1) throw InvalidInput("ground set size n must be positive");
    if (d < 2 || d > kMaxParts) throw InvalidInput("d must lie in [2, " + std::to_string(kMaxParts) + "]");

    std::vector<ElementSet> blocks;
    if (doc.contains("blocks") && !doc["blocks"].is_null()) {
        const auto& b = doc["blocks"];
        if (!b.is_array()) throw InvalidInput("\"blocks\" must be an array of element arrays");
        for (std::size_t k = 0; k < b.size(); ++k) {
            blocks.push_back(as_set(b[k], n, "block " + std::to_string(k)));
        }
    } else {
        blocks.push_back(ElementSet::interval(1, n));
    }
    GroundSet ground(n, std::move(blocks));

    const auto& ms = doc["members"];
    if (!ms.is_array()) throw InvalidInput("\"members\" must be an array");
    std::vector<DPartition> members;
    members.reserve(ms.size());
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const auto& m = ms[i];
        const std::string where = "member " + std::to_string(i);
        if (!m.is_array() || m.size() != static_cast<std::size_t>(d)) {
            throw InvalidInput(where + " must list exactly d = " + std::to_string(d) + " parts");
        }
        std::vector<ElementSet> parts;
        parts.reserve(m.size());
        for (std::size_t r = 0; r < m.size(); ++r) {
            parts.push_back(as_set(m[r], n, where + " part " + std::to_string(r)));
        }
        try {
            members.emplace_back(std::move(parts));
        } catch (const InvalidInput& e) {
            throw InvalidInput(std::string(e.what()) + " (" + where + ")");
        }
    }
    return Family(std::move(ground), d, std::move(members));
}

Family read_family_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open family file '" + path.string() + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw InvalidInput("family file '" + path.string() + "' is not valid JSON: " + e.what());
    }
    return family_from_json(doc);
}

}  // namespace bollobas
