#pragma once

#include <filesystem>

#include <nlohmann/json.hpp>

#include "bollobas/partition.hpp"

namespace bollobas {

/// Family document:
///   {"n": int, "d": int, "blocks": [[int, ...], ...], "members": [[[int, ...] x d], ...]}
/// Elements are 1-based. "blocks" is optional (one block [n] when absent) and
/// is written only when there is more than one block. Unknown keys are ignored.
[[nodiscard]] nlohmann::json family_to_json(const Family& family);

/// Throws InvalidInput naming the violated invariant or schema rule.
[[nodiscard]] Family family_from_json(const nlohmann::json& document);

/// Reads and parses a family file. Throws InvalidInput on I/O or JSON errors.
[[nodiscard]] Family read_family_file(const std::filesystem::path& path);

}  // namespace bollobas
