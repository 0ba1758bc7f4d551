#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bollobas/classifier.hpp"
#include "bollobas/constructions.hpp"
#include "bollobas/partition.hpp"
#include "bollobas/rational.hpp"

namespace bollobas {

/// A Bollobas system of 3-partitions whose inverse multinomial sum exceeds 1,
/// bundled with everything needed to re-check it.
struct ConjectureCertificate {
    int s = 0;
    Family family;
    ClassFlags flags;
    /// For every ordered pair (i, j), i != j, in row-major order: the first part
    /// pair (p, q), p < q, 0-based, with A_i^(p) ∩ A_j^(q) non-empty. Stored flat
    /// as p, q, p, q, ...
    std::vector<std::uint8_t> witnesses;
    ExactRational sum;
    /// floor(s/2) + 1.
    ExactRational expected;
};

/// type_expansion(chain_family_d3(s)) with its pairwise witnesses. Throws
/// InternalError if the family fails to verify as a Bollobas system with the
/// expected sum.
[[nodiscard]] ConjectureCertificate counterexample_conj1(int s, std::size_t cap = kDefaultMemberCap);

[[nodiscard]] nlohmann::json to_json(const ConjectureCertificate& certificate);

struct CertificateCheck {
    bool valid = false;
    std::vector<std::string> failures;
    std::size_t pairs_checked = 0;
    ExactRational sum;
};

/// Re-checks a certificate document from scratch: parses the family, checks
/// every stored witness pair directly, re-runs the classifier, recomputes the
/// sum and compares it with floor(s/2) + 1 and with 1.
[[nodiscard]] CertificateCheck verify_conj1_certificate(const nlohmann::json& document);

}  // namespace bollobas
