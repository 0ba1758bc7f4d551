#include "bollobas/certificate.hpp"

#include <string>

#include "bollobas/errors.hpp"
#include "bollobas/family_json.hpp"
#include "bollobas/weights.hpp"

namespace bollobas {

namespace {

constexpr const char* kKind = "multinomial-conjecture-counterexample";
constexpr const char* kWitnessOrder =
    "ordered pairs (i, j), i != j, row-major; entries p, q (0-based part indices, p < q) "
    "with members[i][p] and members[j][q] intersecting";

}  // namespace

ConjectureCertificate counterexample_conj1(int s, std::size_t cap) {
    if (s < 2) throw InvalidInput("counterexample needs s >= 2");
    Family family = type_expansion(chain_family_d3(s), cap);

    const std::size_t m = family.size();
    std::vector<std::uint8_t> witnesses;
    witnesses.reserve(2 * m * (m - 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            const auto w = skew_witness(family[i], family[j]);
            if (!w) {
                throw InternalError("expanded chain family is not Bollobas: no witness for pair (" +
                                    std::to_string(i) + ", " + std::to_string(j) + ")");
            }
            witnesses.push_back(static_cast<std::uint8_t>(w->first));
            witnesses.push_back(static_cast<std::uint8_t>(w->second));
        }
    }

    const ClassFlags flags = classify(family).flags;
    ExactRational sum = inverse_multinomial_sum(family);
    ExactRational expected(s / 2 + 1);
    if (!flags.bollobas || sum != expected) {
        throw InternalError("expanded chain family failed verification for s = " + std::to_string(s));
    }
    return ConjectureCertificate{s, std::move(family), flags, std::move(witnesses), std::move(sum),
                                 std::move(expected)};
}

nlohmann::json to_json(const ConjectureCertificate& c) {
    nlohmann::json doc;
    doc["kind"] = kKind;
    doc["s"] = c.s;
    doc["family"] = family_to_json(c.family);
    doc["classification"] = {{"weak", c.flags.weak},         {"skew", c.flags.skew},
                             {"bollobas", c.flags.bollobas}, {"strong", c.flags.strong},
                             {"symmetric", c.flags.symmetric}};
    doc["witnesses"] = {{"order", kWitnessOrder}, {"pq", c.witnesses}};
    doc["sum"] = c.sum.to_string();
    doc["expected"] = c.expected.to_string();
    doc["exceeds_one"] = c.sum > ExactRational(1);
    return doc;
}

CertificateCheck verify_conj1_certificate(const nlohmann::json& doc) {
    CertificateCheck check;
    auto fail = [&](std::string message) { check.failures.push_back(std::move(message)); };

    if (!doc.is_object() || doc.value("kind", "") != kKind) {
        fail("document is not a counterexample certificate");
        return check;
    }
    if (!doc.contains("s") || !doc["s"].is_number_integer()) {
        fail("certificate has no integer s");
        return check;
    }
    const int s = doc["s"].get<int>();
    const Family family = family_from_json(doc.at("family"));
    const std::size_t m = family.size();

    if (family.d() != 3) fail("family must consist of 3-partitions");
    if (support(family).size() != s) fail("family support size differs from s");

    const auto& pq = doc.at("witnesses").at("pq");
    if (!pq.is_array() || pq.size() != 2 * m * (m == 0 ? 0 : m - 1)) {
        fail("witness list has the wrong length");
    } else {
        std::size_t at = 0;
        for (std::size_t i = 0; i < m && check.failures.size() < 16; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                if (i == j) continue;
                const int p = pq[at].get<int>();
                const int q = pq[at + 1].get<int>();
                at += 2;
                ++check.pairs_checked;
                if (p < 0 || q <= p || q >= family.d() || !family[i].part(p).intersects(family[j].part(q))) {
                    fail("witness for pair (" + std::to_string(i) + ", " + std::to_string(j) + ") does not hold");
                }
            }
        }
    }

    if (!classify(family).flags.bollobas) fail("classifier does not confirm a Bollobas system");

    check.sum = inverse_multinomial_sum(family);
    if (check.sum != ExactRational(s / 2 + 1)) fail("sum differs from floor(s/2) + 1");
    if (!(check.sum > ExactRational(1))) fail("sum does not exceed 1");
    if (doc.value("sum", "") != check.sum.to_string()) fail("stored sum does not match the recomputed sum");

    check.valid = check.failures.empty();
    return check;
}

}  // namespace bollobas
