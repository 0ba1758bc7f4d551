#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bollobas/certificate.hpp"
#include "bollobas/classifier.hpp"
#include "bollobas/constructions.hpp"
#include "bollobas/errors.hpp"
#include "bollobas/extremal.hpp"
#include "bollobas/family_json.hpp"
#include "bollobas/perm_oracle.hpp"
#include "bollobas/weights.hpp"

namespace bollobas::cli {

namespace {

using nlohmann::json;

struct Globals {
    bool pretty = false;
    std::string out_path;
    unsigned threads = 1;
    std::optional<std::uint64_t> cap;
};

int parse_int(std::string_view text) {
    int value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) throw InvalidInput("not an integer: '" + std::string(text) + "'");
    return value;
}

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t at = text.find(sep, start);
        out.emplace_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
        if (at == std::string_view::npos) break;
        start = at + 1;
    }
    return out;
}

// "3..5", "1,2,7" or a single integer.
std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const int lo = parse_int(std::string_view(text).substr(0, dots));
        const int hi = parse_int(std::string_view(text).substr(dots + 2));
        if (hi < lo || hi - lo > 10'000) throw InvalidInput("bad range '" + text + "'");
        for (int v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    for (const auto& piece : split(text, ',')) out.push_back(parse_int(piece));
    return out;
}

std::vector<ExactRational> parse_rationals(const std::string& text) {
    std::vector<ExactRational> out;
    for (const auto& piece : split(text, ',')) out.push_back(ExactRational::parse(piece));
    return out;
}

std::map<std::string, std::int64_t> parse_params(const std::string& text) {
    std::map<std::string, std::int64_t> out;
    if (text.empty()) return out;
    for (const auto& piece : split(text, ',')) {
        const auto eq = piece.find('=');
        if (eq == std::string::npos || eq == 0) throw InvalidInput("parameter '" + piece + "' is not key=value");
        const std::string key = piece.substr(0, eq);
        if (!out.emplace(key, parse_int(std::string_view(piece).substr(eq + 1))).second) {
            throw InvalidInput("parameter '" + key + "' given twice");
        }
    }
    return out;
}

json big_json(const BigInt& value) {
    if (value >= 0 && value <= std::numeric_limits<std::int64_t>::max()) {
        return value.convert_to<std::int64_t>();
    }
    return to_string(value);
}

json flags_json(const ClassFlags& flags) {
    json doc = json::object();
    for (SystemClass c : kAllClasses) doc[std::string(to_string(c))] = flags.has(c);
    return doc;
}

json report_json(const InequalityReport& r) {
    return {{"theorem", r.theorem_id},
            {"lhs", r.lhs.to_string()},
            {"rhs", r.rhs.to_string()},
            {"holds", r.holds},
            {"tight", r.tight},
            {"hypothesis_failed", r.hypothesis_failed}};
}

json outcome_json(const SearchOutcome& o) {
    return {{"class", to_string(o.system_class)},
            {"d", o.d},
            {"s", o.s},
            {"value", o.value},
            {"mode", to_string(o.mode)},
            {"exhaustive", o.exhaustive},
            {"vertices", o.vertices},
            {"search_nodes", o.search_nodes},
            {"witness", family_to_json(o.witness)}};
}

std::string render_family(const Family& family) {
    std::ostringstream text;
    for (std::size_t i = 0; i < family.size(); ++i) {
        text << std::setw(6) << i << "  (";
        const auto& parts = family[i].parts();
        for (std::size_t r = 0; r < parts.size(); ++r) {
            if (r) text << " | ";
            const auto elements = parts[r].elements();
            for (std::size_t j = 0; j < elements.size(); ++j) text << (j ? " " : "") << elements[j];
        }
        text << ")\n";
    }
    return text.str();
}

std::string render_table(const ExtremalTable& table) {
    std::ostringstream text;
    text << std::setw(6) << "d \\ s";
    for (int s : table.s_values) text << std::setw(8) << s;
    text << '\n';
    for (int d : table.d_values) {
        text << std::setw(6) << d;
        for (int s : table.s_values) {
            const auto& cell = table.at(d, s);
            text << std::setw(8) << (cell.outcome ? std::to_string(cell.outcome->value) : std::string("-"));
        }
        text << '\n';
    }
    return text.str();
}

void emit(const json& doc, const Globals& g, std::ostream& out) {
    const std::string text = doc.dump();
    out << text << '\n';
    if (!g.out_path.empty()) {
        std::ofstream file(g.out_path);
        if (!file) throw InvalidInput("cannot open '" + g.out_path + "' for writing");
        file << text << '\n';
    }
}

json status_doc(std::string_view status) { return {{"status", status}}; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of set-pair systems of d-partitions", "bollobas-lab"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_flag("--pretty", g.pretty, "Human-readable summary on stderr");
    app.add_option("--out", g.out_path, "Also write the JSON result to this file");
    app.add_option("--threads", g.threads, "Worker threads for classify and lemma-check")->check(CLI::Range(1U, 256U));
    app.add_option("--cap", g.cap, "Override the member, vertex or permutation limit");

    std::string family_path;
    auto* classify_cmd = app.add_subcommand("classify", "Classify a family into the five system classes");
    classify_cmd->add_option("family", family_path, "Family JSON file")->required();

    bool blocked = false;
    std::string p_text;
    int precision = 12;
    auto* sum_cmd = app.add_subcommand("sum", "Exact inverse multinomial or product-weight sum");
    sum_cmd->add_option("family", family_path, "Family JSON file")->required();
    sum_cmd->add_flag("--blocks", blocked, "Use the blocked sum over the family's ground-set blocks");
    sum_cmd->add_option("--p", p_text, "Comma-separated rational weights p1,...,pd for the product sum");
    sum_cmd->add_option("--precision", precision, "Digits in the decimal rendering")->check(CLI::Range(0, 200));

    std::string theorem;
    bool force = false;
    auto* check_cmd = app.add_subcommand("check", "Evaluate one registered inequality on a family");
    check_cmd->add_option("family", family_path, "Family JSON file")->required();
    check_cmd->add_option("--theorem", theorem, "Inequality id (see list-theorems)")->required();
    check_cmd->add_flag("--force", force, "Evaluate even if the class hypothesis fails");
    check_cmd->add_option("--p", p_text, "Weights for the product-weight inequality");

    std::string construction;
    std::string params_text;
    std::string blocks_text;
    auto* construct_cmd = app.add_subcommand("construct", "Build a named family");
    construct_cmd->add_option("name", construction, "Construction name (see list-theorems)")->required();
    construct_cmd->add_option("--params", params_text, "Parameters as k=v,k=v");
    construct_cmd->add_option("--blocks", blocks_text,
                              "Re-block the ground set: blocks separated by ';', elements by ','");

    std::string class_name = "bollobas";
    std::string mode_name = "full-only";
    std::string d_text;
    std::string s_text;
    int d_value = 0;
    int s_value = 0;
    auto* search_cmd = app.add_subcommand("search", "Exact extremal value for one (d, s)");
    search_cmd->add_option("--class", class_name, "bollobas, skew, strong or weak");
    search_cmd->add_option("--d", d_value, "Number of parts")->required();
    search_cmd->add_option("--s", s_value, "Support size")->required();
    search_cmd->add_option("--mode", mode_name, "full-only or general");

    auto* table_cmd = app.add_subcommand("table", "Bollobas extremal values over a grid");
    table_cmd->add_option("--class", class_name, "Only bollobas is tabulated");
    table_cmd->add_option("--d", d_text, "Values of d: a..b or a,b,c")->required();
    table_cmd->add_option("--s", s_text, "Values of s: a..b or a,b,c")->required();

    std::string certificate_kind;
    auto* certify_cmd = app.add_subcommand("certify", "Emit a counterexample certificate");
    certify_cmd->add_option("kind", certificate_kind, "Certificate kind (conj1)")->required();
    certify_cmd->add_option("--s", s_value, "Support size")->required();

    auto* lemma_cmd = app.add_subcommand("lemma-check", "Brute-force double counting over block permutations");
    lemma_cmd->add_option("family", family_path, "Family JSON file")->required();

    auto* list_cmd = app.add_subcommand("list-theorems", "List inequality ids and constructions");

    std::string certificate_path;
    auto* verify_cmd = app.add_subcommand("verify", "Re-check a certificate file from scratch");
    verify_cmd->add_option("certificate", certificate_path, "Certificate JSON file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        emit(json{{"status", "usage"}, {"error", e.what()}}, Globals{}, out);
        return kUsage;
    }

    const auto cap_or = [&](std::uint64_t fallback) { return g.cap.value_or(fallback); };

    try {
        json doc = status_doc("ok");
        std::string pretty;

        if (classify_cmd->parsed()) {
            const Family family = read_family_file(family_path);
            const Classification c = classify(family, g.threads);
            doc["members"] = family.size();
            doc.update(flags_json(c.flags));
            json violations = json::object();
            for (SystemClass cls : kAllClasses) {
                if (const auto& v = c.violation(cls)) violations[std::string(to_string(cls))] = {v->first, v->second};
            }
            doc["witness_violations"] = violations;
            std::ostringstream text;
            for (SystemClass cls : kAllClasses) {
                text << std::left << std::setw(10) << to_string(cls) << (c.flags.has(cls) ? "yes" : "no");
                if (const auto& v = c.violation(cls)) text << "  (members " << v->first << ", " << v->second << ")";
                text << '\n';
            }
            pretty = text.str();
        } else if (sum_cmd->parsed()) {
            const Family family = read_family_file(family_path);
            ExactRational value;
            if (!p_text.empty()) {
                if (blocked) throw InvalidInput("--blocks and --p cannot be combined");
                value = tuza_product_sum(family, parse_rationals(p_text));
                doc["kind"] = "product-weights";
            } else if (blocked) {
                value = blocked_inverse_sum(family);
                doc["kind"] = "blocked-inverse-multinomial";
            } else {
                value = inverse_multinomial_sum(family);
                doc["kind"] = "inverse-multinomial";
            }
            doc["sum"] = value.to_string();
            doc["decimal"] = value.to_decimal(precision);
            pretty = std::string(doc["kind"]) + " sum = " + value.to_string() + " ~ " + value.to_decimal(precision) +
                     "\n";
        } else if (check_cmd->parsed()) {
            const Family family = read_family_file(family_path);
            InequalityReport report;
            if (theorem == "uniform-cardinality") {
                report = uniform_cardinality_check(family, force);
            } else {
                CheckOptions options{force, std::nullopt};
                if (!p_text.empty()) options.p = parse_rationals(p_text);
                report = check_theorem(family, theorem, options);
            }
            doc.update(report_json(report));
            pretty = report.theorem_id + ": " + report.lhs.to_string() + " <= " + report.rhs.to_string() + "  " +
                     (report.holds ? "holds" : "FAILS") + (report.tight ? ", tight" : "") +
                     (report.hypothesis_failed ? ", hypothesis not met" : "") + "\n";
        } else if (construct_cmd->parsed()) {
            Family family = build_construction({construction, parse_params(params_text)}, cap_or(kDefaultMemberCap));
            if (!blocks_text.empty()) {
                std::vector<ElementSet> blocks;
                for (const auto& piece : split(blocks_text, ';')) {
                    ElementSet block;
                    for (const auto& x : split(piece, ',')) block.insert(parse_int(x));
                    blocks.push_back(block);
                }
                family = family.with_ground(GroundSet(family.ground().n(), std::move(blocks)));
            }
            doc["construction"] = construction;
            doc.update(family_to_json(family));
            pretty = render_family(family);
        } else if (search_cmd->parsed()) {
            SearchMode mode = SearchMode::full_only;
            if (mode_name == "general") {
                mode = SearchMode::general;
            } else if (mode_name != "full-only") {
                throw InvalidInput("unknown search mode '" + mode_name + "'");
            }
            const auto outcome = search_extremal(parse_system_class(class_name), d_value, s_value,
                                                 SearchOptions{mode, cap_or(kDefaultVertexCap)});
            doc.update(outcome_json(outcome));
            pretty = "N_" + class_name + "(" + std::to_string(d_value) + ", " + std::to_string(s_value) +
                     ") = " + std::to_string(outcome.value) + "\n" + render_family(outcome.witness);
        } else if (table_cmd->parsed()) {
            if (parse_system_class(class_name) != SystemClass::bollobas) {
                throw InvalidInput("table is only available for the bollobas class");
            }
            const auto ds = parse_int_list(d_text);
            const auto ss = parse_int_list(s_text);
            const ExtremalTable table = n_table(ds, ss, cap_or(kDefaultVertexCap));
            json cells = json::array();
            for (const auto& cell : table.cells) {
                json c{{"d", cell.d}, {"s", cell.s}, {"within_bounds", cell.within_bounds}};
                if (cell.outcome) {
                    c["value"] = cell.outcome->value;
                    c["witness"] = family_to_json(cell.outcome->witness);
                } else {
                    c["value"] = nullptr;
                    c["skipped_reason"] = cell.skipped_reason;
                }
                cells.push_back(std::move(c));
            }
            doc["class"] = "bollobas";
            doc["d_values"] = table.d_values;
            doc["s_values"] = table.s_values;
            doc["cells"] = std::move(cells);
            pretty = render_table(table);
        } else if (certify_cmd->parsed()) {
            if (certificate_kind != "conj1") throw InvalidInput("unknown certificate kind '" + certificate_kind + "'");
            const auto certificate = counterexample_conj1(s_value, cap_or(kDefaultMemberCap));
            doc.update(to_json(certificate));
            pretty = "s = " + std::to_string(s_value) + ": " + std::to_string(certificate.family.size()) +
                     " members, sum " + certificate.sum.to_string() + " (bollobas: " +
                     (certificate.flags.bollobas ? "yes" : "no") + ")\n";
        } else if (lemma_cmd->parsed()) {
            const Family family = read_family_file(family_path);
            const auto result = double_count_identity(family, cap_or(kDefaultPermutationLimit), g.threads);
            doc["lhs"] = big_json(result.lhs);
            doc["rhs"] = big_json(result.rhs);
            doc["equal"] = result.equal;
            doc["permutations"] = result.permutations;
            pretty = "lhs " + to_string(result.lhs) + ", rhs " + to_string(result.rhs) + " over " +
                     std::to_string(result.permutations) + " permutations\n";
        } else if (list_cmd->parsed()) {
            json theorems = json::array();
            std::ostringstream text;
            for (const auto& t : theorem_registry()) {
                theorems.push_back({{"id", t.id},
                                    {"hypothesis", to_string(t.hypothesis)},
                                    {"d", t.required_d == 0 ? json("any") : json(t.required_d)},
                                    {"blocks", t.required_blocks == 0 ? json("any") : json(t.required_blocks)},
                                    {"lhs", t.lhs},
                                    {"rhs", t.rhs}});
                text << std::left << std::setw(24) << t.id << t.lhs << "  <=  " << t.rhs << '\n';
            }
            theorems.push_back({{"id", "uniform-cardinality"},
                                {"hypothesis", "skew"},
                                {"d", 2},
                                {"blocks", "any"},
                                {"lhs", "m (all members share one size profile)"},
                                {"rhs", "prod_k C(a_1k + a_2k, a_1k)"}});
            json constructions = json::array();
            for (const auto& c : construction_registry()) {
                constructions.push_back({{"name", c.name}, {"parameters", c.parameters}, {"description", c.description}});
            }
            doc["theorems"] = std::move(theorems);
            doc["constructions"] = std::move(constructions);
            pretty = text.str();
        } else if (verify_cmd->parsed()) {
            std::ifstream file(certificate_path);
            if (!file) throw InvalidInput("cannot open '" + certificate_path + "'");
            json certificate;
            try {
                certificate = json::parse(file);
            } catch (const json::exception& e) {
                throw InvalidInput(std::string("certificate is not valid JSON: ") + e.what());
            }
            const auto check = verify_conj1_certificate(certificate);
            doc["valid"] = check.valid;
            doc["failures"] = check.failures;
            doc["pairs_checked"] = check.pairs_checked;
            doc["sum"] = check.sum.to_string();
            pretty = check.valid ? "certificate valid\n" : "certificate INVALID\n";
            if (!check.valid) {
                doc["status"] = "invalid_input";
                emit(doc, g, out);
                for (const auto& f : check.failures) err << "error: " << f << '\n';
                return kInvalidInput;
            }
        }

        emit(doc, g, out);
        if (g.pretty) err << pretty;
        return kOk;
    } catch (const HypothesisFailed& e) {
        emit(json{{"status", "hypothesis_failed"}, {"error", e.what()}}, g, out);
        err << "error: " << e.what() << '\n';
        return kHypothesisFailed;
    } catch (const CapExceeded& e) {
        emit(json{{"status", "cap_exceeded"}, {"error", e.what()}}, g, out);
        err << "error: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const InvalidInput& e) {
        emit(json{{"status", "invalid_input"}, {"error", e.what()}}, g, out);
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::exception& e) {
        emit(json{{"status", "internal_error"}, {"error", e.what()}}, g, out);
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

}  // namespace bollobas::cli
