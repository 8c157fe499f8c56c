// Batch front-end: every pipeline as a subcommand, one JSON document per
// invocation on stdout.  Verdicts are payload, not failures; only bad
// input (exit 2) and violated preconditions (exit 3) are nonzero.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "locus/locus.hpp"

namespace {

using locus::Json;

bool g_plain = false;
std::string g_subcommand = "";

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file)
        throw locus::InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

Json load_document(const std::string& path) {
    return locus::parse_json_text(read_input(path));
}

void print_plain(const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || (value.is_array() && !value.empty())) {
                std::cout << pad << key << ":\n";
                print_plain(value, indent + 2);
            } else if (value.is_array()) {
                std::cout << pad << key << ": []\n";
            } else {
                std::cout << pad << key << ": " << (value.is_string()
                                                        ? value.get<std::string>()
                                                        : value.dump())
                          << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const Json& item : j) {
            if (item.is_object()) {
                std::string line;
                for (const auto& [key, value] : item.items()) {
                    if (!line.empty()) line += "  ";
                    line += key + "=" +
                            (value.is_string() ? value.get<std::string>() : value.dump());
                }
                std::cout << pad << line << "\n";
            } else {
                std::cout << pad << (item.is_string() ? item.get<std::string>() : item.dump())
                          << "\n";
            }
        }
    } else {
        std::cout << pad << j.dump() << "\n";
    }
}

void emit_envelope(const std::string& status, Json payload) {
    Json result = {{"schema", "v1"},
                   {"subcommand", g_subcommand},
                   {"status", status},
                   {"payload", std::move(payload)}};
    if (g_plain)
        print_plain(result, 0);
    else
        std::cout << result.dump(2) << "\n";
}

void emit_fixture(const Json& fixture) {
    std::cout << fixture.dump(2) << "\n";
}

Json json_or_null(const std::optional<int>& v) {
    return v ? Json(*v) : Json(nullptr);
}

Json json_or_null(const std::optional<locus::Partition>& v) {
    return v ? Json(locus::format_partition(*v)) : Json(nullptr);
}

Json mismatches_to_json(const std::vector<locus::LocalizationMismatch>& mismatches) {
    Json out = Json::array();
    for (const auto& m : mismatches)
        out.push_back({{"partition", locus::format_partition(m.partition)},
                       {"computed", m.computed},
                       {"expected", m.expected}});
    return out;
}

Json bound_to_json(const locus::BoundReport& report) {
    return {{"basis", locus::to_string(report.basis)},
            {"bound", json_or_null(report.bound)},
            {"witness", json_or_null(report.witness)}};
}

std::vector<std::int64_t> parse_weight_list(const std::string& text) {
    std::vector<std::int64_t> weights;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            weights.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw locus::InputError("malformed weight '" + item + "'");
        }
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return weights;
}

void run_gamma(const std::string& input, const std::string& partition_text) {
    locus::WeightedSet ws = locus::weighted_set_from_json(load_document(input));
    locus::Partition lambda = locus::parse_partition(partition_text, ws.n());
    emit_envelope("ok", {{"partition", locus::format_partition(lambda)},
                         {"gamma", locus::format_element(locus::gamma(ws, lambda))}});
}

void run_stability(const std::string& input) {
    locus::WeightedSet ws = locus::weighted_set_from_json(load_document(input));
    locus::StabilityReport report = locus::is_stable(ws);
    Json payload = {{"stable", report.stable},
                    {"witness", json_or_null(report.witness)},
                    {"gamma", report.witness_gamma
                                  ? Json(locus::format_element(*report.witness_gamma))
                                  : Json(nullptr)}};
    emit_envelope("verdict", std::move(payload));
}

void run_vanish(const std::string& input, const std::string& partition_text, bool with_trace) {
    locus::WeightedSet ws = locus::weighted_set_from_json(load_document(input));
    locus::Partition lambda = locus::parse_partition(partition_text, ws.n());
    if (!with_trace) {
        locus::FieldElement value = locus::vanishing_check(ws, lambda);
        emit_envelope("verdict", {{"partition", locus::format_partition(lambda)},
                                  {"gamma", locus::format_element(value)},
                                  {"vanishes", value.is_zero()}});
        return;
    }
    locus::EliminationTrace trace = locus::elimination_oracle(ws, lambda);
    Json keys = Json::array();
    for (const auto& k : trace.keys) keys.push_back(locus::format_element(k));
    Json sums = Json::array();
    for (const auto& a : trace.group_sums) sums.push_back(locus::format_element(a));
    emit_envelope("verdict",
                  {{"partition", locus::format_partition(lambda)},
                   {"gamma", locus::format_element(trace.gamma_value)},
                   {"vanishes", trace.gamma_value.is_zero()},
                   {"trace",
                    {{"slot", trace.slot},
                     {"keys", std::move(keys)},
                     {"group_sums", std::move(sums)},
                     {"vandermonde_det", locus::format_element(trace.vandermonde_det)}}}});
}

void run_bound(const std::string& mode, const std::string& data_path,
               const std::string& numbers_path, std::optional<std::int64_t> prime) {
    if (!data_path.empty() && !numbers_path.empty())
        throw locus::InputError("bound takes --data or --numbers, not both");
    const std::string source = !data_path.empty() ? data_path
                               : !numbers_path.empty() ? numbers_path
                                                       : "-";
    Json doc = load_document(source);
    locus::DocumentKind kind = locus::sniff_document(doc);
    if (!data_path.empty() &&
        kind != locus::DocumentKind::CircleData && kind != locus::DocumentKind::ZpData)
        throw locus::KindMismatchError("--data expects fixed-point data");
    if (!numbers_path.empty() && kind != locus::DocumentKind::Numbers)
        throw locus::KindMismatchError("--numbers expects characteristic numbers");

    locus::BoundReport report;
    if (mode == "circle") {
        if (prime)
            throw locus::InputError("--prime applies to zp mode only");
        if (kind == locus::DocumentKind::CircleData)
            report = locus::circle_fixed_point_bound(locus::circle_data_from_json(doc));
        else if (kind == locus::DocumentKind::Numbers)
            report = locus::circle_fixed_point_bound(locus::numbers_from_json(doc));
        else
            throw locus::KindMismatchError("circle mode cannot take Z_p data");
    } else {
        if (kind == locus::DocumentKind::ZpData) {
            locus::ZpFixedPointData data = locus::zp_data_from_json(doc);
            if (prime && *prime != data.p())
                throw locus::InputError("--prime disagrees with the data's p");
            report = locus::zp_fixed_point_bound(data);
        } else if (kind == locus::DocumentKind::Numbers) {
            if (!prime)
                throw locus::InputError("zp mode with --numbers needs --prime");
            report = locus::zp_fixed_point_bound(locus::numbers_from_json(doc), *prime);
        } else {
            throw locus::KindMismatchError("zp mode cannot take circle data");
        }
    }
    emit_envelope("verdict", bound_to_json(report));
}

void run_obstruction(const std::string& numbers_path, std::int64_t prime) {
    locus::CharacteristicNumbers numbers =
        locus::numbers_from_json(load_document(numbers_path));
    locus::ObstructionVerdict verdict = locus::zp_obstruction(numbers, prime);
    emit_envelope("verdict", {{"p", verdict.p},
                              {"m", json_or_null(verdict.m)},
                              {"verdict", locus::to_string(verdict.verdict)}});
}

void run_localize(const std::string& data_path) {
    Json doc = load_document(data_path);
    locus::DocumentKind kind = locus::sniff_document(doc);
    if (kind == locus::DocumentKind::CircleData) {
        locus::CircleFixedPointData data = locus::circle_data_from_json(doc);
        locus::WeightedSet ws = locus::circle_to_weighted_set(data);
        Json sums = Json::array();
        for (const locus::Partition& lambda :
             locus::enumerate_partitions(data.n(), data.n())) {
            locus::FieldElement value = locus::gamma(ws, lambda);
            sums.push_back({{"partition", locus::format_partition(lambda)},
                            {"value", locus::format_element(value)},
                            {"integral", value.is_integer()}});
        }
        emit_envelope("ok", {{"kind", "circle"}, {"n", data.n()}, {"sums", std::move(sums)}});
        return;
    }
    if (kind == locus::DocumentKind::ZpData) {
        locus::ZpFixedPointData data = locus::zp_data_from_json(doc);
        locus::WeightedSet ws = locus::zp_to_weighted_set(data);
        Json sums = Json::array();
        for (const locus::Partition& lambda :
             locus::enumerate_partitions(data.n(), data.n()))
            sums.push_back({{"partition", locus::format_partition(lambda)},
                            {"value", locus::format_element(locus::gamma(ws, lambda))}});
        emit_envelope("ok", {{"kind", "zp"},
                             {"p", data.p()},
                             {"n", data.n()},
                             {"sums", std::move(sums)}});
        return;
    }
    throw locus::KindMismatchError("localize needs fixed-point data");
}

void run_verify(const std::string& data_path, const std::string& numbers_path,
                std::optional<std::int64_t> prime) {
    Json doc = load_document(data_path);
    locus::CharacteristicNumbers numbers =
        locus::numbers_from_json(load_document(numbers_path));
    locus::DocumentKind kind = locus::sniff_document(doc);
    locus::VerifyReport report;
    if (kind == locus::DocumentKind::CircleData) {
        if (prime)
            throw locus::InputError("--prime applies to Z_p data only");
        report = locus::verify_localization(locus::circle_data_from_json(doc), numbers);
    } else if (kind == locus::DocumentKind::ZpData) {
        locus::ZpFixedPointData data = locus::zp_data_from_json(doc);
        if (prime && *prime != data.p())
            throw locus::InputError("--prime disagrees with the data's p");
        report = locus::verify_localization(data, numbers);
    } else {
        throw locus::KindMismatchError("verify needs fixed-point data");
    }
    Json nonintegral = Json::array();
    for (const locus::Partition& lambda : report.nonintegral)
        nonintegral.push_back(locus::format_partition(lambda));
    emit_envelope("verdict",
                  {{"ok", report.ok},
                   {"stability_mismatches", mismatches_to_json(report.stability_mismatches)},
                   {"top_mismatches", mismatches_to_json(report.top_mismatches)},
                   {"nonintegral", std::move(nonintegral)}});
}

void run_catalog_cpn(int n, const std::string& weights_text,
                     std::optional<std::int64_t> prime) {
    locus::LinearActionSpec spec{n, parse_weight_list(weights_text), prime};
    if (prime)
        emit_fixture(locus::to_json(locus::cpn_zp_data(spec)));
    else
        emit_fixture(locus::to_json(locus::cpn_circle_data(spec)));
}

void run_catalog_chern(int n) {
    emit_fixture(locus::to_json(locus::cpn_chern_numbers(n)));
}

void run_catalog_product(const std::string& a_path, const std::string& b_path) {
    Json a = load_document(a_path);
    Json b = load_document(b_path);
    locus::DocumentKind ka = locus::sniff_document(a);
    locus::DocumentKind kb = locus::sniff_document(b);
    if (ka != kb)
        throw locus::KindMismatchError("product factors must have the same document kind");
    switch (ka) {
        case locus::DocumentKind::Numbers:
            emit_fixture(locus::to_json(locus::product_characteristic_numbers(
                locus::numbers_from_json(a), locus::numbers_from_json(b))));
            return;
        case locus::DocumentKind::CircleData:
            emit_fixture(locus::to_json(locus::product_circle_data(
                locus::circle_data_from_json(a), locus::circle_data_from_json(b))));
            return;
        case locus::DocumentKind::ZpData:
            emit_fixture(locus::to_json(locus::product_zp_data(
                locus::zp_data_from_json(a), locus::zp_data_from_json(b))));
            return;
        default:
            throw locus::KindMismatchError("product does not apply to weighted sets");
    }
}

void run_catalog_random(std::uint64_t seed, int r, int n, const std::string& field,
                        std::optional<std::int64_t> prime) {
    locus::FieldDescriptor d = locus::FieldDescriptor::rationals();
    if (field == "prime") {
        if (!prime)
            throw locus::InputError("--field prime needs --prime");
        d = locus::FieldDescriptor::prime_field(*prime);
    } else if (field != "rational") {
        throw locus::InputError("--field must be rational or prime");
    } else if (prime) {
        throw locus::InputError("--prime applies to --field prime only");
    }
    auto ws = locus::random_stable_set(seed, r, n, d);
    if (ws)
        emit_fixture(locus::to_json(*ws));
    else
        emit_envelope("verdict", {{"unsatisfiable", true}});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact weighted-set algebra, localization sums, and fixed-point bounds"};
    app.require_subcommand(1);
    app.add_flag("--plain", g_plain, "human-readable output instead of JSON");

    // gamma
    auto* gamma_cmd = app.add_subcommand("gamma", "evaluate Gamma(lambda) on a weighted set");
    auto gamma_input = std::make_shared<std::string>("-");
    auto gamma_partition = std::make_shared<std::string>();
    gamma_cmd->add_option("--input", *gamma_input, "weighted set JSON ('-' for stdin)");
    gamma_cmd->add_option("--partition", *gamma_partition, "partition text, e.g. \"1^2\"")
        ->required();
    gamma_cmd->callback([=] {
        g_subcommand = "gamma";
        run_gamma(*gamma_input, *gamma_partition);
    });

    // stability
    auto* stab_cmd = app.add_subcommand("stability", "test stability of a weighted set");
    auto stab_input = std::make_shared<std::string>("-");
    stab_cmd->add_option("--input", *stab_input, "weighted set JSON ('-' for stdin)");
    stab_cmd->callback([=] {
        g_subcommand = "stability";
        run_stability(*stab_input);
    });

    // vanish
    auto* vanish_cmd =
        app.add_subcommand("vanish", "check the vanishing theorem on one partition");
    auto vanish_input = std::make_shared<std::string>("-");
    auto vanish_partition = std::make_shared<std::string>();
    auto vanish_trace = std::make_shared<bool>(false);
    vanish_cmd->add_option("--input", *vanish_input, "weighted set JSON ('-' for stdin)");
    vanish_cmd->add_option("--partition", *vanish_partition, "weight-n partition")->required();
    vanish_cmd->add_flag("--trace", *vanish_trace, "include the elimination trace");
    vanish_cmd->callback([=] {
        g_subcommand = "vanish";
        run_vanish(*vanish_input, *vanish_partition, *vanish_trace);
    });

    // bound
    auto* bound_cmd = app.add_subcommand("bound", "fixed-point lower bound");
    auto bound_mode = std::make_shared<std::string>();
    auto bound_data = std::make_shared<std::string>();
    auto bound_numbers = std::make_shared<std::string>();
    auto bound_prime = std::make_shared<std::int64_t>(0);
    auto* bound_prime_opt = bound_cmd->add_option("--prime", *bound_prime, "prime p (zp mode)");
    bound_cmd->add_option("--mode", *bound_mode, "circle or zp")
        ->required()
        ->check(CLI::IsMember({"circle", "zp"}));
    bound_cmd->add_option("--data", *bound_data, "fixed-point data JSON");
    bound_cmd->add_option("--numbers", *bound_numbers, "characteristic numbers JSON");
    bound_cmd->callback([=] {
        g_subcommand = "bound";
        run_bound(*bound_mode, *bound_data, *bound_numbers,
                  bound_prime_opt->count() > 0 ? std::optional<std::int64_t>(*bound_prime) : std::nullopt);
    });

    // obstruction
    auto* obst_cmd = app.add_subcommand("obstruction", "Z_p obstruction test");
    auto obst_numbers = std::make_shared<std::string>("-");
    auto obst_prime = std::make_shared<std::int64_t>(0);
    obst_cmd->add_option("--numbers", *obst_numbers, "Chern numbers JSON ('-' for stdin)");
    obst_cmd->add_option("--prime", *obst_prime, "prime p")->required();
    obst_cmd->callback([=] {
        g_subcommand = "obstruction";
        run_obstruction(*obst_numbers, *obst_prime);
    });

    // localize
    auto* loc_cmd = app.add_subcommand("localize", "table of all weight <= n sums");
    auto loc_data = std::make_shared<std::string>("-");
    loc_cmd->add_option("--data", *loc_data, "fixed-point data JSON ('-' for stdin)");
    loc_cmd->callback([=] {
        g_subcommand = "localize";
        run_localize(*loc_data);
    });

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "compare localization sums against known numbers");
    auto verify_data = std::make_shared<std::string>("-");
    auto verify_numbers = std::make_shared<std::string>();
    auto verify_prime = std::make_shared<std::int64_t>(0);
    verify_cmd->add_option("--data", *verify_data, "fixed-point data JSON ('-' for stdin)");
    verify_cmd->add_option("--numbers", *verify_numbers, "characteristic numbers JSON")
        ->required();
    auto* verify_prime_opt =
        verify_cmd->add_option("--prime", *verify_prime, "cross-check the data's prime");
    verify_cmd->callback([=] {
        g_subcommand = "verify";
        run_verify(*verify_data, *verify_numbers,
                   verify_prime_opt->count() > 0 ? std::optional<std::int64_t>(*verify_prime)
                                     : std::nullopt);
    });

    // catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "generators and oracles");
    catalog_cmd->require_subcommand(1);

    auto* cpn_cmd = catalog_cmd->add_subcommand("cpn", "linear action on CP^n");
    auto cpn_n = std::make_shared<int>(0);
    auto cpn_weights = std::make_shared<std::string>();
    auto cpn_prime = std::make_shared<std::int64_t>(0);
    cpn_cmd->add_option("--n", *cpn_n, "complex projective dimension")->required();
    cpn_cmd->add_option("--weights", *cpn_weights, "comma-separated action weights")
        ->required();
    auto* cpn_prime_opt = cpn_cmd->add_option("--prime", *cpn_prime, "emit Z_p data mod p");
    cpn_cmd->callback([=] {
        g_subcommand = "catalog cpn";
        run_catalog_cpn(*cpn_n, *cpn_weights,
                        cpn_prime_opt->count() > 0 ? std::optional<std::int64_t>(*cpn_prime)
                                       : std::nullopt);
    });

    auto* chern_cmd = catalog_cmd->add_subcommand("chern", "Chern numbers of CP^n");
    auto chern_n = std::make_shared<int>(0);
    chern_cmd->add_option("--n", *chern_n, "complex projective dimension")->required();
    chern_cmd->callback([=] {
        g_subcommand = "catalog chern";
        run_catalog_chern(*chern_n);
    });

    auto* product_cmd = catalog_cmd->add_subcommand("product", "product of two fixtures");
    auto product_a = std::make_shared<std::string>();
    auto product_b = std::make_shared<std::string>();
    product_cmd->add_option("--a", *product_a, "first factor JSON")->required();
    product_cmd->add_option("--b", *product_b, "second factor JSON")->required();
    product_cmd->callback([=] {
        g_subcommand = "catalog product";
        run_catalog_product(*product_a, *product_b);
    });

    auto* random_cmd = catalog_cmd->add_subcommand("random", "seeded stable weighted set");
    auto random_seed = std::make_shared<std::uint64_t>(0);
    auto random_r = std::make_shared<int>(0);
    auto random_n = std::make_shared<int>(0);
    auto random_field = std::make_shared<std::string>("rational");
    auto random_prime = std::make_shared<std::int64_t>(0);
    random_cmd->add_option("--seed", *random_seed, "64-bit seed")->required();
    random_cmd->add_option("--r", *random_r, "number of points")->required();
    random_cmd->add_option("--n", *random_n, "characteristic numbers per point")->required();
    random_cmd->add_option("--field", *random_field, "rational or prime");
    auto* random_prime_opt =
        random_cmd->add_option("--prime", *random_prime, "prime for --field prime");
    random_cmd->callback([=] {
        g_subcommand = "catalog random";
        run_catalog_random(*random_seed, *random_r, *random_n, *random_field,
                           random_prime_opt->count() > 0 ? std::optional<std::int64_t>(*random_prime)
                                             : std::nullopt);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const locus::InternalInconsistencyError& e) {
        emit_envelope("input-error", {{"error", "internal-inconsistency"}, {"message", e.what()}});
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const locus::PreconditionError& e) {
        emit_envelope("input-error", {{"error", "precondition-violation"}, {"message", e.what()}});
        std::cerr << "precondition violation: " << e.what() << "\n";
        return 3;
    } catch (const locus::InputError& e) {
        emit_envelope("input-error", {{"error", "input"}, {"message", e.what()}});
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        emit_envelope("input-error", {{"error", "input"}, {"message", e.what()}});
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
