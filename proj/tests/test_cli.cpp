#include <catch2/catch_amalgamated.hpp>

#include "locus/json_io.hpp"
#include "cli_support.hpp"

using namespace locus;
using locus_test::CliResult;
using locus_test::ScratchDir;
using locus_test::cli_path;
using locus_test::run_shell;

namespace {

const char* kCp1Set = R"({
  "field": {"kind": "rational"}, "n": 1,
  "points": [{"mu": "1/3", "a": ["3"]}, {"mu": "-1/3", "a": ["-3"]}]
})";

const char* kTwoPointSet = R"({
  "field": {"kind": "rational"}, "n": 2,
  "points": [{"mu": "1", "a": ["2", "9"]}, {"mu": "-1", "a": ["2", "5"]}]
})";

const char* kCp2Chern = R"({
  "kind": "chern", "n": 2,
  "values": [{"partition": "1^2", "value": "9"}, {"partition": "2", "value": "3"}]
})";

const char* kCp2Pontrjagin = R"({
  "kind": "pontrjagin", "n": 1,
  "values": [{"partition": "1", "value": "3"}]
})";

Json payload_of(const CliResult& result) {
    Json envelope = parse_json_text(result.out);
    return envelope.at("payload");
}

}  // namespace

TEST_CASE("cli gamma") {
    ScratchDir dir;
    const std::string ws = dir.write("cp1.json", kCp1Set);
    CliResult result = run_shell(cli_path() + " gamma --input " + ws + " --partition 1");
    REQUIRE(result.exit_code == 0);
    CHECK(payload_of(result).at("gamma") == "2");
    Json envelope = parse_json_text(result.out);
    CHECK(envelope.at("subcommand") == "gamma");
    CHECK(envelope.at("status") == "ok");
}

TEST_CASE("cli stability") {
    ScratchDir dir;
    const std::string stable = dir.write("cp1.json", kCp1Set);
    CliResult ok = run_shell(cli_path() + " stability --input " + stable);
    REQUIRE(ok.exit_code == 0);
    CHECK(payload_of(ok).at("stable") == true);

    const std::string unstable = dir.write("one.json", R"({
      "field": {"kind": "rational"}, "n": 1,
      "points": [{"mu": "1", "a": ["4"]}]
    })");
    CliResult bad = run_shell(cli_path() + " stability --input " + unstable);
    REQUIRE(bad.exit_code == 0);  // a verdict, not a failure
    CHECK(payload_of(bad).at("stable") == false);
    CHECK(payload_of(bad).at("witness") == "()");
    CHECK(payload_of(bad).at("gamma") == "1");
}

TEST_CASE("cli vanish with trace") {
    ScratchDir dir;
    const std::string ws = dir.write("two.json", kTwoPointSet);
    CliResult result =
        run_shell(cli_path() + " vanish --input " + ws + " --partition \"1^2\" --trace");
    REQUIRE(result.exit_code == 0);
    Json payload = payload_of(result);
    CHECK(payload.at("gamma") == "0");
    CHECK(payload.at("vanishes") == true);
    CHECK(payload.at("trace").at("slot") == 1);
    CHECK(payload.at("trace").at("keys") == Json::array({"2"}));
    CHECK(payload.at("trace").at("group_sums") == Json::array({"0"}));
    CHECK(payload.at("trace").at("vandermonde_det") == "1");

    // m(2^1) = 1 < r = 2: precondition violation, exit 3.
    CliResult violated =
        run_shell(cli_path() + " vanish --input " + ws + " --partition 2 2>/dev/null");
    CHECK(violated.exit_code == 3);
    CHECK(payload_of(violated).at("error") == "precondition-violation");
}

TEST_CASE("cli bound") {
    ScratchDir dir;
    const std::string chern = dir.write("cp2_chern.json", kCp2Chern);
    const std::string pont = dir.write("cp2_p.json", kCp2Pontrjagin);

    CliResult zp2 =
        run_shell(cli_path() + " bound --mode zp --numbers " + chern + " --prime 2");
    REQUIRE(zp2.exit_code == 0);
    CHECK(payload_of(zp2).at("bound") == 3);
    CHECK(payload_of(zp2).at("witness") == "1^2");
    CHECK(payload_of(zp2).at("basis") == "chern-mod-p");

    CliResult zp3 =
        run_shell(cli_path() + " bound --mode zp --numbers " + chern + " --prime 3");
    REQUIRE(zp3.exit_code == 0);
    CHECK(payload_of(zp3).at("bound").is_null());

    CliResult circle = run_shell(cli_path() + " bound --mode circle --numbers " + pont);
    REQUIRE(circle.exit_code == 0);
    CHECK(payload_of(circle).at("bound") == 2);
    CHECK(payload_of(circle).at("basis") == "pontrjagin");

    CliResult missing_prime =
        run_shell(cli_path() + " bound --mode zp --numbers " + chern + " 2>/dev/null");
    CHECK(missing_prime.exit_code == 2);

    const std::string empty = dir.write("empty.json",
                                        R"({"kind": "pontrjagin", "n": 2, "values": []})");
    CliResult no_information = run_shell(cli_path() + " bound --mode circle --numbers " + empty);
    REQUIRE(no_information.exit_code == 0);
    CHECK(payload_of(no_information).at("bound").is_null());
    CHECK(payload_of(no_information).at("witness").is_null());
}

TEST_CASE("cli catalog fixtures pipe into bound and localize") {
    CliResult circle = run_shell(cli_path() + " catalog cpn --n 2 --weights 0,1,2 | " +
                                 cli_path() + " bound --mode circle");
    REQUIRE(circle.exit_code == 0);
    CHECK(payload_of(circle).at("bound") == 2);

    CliResult zp = run_shell(cli_path() + " catalog cpn --n 2 --weights 0,1,2 --prime 7 | " +
                             cli_path() + " bound --mode zp");
    REQUIRE(zp.exit_code == 0);
    CHECK(payload_of(zp).at("bound") == 3);

    CliResult zp_table = run_shell(cli_path() + " catalog cpn --n 2 --weights 0,1,2 --prime 7 | " +
                                   cli_path() + " localize");
    REQUIRE(zp_table.exit_code == 0);
    CHECK(payload_of(zp_table).at("kind") == "zp");
    CHECK(payload_of(zp_table).at("p") == 7);

    CliResult random_stability = run_shell(cli_path() +
                                           " catalog random --seed 11 --r 3 --n 2 | " +
                                           cli_path() + " stability");
    REQUIRE(random_stability.exit_code == 0);
    CHECK(payload_of(random_stability).at("stable") == true);

    CliResult numbers_pipe = run_shell(cli_path() + " catalog chern --n 2 | " + cli_path() +
                                       " bound --mode zp --prime 5");
    REQUIRE(numbers_pipe.exit_code == 0);
    CHECK(payload_of(numbers_pipe).at("bound") == 3);
}

TEST_CASE("cli obstruction") {
    ScratchDir dir;
    const std::string chern = dir.write("cp2_chern.json", kCp2Chern);

    CliResult at2 = run_shell(cli_path() + " obstruction --numbers " + chern + " --prime 2");
    REQUIRE(at2.exit_code == 0);
    CHECK(payload_of(at2).at("verdict") == "obstructed");
    CHECK(payload_of(at2).at("m") == 2);

    CliResult at3 = run_shell(cli_path() + " obstruction --numbers " + chern + " --prime 3");
    REQUIRE(at3.exit_code == 0);
    CHECK(payload_of(at3).at("verdict") == "vacuous");
    CHECK(payload_of(at3).at("m").is_null());

    CliResult at5 = run_shell(cli_path() + " obstruction --numbers " + chern + " --prime 5");
    CHECK(payload_of(at5).at("verdict") == "consistent");
}

TEST_CASE("cli localize reads stdin by default") {
    CliResult result = run_shell(cli_path() + " catalog cpn --n 2 --weights 0,1,2 | " +
                                 cli_path() + " localize");
    REQUIRE(result.exit_code == 0);
    Json payload = payload_of(result);
    CHECK(payload.at("kind") == "circle");
    CHECK(payload.at("n") == 1);
    REQUIRE(payload.at("sums").size() == 2);
    CHECK(payload.at("sums")[0].at("partition") == "()");
    CHECK(payload.at("sums")[0].at("value") == "0");
    CHECK(payload.at("sums")[1].at("partition") == "1");
    CHECK(payload.at("sums")[1].at("value") == "3");
    CHECK(payload.at("sums")[1].at("integral") == true);
}

TEST_CASE("cli verify") {
    ScratchDir dir;
    const std::string pont = dir.write("cp2_p.json", kCp2Pontrjagin);
    CliResult ok = run_shell(cli_path() + " catalog cpn --n 2 --weights 0,1,2 | " +
                             cli_path() + " verify --numbers " + pont);
    REQUIRE(ok.exit_code == 0);
    CHECK(payload_of(ok).at("ok") == true);

    const std::string corrupted = dir.write("bad.json", R"({
      "kind": "pontrjagin", "n": 1,
      "values": [{"partition": "1", "value": "4"}]
    })");
    CliResult bad = run_shell(cli_path() + " catalog cpn --n 2 --weights 0,1,2 | " +
                              cli_path() + " verify --numbers " + corrupted);
    REQUIRE(bad.exit_code == 0);
    Json payload = payload_of(bad);
    CHECK(payload.at("ok") == false);
    REQUIRE(payload.at("top_mismatches").size() == 1);
    CHECK(payload.at("top_mismatches")[0].at("computed") == "3");
    CHECK(payload.at("top_mismatches")[0].at("expected") == "4");
}

TEST_CASE("cli catalog product") {
    ScratchDir dir;
    const std::string pont = dir.write("cp2_p.json", kCp2Pontrjagin);
    CliResult result = run_shell(cli_path() + " catalog product --a " + pont + " --b " + pont);
    REQUIRE(result.exit_code == 0);
    CharacteristicNumbers prod = numbers_from_json(parse_json_text(result.out));
    CHECK(prod.value_of(Partition(2, {2, 0})) == 18);
    CHECK(prod.value_of(Partition(2, {0, 1})) == 9);
}

TEST_CASE("cli catalog random") {
    CliResult result = run_shell(cli_path() +
                                 " catalog random --seed 11 --r 3 --n 2 --field prime --prime 7");
    REQUIRE(result.exit_code == 0);
    WeightedSet ws = weighted_set_from_json(parse_json_text(result.out));
    CHECK(ws.size() == 3);
    CHECK(is_stable(ws).stable);

    CliResult unsat = run_shell(cli_path() + " catalog random --seed 1 --r 1 --n 1");
    REQUIRE(unsat.exit_code == 0);
    CHECK(payload_of(unsat).at("unsatisfiable") == true);
}

TEST_CASE("cli pipelines are byte-identical across runs") {
    const std::string localize_pipe = cli_path() + " catalog cpn --n 2 --weights 0,1,2 | " +
                                      cli_path() + " localize";
    CliResult first = run_shell(localize_pipe);
    CliResult second = run_shell(localize_pipe);
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == second.out);

    const std::string obstruction_pipe = cli_path() + " catalog chern --n 2 | " + cli_path() +
                                         " obstruction --prime 2";
    CliResult third = run_shell(obstruction_pipe);
    CliResult fourth = run_shell(obstruction_pipe);
    REQUIRE(third.exit_code == 0);
    CHECK(payload_of(third).at("verdict") == "obstructed");
    CHECK(third.out == fourth.out);
}

TEST_CASE("cli error exit codes") {
    ScratchDir dir;
    const std::string garbage = dir.write("garbage.json", "{nope");
    CliResult malformed =
        run_shell(cli_path() + " stability --input " + garbage + " 2>/dev/null");
    CHECK(malformed.exit_code == 2);
    CHECK(payload_of(malformed).at("error") == "input");

    CliResult unknown_flag = run_shell(cli_path() + " stability --bogus 2>/dev/null");
    CHECK(unknown_flag.exit_code == 2);

    CliResult missing = run_shell(cli_path() + " 2>/dev/null");
    CHECK(missing.exit_code != 0);

    const std::string ws = dir.write("cp1.json", kCp1Set);
    CliResult bad_partition =
        run_shell(cli_path() + " gamma --input " + ws + " --partition 9 2>/dev/null");
    CHECK(bad_partition.exit_code == 2);
}

TEST_CASE("cli plain output") {
    ScratchDir dir;
    const std::string ws = dir.write("cp1.json", kCp1Set);
    CliResult result = run_shell(cli_path() + " --plain stability --input " + ws);
    REQUIRE(result.exit_code == 0);
    CHECK(result.out.find("stable: true") != std::string::npos);
}
