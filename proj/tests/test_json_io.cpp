#include <catch2/catch_amalgamated.hpp>

#include "locus/json_io.hpp"

using namespace locus;

TEST_CASE("weighted set schema round trip") {
    const char* text = R"({
      "field": {"kind": "rational"}, "n": 2,
      "points": [{"mu": "1/2", "a": ["5", "4"]}, {"mu": "-1", "a": ["2", "1"]}]
    })";
    WeightedSet ws = weighted_set_from_json(parse_json_text(text));
    CHECK(ws.n() == 2);
    CHECK(ws.size() == 2);
    CHECK(format_element(ws.points()[0].mu) == "1/2");

    Json emitted = to_json(ws);
    CHECK(emitted.at("schema") == "v1");
    WeightedSet again = weighted_set_from_json(emitted);
    CHECK(to_json(again).dump() == emitted.dump());
}

TEST_CASE("prime field schema") {
    const char* text = R"({
      "schema": "v1",
      "field": {"kind": "prime", "p": 7}, "n": 1,
      "points": [{"mu": "3", "a": ["-1"]}]
    })";
    WeightedSet ws = weighted_set_from_json(parse_json_text(text));
    CHECK(ws.descriptor().modulus() == 7);
    CHECK(ws.points()[0].a[0].residue() == 6);
}

TEST_CASE("strictness") {
    CHECK_THROWS_AS(weighted_set_from_json(parse_json_text(
                        R"({"field": {"kind": "rational"}, "n": 1,
                            "points": [{"mu": "1", "a": ["1"]}], "extra": 0})")),
                    ParseError);
    CHECK_THROWS_AS(weighted_set_from_json(parse_json_text(
                        R"({"field": {"kind": "rational"}, "n": 1,
                            "points": [{"mu": "1", "a": ["1"], "note": "x"}]})")),
                    ParseError);
    CHECK_THROWS_AS(weighted_set_from_json(parse_json_text(
                        R"({"schema": "v2", "field": {"kind": "rational"}, "n": 1,
                            "points": [{"mu": "1", "a": ["1"]}]})")),
                    ParseError);
    CHECK_THROWS_AS(weighted_set_from_json(parse_json_text(
                        R"({"field": {"kind": "rational"},
                            "points": [{"mu": "1", "a": ["1"]}]})")),
                    ParseError);
    CHECK_THROWS_AS(weighted_set_from_json(parse_json_text(
                        R"({"field": {"kind": "prime"}, "n": 1,
                            "points": [{"mu": "1", "a": ["1"]}]})")),
                    ParseError);
    CHECK_THROWS_AS(weighted_set_from_json(parse_json_text(
                        R"({"field": {"kind": "rational", "p": 3}, "n": 1,
                            "points": [{"mu": "1", "a": ["1"]}]})")),
                    ParseError);
    CHECK_THROWS_AS(parse_json_text("{nope"), ParseError);
}

TEST_CASE("circle data schema") {
    const char* text = R"({
      "kind": "circle", "n": 2,
      "points": [{"rotation_numbers": [1, 2, -3, 4]}]
    })";
    CircleFixedPointData data = circle_data_from_json(parse_json_text(text));
    CHECK(data.n() == 2);
    CHECK(data.points()[0] == std::vector<std::int64_t>{1, 2, -3, 4});
    CHECK(circle_data_from_json(to_json(data)).points() == data.points());

    CHECK_THROWS_AS(circle_data_from_json(parse_json_text(
                        R"({"kind": "circle", "n": 1, "points": [{"rotation_numbers": [1, 0]}]})")),
                    ZeroRotationNumberError);
    CHECK_THROWS_AS(circle_data_from_json(parse_json_text(
                        R"({"kind": "zp", "p": 7, "n": 1, "points": []})")),
                    KindMismatchError);
}

TEST_CASE("zp data schema with optional epsilon") {
    const char* text = R"({
      "kind": "zp", "p": 7, "n": 2,
      "points": [{"weights": [1, 2]}, {"weights": [6, 1], "epsilon": -1}]
    })";
    ZpFixedPointData data = zp_data_from_json(parse_json_text(text));
    CHECK(data.p() == 7);
    CHECK(data.points()[0].epsilon == 1);
    CHECK(data.points()[1].epsilon == -1);

    Json emitted = to_json(data);
    CHECK_FALSE(emitted.at("points")[0].contains("epsilon"));
    CHECK(emitted.at("points")[1].at("epsilon") == -1);
    ZpFixedPointData again = zp_data_from_json(emitted);
    CHECK(again.points()[1].epsilon == -1);
}

TEST_CASE("characteristic numbers schema") {
    const char* text = R"({
      "kind": "chern", "n": 2,
      "values": [{"partition": "1^2", "value": "9"}, {"partition": "2", "value": "3"}]
    })";
    CharacteristicNumbers numbers = numbers_from_json(parse_json_text(text));
    CHECK(numbers.kind() == NumberKind::Chern);
    CHECK(numbers.value_of(Partition(2, {2, 0})) == 9);
    CHECK(numbers.value_of(Partition(2, {0, 1})) == 3);

    CharacteristicNumbers sparse = numbers_from_json(parse_json_text(
        R"({"kind": "chern", "n": 2, "values": [{"partition": "2", "value": "3"}]})"));
    CHECK(sparse.value_of(Partition(2, {2, 0})) == 0);  // omitted means zero

    CHECK(numbers_from_json(to_json(numbers)).values() == numbers.values());

    CHECK_THROWS_AS(numbers_from_json(parse_json_text(
                        R"({"kind": "chern", "n": 2,
                            "values": [{"partition": "1^2", "value": "9"},
                                       {"partition": "1^2", "value": "9"}]})")),
                    ParseError);
    CHECK_THROWS_AS(numbers_from_json(parse_json_text(
                        R"({"kind": "chern", "n": 2,
                            "values": [{"partition": "1", "value": "9"}]})")),
                    WeightMismatchError);
    CHECK_THROWS_AS(numbers_from_json(parse_json_text(
                        R"({"kind": "chern", "n": 2,
                            "values": [{"partition": "1^2", "value": "x"}]})")),
                    ParseError);
    CHECK_THROWS_AS(numbers_from_json(parse_json_text(
                        R"({"kind": "euler", "n": 2, "values": []})")),
                    ParseError);
}

TEST_CASE("document sniffing") {
    CHECK(sniff_document(parse_json_text(R"({"field": {}, "n": 0, "points": []})")) ==
          DocumentKind::WeightedSet);
    CHECK(sniff_document(parse_json_text(R"({"kind": "circle"})")) == DocumentKind::CircleData);
    CHECK(sniff_document(parse_json_text(R"({"kind": "zp"})")) == DocumentKind::ZpData);
    CHECK(sniff_document(parse_json_text(R"({"kind": "pontrjagin"})")) == DocumentKind::Numbers);
    CHECK(sniff_document(parse_json_text(R"({"kind": "chern"})")) == DocumentKind::Numbers);
    CHECK_THROWS_AS(sniff_document(parse_json_text(R"({"kind": "mystery"})")), ParseError);
    CHECK_THROWS_AS(sniff_document(parse_json_text("[1, 2]")), ParseError);
}
