#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cyclotope/io.hpp"

using namespace cyclotope;

TEST_CASE("arrangement JSON ingestion") {
    std::istringstream in(R"({"d": 2, "vectors": [["1", "0"], ["0", "1"], ["1/2", "3/4"]]})");
    const Arrangement arrangement = read_arrangement(in);
    CHECK(arrangement.d == 2);
    CHECK(arrangement.t() == 3);
    CHECK(arrangement.vectors[2][0] == Rational(BigInt(1), BigInt(2)));
    CHECK(arrangement.vectors[2][1] == Rational(BigInt(3), BigInt(4)));

    std::istringstream bare(R"({"d": 2, "vectors": [[1, 0], [0, -3]]})");
    CHECK(read_arrangement(bare).vectors[1][1] == Rational(BigInt(-3)));

    std::istringstream missing(R"({"vectors": []})");
    CHECK_THROWS_AS(read_arrangement(missing), ParseError);
    std::istringstream ragged(R"({"d": 2, "vectors": [["1"]]})");
    CHECK_THROWS_AS(read_arrangement(ragged), ParseError);
    std::istringstream junk("not json");
    CHECK_THROWS_AS(read_arrangement(junk), ParseError);
}

TEST_CASE("arrangement writing round-trips") {
    Arrangement arrangement;
    arrangement.d = 2;
    arrangement.vectors = {{Rational(BigInt(1)), Rational(BigInt(1), BigInt(3))},
                           {Rational(BigInt(0)), Rational(BigInt(-2))}};
    std::ostringstream out;
    write_arrangement(out, arrangement);
    std::istringstream in(out.str());
    const Arrangement again = read_arrangement(in);
    CHECK(again.vectors == arrangement.vectors);
}

TEST_CASE("tope lists with comments and blank lines") {
    std::istringstream in("# header\n+-+\n\n  -+- # trailing note\n");
    const std::vector<Tope> topes = read_tope_list(in);
    REQUIRE(topes.size() == 2);
    CHECK(to_string(topes[0]) == "+-+");
    CHECK(to_string(topes[1]) == "-+-");

    std::istringstream bad("+-+\n+0-\n");
    try {
        read_tope_list(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(read_tope_list(empty), ParseError);
}

TEST_CASE("tope list writing round-trips") {
    const std::vector<Tope> topes{parse_tope("++-"), parse_tope("--+")};
    std::ostringstream out;
    write_tope_list(out, topes);
    CHECK(out.str() == "++-\n--+\n");
    std::istringstream in(out.str());
    CHECK(read_tope_list(in) == topes);
}

TEST_CASE("cycle JSON ingestion") {
    std::istringstream in(R"({"t": 2, "vertices": ["++", "-+", "--", "+-"]})");
    const std::vector<Tope> vertices = read_cycle(in);
    REQUIRE(vertices.size() == 4);
    CHECK(to_string(vertices[1]) == "-+");

    std::istringstream mismatch(R"({"t": 3, "vertices": ["++"]})");
    CHECK_THROWS_AS(read_cycle(mismatch), ParseError);
    std::istringstream hollow(R"({"t": 2, "vertices": []})");
    CHECK_THROWS_AS(read_cycle(hollow), ParseError);
}

TEST_CASE("spectrum CSV layout") {
    Spectrum spectrum;
    spectrum.t = 2;
    spectrum.values = {{4, 0}, {-2, 0}, {0, 0}, {-2, 0}};
    std::ostringstream out;
    write_spectrum_csv(out, spectrum);
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "k,re,im,magnitude_squared,sin2_weight");
    std::getline(lines, line);
    CHECK(line.substr(0, 4) == "0,4,");
    std::getline(lines, line);
    CHECK(line.substr(0, 5) == "1,-2,");
    // bin 1 weight: sin^2(pi/2) = 1
    CHECK(line.substr(line.size() - 2) == ",1");
}

TEST_CASE("identity reports flatten to a JSON list") {
    IdentityReport report;
    report.name = "demo";
    report.tolerance = 1e-6;
    report.add("alpha", 1.0, 1.0);
    report.add("beta", 2.0, 1.0);
    const std::string text = identity_report_json({&report, 1});
    const auto doc = nlohmann::json::parse(text);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 2);
    CHECK(doc[0]["name"] == "demo/alpha");
    CHECK(doc[0]["pass"] == true);
    CHECK(doc[1]["pass"] == false);
    CHECK(doc[1]["residual"] == 1.0);
}
