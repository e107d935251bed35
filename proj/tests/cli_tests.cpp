// End-to-end checks of the command-line tool: exit-code contract and the
// shape of emitted files. Each case shells out to the real binary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const fs::path kScratch = fs::temp_directory_path() / "cyclotope_cli_tests";

void write_file(const fs::path& path, const std::string& body) {
    std::ofstream out(path);
    out << body;
}

int run(const std::string& args) {
    const std::string command =
        std::string(CYCLOTOPE_CLI_PATH) + " " + args + " > /dev/null 2> /dev/null";
    const int status = std::system(command.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

struct Fixture {
    Fixture() {
        fs::create_directories(kScratch);
        write_file(kScratch / "cube3.topes",
                   "# 3-hypercube\n+++\n++-\n+-+\n+--\n-++\n-+-\n--+\n---\n");
        write_file(kScratch / "bad.topes", "+++\n+0-\n");
        write_file(kScratch / "disconnected.topes", "++\n--\n");
        write_file(kScratch / "arr.json",
                   R"({"d": 2, "vectors": [["1","0"],["0","1"],["1","1"]]})");
        write_file(kScratch / "square.cycle.json",
                   R"({"t": 2, "vertices": ["++", "-+", "--", "+-"]})");
        write_file(kScratch / "broken.cycle.json",
                   R"({"t": 2, "vertices": ["++", "-+", "++", "+-"]})");
    }
    std::string input(const char* name) const {
        return "-i " + (kScratch / name).string();
    }
};

const Fixture fixture;

}  // namespace

TEST_CASE("validate exit codes: pass, parse error, domain failure") {
    CHECK(run("validate " + fixture.input("cube3.topes")) == 0);
    CHECK(run("validate " + fixture.input("bad.topes")) == 3);
    CHECK(run("validate " + fixture.input("disconnected.topes")) == 1);
    CHECK(run("validate " + fixture.input("arr.json")) == 0);
    CHECK(run("validate " + fixture.input("square.cycle.json")) == 0);
    CHECK(run("validate " + fixture.input("broken.cycle.json")) == 1);
    CHECK(run("validate -i /no/such/file") == 3);
}

TEST_CASE("topes lists the regions of an arrangement") {
    const fs::path out = kScratch / "arr.topes";
    CHECK(run("topes " + fixture.input("arr.json") + " -o " + out.string()) == 0);
    CHECK(slurp(out) == "+++\n+-+\n+--\n-++\n-+-\n---\n");
}

TEST_CASE("cycles enumeration and limits") {
    const fs::path out = kScratch / "cycles.json";
    CHECK(run("cycles " + fixture.input("cube3.topes") + " -f json -o " + out.string()) == 0);
    const auto doc = nlohmann::json::parse(slurp(out));
    CHECK(doc.size() == 4);
    CHECK(doc[0]["distance_vector"].size() == 6);

    CHECK(run("cycles " + fixture.input("cube3.topes") + " -l 2 -f json -o " +
              out.string()) == 0);
    CHECK(nlohmann::json::parse(slurp(out)).size() == 2);

    // one symmetric cycle through three concurrent lines
    CHECK(run("cycles " + fixture.input("arr.json") + " -f json -o " + out.string()) == 0);
    CHECK(nlohmann::json::parse(slurp(out)).size() == 1);
}

TEST_CASE("committee and decompose emit members") {
    const fs::path out = kScratch / "committee.json";
    CHECK(run("committee " + fixture.input("cube3.topes") + " -f json -o " +
              out.string()) == 0);
    const auto doc = nlohmann::json::parse(slurp(out));
    CHECK(doc.size() == 4);
    for (const auto& entry : doc) {
        CHECK(entry["cardinality"].get<int>() % 2 == 1);
    }

    const fs::path decomposition = kScratch / "decomposition.json";
    CHECK(run("decompose " + fixture.input("cube3.topes") +
              " --cycle 3 --tope --- -o " + decomposition.string()) == 0);
    const auto q = nlohmann::json::parse(slurp(decomposition));
    CHECK(q["cardinality"].get<int>() % 2 == 1);
    CHECK(q["tope"] == "---");

    CHECK(run("decompose " + fixture.input("cube3.topes") + " --cycle 99 --tope ---") == 3);
    CHECK(run("decompose " + fixture.input("cube3.topes") + " --cycle 0") == 3);
}

TEST_CASE("spectrum emits weighted bins") {
    const fs::path out = kScratch / "spectrum.csv";
    CHECK(run("spectrum " + fixture.input("cube3.topes") + " --cycle 0 -o " +
              out.string()) == 0);
    std::istringstream lines(slurp(out));
    std::string header;
    std::getline(lines, header);
    CHECK(header == "k,re,im,magnitude_squared,sin2_weight");
    int rows = 0;
    for (std::string line; std::getline(lines, line);) ++rows;
    CHECK(rows == 6);

    CHECK(run("spectrum " + fixture.input("cube3.topes") + " --cycle 99") == 3);
    CHECK(run("spectrum " + fixture.input("square.cycle.json") + " --cycle 0") == 0);
}

TEST_CASE("verify campaigns pass on valid inputs and flag corrupt ones") {
    const fs::path report = kScratch / "report.json";
    CHECK(run("verify " + fixture.input("cube3.topes") + " -o " + report.string()) == 0);
    const auto doc = nlohmann::json::parse(slurp(report));
    CHECK(doc["summary"]["pass"] == true);
    CHECK(doc["summary"]["failures"] == 0);
    CHECK(doc["cycle_count"] == 4);

    CHECK(run("verify " + fixture.input("arr.json")) == 0);
    CHECK(run("verify " + fixture.input("square.cycle.json")) == 0);
    CHECK(run("verify " + fixture.input("broken.cycle.json")) == 1);
    CHECK(run("verify " + fixture.input("disconnected.topes")) == 1);
}

TEST_CASE("two-cycle compares a pair of cycles") {
    const fs::path out = kScratch / "pair.json";
    CHECK(run("two-cycle " + fixture.input("cube3.topes") + " --cycle 0 --cycle2 3 -o " +
              out.string()) == 0);
    const auto doc = nlohmann::json::parse(slurp(out));
    CHECK(doc["pass"] == true);
    CHECK(doc["exact_combined"].get<int>() >= 2);
    CHECK(run("two-cycle " + fixture.input("cube3.topes") + " --cycle 0 --cycle2 9") == 3);
}

TEST_CASE("usage errors exit with 3") {
    CHECK(run("") == 3);
    CHECK(run("no-such-command -i x") == 3);
    CHECK(run("cycles") == 3);  // missing --input
    CHECK(run("cycles -i " + (kScratch / "cube3.topes").string() + " -k bogus") == 3);
}
