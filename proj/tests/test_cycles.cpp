#include <doctest.h>

#include <set>

#include "cyclotope/cycle.hpp"
#include "test_util.hpp"

using namespace cyclotope;

namespace {

std::vector<Tope> parse_all(std::initializer_list<const char*> texts) {
    std::vector<Tope> topes;
    for (const char* text : texts) topes.push_back(parse_tope(text));
    return topes;
}

}  // namespace

TEST_CASE("hypercube cycle enumeration matches the brute-force oracle") {
    for (int t = 2; t <= 4; ++t) {
        const TopeSet cube = hypercube(t);
        const std::vector<SymmetricCycle> cycles = find_symmetric_cycles(cube);
        const std::set<std::string> oracle = testutil::oracle_cycle_keys(cube);
        CHECK(cycles.size() == oracle.size());
        std::set<std::string> found;
        for (const auto& cycle : cycles) found.insert(testutil::cycle_key(cycle.vertices));
        CHECK(found == oracle);
    }
    CHECK(find_symmetric_cycles(hypercube(2)).size() == 1);
    CHECK(find_symmetric_cycles(hypercube(3)).size() == 4);
}

TEST_CASE("cycle lists are canonical and deterministic") {
    const std::vector<SymmetricCycle> cycles = find_symmetric_cycles(hypercube(3));
    for (const auto& cycle : cycles) {
        // first vertex is the least among vertices, second precedes last
        for (const auto& vertex : cycle.vertices)
            CHECK_FALSE(tope_less(vertex, cycle.vertices.front()));
        CHECK(tope_less(cycle.vertices[1], cycle.vertices.back()));
    }
    const std::vector<SymmetricCycle> again = find_symmetric_cycles(hypercube(3));
    for (std::size_t i = 0; i < cycles.size(); ++i)
        CHECK(cycles[i].vertices == again[i].vertices);
}

TEST_CASE("limit keeps the leading cycles") {
    const std::vector<SymmetricCycle> one = find_symmetric_cycles(hypercube(3), 1);
    CHECK(one.size() == 1);
    const std::vector<SymmetricCycle> two = find_symmetric_cycles(hypercube(3), 2);
    CHECK(two.size() == 2);
    const std::vector<SymmetricCycle> all = find_symmetric_cycles(hypercube(3));
    CHECK(one.front().vertices == all.front().vertices);
    CHECK(two[1].vertices == all[1].vertices);
}

TEST_CASE("degenerate ground sets admit no cycle search") {
    CHECK_THROWS_AS(find_symmetric_cycles(hypercube(1)), DegenerateGroundSet);
}

TEST_CASE("every found cycle passes validation") {
    const TopeSet cube = hypercube(4);
    for (const auto& cycle : find_symmetric_cycles(cube)) {
        const ValidationReport report = validate_cycle(cycle.vertices, cube);
        CHECK(report.overall());
        // flip_order repeats its first half
        for (int k = 0; k < cycle.t; ++k)
            CHECK(cycle.flip_order[static_cast<std::size_t>(k)] ==
                  cycle.flip_order[static_cast<std::size_t>(k + cycle.t)]);
    }
}

TEST_CASE("validate_cycle on the square and its corruptions") {
    const TopeSet cube = hypercube(2);
    const std::vector<Tope> square = parse_all({"++", "-+", "--", "+-"});
    CHECK(validate_cycle(square, cube).overall());

    std::vector<Tope> repeated = square;
    repeated[2] = repeated[0];
    const ValidationReport report = validate_cycle(repeated, cube);
    CHECK_FALSE(report.overall());
    CHECK_FALSE(report.find("distinct_vertices")->pass);
}

TEST_CASE("validate_cycle accepts the hexagon avoiding the positive tope") {
    const TopeSet cube = hypercube(3);
    const std::vector<Tope> hexagon =
        parse_all({"-++", "-+-", "++-", "+--", "+-+", "--+"});
    const ValidationReport report = validate_cycle(hexagon, cube);
    CHECK(report.overall());

    // breaking antipodality must be caught
    std::vector<Tope> twisted = hexagon;
    std::swap(twisted[1], twisted[5]);
    CHECK_FALSE(validate_cycle(twisted, cube).overall());

    // membership check against a smaller hosting set
    const TopeSet six = TopeSet::from_topes(
        parse_all({"+++", "-++", "-+-", "---", "+--", "+-+"}));
    CHECK_FALSE(validate_cycle(hexagon, six).overall());
    CHECK_FALSE(validate_cycle(hexagon, six).find("membership")->pass);
}

TEST_CASE("build_cycle walks the requested flips") {
    const TopeSet cube = hypercube(3);
    const auto cycle = build_cycle(cube, positive_tope(3), {1, 2, 3});
    REQUIRE(cycle.has_value());
    CHECK(to_string(cycle->vertices[1]) == "-++");
    CHECK(to_string(cycle->vertices[2]) == "--+");
    CHECK(to_string(cycle->vertices[3]) == "---");
    CHECK(validate_cycle(cycle->vertices, cube).overall());

    const TopeSet six = TopeSet::from_topes(
        parse_all({"+++", "-++", "-+-", "---", "+--", "+-+"}));
    CHECK_FALSE(build_cycle(six, positive_tope(3), {1, 2, 3}).has_value());
    CHECK(build_cycle(six, positive_tope(3), {1, 3, 2}).has_value());
}

TEST_CASE("distance vectors along cycles") {
    const TopeSet cube = hypercube(3);
    const auto prefix = build_cycle(cube, positive_tope(3), {1, 2, 3});
    REQUIRE(prefix.has_value());
    CHECK(distance_vector(*prefix, positive_tope(3)).values ==
          std::vector<long long>{0, 1, 2, 3, 2, 1});

    const auto hexagon = build_cycle(cube, parse_tope("-++"), {3, 1, 2});
    REQUIRE(hexagon.has_value());
    CHECK(distance_vector(*hexagon, positive_tope(3)).values ==
          std::vector<long long>{1, 2, 1, 2, 1, 2});
    CHECK(distance_vector(*hexagon, parse_tope("---")).values ==
          std::vector<long long>{2, 1, 2, 1, 2, 1});
}

TEST_CASE("raw distance vectors are checked against the signal invariants") {
    const DistanceVector z = distance_vector_from_values({0, 1, 2, 1});
    CHECK(z.t == 2);
    CHECK_THROWS_AS(distance_vector_from_values({0, 1, 2}), BadLength);
    CHECK_THROWS_AS(distance_vector_from_values({0, 1, 1, 1}), NonIntegerResult);
    CHECK_THROWS_AS(distance_vector_from_values({0, 1, 2, 3}), NonIntegerResult);
}

TEST_CASE("signal access is 2t-periodic with mathematical modulus") {
    const DistanceVector z = distance_vector_from_values({0, 1, 2, 1});
    CHECK(signal_value(z, 5) == 1);
    CHECK(signal_value(z, -1) == 1);
    CHECK(signal_value(z, 4) == 0);
    CHECK(signal_value(z, -4) == 0);
    for (int k = 0; k < 2; ++k)
        CHECK(signal_value(z, k) + signal_value(z, k + 2) == 2);
}
