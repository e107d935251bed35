#include <doctest.h>

#include <cmath>
#include <random>

#include "cyclotope/committee.hpp"
#include "cyclotope/identities.hpp"
#include "test_util.hpp"

using namespace cyclotope;

namespace {

constexpr double kTight = 1e-12;

bool close(std::complex<double> a, std::complex<double> b, double tol = kTight) {
    return std::abs(a - b) <= tol;
}

DistanceVector z_0121() { return distance_vector_from_values({0, 1, 2, 1}); }
DistanceVector z_121212() { return distance_vector_from_values({1, 2, 1, 2, 1, 2}); }
DistanceVector z_012321() { return distance_vector_from_values({0, 1, 2, 3, 2, 1}); }

}  // namespace

TEST_CASE("dft of small signals") {
    const std::vector<double> ones{1, 1, 1, 1};
    const Spectrum flat = dft(std::span<const double>(ones));
    CHECK(close(flat.values[0], 4.0));
    CHECK(close(flat.values[1], 0.0));
    CHECK(close(flat.values[2], 0.0));
    CHECK(close(flat.values[3], 0.0));

    const Spectrum ramp = dft(z_0121());
    CHECK(close(ramp.values[0], 4.0));
    CHECK(close(ramp.values[1], -2.0));
    CHECK(close(ramp.values[2], 0.0));
    CHECK(close(ramp.values[3], -2.0));

    const Spectrum alternating = dft(z_121212());
    CHECK(close(alternating.values[0], 9.0));
    CHECK(close(alternating.values[3], -3.0));
    for (const std::size_t k : {1u, 2u, 4u, 5u})
        CHECK(close(alternating.values[k], 0.0));

    CHECK_THROWS_AS(dft(std::span<const double>(ones.data(), 3)), BadLength);
    CHECK_THROWS_AS(dft(std::span<const double>()), BadLength);
}

TEST_CASE("inverse transform undoes the transform") {
    Spectrum spectrum;
    spectrum.t = 2;
    spectrum.values = {{4, 0}, {0, 0}, {0, 0}, {0, 0}};
    const auto signal = idft(spectrum);
    for (const auto& v : signal) CHECK(close(v, 1.0));

    const DistanceVector z = z_0121();
    const auto round_trip = idft(dft(z));
    for (std::size_t j = 0; j < 4; ++j)
        CHECK(close(round_trip[j], static_cast<double>(z.values[j])));

    // backward transform of a real signal is the scaled conjugate spectrum
    const DistanceVector z6 = z_121212();
    const Spectrum forward = dft(z6);
    const auto backward = idft(Spectrum{
        3, std::vector<std::complex<double>>(z6.values.begin(), z6.values.end())});
    for (std::size_t k = 0; k < 6; ++k)
        CHECK(close(backward[k], std::conj(forward.values[k]) / 6.0));
}

TEST_CASE("circulant application by index shifts") {
    const std::vector<long long> v{0, 1, 2, 1};
    const CirculantSpec shift{{{1, 1}}};
    CHECK(circulant_apply(shift, std::span<const long long>(v)) ==
          std::vector<long long>{1, 0, 1, 2});

    const CirculantSpec identity{{{0, 1}}};
    CHECK(circulant_apply(identity, std::span<const long long>(v)) == v);

    const CirculantSpec second{{{0, 2}, {-2, -1}, {2, -1}}};
    CHECK(circulant_apply(second, std::span<const long long>(v)) ==
          std::vector<long long>{-4, 0, 4, 0});
}

TEST_CASE("exact cardinality forms on anchored signals") {
    CHECK(committee_card_quadratic(z_0121(), ExactCardinalityForm::ShiftTwoForm) == 1);
    CHECK(committee_card_quadratic(z_121212(), ExactCardinalityForm::ShiftTwoForm) == 3);
    CHECK(committee_card_quadratic(z_012321(), ExactCardinalityForm::AbsGap) == 1);
    for (const auto form : kExactForms) {
        CHECK(committee_card_quadratic(z_0121(), form) == 1);
        CHECK(committee_card_quadratic(z_121212(), form) == 3);
        CHECK(committee_card_quadratic(z_012321(), form) == 1);
    }
}

TEST_CASE("non-integer quadratic values are rejected") {
    DistanceVector broken;
    broken.t = 2;
    broken.values = {1, 0, 0, 0};  // not a distance vector
    CHECK_THROWS_AS(
        committee_card_quadratic(broken, ExactCardinalityForm::ShiftTwoForm),
        NonIntegerResult);
}

TEST_CASE("spectral cardinality forms round to the exact value") {
    CHECK(committee_card_spectral(z_0121(), SpectralCardinalityForm::SineOddHalf) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(committee_card_spectral(z_121212(), SpectralCardinalityForm::SineOddHalf) ==
          doctest::Approx(3.0).epsilon(1e-9));
    CHECK(committee_card_spectral(z_012321(), SpectralCardinalityForm::SineOddHalf) ==
          doctest::Approx(1.0).epsilon(1e-9));
    for (const auto form : kSpectralForms) {
        CHECK(committee_card_spectral(z_0121(), form) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(committee_card_spectral(z_121212(), form) ==
              doctest::Approx(3.0).epsilon(1e-9));
    }
}

TEST_CASE("all fourteen routes agree on every cycle of small hypercubes") {
    std::mt19937_64 rng(5150);
    for (int t = 2; t <= 5; ++t) {
        const TopeSet cube = hypercube(t);
        for (const auto& cycle : find_symmetric_cycles(cube)) {
            const Tope base = testutil::random_tope(rng, t);
            const DistanceVector z = distance_vector(cycle, base);
            const long long expected =
                static_cast<long long>(min_elements(cycle, base).cardinality());
            for (const auto form : kExactForms)
                CHECK(committee_card_quadratic(z, form) == expected);
            for (const auto form : kSpectralForms) {
                const double value = committee_card_spectral(z, form);
                CHECK(std::llround(value) == expected);
                CHECK(std::abs(value - static_cast<double>(expected)) < 1e-6);
            }
        }
    }
}

TEST_CASE("closed-form spectrum equals the naive transform") {
    for (const DistanceVector& z : {z_0121(), z_121212(), z_012321()}) {
        const Spectrum direct = dft(z);
        const Spectrum closed = spectrum_closed_form(z);
        for (std::size_t k = 0; k < z.length(); ++k)
            CHECK(close(direct.values[k], closed.values[k], spectrum_tolerance(z.t)));
        CHECK(close(closed.values[0], static_cast<double>(z.t) * z.t));
    }
    // odd-t middle bin is the real alternating-sum value
    const Spectrum closed = spectrum_closed_form(z_121212());
    CHECK(close(closed.values[3], -3.0));
    CHECK(closed.values[3].imag() == 0.0);
}

TEST_CASE("first row of the second-difference circulant transforms to 4 sin^2") {
    const IdentityReport t2 = verify_b_spectrum(2);
    CHECK(t2.pass());
    const CirculantSpec spec{{{0, 2}, {-2, -1}, {2, -1}}};
    CHECK(circulant_first_row(spec, 4) == std::vector<long long>{2, 0, -2, 0});
    CHECK(circulant_first_row(spec, 6) == std::vector<long long>{2, 0, -1, 0, -1, 0});
    for (int t = 2; t <= 8; ++t) CHECK(verify_b_spectrum(t).pass());

    // spot values: t=4 gives 4 sin^2(pi/2) = 4 at bin 2
    const std::vector<long long> row = circulant_first_row(spec, 8);
    const Spectrum spectrum = dft(std::span<const long long>(row));
    CHECK(close(spectrum.values[2], 4.0, 1e-9));
    CHECK(close(spectrum.values[0], 0.0, 1e-9));
}

TEST_CASE("the fourier matrix diagonalizes the second-difference circulant") {
    for (int t = 2; t <= 6; ++t) {
        const IdentityReport report = verify_diagonalization(t);
        CHECK(report.pass());
        CHECK(report.checks.front().residual < 1e-9);
    }
    const DistanceVector z = z_0121();
    const IdentityReport with_value = verify_diagonalization(2, 1e-9, &z);
    CHECK(with_value.pass());
    // the diagonalized form evaluates to the exact cardinality 1
    CHECK(with_value.checks[1].value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("basic sums hold exactly") {
    for (const DistanceVector& z : {z_0121(), z_121212(), z_012321()}) {
        const IdentityReport report = basic_sums(z);
        CHECK(report.pass());
    }
    CHECK(basic_sums(z_0121()).checks[0].value == 4.0);
    CHECK(basic_sums(z_012321()).checks[0].value == 9.0);
    CHECK(basic_sums(z_121212()).checks[1].value == 3.0);
}

TEST_CASE("translation leaves spectral magnitudes alone") {
    const DistanceVector z = z_0121();
    CHECK(translation_invariance(z, 0).pass());
    CHECK(translation_invariance(z, 1).pass());
    CHECK(translation_invariance(z, 4).pass());
    CHECK(translation_invariance(z, -3).pass());

    const Spectrum spectrum = dft(z);
    const std::vector<double> magnitudes{4, 2, 0, 2};
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(std::abs(spectrum.values[k]) == doctest::Approx(magnitudes[k]).epsilon(1e-9));
}

TEST_CASE("spectrum structure of distance vectors") {
    std::mt19937_64 rng(31);
    for (int t = 2; t <= 5; ++t) {
        for (const auto& cycle : find_symmetric_cycles(hypercube(t), 8)) {
            const DistanceVector z =
                distance_vector(cycle, testutil::random_tope(rng, t));
            CHECK(spectrum_structure(z).pass());
        }
    }
}

TEST_CASE("decomposition cardinality from the spectrum") {
    const SymmetricCycle hexagon =
        *build_cycle(hypercube(3), parse_tope("-++"), {3, 1, 2});
    const DistanceVector z = distance_vector(hexagon, parse_tope("---"));
    CHECK(z.values == std::vector<long long>{2, 1, 2, 1, 2, 1});
    CHECK(decomposition_card_spectral(z) == doctest::Approx(3.0).epsilon(1e-9));

    const DistanceVector z_basis = distance_vector(hexagon, hexagon.vertices[0]);
    CHECK(decomposition_card_spectral(z_basis) == doctest::Approx(1.0).epsilon(1e-9));

    const SymmetricCycle prefix = *build_cycle(hypercube(3), positive_tope(3), {1, 2, 3});
    const DistanceVector z_plus = distance_vector(prefix, positive_tope(3));
    CHECK(decomposition_card_spectral(z_plus) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("two-cycle analysis on the anchored pair") {
    const TwoCycleReport report = two_cycle_analysis(z_012321(), z_121212());
    CHECK(report.difference == std::vector<long long>{1, 1, -1, -1, -1, 1});
    CHECK(report.total == std::vector<long long>{1, 3, 3, 5, 3, 3});
    CHECK(report.difference_spectrum.magnitude_squared(1) ==
          doctest::Approx(16.0).epsilon(1e-9));
    CHECK(report.total_spectrum.magnitude_squared(1) == doctest::Approx(16.0).epsilon(1e-9));
    CHECK(close(report.total_spectrum.values[0], 18.0, 1e-9));
    CHECK(report.exact_combined == 4);
    CHECK(report.spectral_combined == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(report.pass());
}

TEST_CASE("two-cycle analysis of a cycle against itself") {
    const TwoCycleReport report = two_cycle_analysis(z_012321(), z_012321());
    for (const long long e : report.difference) CHECK(e == 0);
    for (std::size_t k = 0; k < 6; ++k)
        CHECK(std::abs(report.difference_spectrum.values[k]) < 1e-12);
    CHECK(report.exact_combined == 2);
    CHECK(report.pass());
    CHECK_THROWS_AS(two_cycle_analysis(z_0121(), z_012321()), LengthMismatch);
}
