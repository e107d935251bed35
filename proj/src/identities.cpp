#include "cyclotope/identities.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

namespace cyclotope {

const char* to_string(ExactCardinalityForm form) {
    switch (form) {
        case ExactCardinalityForm::AbsGap: return "abs_gap";
        case ExactCardinalityForm::SquaredGap: return "squared_gap";
        case ExactCardinalityForm::ProductGap: return "product_gap";
        case ExactCardinalityForm::SecondDifference: return "second_difference";
        case ExactCardinalityForm::ShiftTwoForm: return "shift_two_form";
        case ExactCardinalityForm::SmoothedForm: return "smoothed_form";
        case ExactCardinalityForm::MixedForm: return "mixed_form";
        case ExactCardinalityForm::CrossForm: return "cross_form";
    }
    return "?";
}

const char* to_string(SpectralCardinalityForm form) {
    switch (form) {
        case SpectralCardinalityForm::SineFull: return "sine_full";
        case SpectralCardinalityForm::CosineEnergy: return "cosine_energy";
        case SpectralCardinalityForm::SineOddHalf: return "sine_odd_half";
        case SpectralCardinalityForm::CosineQuadA: return "cosine_quad_a";
        case SpectralCardinalityForm::CosineQuadB: return "cosine_quad_b";
        case SpectralCardinalityForm::CosineQuadC: return "cosine_quad_c";
    }
    return "?";
}

namespace {

long long exact_eighths(long long numerator_in_eighths, ExactCardinalityForm form) {
    if (numerator_in_eighths % 8 != 0)
        throw NonIntegerResult(std::string(to_string(form)) + " numerator " +
                               std::to_string(numerator_in_eighths));
    const long long value = numerator_in_eighths / 8;
    if (value < 0)
        throw NonIntegerResult(std::string(to_string(form)) + " is negative: " +
                               std::to_string(value));
    return value;
}

}  // namespace

long long committee_card_quadratic(const DistanceVector& z, ExactCardinalityForm form) {
    const long long t = z.t;
    const long long n = static_cast<long long>(z.length());
    const std::span<const long long> v(z.values);
    auto at = [&](long long j) {
        long long r = j % n;
        if (r < 0) r += n;
        return z.values[static_cast<std::size_t>(r)];
    };

    switch (form) {
        case ExactCardinalityForm::AbsGap: {
            long long sum = 0;
            for (long long j = 0; j < n; ++j) sum += std::llabs(at(j + 1) - at(j - 1));
            return exact_eighths(8 * t - 2 * sum, form);
        }
        case ExactCardinalityForm::SquaredGap: {
            long long sum = 0;
            for (long long j = 0; j < n; ++j) {
                const long long gap = at(j + 1) - at(j - 1);
                sum += gap * gap;
            }
            return exact_eighths(8 * t - sum, form);
        }
        case ExactCardinalityForm::ProductGap: {
            long long sum = 0;
            for (long long j = 0; j < n; ++j) sum += at(j) * at(j) - at(j - 1) * at(j + 1);
            return exact_eighths(8 * t - 2 * sum, form);
        }
        case ExactCardinalityForm::SecondDifference: {
            long long sum = 0;
            for (long long j = 0; j < n; ++j) {
                const long long second = at(j - 1) + at(j + 1) - 2 * at(j);
                sum += second * second;
            }
            return exact_eighths(sum, form);
        }
        case ExactCardinalityForm::ShiftTwoForm: {
            const CirculantSpec spec{{{0, 2}, {-2, -1}, {2, -1}}};
            return exact_eighths(8 * t - circulant_quadratic_form(spec, v), form);
        }
        case ExactCardinalityForm::SmoothedForm: {
            const CirculantSpec spec{{{0, 6}, {-1, -4}, {1, -4}, {-2, 1}, {2, 1}}};
            return exact_eighths(circulant_quadratic_form(spec, v), form);
        }
        case ExactCardinalityForm::MixedForm: {
            const CirculantSpec spec{{{0, 2}, {-1, -2}, {1, -2}, {-2, 1}, {2, 1}}};
            return exact_eighths(4 * t + circulant_quadratic_form(spec, v), form);
        }
        case ExactCardinalityForm::CrossForm: {
            const CirculantSpec spec{{{-1, 1}, {1, 1}, {-2, -1}, {2, -1}}};
            return exact_eighths(6 * t - circulant_quadratic_form(spec, v), form);
        }
    }
    throw NonIntegerResult("unknown form");
}

double committee_card_spectral(const DistanceVector& z, SpectralCardinalityForm form) {
    const double t = static_cast<double>(z.t);
    const std::size_t n = z.length();
    const Spectrum spectrum = dft(z);

    auto angle = [&](std::size_t k) { return std::numbers::pi * static_cast<double>(k) / t; };

    switch (form) {
        case SpectralCardinalityForm::SineFull: {
            double sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double s = std::sin(angle(k));
                sum += spectrum.magnitude_squared(k) * s * s;
            }
            return t - sum / (4.0 * t);
        }
        case SpectralCardinalityForm::CosineEnergy: {
            double energy = 0.0;
            for (const long long value : z.values)
                energy += static_cast<double>(value) * static_cast<double>(value);
            double sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double c = std::cos(angle(k));
                sum += spectrum.magnitude_squared(k) * c * c;
            }
            return t - energy / 2.0 + sum / (4.0 * t);
        }
        case SpectralCardinalityForm::SineOddHalf: {
            double sum = 0.0;
            for (std::size_t k = 1; k + 1 <= static_cast<std::size_t>(z.t); k += 2) {
                const double s = std::sin(angle(k));
                sum += spectrum.magnitude_squared(k) * s * s;
            }
            return t - sum / (2.0 * t);
        }
        case SpectralCardinalityForm::CosineQuadA: {
            double sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double c = std::cos(angle(k));
                sum += spectrum.magnitude_squared(k) * (c * c - 2.0 * c + 1.0);
            }
            return sum / (4.0 * t);
        }
        case SpectralCardinalityForm::CosineQuadB: {
            double sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double c = std::cos(angle(k));
                sum += spectrum.magnitude_squared(k) * (c * c - c);
            }
            return t / 2.0 + sum / (4.0 * t);
        }
        case SpectralCardinalityForm::CosineQuadC: {
            double sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double c = std::cos(angle(k));
                sum += spectrum.magnitude_squared(k) * (2.0 * c * c - c - 1.0);
            }
            return 3.0 * t / 4.0 + sum / (8.0 * t);
        }
    }
    return 0.0;
}

double decomposition_card_spectral(const DistanceVector& z_tope) {
    return committee_card_spectral(z_tope, SpectralCardinalityForm::SineOddHalf);
}

Spectrum spectrum_closed_form(const DistanceVector& z) {
    const int t = z.t;
    const std::size_t n = z.length();
    Spectrum spectrum;
    spectrum.t = t;
    spectrum.values.assign(n, 0.0);

    spectrum.values[0] = static_cast<double>(t) * t;
    for (std::size_t k = 1; k < n; ++k) {
        if (k % 2 == 0) continue;  // even bins vanish; the resolvent below is singular there
        if (t % 2 == 1 && k == static_cast<std::size_t>(t)) {
            long long alternating = 0;
            for (int j = 0; j < t; ++j)
                alternating += (j % 2 == 0 ? 1 : -1) * z.values[static_cast<std::size_t>(j)];
            spectrum.values[k] = static_cast<double>(-t + 2 * alternating);
            continue;
        }
        const std::complex<double> root =
            std::polar(1.0, -std::numbers::pi * static_cast<double>(k) / t);
        std::complex<double> sum = 0.0;
        std::complex<double> power = 1.0;
        for (int j = 0; j < t; ++j) {
            sum += static_cast<double>(z.values[static_cast<std::size_t>(j)]) * power;
            power *= root;
        }
        spectrum.values[k] = 2.0 * (-static_cast<double>(t) / (1.0 - root) + sum);
    }
    return spectrum;
}

void IdentityReport::add(const std::string& check_name, double value, double reference) {
    IdentityCheck check;
    check.name = check_name;
    check.value = value;
    check.reference = reference;
    check.residual = std::abs(value - reference);
    check.pass = check.residual <= tolerance;
    checks.push_back(std::move(check));
}

void IdentityReport::add_exact(const std::string& check_name, long long value, long long reference) {
    IdentityCheck check;
    check.name = check_name;
    check.value = static_cast<double>(value);
    check.reference = static_cast<double>(reference);
    check.residual = static_cast<double>(std::llabs(value - reference));
    check.pass = value == reference;
    checks.push_back(std::move(check));
}

IdentityReport basic_sums(const DistanceVector& z) {
    IdentityReport report;
    report.name = "basic_sums";
    report.tolerance = 0.0;

    long long sum = 0;
    for (const long long value : z.values) sum += value;
    report.add_exact("component_sum", sum, static_cast<long long>(z.t) * z.t);

    const CirculantSpec spec{{{0, 1}, {1, -1}}};
    report.add_exact("gradient_form", circulant_quadratic_form(spec, z.values), z.t);
    return report;
}

IdentityReport verify_b_spectrum(int t, double tolerance) {
    if (t < 2) throw BadLength(static_cast<std::size_t>(t));
    IdentityReport report;
    report.name = "b_spectrum";
    report.tolerance = tolerance;

    const CirculantSpec spec{{{0, 2}, {-2, -1}, {2, -1}}};
    const std::vector<long long> row = circulant_first_row(spec, 2 * static_cast<std::size_t>(t));
    const Spectrum spectrum = dft(std::span<const long long>(row));

    double max_residual = 0.0;
    for (std::size_t k = 0; k < spectrum.length(); ++k) {
        const double s = std::sin(std::numbers::pi * static_cast<double>(k) / t);
        const std::complex<double> expected(4.0 * s * s, 0.0);
        max_residual = std::max(max_residual, std::abs(spectrum.values[k] - expected));
    }
    report.add("four_sine_squared_max_residual", max_residual, 0.0);
    return report;
}

IdentityReport verify_diagonalization(int t, double tolerance, const DistanceVector* z) {
    if (t < 2) throw BadLength(static_cast<std::size_t>(t));
    IdentityReport report;
    report.name = "diagonalization";
    report.tolerance = tolerance;

    const std::size_t n = 2 * static_cast<std::size_t>(t);
    const auto fourier = [&](std::size_t m, std::size_t k) {
        const long long q = static_cast<long long>(m) * static_cast<long long>(k);
        return std::polar(1.0, -std::numbers::pi * static_cast<double>(q % (2 * t)) / t);
    };

    // left side: 2I - C^-2 - C^2 as a dense matrix
    const CirculantSpec spec{{{0, 2}, {-2, -1}, {2, -1}}};
    const std::vector<long long> row = circulant_first_row(spec, n);
    double max_residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // circulant entry (i, j) = row[(j - i) mod n]
            const double lhs = static_cast<double>(row[(j + n - i) % n]);
            // right side entry: (1/2t) sum_k conj(W(i,k)) 4 sin^2(pi k / t) W(k,j)
            std::complex<double> rhs = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double s = std::sin(std::numbers::pi * static_cast<double>(k) / t);
                rhs += std::conj(fourier(i, k)) * (4.0 * s * s) * fourier(k, j);
            }
            rhs /= static_cast<double>(n);
            max_residual = std::max(max_residual, std::abs(rhs - lhs));
        }
    }
    report.add("matrix_max_residual", max_residual, 0.0);

    if (z) {
        const Spectrum forward = dft(*z);
        // zv = z W^-1, the backward transform of z taken as a row vector
        const std::vector<std::complex<double>> backward =
            idft(Spectrum{z->t, std::vector<std::complex<double>>(z->values.begin(),
                                                                  z->values.end())});
        std::complex<double> quad = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double s = std::sin(std::numbers::pi * static_cast<double>(k) / t);
            quad += backward[k] * (s * s) * forward.values[k];
        }
        const std::complex<double> value = static_cast<double>(t) - 0.5 * quad;
        const long long exact =
            committee_card_quadratic(*z, ExactCardinalityForm::ShiftTwoForm);
        IdentityReport value_report;
        value_report.tolerance = kDefaultTolerance;
        value_report.add("diagonalized_cardinality", value.real(), static_cast<double>(exact));
        value_report.add("diagonalized_cardinality_imag", value.imag(), 0.0);
        for (auto& check : value_report.checks) report.checks.push_back(std::move(check));
    }
    return report;
}

IdentityReport translation_invariance(const DistanceVector& z, long long shift,
                                      double tolerance) {
    IdentityReport report;
    report.name = "translation_invariance_shift_" + std::to_string(shift);
    report.tolerance = tolerance;

    const long long n = static_cast<long long>(z.length());
    std::vector<long long> shifted(z.length());
    for (long long j = 0; j < n; ++j) {
        long long source = (j - shift) % n;
        if (source < 0) source += n;
        shifted[static_cast<std::size_t>(j)] = z.values[static_cast<std::size_t>(source)];
    }
    const Spectrum original = dft(z);
    const Spectrum moved = dft(std::span<const long long>(shifted));
    double max_residual = 0.0;
    for (std::size_t k = 1; k < z.length(); ++k)
        max_residual = std::max(
            max_residual, std::abs(std::abs(moved.values[k]) - std::abs(original.values[k])));
    report.add("magnitude_max_residual", max_residual, 0.0);
    return report;
}

IdentityReport spectrum_structure(const DistanceVector& z, double tolerance) {
    IdentityReport report;
    report.name = "spectrum_structure";
    report.tolerance = tolerance;

    const Spectrum spectrum = dft(z);
    const std::size_t n = z.length();

    report.add("dc_bin", std::abs(spectrum.values[0] -
                                  std::complex<double>(static_cast<double>(z.t) * z.t, 0.0)),
               0.0);

    double even_max = 0.0;
    for (std::size_t k = 2; k < n; k += 2)
        even_max = std::max(even_max, std::abs(spectrum.values[k]));
    report.add("even_bins_vanish", even_max, 0.0);

    double conj_max = 0.0;
    for (std::size_t k = 1; k < n; ++k)
        conj_max = std::max(conj_max,
                            std::abs(spectrum.values[k] - std::conj(spectrum.values[n - k])));
    report.add("conjugate_symmetry", conj_max, 0.0);

    double energy = 0.0;
    for (const long long value : z.values)
        energy += static_cast<double>(value) * static_cast<double>(value);
    double spectral_energy = 0.0;
    for (std::size_t k = 0; k < n; ++k) spectral_energy += spectrum.magnitude_squared(k);
    report.add("plancherel", spectral_energy, static_cast<double>(n) * energy);
    return report;
}

TwoCycleReport two_cycle_analysis(const DistanceVector& z_first, const DistanceVector& z_second,
                                  double tolerance) {
    if (z_first.length() != z_second.length())
        throw LengthMismatch(z_first.length(), z_second.length());
    const int t = z_first.t;
    const std::size_t n = z_first.length();

    TwoCycleReport report;
    report.t = t;
    report.identities.name = "two_cycle";
    report.identities.tolerance = tolerance;

    report.difference.resize(n);
    report.total.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        report.difference[j] = z_second.values[j] - z_first.values[j];
        report.total[j] = z_second.values[j] + z_first.values[j];
    }

    // antipodal structure of e and m
    long long worst_diff = 0, worst_total = 0;
    for (int k = 0; k < t; ++k) {
        worst_diff = std::max(worst_diff,
                              std::llabs(report.difference[static_cast<std::size_t>(k)] +
                                         report.difference[static_cast<std::size_t>(k + t)]));
        worst_total = std::max(worst_total,
                               std::llabs(report.total[static_cast<std::size_t>(k)] +
                                          report.total[static_cast<std::size_t>(k + t)] - 2 * t));
    }
    report.identities.add_exact("difference_antipodal_sums", worst_diff, 0);
    report.identities.add_exact("total_antipodal_sums", worst_total, 0);

    report.difference_spectrum = dft(std::span<const long long>(report.difference));
    report.total_spectrum = dft(std::span<const long long>(report.total));

    double diff_even_max = 0.0;
    for (std::size_t k = 0; k < n; k += 2)
        diff_even_max = std::max(diff_even_max, std::abs(report.difference_spectrum.values[k]));
    report.identities.add("difference_even_bins_vanish", diff_even_max, 0.0);

    report.identities.add("total_dc_bin",
                          std::abs(report.total_spectrum.values[0] -
                                   std::complex<double>(2.0 * t * t, 0.0)),
                          0.0);
    double total_even_max = 0.0;
    for (std::size_t k = 2; k < n; k += 2)
        total_even_max = std::max(total_even_max, std::abs(report.total_spectrum.values[k]));
    report.identities.add("total_even_bins_vanish", total_even_max, 0.0);

    if (t % 2 == 1) {
        long long diff_alternating = 0, total_alternating = 0;
        for (int j = 0; j < t; ++j) {
            const long long sign = (j % 2 == 0) ? 1 : -1;
            diff_alternating += sign * report.difference[static_cast<std::size_t>(j)];
            total_alternating += sign * report.total[static_cast<std::size_t>(j)];
        }
        report.identities.add(
            "difference_middle_bin",
            std::abs(report.difference_spectrum.values[static_cast<std::size_t>(t)] -
                     std::complex<double>(static_cast<double>(2 * diff_alternating), 0.0)),
            0.0);
        report.identities.add(
            "total_middle_bin",
            std::abs(report.total_spectrum.values[static_cast<std::size_t>(t)] -
                     std::complex<double>(static_cast<double>(2 * (-t + total_alternating)), 0.0)),
            0.0);
    }

    report.exact_combined =
        committee_card_quadratic(z_first, ExactCardinalityForm::AbsGap) +
        committee_card_quadratic(z_second, ExactCardinalityForm::AbsGap);

    double sum = 0.0;
    for (std::size_t k = 1; k + 1 <= static_cast<std::size_t>(t); k += 2) {
        const double s = std::sin(std::numbers::pi * static_cast<double>(k) / t);
        sum += (report.difference_spectrum.magnitude_squared(k) +
                report.total_spectrum.magnitude_squared(k)) *
               s * s;
    }
    report.spectral_combined = 2.0 * t - sum / (4.0 * t);
    report.identities.add("combined_cardinality", report.spectral_combined,
                          static_cast<double>(report.exact_combined));
    return report;
}

}  // namespace cyclotope
