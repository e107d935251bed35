#include "cyclotope/dft.hpp"

#include <cmath>
#include <numbers>

namespace cyclotope {

namespace {

// e^{-pi i q / t} with the index reduced exactly before touching doubles
std::complex<double> kernel(long long q, int t) {
    const long long period = 2LL * t;
    long long r = q % period;
    if (r < 0) r += period;
    return std::polar(1.0, -std::numbers::pi * static_cast<double>(r) / t);
}

template <typename T>
Spectrum dft_impl(std::span<const T> signal) {
    if (signal.empty() || signal.size() % 2 != 0) throw BadLength(signal.size());
    Spectrum spectrum;
    spectrum.t = static_cast<int>(signal.size() / 2);
    spectrum.values.resize(signal.size());
    const long long n = static_cast<long long>(signal.size());
    for (long long k = 0; k < n; ++k) {
        std::complex<double> sum = 0.0;
        for (long long j = 0; j < n; ++j)
            sum += std::complex<double>(signal[static_cast<std::size_t>(j)]) *
                   kernel(k * j, spectrum.t);
        spectrum.values[static_cast<std::size_t>(k)] = sum;
    }
    return spectrum;
}

}  // namespace

Spectrum dft(std::span<const double> signal) { return dft_impl(signal); }
Spectrum dft(std::span<const std::complex<double>> signal) { return dft_impl(signal); }

Spectrum dft(std::span<const long long> signal) {
    std::vector<double> values(signal.begin(), signal.end());
    return dft_impl(std::span<const double>(values));
}

Spectrum dft(const DistanceVector& z) {
    return dft(std::span<const long long>(z.values));
}

std::vector<std::complex<double>> idft(const Spectrum& spectrum) {
    const std::size_t n = spectrum.length();
    if (n == 0 || n % 2 != 0) throw BadLength(n);
    std::vector<std::complex<double>> signal(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::complex<double> sum = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            sum += spectrum.values[k] *
                   std::conj(kernel(static_cast<long long>(k * j), spectrum.t));
        signal[j] = sum / static_cast<double>(n);
    }
    return signal;
}

namespace {

template <typename T>
std::vector<T> circulant_apply_impl(const CirculantSpec& spec, std::span<const T> v) {
    if (v.empty() || v.size() % 2 != 0) throw BadLength(v.size());
    const long long n = static_cast<long long>(v.size());
    std::vector<T> result(v.size(), T(0));
    for (const auto& [power, coefficient] : spec.coefficients) {
        if (coefficient == 0) continue;
        for (long long j = 0; j < n; ++j) {
            long long source = (j - power) % n;
            if (source < 0) source += n;
            result[static_cast<std::size_t>(j)] +=
                static_cast<T>(coefficient) * v[static_cast<std::size_t>(source)];
        }
    }
    return result;
}

}  // namespace

std::vector<long long> circulant_apply(const CirculantSpec& spec, std::span<const long long> v) {
    return circulant_apply_impl(spec, v);
}

std::vector<double> circulant_apply(const CirculantSpec& spec, std::span<const double> v) {
    return circulant_apply_impl(spec, v);
}

long long circulant_quadratic_form(const CirculantSpec& spec, std::span<const long long> v) {
    const std::vector<long long> applied = circulant_apply(spec, v);
    long long sum = 0;
    for (std::size_t j = 0; j < v.size(); ++j) sum += applied[j] * v[j];
    return sum;
}

std::vector<long long> circulant_first_row(const CirculantSpec& spec, std::size_t length) {
    std::vector<long long> row(length, 0);
    for (const auto& [power, coefficient] : spec.coefficients) {
        long long col = power % static_cast<long long>(length);
        if (col < 0) col += static_cast<long long>(length);
        row[static_cast<std::size_t>(col)] += coefficient;
    }
    return row;
}

}  // namespace cyclotope
