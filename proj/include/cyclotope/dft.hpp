#pragma once

// Naive discrete Fourier transform on length-2t row vectors with kernel
// e^{-pi i k j / t}, and circulant operators as polynomials in the basic
// cyclic shift C. The naive transform is deliberate: signals here never
// exceed a few dozen samples and the direct kernel keeps the arithmetic
// transparent.

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "cyclotope/cycle.hpp"

namespace cyclotope {

struct Spectrum {
    int t = 0;
    std::vector<std::complex<double>> values;  // 2t bins

    std::size_t length() const { return values.size(); }
    double magnitude_squared(std::size_t k) const { return std::norm(values[k]); }
};

Spectrum dft(std::span<const double> signal);
Spectrum dft(std::span<const std::complex<double>> signal);
Spectrum dft(std::span<const long long> signal);
Spectrum dft(const DistanceVector& z);

// Inverse kernel e^{+pi i k j / t} scaled by 1/(2t).
std::vector<std::complex<double>> idft(const Spectrum& spectrum);

// Finitely supported polynomial  sum_p coefficient[p] * C^p  in the basic
// circulant permutation matrix C; powers wrap modulo the vector length.
struct CirculantSpec {
    std::map<int, long long> coefficients;
};

// Row-vector action: result(j) = sum_p a_p v(j - p mod 2t).
std::vector<long long> circulant_apply(const CirculantSpec& spec, std::span<const long long> v);
std::vector<double> circulant_apply(const CirculantSpec& spec, std::span<const double> v);

// Exact quadratic form  v . (sum_p a_p C^p) . v^T  in integers.
long long circulant_quadratic_form(const CirculantSpec& spec, std::span<const long long> v);

// First row of the circulant, with coefficient collisions accumulated.
std::vector<long long> circulant_first_row(const CirculantSpec& spec, std::size_t length);

}  // namespace cyclotope
