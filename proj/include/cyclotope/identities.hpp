#pragma once

// Committee-cardinality identities, evaluated along two independent routes:
// exact integer circulant quadratic forms (the source of truth) and
// floating-point spectral sums that must round back to the exact value.

#include <optional>
#include <string>

#include "cyclotope/dft.hpp"

namespace cyclotope {

inline constexpr double kDefaultTolerance = 1e-6;

// Componentwise tolerance for comparing a closed-form spectrum against the
// naive transform; scales with the dominant bin z^(0) = t^2.
inline double spectrum_tolerance(int t) { return 1e-9 * static_cast<double>(t) * t; }

// Exact integer routes to the committee cardinality |min V(R)|. All eight
// agree on every valid distance vector; they differ purely in how the
// quadratic form is organized.
enum class ExactCardinalityForm {
    AbsGap,           // t - 1/4 sum_j |z(j+1) - z(j-1)|
    SquaredGap,       // t - 1/8 sum_j (z(j+1) - z(j-1))^2
    ProductGap,       // t - 1/4 sum_j (z(j)^2 - z(j-1) z(j+1))
    SecondDifference, // 1/8 sum_j (z(j-1) + z(j+1) - 2 z(j))^2
    ShiftTwoForm,     // t - 1/8 z (2I - C^-2 - C^2) z^T
    SmoothedForm,     // 1/8 z (6I - 4C^-1 - 4C + C^-2 + C^2) z^T
    MixedForm,        // t/2 + 1/8 z (2I - 2C^-1 - 2C + C^-2 + C^2) z^T
    CrossForm,        // 3t/4 - 1/8 z (C^-1 + C - C^-2 - C^2) z^T
};

inline constexpr ExactCardinalityForm kExactForms[] = {
    ExactCardinalityForm::AbsGap,          ExactCardinalityForm::SquaredGap,
    ExactCardinalityForm::ProductGap,      ExactCardinalityForm::SecondDifference,
    ExactCardinalityForm::ShiftTwoForm,    ExactCardinalityForm::SmoothedForm,
    ExactCardinalityForm::MixedForm,       ExactCardinalityForm::CrossForm,
};

const char* to_string(ExactCardinalityForm form);

// Evaluates the selected form in exact integer arithmetic; throws
// NonIntegerResult if the value fails to be a nonnegative integer.
long long committee_card_quadratic(const DistanceVector& z, ExactCardinalityForm form);

// Spectral routes through |z^(k)|^2 with trigonometric weights.
enum class SpectralCardinalityForm {
    SineFull,     // t - 1/(4t) sum_k |z^(k)|^2 sin^2(pi k / t)
    CosineEnergy, // t - |z|^2/2 + 1/(4t) sum_k |z^(k)|^2 cos^2(pi k / t)
    SineOddHalf,  // t - 1/(2t) sum_{k odd, k < t} |z^(k)|^2 sin^2(pi k / t)
    CosineQuadA,  // 1/(4t) sum_k |z^(k)|^2 (cos^2 - 2 cos + 1)
    CosineQuadB,  // t/2 + 1/(4t) sum_k |z^(k)|^2 (cos^2 - cos)
    CosineQuadC,  // 3t/4 + 1/(8t) sum_k |z^(k)|^2 (2 cos^2 - cos - 1)
};

inline constexpr SpectralCardinalityForm kSpectralForms[] = {
    SpectralCardinalityForm::SineFull,    SpectralCardinalityForm::CosineEnergy,
    SpectralCardinalityForm::SineOddHalf, SpectralCardinalityForm::CosineQuadA,
    SpectralCardinalityForm::CosineQuadB, SpectralCardinalityForm::CosineQuadC,
};

const char* to_string(SpectralCardinalityForm form);

double committee_card_spectral(const DistanceVector& z, SpectralCardinalityForm form);

// Same odd-k sine sum applied to the distance vector of a cycle relative to
// an arbitrary tope; rounds to the decomposition cardinality |Q(T, R)|.
double decomposition_card_spectral(const DistanceVector& z_tope);

// Closed-form spectrum from z(0..t-1) alone: t^2 at bin 0, zero at other
// even bins, a resolvent expression at odd bins, and a purely real value at
// bin t when t is odd.
Spectrum spectrum_closed_form(const DistanceVector& z);

struct IdentityCheck {
    std::string name;
    double value = 0.0;
    double reference = 0.0;
    double residual = 0.0;
    bool pass = false;
};

struct IdentityReport {
    std::string name;
    double tolerance = kDefaultTolerance;
    std::vector<IdentityCheck> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(const std::string& check_name, double value, double reference);
    void add_exact(const std::string& check_name, long long value, long long reference);
};

// z . i^T = t^2 and z (I - C) z^T = t, both in exact integers.
IdentityReport basic_sums(const DistanceVector& z);

// DFT of the first row of 2I - C^-2 - C^2 against 4 sin^2(pi k / t). The
// row is assembled by coefficient accumulation, which keeps the t = 2
// overlap of C^2 and C^-2 correct.
IdentityReport verify_b_spectrum(int t, double tolerance = kDefaultTolerance);

// Dense-matrix check of 2I - C^-2 - C^2 = W^-1 4 diag(sin^2(pi k/t)) W,
// plus, when a distance vector is supplied, the diagonalized cardinality
// t - (1/2) zv . diag(sin^2) . z^^T against the exact ShiftTwoForm value.
IdentityReport verify_diagonalization(int t, double tolerance = 1e-9,
                                      const DistanceVector* z = nullptr);

// |(z C^j)^(k)| = |z^(k)| for all k >= 1.
IdentityReport translation_invariance(const DistanceVector& z, long long shift,
                                      double tolerance = kDefaultTolerance);

// Spectrum structure shared by every distance vector: z^(0) = t^2, even
// bins vanish, conjugate symmetry, Plancherel.
IdentityReport spectrum_structure(const DistanceVector& z, double tolerance = kDefaultTolerance);

// Difference/sum analysis of two distance vectors over the same ground set:
// e = z'' - z', m = z'' + z', their spectra, the even-bin and odd-t special
// values, and the combined-cardinality identity.
struct TwoCycleReport {
    int t = 0;
    std::vector<long long> difference;  // e
    std::vector<long long> total;       // m
    Spectrum difference_spectrum;
    Spectrum total_spectrum;
    long long exact_combined = 0;       // |min V(R')| + |min V(R'')|, exact route
    double spectral_combined = 0.0;
    IdentityReport identities;

    bool pass() const { return identities.pass(); }
};

TwoCycleReport two_cycle_analysis(const DistanceVector& z_first, const DistanceVector& z_second,
                                  double tolerance = kDefaultTolerance);

}  // namespace cyclotope
