#include "cyclotope/arrangement.hpp"

#include <algorithm>

#include "cyclotope/errors.hpp"

namespace cyclotope {

namespace {

// Scale a row so its first nonzero coefficient is +-1; rows then compare
// canonically for deduplication. Scaling by a positive factor keeps >=.
void normalize_row(std::pair<RatVector, Rational>& row) {
    for (const auto& c : row.first) {
        if (c != Rational(0)) {
            Rational scale = c > Rational(0) ? c : -c;
            for (auto& v : row.first) v /= scale;
            row.second /= scale;
            return;
        }
    }
}

bool row_less(const std::pair<RatVector, Rational>& a, const std::pair<RatVector, Rational>& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
}

}  // namespace

bool fourier_motzkin_feasible(InequalitySystem system) {
    auto rows = std::move(system.rows);
    for (int var = 0; var < system.dim; ++var) {
        std::vector<std::pair<RatVector, Rational>> lower, upper, rest;
        for (auto& row : rows) {
            const Rational& c = row.first[static_cast<std::size_t>(var)];
            if (c > Rational(0))
                lower.push_back(std::move(row));
            else if (c < Rational(0))
                upper.push_back(std::move(row));
            else
                rest.push_back(std::move(row));
        }
        // a pair (lower, upper) combines into a bound-free consequence;
        // one-sided rows are always satisfiable and drop out
        for (auto& row : lower) {
            const Rational scale = row.first[static_cast<std::size_t>(var)];
            for (auto& v : row.first) v /= scale;
            row.second /= scale;
        }
        for (auto& row : upper) {
            const Rational scale = -row.first[static_cast<std::size_t>(var)];
            for (auto& v : row.first) v /= scale;
            row.second /= scale;
        }
        for (const auto& lo : lower) {
            for (const auto& up : upper) {
                std::pair<RatVector, Rational> combined;
                combined.first.resize(static_cast<std::size_t>(system.dim));
                for (int c = 0; c < system.dim; ++c)
                    combined.first[static_cast<std::size_t>(c)] =
                        lo.first[static_cast<std::size_t>(c)] +
                        up.first[static_cast<std::size_t>(c)];
                combined.second = lo.second + up.second;
                combined.first[static_cast<std::size_t>(var)] = Rational(0);

                bool all_zero = true;
                for (const auto& v : combined.first)
                    if (v != Rational(0)) {
                        all_zero = false;
                        break;
                    }
                if (all_zero) {
                    if (combined.second > Rational(0)) return false;  // 0 >= positive
                    continue;
                }
                normalize_row(combined);
                rest.push_back(std::move(combined));
            }
        }
        std::sort(rest.begin(), rest.end(), row_less);
        rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
        rows = std::move(rest);
    }
    for (const auto& row : rows)
        if (row.second > Rational(0)) return false;
    return true;
}

bool sign_system_feasible(const Arrangement& a, const Tope& signs) {
    InequalitySystem system;
    system.dim = a.d;
    system.rows.reserve(a.vectors.size());
    for (std::size_t i = 0; i < a.vectors.size(); ++i) {
        RatVector row = a.vectors[i];
        if (signs.sign(static_cast<int>(i)) < 0)
            for (auto& v : row) v = -v;
        system.rows.emplace_back(std::move(row), Rational(1));
    }
    return fourier_motzkin_feasible(std::move(system));
}

namespace {

bool is_zero_row(const RatVector& row) {
    return std::all_of(row.begin(), row.end(), [](const Rational& v) { return v == Rational(0); });
}

// nonzero rows are proportional (either sign) iff every 2x2 minor vanishes
bool proportional(const RatVector& a, const RatVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

}  // namespace

TopeSet topes_from_arrangement(const Arrangement& a) {
    const int t = a.t();
    if (t < 1) throw EmptyInput();
    if (t > 14) throw BadLength(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        if (static_cast<int>(a.vectors[static_cast<std::size_t>(i)].size()) != a.d)
            throw LengthMismatch(static_cast<std::size_t>(a.d),
                                 a.vectors[static_cast<std::size_t>(i)].size());
        if (is_zero_row(a.vectors[static_cast<std::size_t>(i)])) throw Loop(i + 1);
    }
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            if (proportional(a.vectors[static_cast<std::size_t>(i)],
                             a.vectors[static_cast<std::size_t>(j)]))
                throw NotSimple(i + 1, j + 1);

    if (!sign_system_feasible(a, positive_tope(t))) throw NotAcyclic();

    // Feasibility is symmetric under x -> -x, so only sign vectors with +1
    // in the first coordinate are tested; the mirror image comes for free.
    std::vector<Tope> topes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (t - 1)); ++mask) {
        const Tope candidate = tope_from_mask(t, mask << 1);
        if (sign_system_feasible(a, candidate)) {
            topes.push_back(candidate);
            topes.push_back(negate(candidate));
        }
    }
    return TopeSet::from_topes(std::move(topes));
}

}  // namespace cyclotope
