#include "cyclotope/committee.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace cyclotope {

Committee min_elements(const SymmetricCycle& cycle, const Tope& base) {
    const std::size_t n = cycle.length();
    const int t = cycle.t;

    std::vector<std::uint64_t> sep(n);
    std::vector<long long> rank(n);
    for (std::size_t j = 0; j < n; ++j) {
        sep[j] = separation_mask(base, cycle.vertices[j]);
        rank[j] = static_cast<long long>(std::popcount(sep[j]));
    }

    std::vector<int> poset_minima;
    for (std::size_t j = 0; j < n; ++j) {
        bool minimal = true;
        for (std::size_t i = 0; i < n && minimal; ++i) {
            if (i == j) continue;
            if ((sep[i] & ~sep[j]) == 0) minimal = false;  // sep_i strictly below sep_j
        }
        if (minimal) poset_minima.push_back(static_cast<int>(j));
    }

    std::vector<int> rank_minima;
    for (std::size_t j = 0; j < n; ++j) {
        const long long before = rank[(j + n - 1) % n];
        const long long after = rank[(j + 1) % n];
        if (rank[j] < before && rank[j] < after) rank_minima.push_back(static_cast<int>(j));
    }

    if (poset_minima != rank_minima) {
        throw MinimaMismatch("poset minima " + std::to_string(poset_minima.size()) +
                             ", rank minima " + std::to_string(rank_minima.size()) +
                             " at base " + to_string(base));
    }

    Committee committee;
    committee.positions = poset_minima;
    for (const int j : committee.positions)
        committee.members.push_back(cycle.vertices[static_cast<std::size_t>(j)]);

    if (base == positive_tope(t)) {
        std::vector<long long> sum(static_cast<std::size_t>(t), 0);
        for (const auto& member : committee.members)
            for (int i = 0; i < t; ++i) sum[static_cast<std::size_t>(i)] += member.sign(i);
        for (int i = 0; i < t; ++i) {
            if (sum[static_cast<std::size_t>(i)] != base.sign(i))
                throw CertificateFailure("coordinate " + std::to_string(i) + " sums to " +
                                         std::to_string(sum[static_cast<std::size_t>(i)]));
        }
    }
    return committee;
}

BasisSolver::BasisSolver(const SymmetricCycle& cycle) : cycle_(&cycle) {
    const int t = cycle.t;
    RatMatrix basis(static_cast<std::size_t>(t), RatVector(static_cast<std::size_t>(t)));
    // column j is the cycle vertex R^j
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                Rational(BigInt(cycle.vertices[static_cast<std::size_t>(j)].sign(i)));

    auto solver = ExactSolver::factor(std::move(basis));
    if (!solver) throw SingularBasis();

    // adjugate . T = det . coefficients stays in (small) integers, so the
    // per-tope solve below is a pure integer matrix-vector product
    const Rational det = solver->determinant();
    adjugate_.assign(static_cast<std::size_t>(t), std::vector<long long>(
                         static_cast<std::size_t>(t), 0));
    for (int k = 0; k < t; ++k) {
        RatVector unit(static_cast<std::size_t>(t), Rational(0));
        unit[static_cast<std::size_t>(k)] = Rational(1);
        const RatVector column = solver->solve(std::move(unit));
        for (int r = 0; r < t; ++r) {
            const Rational entry = column[static_cast<std::size_t>(r)] * det;
            if (entry.denominator() != 1)
                throw NonIntegerResult("adjugate entry " + to_string(entry));
            adjugate_[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] =
                static_cast<long long>(entry.numerator());
        }
    }
    det_ = static_cast<long long>(det.numerator());
}

RatVector BasisSolver::coefficients(const Tope& tope) const {
    const int t = cycle_->t;
    if (tope.t() != t) throw LengthMismatch(static_cast<std::size_t>(t),
                                            static_cast<std::size_t>(tope.t()));
    RatVector coeffs(static_cast<std::size_t>(t));
    for (int j = 0; j < t; ++j) {
        long long numer = 0;
        for (int i = 0; i < t; ++i)
            numer += adjugate_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] *
                     tope.sign(i);
        coeffs[static_cast<std::size_t>(j)] = Rational(BigInt(numer), BigInt(det_));
    }
    return coeffs;
}

Committee BasisSolver::decompose(const Tope& tope) const {
    const int t = cycle_->t;
    if (tope.t() != t) throw LengthMismatch(static_cast<std::size_t>(t),
                                            static_cast<std::size_t>(tope.t()));
    Committee committee;
    for (int j = 0; j < t; ++j) {
        long long numer = 0;
        for (int i = 0; i < t; ++i)
            numer += adjugate_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] *
                     tope.sign(i);
        if (numer == 0) continue;
        if (numer == det_) {
            committee.positions.push_back(j);
        } else if (numer == -det_) {
            committee.positions.push_back(j + t);
        } else {
            throw NonTernaryCoefficient(static_cast<std::size_t>(j),
                                        to_string(Rational(BigInt(numer), BigInt(det_))));
        }
    }
    std::sort(committee.positions.begin(), committee.positions.end());
    for (const int j : committee.positions)
        committee.members.push_back(cycle_->vertices[static_cast<std::size_t>(j)]);
    return committee;
}

Committee decompose_tope(const Tope& tope, const SymmetricCycle& cycle) {
    return BasisSolver(cycle).decompose(tope);
}

std::vector<int> indicator_vector(const Committee& committee, std::size_t cycle_length) {
    std::vector<int> indicator(cycle_length, 0);
    for (const int j : committee.positions) indicator[static_cast<std::size_t>(j)] = 1;
    return indicator;
}

std::vector<int> indicator_vector(const Tope& tope, const SymmetricCycle& cycle) {
    return indicator_vector(decompose_tope(tope, cycle), cycle.length());
}

GramMatrix gram_matrix(const SymmetricCycle& cycle) {
    const std::size_t n = cycle.length();
    GramMatrix gram;
    gram.entries.assign(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const long long value = inner_product(cycle.vertices[i], cycle.vertices[j]);
            gram.entries[i][j] = value;
            gram.entries[j][i] = value;
        }
    return gram;
}

long long distance_via_gram(const Tope& a, const Tope& b, const SymmetricCycle& cycle) {
    const BasisSolver solver(cycle);
    const std::vector<int> qa = indicator_vector(solver.decompose(a), cycle.length());
    const std::vector<int> qb = indicator_vector(solver.decompose(b), cycle.length());
    const GramMatrix gram = gram_matrix(cycle);
    long long form = 0;
    for (std::size_t i = 0; i < cycle.length(); ++i) {
        if (qb[i] == 0) continue;
        for (std::size_t j = 0; j < cycle.length(); ++j)
            if (qa[j] != 0) form += gram.entries[i][j];
    }
    if ((cycle.t - form) % 2 != 0)
        throw NonIntegerResult("gram form " + std::to_string(form) + " at t = " +
                               std::to_string(cycle.t));
    return (cycle.t - form) / 2;
}

}  // namespace cyclotope
