#pragma once

// Critical committees and cycle-based tope decompositions: minimal elements
// of the cycle's vertex subposet, the exact ternary expansion of a tope in
// the basis of the first t vertices, and the Gram-matrix distance formula.

#include <vector>

#include "cyclotope/cycle.hpp"
#include "cyclotope/rational.hpp"

namespace cyclotope {

struct Committee {
    std::vector<Tope> members;   // committee topes, in cycle order
    std::vector<int> positions;  // their 0-based positions in the cycle
    std::size_t cardinality() const { return members.size(); }
};

// Minimal elements of the 2t cycle vertices in the tope poset based at
// `base`. Computes both characterizations -- subposet minima and cyclic
// local minima of the rank sequence -- and requires them to agree
// (MinimaMismatch otherwise). For base == T^(+) the entrywise sum of the
// members must reproduce the base exactly (CertificateFailure otherwise).
Committee min_elements(const SymmetricCycle& cycle, const Tope& base);

// Exact solver over the basis R^0 ... R^{t-1} of a cycle, factored once and
// reused. Throws SingularBasis when the vertices are dependent.
class BasisSolver {
public:
    explicit BasisSolver(const SymmetricCycle& cycle);

    // Expansion coefficients of an arbitrary {-1,+1} vector in the basis.
    RatVector coefficients(const Tope& tope) const;

    // The inclusion-minimal vertex subset summing to `tope`: positions j
    // with coefficient +1 and positions j+t with coefficient -1. Throws
    // NonTernaryCoefficient when a coefficient falls outside {-1,0,+1}.
    Committee decompose(const Tope& tope) const;

private:
    const SymmetricCycle* cycle_;
    // integer adjugate representation: coefficients = (adjugate . T) / det
    std::vector<std::vector<long long>> adjugate_;
    long long det_ = 0;
};

Committee decompose_tope(const Tope& tope, const SymmetricCycle& cycle);

// 0/1 row of length 2t marking the members of decompose_tope(tope, cycle).
std::vector<int> indicator_vector(const Tope& tope, const SymmetricCycle& cycle);
std::vector<int> indicator_vector(const Committee& committee, std::size_t cycle_length);

struct GramMatrix {
    std::vector<std::vector<long long>> entries;  // 2t x 2t, <R^i, R^j>
    std::size_t size() const { return entries.size(); }
};

GramMatrix gram_matrix(const SymmetricCycle& cycle);

// d(a, b) = (t - q(b) G q(a)^T) / 2 evaluated in exact integers.
long long distance_via_gram(const Tope& a, const Tope& b, const SymmetricCycle& cycle);

}  // namespace cyclotope
