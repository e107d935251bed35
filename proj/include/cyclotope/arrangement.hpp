#pragma once

// Realizable input source: a vector arrangement given by exact rational
// coordinates, turned into the tope set of the oriented matroid it realizes.

#include <vector>

#include "cyclotope/rational.hpp"
#include "cyclotope/tope_set.hpp"

namespace cyclotope {

struct Arrangement {
    int d = 0;                            // ambient dimension
    std::vector<RatVector> vectors;       // t rows of d exact rationals

    int t() const { return static_cast<int>(vectors.size()); }
};

// A linear inequality system  a.x >= b  over exact rationals.
struct InequalitySystem {
    int dim = 0;
    std::vector<std::pair<RatVector, Rational>> rows;
};

// Decides feasibility by Fourier-Motzkin elimination, exactly.
bool fourier_motzkin_feasible(InequalitySystem system);

// Open-system feasibility of { sign_i <v_i, x> > 0 } via the homogenized
// closed system { sign_i <v_i, x> >= 1 }, which is feasible iff the open
// one is (scale any strict solution).
bool sign_system_feasible(const Arrangement& a, const Tope& signs);

// Enumerates all feasible sign vectors over {-1,+1}^t with exact rational
// arithmetic. Throws Loop / NotSimple / NotAcyclic on arrangement defects.
TopeSet topes_from_arrangement(const Arrangement& a);

}  // namespace cyclotope
