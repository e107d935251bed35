#pragma once

// Exact rational scalars and the small dense exact linear algebra the rest
// of the library relies on. No floating point anywhere in this layer.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cyclotope {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

// Accepts "p", "-p", "p/q" with optional sign on p. Throws ParseError.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& value);

using RatMatrix = std::vector<std::vector<Rational>>;
using RatVector = std::vector<Rational>;

// Rank by Gaussian elimination with exact pivots.
int exact_rank(RatMatrix m);

// PLU-style factorization of a square matrix for repeated exact solves.
class ExactSolver {
public:
    // Empty optional when the matrix is singular.
    static std::optional<ExactSolver> factor(RatMatrix a);

    RatVector solve(RatVector rhs) const;
    const Rational& determinant() const { return det_; }
    int size() const { return n_; }

private:
    ExactSolver() = default;
    int n_ = 0;
    RatMatrix lu_;           // L below the diagonal, U on and above
    std::vector<int> perm_;  // row permutation applied before elimination
    Rational det_;
};

}  // namespace cyclotope
