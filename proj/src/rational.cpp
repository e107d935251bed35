#include "cyclotope/rational.hpp"

#include <algorithm>
#include <cstddef>

#include "cyclotope/errors.hpp"

namespace cyclotope {

static BigInt parse_bigint(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    if (s.empty()) throw ParseError("empty integer");
    std::size_t digits_from = (s.front() == '-') ? 1 : 0;
    if (digits_from == s.size()) throw ParseError("bare sign is not an integer");
    for (std::size_t i = digits_from; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("bad integer '" + text + "'");
    return BigInt(s);
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_bigint(text));
    const BigInt num = parse_bigint(text.substr(0, slash));
    const BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& value) {
    std::string s = value.numerator().str();
    if (value.denominator() != 1) s += "/" + value.denominator().str();
    return s;
}

int exact_rank(RatMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == Rational(0)) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][col] == Rational(0)) continue;
            const Rational factor = m[r][col] / m[rank][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

std::optional<ExactSolver> ExactSolver::factor(RatMatrix a) {
    ExactSolver solver;
    const int n = static_cast<int>(a.size());
    solver.n_ = n;
    solver.perm_.resize(static_cast<std::size_t>(n));
    solver.det_ = Rational(1);
    for (int i = 0; i < n; ++i) solver.perm_[static_cast<std::size_t>(i)] = i;

    for (int col = 0; col < n; ++col) {
        int pivot = col;
        while (pivot < n && a[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)] ==
                                Rational(0))
            ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col) {
            std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
            std::swap(solver.perm_[static_cast<std::size_t>(pivot)],
                      solver.perm_[static_cast<std::size_t>(col)]);
            solver.det_ = -solver.det_;
        }
        const Rational& diag = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        solver.det_ *= diag;
        for (int row = col + 1; row < n; ++row) {
            auto& r = a[static_cast<std::size_t>(row)];
            if (r[static_cast<std::size_t>(col)] == Rational(0)) continue;
            const Rational factor = r[static_cast<std::size_t>(col)] / diag;
            r[static_cast<std::size_t>(col)] = factor;  // store the multiplier in L
            for (int c = col + 1; c < n; ++c)
                r[static_cast<std::size_t>(c)] -=
                    factor * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
        }
    }
    solver.lu_ = std::move(a);
    return solver;
}

RatVector ExactSolver::solve(RatVector rhs) const {
    RatVector b(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
        b[static_cast<std::size_t>(i)] = rhs[static_cast<std::size_t>(perm_[static_cast<std::size_t>(i)])];

    // forward substitution with unit lower triangle
    for (int row = 1; row < n_; ++row)
        for (int col = 0; col < row; ++col)
            b[static_cast<std::size_t>(row)] -=
                lu_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] *
                b[static_cast<std::size_t>(col)];

    // back substitution
    for (int row = n_ - 1; row >= 0; --row) {
        for (int col = row + 1; col < n_; ++col)
            b[static_cast<std::size_t>(row)] -=
                lu_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] *
                b[static_cast<std::size_t>(col)];
        b[static_cast<std::size_t>(row)] /=
            lu_[static_cast<std::size_t>(row)][static_cast<std::size_t>(row)];
    }
    return b;
}

}  // namespace cyclotope
