#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclotope {

// Base class of every domain error thrown by the library. Validation-style
// operations report failures instead of throwing; see ValidationReport.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct EmptyInput : Error {
    EmptyInput() : Error("empty input sequence") {}
};

struct BadEntry : Error {
    std::size_t index;
    long long value;
    BadEntry(std::size_t index, long long value)
        : Error("entry " + std::to_string(value) + " at index " + std::to_string(index) +
                " is not -1 or +1"),
          index(index), value(value) {}
};

struct LengthMismatch : Error {
    std::size_t lhs, rhs;
    LengthMismatch(std::size_t lhs, std::size_t rhs)
        : Error("length mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)),
          lhs(lhs), rhs(rhs) {}
};

struct BadLength : Error {
    std::size_t length;
    explicit BadLength(std::size_t length)
        : Error("vector length " + std::to_string(length) + " is not a positive even number"),
          length(length) {}
};

// Arrangement defects. Elements are reported with 1-based labels.
struct Loop : Error {
    int element;
    explicit Loop(int element)
        : Error("element " + std::to_string(element) + " is a zero vector (loop)"),
          element(element) {}
};

struct NotSimple : Error {
    int first, second;
    NotSimple(int first, int second)
        : Error("elements " + std::to_string(first) + " and " + std::to_string(second) +
                " are parallel or antiparallel"),
          first(first), second(second) {}
};

struct NotAcyclic : Error {
    NotAcyclic() : Error("the all-positive sign system is infeasible") {}
};

// Cycle search.
struct DegenerateGroundSet : Error {
    int t;
    explicit DegenerateGroundSet(int t)
        : Error("ground set of size " + std::to_string(t) + " admits no symmetric cycle"),
          t(t) {}
};

struct NoCycleFound : Error {
    NoCycleFound() : Error("no symmetric cycle found") {}
};

// Committees and decompositions.
struct CertificateFailure : Error {
    explicit CertificateFailure(const std::string& detail)
        : Error("committee sum certificate failed: " + detail) {}
};

struct MinimaMismatch : Error {
    explicit MinimaMismatch(const std::string& detail)
        : Error("subposet minima and cyclic rank minima disagree: " + detail) {}
};

struct NonTernaryCoefficient : Error {
    std::size_t position;
    std::string value;
    NonTernaryCoefficient(std::size_t position, std::string value)
        : Error("coefficient " + value + " at basis position " + std::to_string(position) +
                " is not in {-1,0,+1}"),
          position(position), value(std::move(value)) {}
};

struct SingularBasis : Error {
    SingularBasis() : Error("the first t cycle vertices are linearly dependent") {}
};

struct NonIntegerResult : Error {
    explicit NonIntegerResult(const std::string& detail)
        : Error("quadratic form did not evaluate to an integer: " + detail) {}
};

// Enumerators.
struct NotNegationClosed : Error {
    explicit NotNegationClosed(const std::string& witness)
        : Error("tope set is not closed under negation, offending tope " + witness) {}
};

struct BadSelector : Error {
    explicit BadSelector(const std::string& detail) : Error("bad halfspace selector: " + detail) {}
};

// File ingestion.
struct ParseError : Error {
    explicit ParseError(const std::string& detail) : Error("parse error: " + detail) {}
};

struct BadIndex : Error {
    std::size_t index, size;
    BadIndex(std::size_t index, std::size_t size)
        : Error("index " + std::to_string(index) + " out of range, have " + std::to_string(size)),
          index(index), size(size) {}
};

}  // namespace cyclotope
