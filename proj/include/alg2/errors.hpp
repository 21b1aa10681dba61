#ifndef ALG2_ERRORS_HPP
#define ALG2_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace alg2 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A required root (or square root) does not exist in the exact backend's
/// field of representable numbers. Carries the obstructing polynomial.
struct NotRepresentable : Error {
    explicit NotRepresentable(std::string poly)
        : Error("not representable in exact backend, obstruction: " + poly),
          polynomial(std::move(poly)) {}
    std::string polynomial;
};

/// Every coefficient of the polynomial is zero, so every point is a root.
struct AllZero : Error {
    AllZero() : Error("all polynomial coefficients are zero") {}
};

struct SingularMatrix : Error {
    SingularMatrix() : Error("basis change matrix is singular") {}
};

struct InvalidInput : Error {
    using Error::Error;
};

struct UnknownSeries : Error {
    explicit UnknownSeries(const std::string& name) : Error("unknown series: " + name) {}
};

struct UnknownSet : Error {
    explicit UnknownSet(const std::string& name) : Error("unknown lattice set: " + name) {}
};

struct UnknownSpec : Error {
    explicit UnknownSpec(const std::string& name) : Error("unknown subvariety: " + name) {}
};

struct MissingPreChange : Error {
    explicit MissingPreChange(const std::string& row)
        : Error("non-degeneration row needs a pre-change: " + row) {}
};

struct ParseError : Error {
    using Error::Error;
};

struct DataError : Error {
    using Error::Error;
};

}  // namespace alg2

#endif
