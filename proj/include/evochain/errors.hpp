#ifndef EVOCHAIN_ERRORS_HPP
#define EVOCHAIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace evochain {

/// Base of every exception thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonSquareError : Error {
    using Error::Error;
};

struct DuplicateLabelError : Error {
    using Error::Error;
};

struct InvalidLabelError : Error {
    using Error::Error;
};

struct NonFiniteEntryError : Error {
    using Error::Error;
};

/// Raised when a structure matrix fails the row-stochasticity check.
/// Carries the first offending row (0-based) and that row's sum.
struct NotMarkovError : Error {
    NotMarkovError(int row_, double row_sum_, const std::string& what_)
        : Error(what_), row(row_), row_sum(row_sum_) {}
    int row;
    double row_sum;
};

struct IndexOutOfRangeError : Error {
    using Error::Error;
};

struct EmptySetError : Error {
    using Error::Error;
};

struct DimensionTooLargeError : Error {
    using Error::Error;
};

struct NotClosedError : Error {
    using Error::Error;
};

/// Walk-enumeration guard exceeded (length or dimension).
struct TooLargeError : Error {
    using Error::Error;
};

struct InvalidWalkError : Error {
    using Error::Error;
};

struct InvalidEdgeError : Error {
    using Error::Error;
};

struct DegenerateRowError : Error {
    using Error::Error;
};

/// CSV parse failure with 1-based line and column of the offending cell.
struct ParseError : Error {
    ParseError(int line_, int column_, const std::string& what_)
        : Error(what_), line(line_), column(column_) {}
    int line;
    int column;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace evochain

#endif
