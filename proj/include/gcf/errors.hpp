#ifndef GCF_ERRORS_HPP
#define GCF_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gcf {

// Base class for every error the library raises deliberately.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A term source produced (or was asked to produce) a partial numerator a_n = 0.
// A zero partial numerator terminates a fraction; termination is represented
// by the end of the term sequence instead.
struct ZeroPartialNumerator : Error {
    explicit ZeroPartialNumerator(std::size_t n)
        : Error("zero partial numerator at n=" + std::to_string(n)), index(n) {}
    std::size_t index;
};

// An explicit term list is shorter than the requested prefix.
struct InsufficientTerms : Error {
    InsufficientTerms(std::size_t available_, std::size_t requested_)
        : Error("term list has " + std::to_string(available_) +
                " terms, need " + std::to_string(requested_)),
          available(available_), requested(requested_) {}
    std::size_t available;
    std::size_t requested;
};

// Convergent with q = 0 cannot be evaluated as a rational.
struct UndefinedConvergent : Error {
    explicit UndefinedConvergent(std::int64_t n)
        : Error("undefined convergent (q=0) at index " + std::to_string(n)), index(n) {}
    std::int64_t index;
};

// Simple continued fraction coefficients must be positive past position 0.
struct NotSimple : Error {
    explicit NotSimple(std::size_t pos)
        : Error("coefficient at position " + std::to_string(pos) +
                " must be >= 1 in a simple continued fraction"),
          position(pos) {}
    std::size_t position;
};

// The inversion determinant vanished: the convergent triple at this index is
// linearly dependent and no continued-fraction step exists.
struct DegenerateAt : Error {
    explicit DegenerateAt(std::size_t n)
        : Error("degenerate at n=" + std::to_string(n)), index(n) {}
    std::size_t index;
};

// A certified enclosure is too wide to make the requested decision.
struct InsufficientPrecision : Error {
    InsufficientPrecision() : Error("enclosure radius cannot exclude a half-integer boundary") {}
};

// Internal consistency failure: an alternating sum that must reduce to an
// integer did not. Indicates a bug, not a bad input.
struct NonIntegralResult : Error {
    NonIntegralResult() : Error("alternating sum did not reduce to an integer") {}
};

// Quadrature rule has too few nodes for the polynomial degree.
struct TooFewNodes : Error {
    TooFewNodes(unsigned nodes_, unsigned required_)
        : Error("quadrature needs >= " + std::to_string(required_) +
                " nodes, got " + std::to_string(nodes_)),
          nodes(nodes_), required(required_) {}
    unsigned nodes;
    unsigned required;
};

// Integrand degree outside the supported range.
struct UnsupportedDegree : Error {
    explicit UnsupportedDegree(unsigned n)
        : Error("degree " + std::to_string(n) + " exceeds the supported maximum of 20"),
          degree(n) {}
    unsigned degree;
};

// log10 of zero requested.
struct ZeroArgument : Error {
    ZeroArgument() : Error("log10 of zero is undefined") {}
};

// Constant name not present in the constant table.
struct UnknownTarget : Error {
    explicit UnknownTarget(const std::string& name_)
        : Error("unknown constant \"" + name_ + "\""), name(name_) {}
    std::string name;
};

// Scan grid exceeds the desk-scale cell budget.
struct GridTooLarge : Error {
    explicit GridTooLarge(std::uint64_t cells_)
        : Error("scan grid has " + std::to_string(cells_) +
                " cells, limit is 10000000"),
          cells(cells_) {}
    std::uint64_t cells;
};

// Plot emission asked for with no records.
struct EmptyTable : Error {
    EmptyTable() : Error("error table is empty") {}
};

// Filesystem failure while reading or writing.
struct IoError : Error {
    explicit IoError(const std::string& path_)
        : Error("i/o failure on " + path_), path(path_) {}
    std::string path;
};

// Malformed input file; line numbers are 1-based.
struct ParseError : Error {
    ParseError(const std::string& path_, std::size_t line_, const std::string& what_)
        : Error(path_ + ":" + std::to_string(line_) + ": " + what_),
          path(path_), line(line_) {}
    std::string path;
    std::size_t line;
};

}  // namespace gcf

#endif
