// errors.hpp : exception types shared across the toolkit

#ifndef SUBCAT_ERRORS_HPP
#define SUBCAT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subcat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Errors raised while reading bracketed trees. Positions are 0-based byte
// offsets into the document; line/column are 1-based.
struct ParseError : Error {
    std::size_t offset = 0;
    std::size_t line = 0;
    std::size_t column = 0;

    ParseError(const std::string& what, std::size_t off, std::size_t ln, std::size_t col)
        : Error(what + " (line " + std::to_string(ln) + ", column " + std::to_string(col) +
                ", offset " + std::to_string(off) + ")"),
          offset(off), line(ln), column(col) {}
};

struct UnbalancedBrackets : ParseError {
    using ParseError::ParseError;
};

struct EmptyTree : ParseError {
    using ParseError::ParseError;
};

struct LeafWithoutTag : ParseError {
    using ParseError::ParseError;
};

// Errors raised while loading TSV resources; line is 1-based.
struct MalformedRow : Error {
    std::size_t line = 0;
    MalformedRow(const std::string& what, std::size_t ln)
        : Error(what + " (line " + std::to_string(ln) + ")"), line(ln) {}
};

struct UnknownPos : Error {
    std::size_t line = 0;
    UnknownPos(const std::string& what, std::size_t ln)
        : Error(what + " (line " + std::to_string(ln) + ")"), line(ln) {}
};

struct EmptyLexicon : Error {
    using Error::Error;
};

struct EmptyCorpus : Error {
    using Error::Error;
};

struct NoVerbFound : Error {
    using Error::Error;
};

struct NonPositiveWeight : Error {
    using Error::Error;
};

struct MixedWeightModes : Error {
    using Error::Error;
};

struct UnknownStem : Error {
    using Error::Error;
};

struct UnknownStemBoth : Error {
    using Error::Error;
};

struct InvalidRate : Error {
    using Error::Error;
};

struct InvalidSignificance : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace subcat

#endif  // SUBCAT_ERRORS_HPP
