#pragma once

#include <stdexcept>
#include <string>

namespace rgc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// tree / labeling misuse
struct UnrootedTree : Error { using Error::Error; };
struct UnknownVertex : Error { using Error::Error; };
struct UnknownTaxon : Error { using Error::Error; };
struct TerminalEdge : Error { using Error::Error; };
struct TaxonMismatch : Error { using Error::Error; };
struct NotATree : Error { using Error::Error; };
struct InvariantError : Error { using Error::Error; };

// inverse problems
struct IllDefinedQuotient : Error { using Error::Error; };
struct NotInClassT : Error { using Error::Error; };
struct DoesNotExplain : Error { using Error::Error; };
struct MalformedStar : Error { using Error::Error; };
struct NotCentral : Error { using Error::Error; };

// enumeration guard
struct CapExceeded : Error { using Error::Error; };

// input parsing; line/col are 1-based, col 0 means "whole line"
struct ParseError : Error {
    int line, col;
    ParseError(int line_, int col_, const std::string& what_)
        : Error("parse error at " + std::to_string(line_) +
                (col_ > 0 ? ":" + std::to_string(col_) : "") + ": " + what_),
          line(line_), col(col_) {}
};
struct LabelError : Error { using Error::Error; };
struct DegreeError : Error { using Error::Error; };

}  // namespace rgc
