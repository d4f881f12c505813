#pragma once

#include <stdexcept>
#include <string>

namespace isored {

// Error categories; the CLI maps them onto exit codes
// (input 1, precondition 2, internal 3).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

// A violated internal identity, e.g. the two cospectrality routes
// disagreeing.  Always a software fault, never a valid result.
struct InternalError : Error {
    using Error::Error;
};

// ratfun
struct ZeroDenominator : PreconditionError { using PreconditionError::PreconditionError; };
struct DivisionByZeroFunction : PreconditionError { using PreconditionError::PreconditionError; };
struct NotProper : PreconditionError { using PreconditionError::PreconditionError; };
struct NonSplittingDenominator : PreconditionError {
    explicit NonSplittingDenominator(const std::string& factor)
        : PreconditionError("denominator does not split over the rationals; residual factor: " + factor),
          factor_(factor) {}
    const std::string& factor() const { return factor_; }
  private:
    std::string factor_;
};
struct ZeroPolynomial : PreconditionError { using PreconditionError::PreconditionError; };

// graphs
struct ParseError : InputError {
    ParseError(int line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }
  private:
    int line_;
};
struct DuplicateEdge : InputError { using InputError::InputError; };
struct IndexOutOfRange : InputError { using InputError::InputError; };
struct DeletingAll : PreconditionError { using PreconditionError::PreconditionError; };
struct NonConstantEntries : PreconditionError { using PreconditionError::PreconditionError; };
struct EmptySet : PreconditionError { using PreconditionError::PreconditionError; };

// reduce
struct ImproperSubset : PreconditionError { using PreconditionError::PreconditionError; };
struct SingularComplement : PreconditionError { using PreconditionError::PreconditionError; };
struct NotABaseSet : PreconditionError { using PreconditionError::PreconditionError; };
struct NotNested : PreconditionError { using PreconditionError::PreconditionError; };

// cospec / latency / unpack
struct SamePair : PreconditionError { using PreconditionError::PreconditionError; };
struct DirectedInput : PreconditionError { using PreconditionError::PreconditionError; };
struct NotSymmetric : PreconditionError { using PreconditionError::PreconditionError; };
struct NotCospectral : PreconditionError { using PreconditionError::PreconditionError; };
struct NoLatentAutomorphism : PreconditionError { using PreconditionError::PreconditionError; };
struct NotInW : PreconditionError { using PreconditionError::PreconditionError; };

}  // namespace isored
