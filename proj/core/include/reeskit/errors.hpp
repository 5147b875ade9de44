#ifndef REESKIT_ERRORS_HPP
#define REESKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reeskit {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// monomial_core
struct OverflowError : Error {
    explicit OverflowError(const std::string& msg) : Error(msg) {}
};
struct NotDivisibleError : Error {
    explicit NotDivisibleError(const std::string& msg) : Error(msg) {}
};
struct EqualTermsError : Error {
    explicit EqualTermsError(const std::string& msg) : Error(msg) {}
};
struct InvalidParamsError : Error {
    explicit InvalidParamsError(const std::string& msg) : Error(msg) {}
};

// generators
struct NotMinimallyGeneratedError : Error {
    explicit NotMinimallyGeneratedError(const std::string& msg) : Error(msg) {}
};
struct NotTriGeneratedShapeError : Error {
    explicit NotTriGeneratedShapeError(const std::string& msg) : Error(msg) {}
};

// rees_graph
struct FewerThanThreeGeneratorsError : Error {
    explicit FewerThanThreeGeneratorsError(const std::string& msg) : Error(msg) {}
};
struct AlreadyAugmentedError : Error {
    explicit AlreadyAugmentedError(const std::string& msg) : Error(msg) {}
};
struct NoSecondEdgeError : Error {
    explicit NoSecondEdgeError(const std::string& msg) : Error(msg) {}
};

// groebner
struct IndexOutOfRangeError : Error {
    explicit IndexOutOfRangeError(const std::string& msg) : Error(msg) {}
};
struct NotInDeltaError : Error {
    explicit NotInDeltaError(const std::string& msg) : Error(msg) {}
};

// resolution
struct AlreadyMinimalError : Error {
    explicit AlreadyMinimalError(const std::string& msg) : Error(msg) {}
};

// oracle
struct NonUniquePreimageError : Error {
    explicit NonUniquePreimageError(const std::string& msg) : Error(msg) {}
};
struct NonBinomialRemainderError : Error {
    explicit NonBinomialRemainderError(const std::string& msg) : Error(msg) {}
};
struct UnknownLabelError : Error {
    explicit UnknownLabelError(const std::string& msg) : Error(msg) {}
};

// cli
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};
struct WrongVariableError : Error {
    explicit WrongVariableError(const std::string& msg) : Error(msg) {}
};

// Internal invariant breaches (theorem-backed conditions that are supposed to
// be impossible). Distinct from Error so tests never confuse them with
// contract errors.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace reeskit

#endif
