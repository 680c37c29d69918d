#pragma once

#include <stdexcept>
#include <string>

namespace swanforge {

// Base for all engine errors; the CLI maps these to structured error objects.
struct EngineError : std::runtime_error {
    explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : EngineError {
    explicit DivisionByZero(const std::string& w = "division by zero") : EngineError(w) {}
};

struct ZeroEntry : EngineError {
    explicit ZeroEntry(const std::string& w = "zero entry in symbol") : EngineError(w) {}
};

struct NotAUnit : EngineError {
    explicit NotAUnit(const std::string& w = "element is not a unit") : EngineError(w) {}
};

struct PrecisionExhausted : EngineError {
    explicit PrecisionExhausted(const std::string& w = "coefficient above precision cap")
        : EngineError(w) {}
};

struct Unsupported : EngineError {
    explicit Unsupported(const std::string& w = "outside supported (p, n) range") : EngineError(w) {}
};

struct NotClosed : EngineError {
    explicit NotClosed(const std::string& w = "form is not closed") : EngineError(w) {}
};

struct LevelTooLow : EngineError {
    explicit LevelTooLow(const std::string& w = "presentation exceeds requested level") : EngineError(w) {}
};

struct ImageNotZero : EngineError {
    explicit ImageNotZero(const std::string& w = "graded image is nonzero") : EngineError(w) {}
};

struct NotTame : EngineError {
    explicit NotTame(const std::string& w = "presentation has positive level") : EngineError(w) {}
};

struct InvalidValuations : EngineError {
    explicit InvalidValuations(const std::string& w = "valuation preconditions violated") : EngineError(w) {}
};

struct NotCanonical : EngineError {
    explicit NotCanonical(const std::string& w = "input is not in canonical shape") : EngineError(w) {}
};

struct MembershipNotExhibited : EngineError {
    explicit MembershipNotExhibited(const std::string& w = "filtration membership not exhibited")
        : EngineError(w) {}
};

struct ParseError : EngineError {
    size_t position;
    ParseError(const std::string& w, size_t pos)
        : EngineError(w + " at position " + std::to_string(pos)), position(pos) {}
};

struct InternalError : EngineError {
    explicit InternalError(const std::string& w) : EngineError("internal invariant violated: " + w) {}
};

}  // namespace swanforge
