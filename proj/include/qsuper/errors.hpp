#pragma once

#include "qsuper/scalar.hpp"

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsuper {

using Vec = std::vector<Scalar>;

/// A failed identity: which check, on which basis indices, and the nonzero
/// residual that was observed.
struct Witness {
    std::string check;
    std::vector<std::size_t> indices;
    Vec residual;

    std::string describe() const {
        std::ostringstream os;
        os << check << " at (";
        for (std::size_t i = 0; i < indices.size(); ++i) os << (i ? "," : "") << indices[i];
        os << ")";
        if (!residual.empty()) {
            os << " residual [";
            for (std::size_t i = 0; i < residual.size(); ++i)
                os << (i ? " " : "") << to_string(residual[i]);
            os << "]";
        }
        return os.str();
    }
};

/// Outcome of a verification predicate. Failure is a value, not an exception.
struct CheckResult {
    std::optional<Witness> witness;

    static CheckResult pass() { return {}; }
    static CheckResult fail(Witness w) { return {std::move(w)}; }

    bool ok() const { return !witness.has_value(); }
    explicit operator bool() const { return ok(); }
};

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An algebraic identity does not hold. `witness().check` names it.
class ValidationError : public Error {
   public:
    explicit ValidationError(Witness w) : Error(w.describe()), witness_(std::move(w)) {}
    ValidationError(Witness w, const std::string& message) : Error(message), witness_(std::move(w)) {}
    const Witness& witness() const noexcept { return witness_; }

   private:
    Witness witness_;
};

class NotHomogeneous : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

/// Precondition of a construction (semi-direct product, parameters) failed.
class ConditionViolated : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

class InvalidParams : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

/// A decomposition claim failed; the ideal does not meet the hypotheses.
class ClaimViolated : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

class NotAnIdealSplit : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

class DegeneratePairing : public Error {
   public:
    using Error::Error;
};

class DegenerateInput : public Error {
   public:
    using Error::Error;
};

/// Carries every violation found, not just the first.
class InvalidContext : public Error {
   public:
    explicit InvalidContext(std::vector<Witness> violations)
        : Error(summarize("invalid context", violations)), violations_(std::move(violations)) {}
    const std::vector<Witness>& violations() const noexcept { return violations_; }

   protected:
    InvalidContext(const std::string& what, std::vector<Witness> violations)
        : Error(summarize(what, violations)), violations_(std::move(violations)) {}

    static std::string summarize(const std::string& what, const std::vector<Witness>& vs) {
        std::string s = what + ":";
        for (const auto& v : vs) s += " " + v.describe() + ";";
        return s;
    }

   private:
    std::vector<Witness> violations_;
};

/// The derived identities failed on a context that passed validation: a bug.
class LemmaViolation : public InvalidContext {
   public:
    explicit LemmaViolation(std::vector<Witness> violations)
        : InvalidContext("lemma identity violated", std::move(violations)) {}
};

class ParseError : public Error {
   public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const noexcept { return line_; }

   private:
    std::size_t line_;
};

}  // namespace qsuper
