#pragma once

#include <stdexcept>
#include <string>

namespace gtc {

// Base class for all library errors. `code()` is a stable machine-readable
// identifier used by the CLI's JSON error objects.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(detail), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct NotPrimePower : Error {
    explicit NotPrimePower(const std::string& detail) : Error("not_prime_power", detail) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& detail) : Error("too_large", detail) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& detail) : Error("division_by_zero", detail) {}
};

struct DimensionTooLarge : Error {
    explicit DimensionTooLarge(const std::string& detail) : Error("dimension_too_large", detail) {}
};

struct EmptyU : Error {
    explicit EmptyU(const std::string& detail) : Error("empty_u", detail) {}
};

struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& detail) : Error("length_mismatch", detail) {}
};

struct ContextMismatch : Error {
    explicit ContextMismatch(const std::string& detail) : Error("context_mismatch", detail) {}
};

struct BudgetExceeded : Error {
    BudgetExceeded(const std::string& detail, long long required_work)
        : Error("budget_exceeded", detail), required(required_work) {}
    long long required;  // work units the full computation would need
};

struct ParseError : Error {
    explicit ParseError(const std::string& detail) : Error("parse_error", detail) {}
};

}  // namespace gtc
