#pragma once

/**
 * @file error.hpp
 * @brief Exception hierarchy shared by every module.
 *
 * Each error carries a kind; the command-line front end maps kinds to exit
 * codes (see exit_code()).
 */

#include <stdexcept>
#include <string>

namespace pointed {

enum class ErrorKind {
    ConductorMismatch,
    LengthMismatch,
    GroupMismatch,
    Malformed,
    Parse,
    InvalidDatum,
    InconsistentDatum,
    InvalidLinking,
    Unsupported,
    Budget,
    Internal,
};

inline const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::ConductorMismatch: return "conductor-mismatch";
        case ErrorKind::LengthMismatch: return "length-mismatch";
        case ErrorKind::GroupMismatch: return "group-mismatch";
        case ErrorKind::Malformed: return "malformed";
        case ErrorKind::Parse: return "parse";
        case ErrorKind::InvalidDatum: return "invalid-datum";
        case ErrorKind::InconsistentDatum: return "inconsistent-datum";
        case ErrorKind::InvalidLinking: return "invalid-linking";
        case ErrorKind::Unsupported: return "unsupported";
        case ErrorKind::Budget: return "budget";
        case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& what) : Error(ErrorKind::Budget, what) {}
};

/// Exit codes: 0 ok, 1 mismatch, 2 parse/validation, 3 invalid linking, 4 budget.
inline int exit_code(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidLinking: return 3;
        case ErrorKind::Budget: return 4;
        case ErrorKind::Internal: return 1;
        default: return 2;
    }
}

namespace detail {

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

}  // namespace detail
}  // namespace pointed
