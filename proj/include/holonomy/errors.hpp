#pragma once

#include <stdexcept>
#include <string>

namespace holonomy {

/// Failure classes. Each maps onto one CLI exit code.
enum class ErrorKind {
    Config,     // bad parameters or malformed input files (exit 2)
    Invariant,  // a structural or numerical invariant does not hold (exit 3)
    Budget,     // schedule or size budget exceeded (exit 4)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Config: return 2;
        case ErrorKind::Invariant: return 3;
        case ErrorKind::Budget: return 4;
    }
    return 1;
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace holonomy
