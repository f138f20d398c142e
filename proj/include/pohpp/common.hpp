#pragma once

#include <stdexcept>
#include <string>

namespace pohpp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The input precedence pairs contain a cycle through distinct elements.
struct CycleDetected : Error {
    using Error::Error;
};

// An exhaustive routine was asked to run beyond its configured cap.
struct SizeGuard : Error {
    using Error::Error;
};

// A DP would allocate or fill more state entries than the configured budget.
struct StateBudgetExceeded : Error {
    using Error::Error;
};

struct NotOuterplanar : Error {
    using Error::Error;
};

struct NotOriented : Error {
    using Error::Error;
};

struct BadColoring : Error {
    using Error::Error;
};

struct BadParams : Error {
    using Error::Error;
};

struct NoFeasibleStrategy : Error {
    using Error::Error;
};

struct NotAPermutation : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& reason)
        : Error("parse error at line " + std::to_string(line_) + ": " + reason), line(line_) {}
};

// Internal invariant violation; always checked, also in release builds.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

#define POHPP_CHECK(cond, msg) \
    do { \
        if (!(cond)) throw ::pohpp::InternalError(std::string("invariant failed: ") + (msg)); \
    } while (0)

}  // namespace pohpp
