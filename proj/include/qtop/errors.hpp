#pragma once

#include <stdexcept>
#include <string>

namespace qtop {

// Carrier sizes are capped so that a relation row always fits in one machine
// word. Constructors throw CapExceeded beyond the cap instead of truncating.
inline constexpr int kMaxPoints = 16;

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CapExceeded : std::length_error {
    using std::length_error::length_error;
};

struct InvalidTopologyError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotQuasiUniformityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidChainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Parse failures carry a 1-based line number (0 = not line-oriented input).
struct ParseError : std::runtime_error {
    int line;
    ParseError(int lineNo, const std::string& what)
        : std::runtime_error(lineNo > 0 ? "line " + std::to_string(lineNo) + ": " + what
                                        : what),
          line(lineNo) {}
};

}  // namespace qtop
