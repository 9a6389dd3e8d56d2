#pragma once

#include <stdexcept>
#include <string>

namespace hokm {

enum class ErrorCode {
    invalid_argument,  // bad sizes, out-of-range indices, infeasible parameters
    parse,             // malformed input file content
    io,                // unreadable/unwritable file
    resonance,         // frequency combination below the resonance tolerance
    divergence,        // non-finite state during integration
    numeric,           // solver failure (e.g. eigensolver did not converge)
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace hokm
