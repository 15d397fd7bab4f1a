#pragma once

#include <stdexcept>
#include <string>

namespace subchord {

// Stable error identifiers; the CLI maps any Error to exit code 2 and
// prints the code name, so scripts can match on it.
enum class Errc {
    label_not_twice,
    empty_token,
    bound_exceeded,
    not_realizable,
    non_integral,
    embedding_mismatch,
    site_invalid,
    postcondition_violation,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::label_not_twice: return "LABEL_NOT_TWICE";
    case Errc::empty_token: return "EMPTY_TOKEN";
    case Errc::bound_exceeded: return "BOUND_EXCEEDED";
    case Errc::not_realizable: return "NOT_REALIZABLE";
    case Errc::non_integral: return "NON_INTEGRAL";
    case Errc::embedding_mismatch: return "EMBEDDING_MISMATCH";
    case Errc::site_invalid: return "SITE_INVALID";
    case Errc::postcondition_violation: return "POSTCONDITION_VIOLATION";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }
    const char* code_name() const noexcept { return errc_name(code_); }

private:
    Errc code_;
};

} // namespace subchord
