#pragma once

#include <stdexcept>
#include <string>

namespace due {

enum class errc {
    empty_input,
    invalid_character,
    position_out_of_range,
    malformed_unary,
    not_byte_aligned,
    width_exceeded,
    budget_exceeded,
    length_mismatch,
    non_closure,
    malformed_construct,
    parse_error,
};

inline const char* to_string(errc code) noexcept {
    switch (code) {
        case errc::empty_input: return "empty input";
        case errc::invalid_character: return "invalid character";
        case errc::position_out_of_range: return "position out of range";
        case errc::malformed_unary: return "malformed unary code";
        case errc::not_byte_aligned: return "length not a multiple of 8";
        case errc::width_exceeded: return "integer width exceeded";
        case errc::budget_exceeded: return "enumeration budget exceeded";
        case errc::length_mismatch: return "length mismatch";
        case errc::non_closure: return "orbit did not close";
        case errc::malformed_construct: return "malformed construct";
        case errc::parse_error: return "parse error";
    }
    return "unknown error";
}

// Single exception type for the library; callers branch on code().
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

    // Resource-style failures, as opposed to bad input.
    bool is_resource() const noexcept {
        return code_ == errc::budget_exceeded || code_ == errc::non_closure;
    }

private:
    errc code_;
};

}  // namespace due
