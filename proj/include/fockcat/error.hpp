#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace fockcat {

/// Stable machine-readable failure categories, surfaced verbatim by the CLI.
enum class ErrorCode { Parse, ComposeConst, Cutoff, Size, Diverged, Input };

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::Parse: return "PARSE";
        case ErrorCode::ComposeConst: return "COMPOSE_CONST";
        case ErrorCode::Cutoff: return "CUTOFF";
        case ErrorCode::Size: return "SIZE";
        case ErrorCode::Diverged: return "DIVERGED";
        case ErrorCode::Input: return "INPUT";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, std::optional<std::size_t> position = std::nullopt)
        : std::runtime_error(std::move(message)), code_(code), position_(position) {}

    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }
    std::optional<std::size_t> position() const { return position_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> position_;
};

}  // namespace fockcat
