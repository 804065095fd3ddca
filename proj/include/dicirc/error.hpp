#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dicirc {

enum class ErrorCode {
    InvalidOrder,
    InvalidAutomorphism,
    InvalidSpec,
    ParseError,
    DisconnectedGraph,
    DisconnectedSpec,
    NotBipartite,
    IndexOutOfRange,
    ModulusMismatch,
    InvalidDivisor,
    PreconditionViolated,
    NotDistanceRegular,
    InvalidGroupTable,
    ParameterContradiction,
};

auto to_string(ErrorCode code) -> std::string_view;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string & what);

    auto code() const noexcept -> ErrorCode { return _code; }

private:
    ErrorCode _code;
};

} // namespace dicirc
