#include <dicirc/error.hpp>

namespace dicirc {

auto to_string(ErrorCode code) -> std::string_view
{
    switch (code) {
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::InvalidAutomorphism: return "InvalidAutomorphism";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::DisconnectedSpec: return "DisconnectedSpec";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::InvalidDivisor: return "InvalidDivisor";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotDistanceRegular: return "NotDistanceRegular";
    case ErrorCode::InvalidGroupTable: return "InvalidGroupTable";
    case ErrorCode::ParameterContradiction: return "ParameterContradiction";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string & what) :
    std::runtime_error(std::string(to_string(code)) + ": " + what),
    _code(code)
{
}

} // namespace dicirc
