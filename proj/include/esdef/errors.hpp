#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace esdef {

enum class ErrorCode {
    ZeroPolynomial,
    ReducibleMinimalPolynomial,
    IncompatibleFields,
    SyntaxError,
    UnknownVariable,
    DegenerateDiagram,
    NotConvenient,
    NotReduced,
    NotReducedSuspected,
    NotLocal,
    NonIsolated,
    InfiniteColength,
    InvalidTree,
    NotApplicable,
    BasisNotMonomial,
    InvalidArgument,
    InternalInconsistency,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries a stable code; the CLI maps
/// codes to exit statuses and the audit turns them into failed entries.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failures additionally remember the byte offset of the offending token.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace esdef
