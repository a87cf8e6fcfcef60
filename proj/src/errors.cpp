#include "esdef/errors.hpp"

namespace esdef {

std::string_view error_code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ReducibleMinimalPolynomial: return "ReducibleMinimalPolynomial";
    case ErrorCode::IncompatibleFields: return "IncompatibleFields";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::DegenerateDiagram: return "DegenerateDiagram";
    case ErrorCode::NotConvenient: return "NotConvenient";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::NotReducedSuspected: return "NotReducedSuspected";
    case ErrorCode::NotLocal: return "NotLocal";
    case ErrorCode::NonIsolated: return "NonIsolated";
    case ErrorCode::InfiniteColength: return "InfiniteColength";
    case ErrorCode::InvalidTree: return "InvalidTree";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::BasisNotMonomial: return "BasisNotMonomial";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

}  // namespace esdef
