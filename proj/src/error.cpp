#include "bdc/error.hpp"

namespace bdc {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::InvalidSize: return "InvalidSize";
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::NotAForest: return "NotAForest";
        case ErrorCode::FaceCapExceeded: return "FaceCapExceeded";
        case ErrorCode::GroundSetTooLarge: return "GroundSetTooLarge";
        case ErrorCode::NotAVertex: return "NotAVertex";
        case ErrorCode::DepthCapExceeded: return "DepthCapExceeded";
        case ErrorCode::WouldGoNegative: return "WouldGoNegative";
        case ErrorCode::InvalidStar: return "InvalidStar";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::MethodMismatch: return "MethodMismatch";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::Overflow: return "Overflow";
    }
    return "Unknown";
}

}  // namespace bdc
