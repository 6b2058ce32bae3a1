#ifndef BDC_ERROR_HPP
#define BDC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace bdc {

enum class ErrorCode {
    LoopEdge,
    DuplicateEdge,
    IndexOutOfRange,
    InvalidSize,
    InvalidSpec,
    NotAForest,
    FaceCapExceeded,
    GroundSetTooLarge,
    NotAVertex,
    DepthCapExceeded,
    WouldGoNegative,
    InvalidStar,
    HypothesisViolated,
    ParseError,
    MethodMismatch,
    InvalidParams,
    Overflow,
};

std::string_view to_string(ErrorCode code);

/// Exception type for every failure raised by the library.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace bdc

#endif  // BDC_ERROR_HPP
