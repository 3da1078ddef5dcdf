#pragma once

#include <stdexcept>
#include <string>

namespace hyperterrain {

enum class ErrorCode {
    EmptyInput,
    SelfLoop,
    DuplicateEdge,
    DisconnectedGraph,
    KOutOfRange,
    SizeLimitExceeded,
    IterationCapExceeded,
    NotMutuallyDistant,
    InvalidTree,
    InvalidParams,
    EmptySet,
    MissingDelta,
    UnknownVertex,
    NotAShortestPath,
    BadInput,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
        case ErrorCode::KOutOfRange: return "KOutOfRange";
        case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
        case ErrorCode::IterationCapExceeded: return "IterationCapExceeded";
        case ErrorCode::NotMutuallyDistant: return "NotMutuallyDistant";
        case ErrorCode::InvalidTree: return "InvalidTree";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::MissingDelta: return "MissingDelta";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::NotAShortestPath: return "NotAShortestPath";
        case ErrorCode::BadInput: return "BadInput";
    }
    return "Unknown";
}

}  // namespace hyperterrain
