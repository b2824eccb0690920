#pragma once

#include <stdexcept>
#include <string>

namespace ontolith {

// Every domain failure in the engine carries one of these codes so callers
// (and tests) can branch on the condition instead of parsing messages.
enum class ErrorCode {
    // graph
    DuplicateNode,
    DuplicateEdge,
    MissingEndpoint,
    NonFiniteWeight,
    UnknownNode,
    UnknownEdge,
    JsonParseError,
    // ontology
    SyntaxError,
    UnresolvedPrefix,
    UnknownClass,
    CyclicHierarchy,
    // providers
    ProviderUnavailable,
    SchemaViolation,
    EmptyText,
    DimensionMismatch,
    // construct
    InvalidSchema,
    FragmentValidationFailed,
    UnresolvedConflict,
    PostMergeInconsistent,
    // align
    UnknownPredictor,
    MalformedQuery,
    EmptyEvalSet,
    InsufficientEdges,
    InsufficientNonEdges,
    EmptyDataset,
    MalformedIncrement,
    // reason
    UnknownTask,
    InvalidParams,
    NegativeWeight,
    GraphTooLarge,
    // bench
    EmptyBatch,
    GeneratorUnknown,
    GoldOracleMismatch,
    UnknownRecordId,
    TaskSetMismatch,
    // config / io
    ConfigError,
    IoError,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace ontolith
