#include "ontolith/errors.hpp"

namespace ontolith {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::DuplicateNode: return "DuplicateNode";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::MissingEndpoint: return "MissingEndpoint";
    case ErrorCode::NonFiniteWeight: return "NonFiniteWeight";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::JsonParseError: return "JsonParseError";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnresolvedPrefix: return "UnresolvedPrefix";
    case ErrorCode::UnknownClass: return "UnknownClass";
    case ErrorCode::CyclicHierarchy: return "CyclicHierarchy";
    case ErrorCode::ProviderUnavailable: return "ProviderUnavailable";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::EmptyText: return "EmptyText";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidSchema: return "InvalidSchema";
    case ErrorCode::FragmentValidationFailed: return "FragmentValidationFailed";
    case ErrorCode::UnresolvedConflict: return "UnresolvedConflict";
    case ErrorCode::PostMergeInconsistent: return "PostMergeInconsistent";
    case ErrorCode::UnknownPredictor: return "UnknownPredictor";
    case ErrorCode::MalformedQuery: return "MalformedQuery";
    case ErrorCode::EmptyEvalSet: return "EmptyEvalSet";
    case ErrorCode::InsufficientEdges: return "InsufficientEdges";
    case ErrorCode::InsufficientNonEdges: return "InsufficientNonEdges";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::MalformedIncrement: return "MalformedIncrement";
    case ErrorCode::UnknownTask: return "UnknownTask";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::GraphTooLarge: return "GraphTooLarge";
    case ErrorCode::EmptyBatch: return "EmptyBatch";
    case ErrorCode::GeneratorUnknown: return "GeneratorUnknown";
    case ErrorCode::GoldOracleMismatch: return "GoldOracleMismatch";
    case ErrorCode::UnknownRecordId: return "UnknownRecordId";
    case ErrorCode::TaskSetMismatch: return "TaskSetMismatch";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

} // namespace ontolith
