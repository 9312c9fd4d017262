#pragma once

#include <stdexcept>
#include <string>

namespace dpc {

enum class Errc {
    NonSymmetricAdjacency,
    SelfLoop,
    DuplicateNeighbor,
    NonPlanarEmbedding,
    InvalidVertex,
    MaxLenTooLarge,
    NotAMatching,
    UnknownColor,
    UnknownEdge,
    NotPermutationCover,
    DisconnectedBase,
    DisconnectedInput,
    BudgetExceeded,
    NotWithinMax,
    PreconditionViolated,
    AdjacentSmallCycles,
    MalformedQuery,
    EmptyGraph,
    ParseError,
    InvalidArgument,
};

inline const char* errc_name(Errc c)
{
    switch (c) {
    case Errc::NonSymmetricAdjacency: return "NonSymmetricAdjacency";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateNeighbor: return "DuplicateNeighbor";
    case Errc::NonPlanarEmbedding: return "NonPlanarEmbedding";
    case Errc::InvalidVertex: return "InvalidVertex";
    case Errc::MaxLenTooLarge: return "MaxLenTooLarge";
    case Errc::NotAMatching: return "NotAMatching";
    case Errc::UnknownColor: return "UnknownColor";
    case Errc::UnknownEdge: return "UnknownEdge";
    case Errc::NotPermutationCover: return "NotPermutationCover";
    case Errc::DisconnectedBase: return "DisconnectedBase";
    case Errc::DisconnectedInput: return "DisconnectedInput";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotWithinMax: return "NotWithinMax";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::AdjacentSmallCycles: return "AdjacentSmallCycles";
    case Errc::MalformedQuery: return "MalformedQuery";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "?";
}

struct Error : std::runtime_error {
    Errc code;
    Error(Errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code(c) {}
};

// Raised when a greedy-extension query fails one of the three ordering
// conditions; records which condition and the vertex it failed at.
struct PreconditionError : Error {
    int condition;
    int vertex;
    PreconditionError(int cond, int v, const std::string& what)
        : Error(Errc::PreconditionViolated, what), condition(cond), vertex(v) {}
};

} // namespace dpc
