#pragma once

#include <stdexcept>
#include <string>

namespace vdec {

enum class Errc {
    SelfLoop,
    DuplicateEdge,
    VertexOutOfRange,
    NotConnected,
    HasCycle,
    TooSmall,
    UncoloredEdge,
    InvalidColor,
    IndistinguishableByStructure,
    Infeasible,
    BudgetExceeded,
    StructurallyUncolorable,
    HypothesisViolated,
    InternalCaseExhaustion,
    NotFound,
    InvalidShape,
    NotSpanningTree,
    IsTree,
    RebalanceFailed,
    ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace vdec
