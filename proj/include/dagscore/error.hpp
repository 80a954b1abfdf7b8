#ifndef DAGSCORE_ERROR_HPP
#define DAGSCORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dagscore {

enum class ErrorKind {
    // graph model
    DuplicateNode,
    EmptyNodeSet,
    InvalidLabel,
    UnknownNode,
    SelfLoop,
    NodeSetMismatch,
    NotADag,
    NotAPdag,
    // parsing
    SyntaxError,
    UnknownNodeInEdge,
    DuplicatePair,
    MissingNodesHeader,
    DuplicateGroupId,
    EmptyGroup,
    // scoring
    DegenerateTruth,
    InvalidTrueMark,
    NoSuchArc,
    OutOfRange,
    UnknownMetric,
    InfeasiblePlan,
    // io
    IoFailure,
};

const char* error_kind_name(ErrorKind kind);

// Single exception type for all validation failures. `line` is 1-based and
// nonzero only for parse errors.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message, int line = 0, int column = 0)
        : std::runtime_error(std::move(message)), kind_(kind), line_(line), column_(column) {}

    ErrorKind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    ErrorKind kind_;
    int line_;
    int column_;
};

} // namespace dagscore

#endif
