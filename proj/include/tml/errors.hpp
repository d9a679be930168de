#pragma once

#include <stdexcept>
#include <string>

namespace tml {

// Source position, 1-based. line == 0 means "unknown".
struct SourceLoc {
    int line = 0;
    int col = 0;
    bool known() const { return line > 0; }
    std::string str() const {
        return std::to_string(line) + ":" + std::to_string(col);
    }
};

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg, SourceLoc loc = {})
        : std::runtime_error(msg), loc_(loc) {}
    SourceLoc loc() const { return loc_; }

private:
    SourceLoc loc_;
};

class ParseError : public Error {
    using Error::Error;
};

// Static errors raised while type-checking a program.
class TypeError : public Error {
    using Error::Error;
};
class UnboundIdentifier : public TypeError {
    using TypeError::TypeError;
};
class UnknownConstant : public TypeError {
    using TypeError::TypeError;
};
class UnifyMismatch : public TypeError {
    using TypeError::TypeError;
};
class OccursCheckError : public TypeError {
    using TypeError::TypeError;
};
class TopoMismatch : public TypeError {
    using TypeError::TypeError;
};
// Misuse of a neighborhood operator (outside a transformation, or with a
// first argument that is not a pattern variable). Caught post-parse.
class PositionalOpError : public TypeError {
    using TypeError::TypeError;
};

// Runtime errors raised while evaluating a program.
class EvalError : public Error {
    using Error::Error;
};
class DivisionByZero : public EvalError {
    using EvalError::EvalError;
};
class EmptyCollectionError : public EvalError {
    using EvalError::EvalError;
};
class GridUnsupportedOp : public EvalError {
    using EvalError::EvalError;
};
class InvalidPosition : public EvalError {
    using EvalError::EvalError;
};
class IncomparableValue : public EvalError {
    using EvalError::EvalError;
};
class DirectionTopologyMismatch : public EvalError {
    using EvalError::EvalError;
};
class NoNeighbor : public EvalError {
    using EvalError::EvalError;
};
class PositionalArgError : public EvalError {
    using EvalError::EvalError;
};
class StructuralError : public EvalError {
    using EvalError::EvalError;
};
class FixpointDivergence : public EvalError {
    using EvalError::EvalError;
};

}  // namespace tml
