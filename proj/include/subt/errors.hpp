#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace subt {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GraphError : public Error {
public:
    enum class Kind { SelfLoop, VertexOutOfRange };

    GraphError(Kind kind, int vertex, const std::string& msg)
        : Error(msg), kind(kind), vertex(vertex) {}

    Kind kind;
    int vertex;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line(line) {}

    int line;
};

class PatternTooLargeError : public Error {
public:
    using Error::Error;
};

class InstanceTooLargeError : public Error {
public:
    using Error::Error;
};

/// Raised when a solver is handed a graph outside its class; carries the
/// vertices of an induced copy of the forbidden pattern.
class NotInClassError : public Error {
public:
    NotInClassError(std::string pattern, std::vector<int> witness)
        : Error("input graph contains an induced " + pattern),
          pattern(std::move(pattern)),
          witness(std::move(witness)) {}

    std::string pattern;
    std::vector<int> witness;
};

class NotATreeError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Rejection-sampling generator exhausted its draw budget.
class GiveUpError : public Error {
public:
    using Error::Error;
};

class UnknownFixtureError : public Error {
public:
    using Error::Error;
};

}  // namespace subt
