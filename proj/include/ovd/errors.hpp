#pragma once

#include <stdexcept>
#include <string>

namespace ovd {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// min common-one index requested for an orthogonal tuple
struct UndefinedIndexError : std::logic_error {
    using std::logic_error::logic_error;
};

struct ExhaustionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

struct SizeGuardError : std::runtime_error {
    SizeGuardError(const std::string& msg, long long predicted_vertices, long long predicted_edges)
        : std::runtime_error(msg),
          predicted_vertices(predicted_vertices),
          predicted_edges(predicted_edges) {}
    long long predicted_vertices;
    long long predicted_edges;
};

struct DisconnectedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace ovd
