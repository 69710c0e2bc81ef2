#pragma once

#include <stdexcept>
#include <string>

namespace hopfkit {

// Base type for every error the engine raises on bad input or bad state.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Lexical or syntactic error with a source position (1-based).
struct ParseError : Error {
    int line;
    int column;
    ParseError(int line, int column, const std::string& msg)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line(line),
          column(column) {}
};

}  // namespace hopfkit
