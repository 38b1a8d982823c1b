// Copyright (c) the owlfol contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace owlfol {

// Base class for everything this library throws on bad input.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax-level failure. line/col are 1-based; 0 means "not tracked".
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line = 0, std::size_t col = 0)
        : Error(format(msg, line, col)), line_(line), col_(col) {}

    std::size_t line() const { return line_; }
    std::size_t col() const { return col_; }

private:
    static std::string format(const std::string& msg, std::size_t line, std::size_t col) {
        if (line == 0) return msg;
        return msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")";
    }

    std::size_t line_;
    std::size_t col_;
};

// OWL to FOL mapping failure (unsupported construct, reserved vocabulary, ...).
class TranslateError : public Error {
public:
    explicit TranslateError(const std::string& msg) : Error(msg) {}
};

} // namespace owlfol
