// Copyright (C) 2026 The detens authors
//
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <stdexcept>
#include <string>

namespace detens {

/// Base class of every error thrown by the toolkit.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input document (XML, JSON, JSON-lines). Carries a 1-based line
/// number when one is known, -1 otherwise.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg, int line = -1)
        : Error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// A value, parameter, or structural invariant was violated.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A container or file format problem: bad magic, unsupported version,
/// truncation, dimension mismatch.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Inputs that must agree on keys or ordering do not.
class AlignmentError : public Error {
public:
    using Error::Error;
};

}  // namespace detens
