// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cvd {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Undecodable external data (PNG bytes, stylesheet structure).
class FormatError : public Error {
public:
    FormatError(std::string message, std::size_t offset)
        : Error(std::move(message)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Well-formed input that violates a documented contract (bad hex, duplicate id, unknown token).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Broken internal consistency, e.g. an occurrence span that no longer matches its text.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace cvd
