// SPDX-License-Identifier: Apache-2.0
//
// starvlc: STAR-RIS assisted uplink visible-light link modelling and optimization
// Copyright (C) 2026 The starvlc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef STARVLC_ERROR_HPP
#define STARVLC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace starvlc
{
    // Base of every exception thrown by the library.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Argument outside the mathematical domain of a formula (e.g. a half-angle >= 90 deg).
    class DomainError : public Error
    {
    public:
        using Error::Error;
    };

    // Coincident points, zero-length vectors and similar degenerate placements.
    class GeometryError : public Error
    {
    public:
        using Error::Error;
    };

    // Vectors that must have equal length do not.
    class LengthMismatch : public Error
    {
    public:
        using Error::Error;
    };

    // A scenario or configuration violates a named invariant.
    class ValidationError : public Error
    {
    public:
        ValidationError(const std::string &invariant, const std::string &detail)
            : Error("invalid " + invariant + ": " + detail), invariant_(invariant) {}

        const std::string &invariant() const noexcept { return invariant_; }

    private:
        std::string invariant_;
    };

    // Malformed configuration text. Carries the 1-based line number (0 when unknown) and key.
    class ParseError : public Error
    {
    public:
        ParseError(std::size_t line, const std::string &key, const std::string &what)
            : Error(format(line, key, what)), line_(line), key_(key) {}

        std::size_t line() const noexcept { return line_; }
        const std::string &key() const noexcept { return key_; }

    private:
        static std::string format(std::size_t line, const std::string &key, const std::string &what)
        {
            std::string out = "parse error";
            if (line != 0)
                out += " at line " + std::to_string(line);
            if (!key.empty())
                out += " (key '" + key + "')";
            return out + ": " + what;
        }

        std::size_t line_;
        std::string key_;
    };

    // Problem too large for exhaustive search.
    class CapExceeded : public Error
    {
    public:
        using Error::Error;
    };

    namespace detail
    {
        inline void require(bool condition, const char *message)
        {
            if (!condition)
                throw DomainError(message);
        }
    }
}

#endif
