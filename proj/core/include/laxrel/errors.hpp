/*
 *   Copyright 2026 The laxrel authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace laxrel {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
	explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input: mismatched sets or quantales, unresolved references,
/// invalid construction data (e.g. a non-associative monoid table).
class InputError : public Error {
public:
	explicit InputError(const std::string& msg) : Error(msg) {}
};

/// An enumeration would materialize more elements than the configured cap,
/// or a fixpoint iteration exceeded its bound.
class CapError : public Error {
public:
	explicit CapError(const std::string& msg) : Error(msg) {}
};

} // namespace laxrel
