// Copyright 2026 The graphent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace graphent {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (edge lists, calibration files, angle literals).
class ParseError : public Error {
   public:
    using Error::Error;
};

/// Well-formed input that violates a precondition.
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// A request that would exceed the configured statevector size cap.
class ResourceError : public Error {
   public:
    using Error::Error;
};

/// A circuit that cannot be represented in the requested output format.
class ExportError : public Error {
   public:
    using Error::Error;
};

}  // namespace graphent
