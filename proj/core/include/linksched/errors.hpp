// Copyright 2026 The linksched Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LINKSCHED_ERRORS_HPP
#define LINKSCHED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace linksched {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: unknown vertex ids, broken files, invalid arguments.
class StructuralError : public Error {
public:
  explicit StructuralError(const std::string& what) : Error(what) {}
};

/// An enumeration cap (vertex count or set count) was exceeded.
class ResourceLimitError : public Error {
public:
  explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

/// The requested operation is undefined for this graph class
/// (e.g. the strengthened row condition on an odd cycle).
class NotApplicableError : public Error {
public:
  explicit NotApplicableError(const std::string& what) : Error(what) {}
};

/// A scheduler was invoked on demands that fail its admission condition.
class ConditionFailedError : public Error {
public:
  ConditionFailedError(const std::string& what, std::string vertex)
      : Error(what), failing_vertex(std::move(vertex)) {}

  std::string failing_vertex;
};

}  // namespace linksched

#endif  // LINKSCHED_ERRORS_HPP
