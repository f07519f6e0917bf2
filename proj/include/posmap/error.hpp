// Copyright 2026 The posmap Authors
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

#ifndef POSMAP_ERROR_HPP
#define POSMAP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace posmap {

/// Broad failure categories. The CLI maps these onto its exit codes.
enum class ErrorKind {
  kParse,         // malformed input file or JSON
  kConvergence,   // an iteration ran out of budget
  kPrecondition,  // inputs violate an operation's contract
  kNumerical,     // a spectral condition failed (not PSD, singular, ...)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a matrix fails a PSD/PD test. Carries the eigenvalue that
/// triggered the failure.
class SpectrumError : public Error {
 public:
  SpectrumError(const std::string& what, double eigenvalue)
      : Error(ErrorKind::kNumerical, what), eigenvalue_(eigenvalue) {}

  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

inline Error precondition_error(const std::string& what) {
  return Error(ErrorKind::kPrecondition, what);
}

inline Error parse_error(const std::string& what) {
  return Error(ErrorKind::kParse, what);
}

}  // namespace posmap

#endif  // POSMAP_ERROR_HPP
