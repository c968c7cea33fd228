// Copyright 2026 The semicycle Authors
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

#ifndef SEMICYCLE_ERRORS_H_
#define SEMICYCLE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace semicycle {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The monotone threshold iteration did not settle within its budget.
class IterationLimitError : public Error {
 public:
  IterationLimitError(const std::string& what, double previous, double last)
      : Error(what), previous_(previous), last_(last) {}
  double previous() const { return previous_; }
  double last() const { return last_; }

 private:
  double previous_;
  double last_;
};

// A delayed argument reached below the supplied initial data.
class HistoryError : public Error {
 public:
  using Error::Error;
};

// Two events are closer than the requested resolution allows.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

// The observed window is too short to support a verdict.
class InsufficientWindowError : public Error {
 public:
  using Error::Error;
};

// The shooting oracle could not bracket the boundary value problem.
class OracleError : public Error {
 public:
  using Error::Error;
};

// An iterative special-function evaluation failed to converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// The hypotheses of a check do not hold for the supplied data.
class NotApplicableError : public Error {
 public:
  using Error::Error;
};

}  // namespace semicycle

#endif  // SEMICYCLE_ERRORS_H_
