// Copyright 2026 The mcdm-rank Authors.
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

#ifndef MCDM_ERROR_HPP_
#define MCDM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace mcdm {

// Validation errors come from bad input or configuration; computation errors
// from inputs that are well formed but mathematically degenerate.
enum class ErrorKind { kValidation, kComputation };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error ValidationError(const std::string& message) {
  return Error(ErrorKind::kValidation, message);
}

inline Error ComputationError(const std::string& message) {
  return Error(ErrorKind::kComputation, message);
}

}  // namespace mcdm

#endif  // MCDM_ERROR_HPP_
