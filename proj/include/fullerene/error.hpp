// Copyright 2026 The Fullerene Cuts Authors.
//
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

#ifndef FULLERENE_ERROR_HPP_
#define FULLERENE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fullerene {

enum class ErrorCode {
  kNonCubic,
  kTraversalDiverged,
  kAcyclic,
  kUnknownEdge,
  kSearchExhausted,
  kBadCycle,
  kDichotomyViolated,
  kInconsistentStructure,
  kNoRings,
  kNotSingleCycle,
  kNotSpanning,
  kPatternMismatch,
  kBudgetExceeded,
  kOddCycle,
  kParseError,
  kRotationInconsistent,
  kBadHeader,
  kTruncatedRecord,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (and tests) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Input-format failure with the 1-based line (or byte offset for binary
// formats) at which parsing stopped.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + reason),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace fullerene

#endif  // FULLERENE_ERROR_HPP_
