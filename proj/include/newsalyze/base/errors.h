// Copyright 2026 The Newsalyze Authors.
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

#ifndef NEWSALYZE_BASE_ERRORS_H_
#define NEWSALYZE_BASE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace newsalyze {

// Error categories. The CLI maps these onto its exit-code contract.
enum class ErrorCode {
  kUsage,
  kValidation,
  kNotFound,
  kNotAnalyzed,
  kVersionMismatch,
  kContract,
  kIo,
  kNetwork,
};

const char *ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Process exit status for an error: 1 usage, 2 data/validation, 3 I/O-network.
int ExitCodeFor(ErrorCode code);

}  // namespace newsalyze

#endif  // NEWSALYZE_BASE_ERRORS_H_
