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

#include "newsalyze/base/errors.h"

namespace newsalyze {

const char *ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUsage: return "usage";
    case ErrorCode::kValidation: return "validation";
    case ErrorCode::kNotFound: return "not_found";
    case ErrorCode::kNotAnalyzed: return "not_analyzed";
    case ErrorCode::kVersionMismatch: return "version_mismatch";
    case ErrorCode::kContract: return "contract_violation";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kNetwork: return "network";
  }
  return "unknown";
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUsage:
      return 1;
    case ErrorCode::kIo:
    case ErrorCode::kNetwork:
      return 3;
    default:
      return 2;
  }
}

}  // namespace newsalyze
