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

#ifndef NEWSALYZE_BASE_TIME_H_
#define NEWSALYZE_BASE_TIME_H_

#include <string>
#include <string_view>

namespace newsalyze {

// Current time as "YYYY-MM-DDTHH:MM:SSZ".
std::string NowIso8601Utc();

// True for "YYYY-MM-DD" with plausible month and day ranges.
bool IsIsoDate(std::string_view text);

}  // namespace newsalyze

#endif  // NEWSALYZE_BASE_TIME_H_
