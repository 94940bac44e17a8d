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

#ifndef NEWSALYZE_BASE_HTTP_CLIENT_H_
#define NEWSALYZE_BASE_HTTP_CLIENT_H_

#include <chrono>
#include <string>
#include <string_view>

#include "newsalyze/base/errors.h"

// Blocking HTTP client backed by libcurl.

namespace newsalyze {

struct HttpOptions {
  std::chrono::milliseconds timeout{30000};
  // Redirects followed before failing with kRedirectLimit; 0 disables
  // redirect following.
  int max_redirects = 5;
  std::string user_agent;
};

struct HttpResponse {
  long status = 0;
  std::string content_type;
  std::string body;
  std::string effective_url;
};

enum class HttpFailure { kTimeout, kRedirectLimit, kConnect, kOther };

class HttpError : public Error {
 public:
  HttpError(HttpFailure failure, const std::string &message)
      : Error(ErrorCode::kNetwork, message), failure_(failure) {}

  HttpFailure failure() const { return failure_; }

 private:
  HttpFailure failure_;
};

// Any HTTP status is returned as a response; transport failures throw
// HttpError.
HttpResponse HttpGet(const std::string &url, const HttpOptions &options);
HttpResponse HttpPostJson(const std::string &url, std::string_view json_body,
                          const HttpOptions &options);

}  // namespace newsalyze

#endif  // NEWSALYZE_BASE_HTTP_CLIENT_H_
