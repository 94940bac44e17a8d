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

#ifndef NEWSALYZE_INGEST_FETCHER_H_
#define NEWSALYZE_INGEST_FETCHER_H_

#include <chrono>
#include <filesystem>
#include <map>
#include <string>

#include "newsalyze/base/errors.h"

namespace newsalyze {

inline constexpr char kUserAgent[] =
    "newsalyze/1.0 (bias-aware news reader; article fetcher)";

struct RawDocument {
  std::string url;
  int http_status = 0;
  std::string content_type;
  std::string bytes;
  std::string fetched_at;
};

enum class FetchFailure {
  kInvalidUrl,
  kTimeout,
  kNotFound,
  kHttpStatus,
  kRedirectLimit,
  kNetwork,
  kOfflineMissing,
  kEmptyBody,
};

const char *FetchFailureName(FetchFailure failure);

class FetchError : public Error {
 public:
  FetchError(FetchFailure failure, const std::string &message,
             int http_status = 0);

  FetchFailure failure() const { return failure_; }
  int http_status() const { return http_status_; }

 private:
  FetchFailure failure_;
  int http_status_;
};

struct FetchOptions {
  enum class Mode { kLive, kOffline };

  Mode mode = Mode::kLive;
  // Offline fixture directory holding index.json and the fixture files.
  std::filesystem::path fixture_dir;
  std::chrono::milliseconds timeout{30000};
  int max_redirects = 5;
  std::string user_agent = kUserAgent;
};

// File name of the offline fixture for a URL: sha256(url) + ".html".
std::string FixtureFileName(const std::string &url);

// Reads fixtures/index.json (url -> file name). Missing index yields an
// empty map.
std::map<std::string, std::string> LoadFixtureIndex(
    const std::filesystem::path &fixture_dir);

// Fetches one URL. Throws FetchError.
RawDocument Fetch(const std::string &url, const FetchOptions &options);

}  // namespace newsalyze

#endif  // NEWSALYZE_INGEST_FETCHER_H_
