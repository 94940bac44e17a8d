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

#include "newsalyze/ingest/fetcher.h"

#include "newsalyze/base/files.h"
#include "newsalyze/base/hash.h"
#include "newsalyze/base/http_client.h"
#include "newsalyze/base/time.h"
#include "newsalyze/store/codec.h"
#include "newsalyze/store/types.h"

namespace newsalyze {

namespace fs = std::filesystem;

namespace {

ErrorCode CodeForFailure(FetchFailure failure) {
  switch (failure) {
    case FetchFailure::kInvalidUrl: return ErrorCode::kValidation;
    case FetchFailure::kOfflineMissing: return ErrorCode::kIo;
    default: return ErrorCode::kNetwork;
  }
}

std::string ContentTypeForFile(const fs::path &path) {
  std::string ext = path.extension().string();
  if (ext == ".txt") return "text/plain; charset=utf-8";
  return "text/html; charset=utf-8";
}

RawDocument FetchOffline(const std::string &url, const FetchOptions &options) {
  std::map<std::string, std::string> index =
      LoadFixtureIndex(options.fixture_dir);
  auto it = index.find(url);
  fs::path file = options.fixture_dir /
                  (it != index.end() ? it->second : FixtureFileName(url));
  std::error_code ec;
  if (!fs::is_regular_file(file, ec)) {
    throw FetchError(FetchFailure::kOfflineMissing,
                     "no offline fixture for " + url + " (expected " +
                         file.string() + ")");
  }
  RawDocument doc;
  doc.url = url;
  doc.http_status = 200;
  doc.content_type = ContentTypeForFile(file);
  doc.bytes = ReadFile(file);
  doc.fetched_at = NowIso8601Utc();
  return doc;
}

RawDocument FetchLive(const std::string &url, const FetchOptions &options) {
  HttpOptions http;
  http.timeout = options.timeout;
  http.max_redirects = options.max_redirects;
  http.user_agent = options.user_agent;
  HttpResponse response;
  try {
    response = HttpGet(url, http);
  } catch (const HttpError &e) {
    switch (e.failure()) {
      case HttpFailure::kTimeout:
        throw FetchError(FetchFailure::kTimeout, e.what());
      case HttpFailure::kRedirectLimit:
        throw FetchError(FetchFailure::kRedirectLimit, e.what());
      default:
        throw FetchError(FetchFailure::kNetwork, e.what());
    }
  }
  int status = static_cast<int>(response.status);
  if (status == 404) {
    throw FetchError(FetchFailure::kNotFound, url + ": HTTP 404", status);
  }
  if (status < 200 || status > 299) {
    throw FetchError(FetchFailure::kHttpStatus,
                     url + ": HTTP " + std::to_string(status), status);
  }
  RawDocument doc;
  doc.url = url;
  doc.http_status = status;
  doc.content_type = response.content_type;
  doc.bytes = std::move(response.body);
  doc.fetched_at = NowIso8601Utc();
  return doc;
}

}  // namespace

const char *FetchFailureName(FetchFailure failure) {
  switch (failure) {
    case FetchFailure::kInvalidUrl: return "invalid-url";
    case FetchFailure::kTimeout: return "timeout";
    case FetchFailure::kNotFound: return "not-found";
    case FetchFailure::kHttpStatus: return "http-status";
    case FetchFailure::kRedirectLimit: return "redirect-limit";
    case FetchFailure::kNetwork: return "network";
    case FetchFailure::kOfflineMissing: return "offline-missing";
    case FetchFailure::kEmptyBody: return "empty-body";
  }
  return "unknown";
}

FetchError::FetchError(FetchFailure failure, const std::string &message,
                       int http_status)
    : Error(CodeForFailure(failure), message),
      failure_(failure),
      http_status_(http_status) {}

std::string FixtureFileName(const std::string &url) {
  return Sha256Hex(url) + ".html";
}

std::map<std::string, std::string> LoadFixtureIndex(const fs::path &dir) {
  fs::path path = dir / "index.json";
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) return {};
  return ParseJsonAs<std::map<std::string, std::string>>(ReadFile(path),
                                                         path.string());
}

RawDocument Fetch(const std::string &url, const FetchOptions &options) {
  if (!IsValidAbsoluteUrl(url)) {
    throw FetchError(FetchFailure::kInvalidUrl, "invalid url: " + url);
  }
  RawDocument doc = options.mode == FetchOptions::Mode::kOffline
                        ? FetchOffline(url, options)
                        : FetchLive(url, options);
  if (doc.bytes.empty()) {
    throw FetchError(FetchFailure::kEmptyBody, url + ": empty response body",
                     doc.http_status);
  }
  return doc;
}

}  // namespace newsalyze
