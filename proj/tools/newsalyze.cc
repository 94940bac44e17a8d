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

// newsalyze: operator entry point for ingesting, analyzing, serving and
// exporting news topics.
//
// Exit codes: 0 success, 1 usage error, 2 data or validation error,
// 3 I/O or network error.

#include <csignal>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "newsalyze/base/errors.h"
#include "newsalyze/base/files.h"
#include "newsalyze/ingest/fetcher.h"
#include "newsalyze/pipeline/pipeline.h"
#include "newsalyze/serve/server.h"
#include "newsalyze/store/codec.h"
#include "newsalyze/store/store.h"

namespace newsalyze {
namespace {

std::string EnvOr(const char *name, const std::string &fallback) {
  const char *value = std::getenv(name);
  return value != nullptr && *value != '\0' ? value : fallback;
}

struct GlobalFlags {
  std::string store = EnvOr("NEWSALYZE_STORE", "newsalyze-store");
  std::string data_dir;
};

Resources LoadResources(const GlobalFlags &flags) {
  std::filesystem::path dir = flags.data_dir;
  return Resources::Load(dir.empty() ? DefaultDataDir() : dir);
}

struct IngestFlags {
  std::string config_path;
  std::string offline_dir;
  int concurrency = 4;
};

int RunIngest(const GlobalFlags &global, const IngestFlags &flags) {
  TopicConfig config =
      ParseJsonAs<TopicConfig>(ReadFile(flags.config_path), flags.config_path);
  config.Validate();
  FetchOptions fetch;
  if (!flags.offline_dir.empty()) {
    fetch.mode = FetchOptions::Mode::kOffline;
    fetch.fixture_dir = flags.offline_dir;
  }
  Store store(global.store);
  FileLock lock(store.LockPath());
  IngestReport report = IngestTopic(store, config, fetch, flags.concurrency);

  std::optional<ErrorCode> first_failure;
  for (const UrlOutcome &outcome : report.outcomes) {
    if (outcome.ok) {
      std::cerr << "ok     " << outcome.url << " -> " << outcome.article_id
                << (outcome.is_new ? " (new)" : " (unchanged)") << "\n";
    } else {
      std::cerr << "FAILED " << outcome.url << ": " << outcome.error << "\n";
      if (!first_failure) first_failure = outcome.error_code;
    }
  }
  std::cerr << "topic " << config.topic_id << ": " << report.stored() << " of "
            << report.outcomes.size() << " articles stored, "
            << report.created() << " new\n";
  if (report.stored() == 0) {
    return first_failure ? ExitCodeFor(*first_failure) : 2;
  }
  return 0;
}

struct AnalyzeFlags {
  std::string topic;
  std::string scorer = "lexicon";
  std::string endpoint;
  int remote_timeout_ms = 10000;
  int remote_concurrency = 4;
  std::string annotator_endpoint;
  std::optional<int> top_k;
  std::optional<double> merge_threshold;
  std::optional<int> negation_window;
  std::optional<double> neutral_band;
  bool include_self_tokens = false;
};

int RunAnalyze(const GlobalFlags &global, const AnalyzeFlags &flags) {
  if (flags.scorer == "remote" && flags.endpoint.empty()) {
    throw Error(ErrorCode::kUsage, "--scorer remote requires --endpoint");
  }
  Store store(global.store);
  FileLock lock(store.LockPath());
  TopicConfig config = store.GetTopicConfig(flags.topic);

  // Command-line values override the topic config; the bundle records the
  // effective parameters.
  AnalysisParams params = config.analysis_params;
  if (flags.top_k) params.top_k_concepts = *flags.top_k;
  if (flags.merge_threshold) params.merge_threshold = *flags.merge_threshold;
  if (flags.negation_window) params.negation_window = *flags.negation_window;
  if (flags.neutral_band) params.neutral_band = *flags.neutral_band;
  if (flags.include_self_tokens) params.include_self_tokens = true;
  params.Validate();

  AnalyzeOptions options;
  if (flags.scorer == "remote") {
    options.scorer.kind = ScorerChoice::Kind::kRemote;
    options.scorer.remote.endpoint = flags.endpoint;
    options.scorer.remote.timeout =
        std::chrono::milliseconds(flags.remote_timeout_ms);
    options.scorer.remote.concurrency = flags.remote_concurrency;
  }
  if (!flags.annotator_endpoint.empty()) {
    options.annotator = RemoteAnnotatorOptions{flags.annotator_endpoint};
  }

  Resources resources = LoadResources(global);
  AnalysisBundle bundle =
      AnalyzeTopic(store, flags.topic, params, resources, options);
  auto [unused_config, articles] = store.LoadTopic(flags.topic);
  std::cout << FormatConceptTable(bundle, articles);

  int fallbacks = 0;
  for (const auto &[article_id, scored] : bundle.mentions_by_article) {
    for (const ScoredMention &s : scored) {
      fallbacks += s.polarity.scorer == kLexiconFallbackScorer;
    }
  }
  if (fallbacks > 0) {
    std::cerr << fallbacks
              << " mentions fell back to lexicon scoring after remote "
                 "scorer failures\n";
  }
  std::cerr << "bundle written to " << store.BundlePath(flags.topic).string()
            << "\n";
  return 0;
}

struct ServeFlags {
  int port = std::atoi(EnvOr("NEWSALYZE_PORT", "8080").c_str());
  std::string host = "127.0.0.1";
  std::string cors_origin;
  std::string static_dir;
  int watch_interval_ms = 2000;
};

int RunServe(const GlobalFlags &global, const ServeFlags &flags) {
  ServerOptions options;
  options.store_root = global.store;
  options.host = flags.host;
  options.port = flags.port;
  options.cors_origin = flags.cors_origin;
  options.static_dir = flags.static_dir;
  options.watch_interval = std::chrono::milliseconds(flags.watch_interval_ms);

  // Signals are blocked in every thread and collected here, so shutdown runs
  // in ordinary thread context.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  ApiServer server(options);
  int port = server.Start();
  std::cerr << "serving " << global.store << " on http://" << flags.host
            << ":" << port << "\n";
  int received = 0;
  sigwait(&signals, &received);
  std::cerr << "shutting down\n";
  server.Stop();
  return 0;
}

struct ExportFlags {
  std::string topic;
  std::string format;
  std::string out;
};

int RunExport(const GlobalFlags &global, const ExportFlags &flags) {
  Store store(global.store);
  FileLock lock(store.LockPath());
  AnalysisBundle bundle = store.GetBundle(flags.topic);
  std::string contents;
  if (flags.format == "json") {
    contents = DumpJson(Json(bundle));
  } else {
    auto [config, articles] = store.LoadTopic(flags.topic);
    contents = ExportCsv(bundle, articles);
  }
  WriteFileAtomic(flags.out, contents);
  std::cerr << "wrote " << flags.out << "\n";
  return 0;
}

int Main(int argc, char **argv) {
  CLI::App app{"Bias-aware news analysis engine"};
  app.require_subcommand(1);
  GlobalFlags global;
  app.add_option("--store", global.store,
                 "Store directory (default $NEWSALYZE_STORE or "
                 "./newsalyze-store)");
  app.add_option("--data-dir", global.data_dir,
                 "Directory with lexicon, gazetteer and word lists");

  IngestFlags ingest;
  CLI::App *ingest_cmd =
      app.add_subcommand("ingest", "Fetch, extract and store a topic's URLs");
  ingest_cmd->add_option("--topic", ingest.config_path, "Topic config file")
      ->required()
      ->check(CLI::ExistingFile);
  ingest_cmd->add_option("--offline", ingest.offline_dir,
                         "Read pages from a fixture directory instead of "
                         "the network")
      ->check(CLI::ExistingDirectory);
  ingest_cmd->add_option("--concurrency", ingest.concurrency,
                         "Fetches in flight")
      ->check(CLI::Range(1, 64));

  AnalyzeFlags analyze;
  CLI::App *analyze_cmd =
      app.add_subcommand("analyze", "Analyze a stored topic");
  analyze_cmd->add_option("--topic", analyze.topic, "Topic id")->required();
  analyze_cmd->add_option("--scorer", analyze.scorer, "Sentiment scorer")
      ->check(CLI::IsMember({"lexicon", "remote"}));
  analyze_cmd->add_option("--endpoint", analyze.endpoint,
                          "Remote scorer URL");
  analyze_cmd->add_option("--remote-timeout-ms", analyze.remote_timeout_ms,
                          "Remote scorer timeout per request")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--remote-concurrency", analyze.remote_concurrency,
                          "Remote requests in flight")
      ->check(CLI::Range(1, 64));
  analyze_cmd->add_option("--annotator-endpoint", analyze.annotator_endpoint,
                          "External annotator URL replacing the rule-based "
                          "preprocessor");
  analyze_cmd->add_option("--top-k", analyze.top_k,
                          "Concepts per histogram");
  analyze_cmd->add_option("--merge-threshold", analyze.merge_threshold,
                          "Fuzzy merge similarity threshold");
  analyze_cmd->add_option("--negation-window", analyze.negation_window,
                          "Tokens before a hit searched for negators");
  analyze_cmd->add_option("--neutral-band", analyze.neutral_band,
                          "Half-width of the neutral score band");
  analyze_cmd->add_flag("--include-self-tokens", analyze.include_self_tokens,
                        "Let a mention's own tokens contribute sentiment");

  ServeFlags serve;
  CLI::App *serve_cmd = app.add_subcommand("serve", "Serve the read-only API");
  serve_cmd->add_option("--port", serve.port,
                        "Port (default $NEWSALYZE_PORT or 8080)")
      ->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--store", global.store, "Store directory");
  serve_cmd->add_option("--host", serve.host, "Bind address");
  serve_cmd->add_option("--cors-origin", serve.cors_origin,
                        "Allowed cross-origin caller (UI origin)");
  serve_cmd->add_option("--static-dir", serve.static_dir,
                        "UI assets served at /")
      ->check(CLI::ExistingDirectory);
  serve_cmd->add_option("--watch-interval-ms", serve.watch_interval_ms,
                        "Store polling interval, 0 disables")
      ->check(CLI::NonNegativeNumber);

  ExportFlags export_flags;
  CLI::App *export_cmd =
      app.add_subcommand("export", "Export a topic's analysis");
  export_cmd->add_option("--topic", export_flags.topic, "Topic id")
      ->required();
  export_cmd->add_option("--format", export_flags.format, "json or csv")
      ->required()
      ->check(CLI::IsMember({"json", "csv"}));
  export_cmd->add_option("--out", export_flags.out, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int status = app.exit(e);
    return status == 0 ? 0 : 1;
  }

  try {
    if (*ingest_cmd) return RunIngest(global, ingest);
    if (*analyze_cmd) return RunAnalyze(global, analyze);
    if (*serve_cmd) return RunServe(global, serve);
    if (*export_cmd) return RunExport(global, export_flags);
  } catch (const Error &e) {
    std::cerr << "newsalyze: " << ErrorCodeName(e.code()) << ": " << e.what()
              << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception &e) {
    std::cerr << "newsalyze: " << e.what() << "\n";
    return 3;
  }
  return 1;
}

}  // namespace
}  // namespace newsalyze

int main(int argc, char **argv) { return newsalyze::Main(argc, argv); }
