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

#ifndef NEWSALYZE_BASE_FILES_H_
#define NEWSALYZE_BASE_FILES_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace newsalyze {

// Reads a whole file. Throws Error(kIo) on failure.
std::string ReadFile(const std::filesystem::path &path);

// Writes to a temporary sibling and renames it over the target, so readers
// never observe a partially written file. Creates parent directories.
void WriteFileAtomic(const std::filesystem::path &path,
                     std::string_view contents);

// Reads a line-per-entry data file. Blank lines and lines starting with '#'
// are skipped; trailing whitespace is trimmed.
std::vector<std::string> ReadDataLines(const std::filesystem::path &path);

// Advisory exclusive lock on a lock file, held for the object's lifetime.
class FileLock {
 public:
  // Throws Error(kIo) if the lock is held by another process.
  explicit FileLock(const std::filesystem::path &path);
  ~FileLock();

  FileLock(const FileLock &) = delete;
  FileLock &operator=(const FileLock &) = delete;

 private:
  int fd_ = -1;
};

}  // namespace newsalyze

#endif  // NEWSALYZE_BASE_FILES_H_
