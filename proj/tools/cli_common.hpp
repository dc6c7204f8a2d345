// Copyright 2026 The polarsfp Authors
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

#pragma once

#include <filesystem>
#include <functional>
#include <mutex>
#include <ostream>
#include <string>
#include <vector>

#include "polarsfp/error.hpp"

namespace polarsfp::cli {

namespace fs = std::filesystem;

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
  kExitEvaluation = 3,
};

/// Bad command-line usage detected after flag parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Runs `body`, translating library exceptions into exit codes and a one-line
/// message on `err`.
int guarded(std::ostream& err, const std::function<int()>& body);

/// Records files a command creates. Unless commit() is called, the destructor
/// deletes them so a failed command leaves no partial output behind.
class OutputTransaction {
 public:
  OutputTransaction() = default;
  OutputTransaction(const OutputTransaction&) = delete;
  OutputTransaction& operator=(const OutputTransaction&) = delete;
  ~OutputTransaction();

  /// Registers `path` and returns it. Call before writing the file.
  fs::path add(const fs::path& path);
  void commit() noexcept { committed_ = true; }

 private:
  std::mutex mu_;
  std::vector<fs::path> paths_;
  bool committed_ = false;
};

/// Creates `dir` (and parents). Throws IoError on failure.
void ensure_directory(const fs::path& dir);

/// Runs body(i) for i in [0, count) on up to `jobs` threads. The first
/// exception (lowest index) is rethrown after all workers finish.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body);

/// "11.25,22.5" -> {11.25, 22.5}
std::vector<double> parse_thresholds(const std::string& text);

}  // namespace polarsfp::cli
