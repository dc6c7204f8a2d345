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

#include "cli_common.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "polarsfp/keyvalue.hpp"

namespace polarsfp::cli {

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const EvaluationError& e) {
    err << "evaluation error: " << e.what() << "\n";
    return kExitEvaluation;
  } catch (const Error& e) {
    err << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
}

OutputTransaction::~OutputTransaction() {
  if (committed_) return;
  for (const auto& p : paths_) {
    std::error_code ec;
    fs::remove(p, ec);
    auto tmp = p;
    tmp += ".tmp";
    fs::remove(tmp, ec);
  }
}

fs::path OutputTransaction::add(const fs::path& path) {
  std::lock_guard lock(mu_);
  paths_.push_back(path);
  return paths_.back();
}

void ensure_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
  const auto workers = static_cast<std::size_t>(std::clamp<std::size_t>(
      jobs < 1 ? 1 : static_cast<std::size_t>(jobs), 1, std::max<std::size_t>(count, 1)));
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<double> parse_thresholds(const std::string& text) {
  std::vector<double> out;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const auto tok = kv::trim(rest.substr(0, comma));
    try {
      out.push_back(kv::to_double("thresholds", tok));
    } catch (const ConfigError& e) {
      throw UsageError(e.what());
    }
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (!(out[i] > out[i - 1])) throw UsageError("thresholds must be strictly increasing");
  }
  return out;
}

}  // namespace polarsfp::cli
