// Copyright 2026 The lweid Authors.
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

#include "lweid/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace lweid {

LogLevel log_level() {
  static LogLevel level = [] {
    const char* env = std::getenv("LWEID_LOG");
    if (env) {
      if (std::strcmp(env, "error") == 0) return LogLevel::Error;
      if (std::strcmp(env, "debug") == 0) return LogLevel::Debug;
    }
    return LogLevel::Info;
  }();
  return level;
}

namespace {
void emit(const char* prefix, const std::string& message) {
  std::fprintf(stderr, "[%s] %s\n", prefix, message.c_str());
  std::fflush(stderr);
}
}  // namespace

void log_error(const std::string& message) { emit("error", message); }

void log_info(const std::string& message) {
  if (log_level() >= LogLevel::Info) emit("info", message);
}

void log_debug(const std::string& message) {
  if (log_level() >= LogLevel::Debug) emit("debug", message);
}

}  // namespace lweid
