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

#ifndef LWEID_LOG_HPP
#define LWEID_LOG_HPP

#include <string>

namespace lweid {

// Leveled stderr logging, controlled by LWEID_LOG in {error, info, debug};
// default info.
enum class LogLevel : int { Error = 0, Info = 1, Debug = 2 };

LogLevel log_level();
void log_error(const std::string& message);
void log_info(const std::string& message);
void log_debug(const std::string& message);

}  // namespace lweid

#endif  // LWEID_LOG_HPP
