// SPDX-License-Identifier: Apache-2.0
//
// uavirs: trajectory, phase-shift and scheduling design for UAV-assisted
// IRS symbiotic radio
// Copyright (C) 2026 The uavirs authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "log.hpp"

#include <spdlog/sinks/stdout_sinks.h>

#include <cstdlib>
#include <string>

namespace uavirs
{

std::shared_ptr<spdlog::logger> logger()
{
    static const std::shared_ptr<spdlog::logger> log = [] {
        auto l = std::make_shared<spdlog::logger>("uavirs", std::make_shared<spdlog::sinks::stderr_sink_mt>());
        l->set_pattern("[%l] %v");
        spdlog::level::level_enum lvl = spdlog::level::warn;
        if (const char *env = std::getenv("LOG_LEVEL"))
        {
            const auto parsed = spdlog::level::from_str(env);
            // from_str maps unknown names to off; only accept known ones.
            if (parsed != spdlog::level::off || std::string(env) == "off")
                lvl = parsed;
        }
        l->set_level(lvl);
        return l;
    }();
    return log;
}

} // namespace uavirs
