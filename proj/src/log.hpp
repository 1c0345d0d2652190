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

#ifndef UAVIRS_LOG_HPP
#define UAVIRS_LOG_HPP

#include <spdlog/spdlog.h>

#include <memory>

namespace uavirs
{

// Library-wide stderr logger. The level comes from the LOG_LEVEL
// environment variable (trace, debug, info, warn, error, off; default warn).
std::shared_ptr<spdlog::logger> logger();

} // namespace uavirs

#endif
