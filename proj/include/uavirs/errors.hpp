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

#ifndef UAVIRS_ERRORS_HPP
#define UAVIRS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace uavirs
{

// Base for every error raised by the library. The C API maps each subclass
// to a distinct status code.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error
{
public:
    using Error::Error;
};

// Names the offending field in field().
class ValidationError : public Error
{
public:
    ValidationError(std::string field, const std::string &what)
        : Error("invalid " + field + ": " + what), field_(std::move(field)) {}
    const std::string &field() const noexcept { return field_; }

private:
    std::string field_;
};

class IoError : public Error
{
public:
    using Error::Error;
};

class DimensionMismatch : public Error
{
public:
    using Error::Error;
};

class InvalidInput : public Error
{
public:
    using Error::Error;
};

// Energy detector has no detectable reflection (sigma1^2 <= sigma0^2).
class DegenerateChannel : public Error
{
public:
    using Error::Error;
};

class InfeasibleError : public Error
{
public:
    using Error::Error;
};

class InfeasibleSlot : public InfeasibleError
{
public:
    explicit InfeasibleSlot(int slot)
        : InfeasibleError("no feasible schedule in slot " + std::to_string(slot)), slot_(slot) {}
    int slot() const noexcept { return slot_; }

private:
    int slot_;
};

class InfeasibleLP : public InfeasibleError
{
public:
    using InfeasibleError::InfeasibleError;
};

// Barrier solver was given a start that is not strictly feasible.
class InfeasibleStart : public InfeasibleError
{
public:
    using InfeasibleError::InfeasibleError;
};

// Internal solver breakdown (not an infeasibility of the problem itself).
class SolverError : public Error
{
public:
    using Error::Error;
};

class UnboundedLP : public SolverError
{
public:
    using SolverError::SolverError;
};

} // namespace uavirs

#endif
