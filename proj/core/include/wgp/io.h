// Copyright 2026 The WGP Authors
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

// Instance and schedule files.
//
// Instance:
//   {"nodes":n,"edges":[[u,v],...],"sink":s,"d_I":k,
//    "packets":[{"origin":o,"release":r},...],"comment":"..."}
// Schedule:
//   {"sigma":s,"rounds":[[{"packet":j,"from":u,"to":v},...],...]}
//
// Writers emit a single compact line in the field order above, followed by a
// newline; calls within a round are sorted by packet index. "comment" is
// optional and omitted when empty.

#ifndef WGP_IO_H_
#define WGP_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "wgp/model.h"

namespace wgp {

std::string InstanceToJson(const Instance& instance);
// Throws MalformedInputError on syntax or schema errors, and
// InvalidInstanceError when the described network/instance is invalid.
Instance InstanceFromJson(std::string_view text);

std::string ScheduleToJson(const Schedule& schedule);
Schedule ScheduleFromJson(std::string_view text);

// Whole-file helpers. Throw Error on I/O failure.
std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string FormatRational(const Rational& value);
// "p/q (d.dddd)" with four decimal places, rounded half away from zero.
std::string FormatRationalWithDecimal(const Rational& value);
Rational ParseRational(std::string_view text);

}  // namespace wgp

#endif  // WGP_IO_H_
