// Copyright 2026 The asnkit Authors
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

#include <string>
#include <string_view>

namespace asnkit {

/// Shortest round-trip decimal form of `value`; identical bytes on every run.
std::string format_double(double value);

std::string csv_escape(std::string_view field);
std::string xml_escape(std::string_view text);
std::string dot_escape(std::string_view text);

}  // namespace asnkit
