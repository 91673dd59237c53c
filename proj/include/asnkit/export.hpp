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

#include <iosfwd>
#include <string>
#include <vector>

#include "asnkit/asn.hpp"

namespace asnkit {

// Preamble lines are emitted as format-appropriate comments ahead of the
// payload (run metadata, conventions, seed).

void write_dot(std::ostream& out, const Asn& asn, const std::vector<std::string>& preamble = {});
void write_graphml(std::ostream& out, const Asn& asn,
                   const std::vector<std::string>& preamble = {});
/// `source_role,source_lemma,target_role,target_lemma,weight`
void write_edge_csv(std::ostream& out, const Asn& asn,
                    const std::vector<std::string>& preamble = {});

std::string rules_label(const EdgeInfo& info);

}  // namespace asnkit
