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

#include "asnkit/roles.hpp"

namespace asnkit {

std::string_view to_string(GrammaticalRole role) {
  switch (role) {
    case GrammaticalRole::AD: return "AD";
    case GrammaticalRole::AJ: return "AJ";
    case GrammaticalRole::AR: return "AR";
    case GrammaticalRole::AX: return "AX";
    case GrammaticalRole::CJ: return "CJ";
    case GrammaticalRole::DM: return "DM";
    case GrammaticalRole::IV: return "IV";
    case GrammaticalRole::MV: return "MV";
    case GrammaticalRole::N: return "N";
    case GrammaticalRole::PK: return "PK";
    case GrammaticalRole::PR: return "PR";
    case GrammaticalRole::PP: return "PP";
    case GrammaticalRole::PS: return "PS";
    case GrammaticalRole::PCPR: return "PCPR";
    case GrammaticalRole::PCPS: return "PCPS";
    case GrammaticalRole::RX: return "RX";
    case GrammaticalRole::RPO: return "RPO";
    case GrammaticalRole::SC: return "SC";
    case GrammaticalRole::V: return "V";
  }
  return "?";
}

std::optional<GrammaticalRole> parse_role(std::string_view code) {
  for (GrammaticalRole role : kAllRoles) {
    if (to_string(role) == code) return role;
  }
  return std::nullopt;
}

std::string_view to_string(PhraseRule rule) {
  switch (rule) {
    case PhraseRule::NP: return "NP";
    case PhraseRule::VP: return "VP";
    case PhraseRule::PP: return "PP";
    case PhraseRule::OTHER: return "OTHER";
  }
  return "?";
}

std::optional<PhraseRule> parse_phrase_rule(std::string_view tag) {
  if (tag == "NP") return PhraseRule::NP;
  if (tag == "VP") return PhraseRule::VP;
  if (tag == "PP") return PhraseRule::PP;
  if (tag == "OTHER") return PhraseRule::OTHER;
  return std::nullopt;
}

PhraseRule classify_phrase_rule(GrammaticalRole head_role) {
  switch (head_role) {
    case GrammaticalRole::N:
    case GrammaticalRole::PP:
    case GrammaticalRole::PS:
    case GrammaticalRole::DM:
    case GrammaticalRole::RX:
    case GrammaticalRole::RPO:
      return PhraseRule::NP;
    case GrammaticalRole::V:
    case GrammaticalRole::IV:
    case GrammaticalRole::MV:
    case GrammaticalRole::AX:
    case GrammaticalRole::PCPR:
    case GrammaticalRole::PCPS:
      return PhraseRule::VP;
    case GrammaticalRole::PR:
      return PhraseRule::PP;
    default:
      return PhraseRule::OTHER;
  }
}

}  // namespace asnkit
