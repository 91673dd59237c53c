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

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace asnkit {

/// Grammatical role labels attached to every ASN node. The set is closed:
/// anything outside these nineteen codes is rejected by the parser.
enum class GrammaticalRole {
  AD,    // adverb
  AJ,    // adjective
  AR,    // article
  AX,    // auxiliary
  CJ,    // coordinating conjunction
  DM,    // demonstrative pronoun
  IV,    // infinitive verb
  MV,    // modal verb
  N,     // noun
  PK,    // particle
  PR,    // preposition
  PP,    // personal pronoun
  PS,    // possessive pronoun
  PCPR,  // present participle
  PCPS,  // past participle
  RX,    // reflexive pronoun
  RPO,   // relative pronoun
  SC,    // subordinating conjunction
  V,     // verb
};

inline constexpr std::array<GrammaticalRole, 19> kAllRoles = {
    GrammaticalRole::AD,   GrammaticalRole::AJ,   GrammaticalRole::AR,
    GrammaticalRole::AX,   GrammaticalRole::CJ,   GrammaticalRole::DM,
    GrammaticalRole::IV,   GrammaticalRole::MV,   GrammaticalRole::N,
    GrammaticalRole::PK,   GrammaticalRole::PR,   GrammaticalRole::PP,
    GrammaticalRole::PS,   GrammaticalRole::PCPR, GrammaticalRole::PCPS,
    GrammaticalRole::RX,   GrammaticalRole::RPO,  GrammaticalRole::SC,
    GrammaticalRole::V,
};

std::string_view to_string(GrammaticalRole role);
std::optional<GrammaticalRole> parse_role(std::string_view code);

/// Phrase rule of a dependency arc, derived from the role of its head.
enum class PhraseRule { NP, VP, PP, OTHER };

std::string_view to_string(PhraseRule rule);
std::optional<PhraseRule> parse_phrase_rule(std::string_view tag);

// Nouns and pronouns head NP, verbs head VP, prepositions head PP. Every other
// head role maps to OTHER.
PhraseRule classify_phrase_rule(GrammaticalRole head_role);

}  // namespace asnkit
