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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asnkit/roles.hpp"

namespace asnkit {

// Lemma values the source corpora use for words that are missing or whose
// meaning is unknown.
inline constexpr std::string_view kMissingLemmaMarks[] = {"!", "unbekannt"};

bool is_missing_lemma(std::string_view lemma);

struct Token {
  int index = 0;  // 1-based position in the sentence
  std::string surface;
  std::string lemma;
  std::optional<GrammaticalRole> role;  // absent only when `missing`
  int head = 0;                         // 0 marks the root
  PhraseRule rule = PhraseRule::OTHER;  // rule of the arc head -> this token
  bool rule_declared = false;           // false when the source column was "_"
  bool missing = false;
  int line = 0;  // source line, 0 when built in memory
};

struct DependencyTree {
  std::vector<Token> tokens;
  std::string sentence_id;
  int century = 0;
  std::string doc_id;
  std::optional<std::string> dialect;
  std::optional<std::string> target_lemma;
  std::string source;
  int line = 0;  // first line of the sentence block

  std::size_t size() const { return tokens.size(); }
  const Token& token(int index) const { return tokens.at(static_cast<std::size_t>(index - 1)); }
  int root() const;
  /// children()[i] lists the indices of tokens headed by token i (index 0 unused).
  std::vector<std::vector<int>> children() const;
};

struct CorpusSlice {
  int century = 0;
  std::vector<DependencyTree> trees;
  std::vector<std::string> provenance;
};

struct Violation {
  enum class Kind {
    kEmpty,
    kNonContiguousIndex,
    kSelfLoop,
    kHeadOutOfRange,
    kNoRoot,
    kMultipleRoots,
    kCycle,
  };
  Kind kind;
  int token = 0;  // offending token index, 0 when the violation is sentence-wide
  std::string message;
};

std::string_view to_string(Violation::Kind kind);

struct ValidationResult {
  std::optional<DependencyTree> tree;
  std::vector<Violation> violations;

  bool ok() const { return tree.has_value(); }
};

/// Checks the three dependency-tree constraints: a single root, one head per
/// non-root token, and an acyclic head graph reaching every token. Accepted
/// trees get their undeclared phrase rules filled in from the head's role.
ValidationResult validate_tree(std::vector<Token> tokens);

/// Longest root-to-leaf path, in edges.
int tree_depth(const DependencyTree& tree);

enum class MissingPolicy { kDropAny, kDropAdjacentToTarget, kKeepAll };

std::string_view to_string(MissingPolicy policy);
std::optional<MissingPolicy> parse_missing_policy(std::string_view text);

struct FilterDecision {
  bool keep = true;
  std::string reason;
};

/// Throws Error for kDropAdjacentToTarget when the tree has no target lemma
/// or no annotated token carrying it.
FilterDecision filter_missing(const DependencyTree& tree, MissingPolicy policy);

struct TreebankDiagnostic {
  std::string source;
  int line = 0;
  std::string message;
};

struct TreebankReadResult {
  std::vector<DependencyTree> trees;
  std::vector<TreebankDiagnostic> diagnostics;
};

/// Lenient reader: collects every diagnostic and keeps the sentences that
/// parsed and validated.
TreebankReadResult read_treebank(std::istream& in, const std::string& source);

/// Strict reader: throws ParseError on the first diagnostic. Slices come out
/// in ascending century order, sentences in input order within a slice.
std::vector<CorpusSlice> parse_corpus(std::istream& in, const std::string& source = "<input>");

std::vector<CorpusSlice> group_by_century(std::vector<DependencyTree> trees);

/// Canonical text form. Headers are written only when they change from the
/// previous sentence; `sent_id` is always written.
void render_treebank(std::ostream& out, const std::vector<DependencyTree>& trees);
std::string render_treebank(const std::vector<DependencyTree>& trees);

}  // namespace asnkit
