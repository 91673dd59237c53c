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

#include "asnkit/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "asnkit/error.hpp"

namespace asnkit {

bool is_missing_lemma(std::string_view lemma) {
  return std::find(std::begin(kMissingLemmaMarks), std::end(kMissingLemmaMarks), lemma) !=
         std::end(kMissingLemmaMarks);
}

int DependencyTree::root() const {
  for (const Token& t : tokens) {
    if (t.head == 0) return t.index;
  }
  return 0;
}

std::vector<std::vector<int>> DependencyTree::children() const {
  std::vector<std::vector<int>> out(tokens.size() + 1);
  for (const Token& t : tokens) {
    if (t.head > 0 && static_cast<std::size_t>(t.head) <= tokens.size()) {
      out[static_cast<std::size_t>(t.head)].push_back(t.index);
    }
  }
  return out;
}

std::string_view to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kEmpty: return "empty sentence";
    case Violation::Kind::kNonContiguousIndex: return "non-contiguous index";
    case Violation::Kind::kSelfLoop: return "self loop";
    case Violation::Kind::kHeadOutOfRange: return "head out of range";
    case Violation::Kind::kNoRoot: return "no root";
    case Violation::Kind::kMultipleRoots: return "multiple roots";
    case Violation::Kind::kCycle: return "cycle";
  }
  return "?";
}

namespace {

Violation make_violation(Violation::Kind kind, int token, std::string detail) {
  std::string message(to_string(kind));
  if (!detail.empty()) message += ": " + detail;
  return Violation{kind, token, std::move(message)};
}

// Walks head pointers from every token and reports each cycle once, anchored
// at its smallest token index. Self loops and out-of-range heads end a walk.
void find_cycles(const std::vector<Token>& tokens, std::vector<Violation>& out) {
  const int n = static_cast<int>(tokens.size());
  std::vector<int> state(static_cast<std::size_t>(n + 1), 0);  // 0 new, 1 on path, 2 done
  for (int start = 1; start <= n; ++start) {
    std::vector<int> path;
    int cur = start;
    while (cur >= 1 && cur <= n && state[static_cast<std::size_t>(cur)] == 0) {
      state[static_cast<std::size_t>(cur)] = 1;
      path.push_back(cur);
      const int next = tokens[static_cast<std::size_t>(cur - 1)].head;
      if (next == cur) break;
      cur = next;
    }
    if (cur >= 1 && cur <= n && state[static_cast<std::size_t>(cur)] == 1 &&
        tokens[static_cast<std::size_t>(cur - 1)].head != cur) {
      auto first = std::find(path.begin(), path.end(), cur);
      std::vector<int> cycle(first, path.end());
      auto min_it = std::min_element(cycle.begin(), cycle.end());
      std::rotate(cycle.begin(), min_it, cycle.end());
      std::string detail;
      for (int idx : cycle) detail += std::to_string(idx) + " -> ";
      detail += std::to_string(cycle.front());
      out.push_back(make_violation(Violation::Kind::kCycle, cycle.front(), detail));
    }
    for (int idx : path) state[static_cast<std::size_t>(idx)] = 2;
  }
}

}  // namespace

ValidationResult validate_tree(std::vector<Token> tokens) {
  ValidationResult result;
  auto& v = result.violations;
  if (tokens.empty()) {
    v.push_back(make_violation(Violation::Kind::kEmpty, 0, ""));
    return result;
  }
  const int n = static_cast<int>(tokens.size());
  for (int i = 0; i < n; ++i) {
    if (tokens[static_cast<std::size_t>(i)].index != i + 1) {
      v.push_back(make_violation(Violation::Kind::kNonContiguousIndex,
                                 tokens[static_cast<std::size_t>(i)].index,
                                 "expected " + std::to_string(i + 1)));
      return result;
    }
  }

  std::vector<int> roots;
  for (const Token& t : tokens) {
    if (t.head == 0) {
      roots.push_back(t.index);
    } else if (t.head < 0 || t.head > n) {
      v.push_back(make_violation(Violation::Kind::kHeadOutOfRange, t.index,
                                 "head " + std::to_string(t.head) + " of token " +
                                     std::to_string(t.index)));
    } else if (t.head == t.index) {
      v.push_back(make_violation(Violation::Kind::kSelfLoop, t.index,
                                 "token " + std::to_string(t.index)));
    }
  }
  if (roots.empty()) {
    v.push_back(make_violation(Violation::Kind::kNoRoot, 0, ""));
  }
  for (std::size_t i = 1; i < roots.size(); ++i) {
    v.push_back(make_violation(Violation::Kind::kMultipleRoots, roots[i],
                               "token " + std::to_string(roots[i]) + " is a second root"));
  }
  find_cycles(tokens, v);
  if (!v.empty()) return result;

  for (Token& t : tokens) {
    if (t.rule_declared) continue;
    const Token& governor = t.head == 0 ? t : tokens[static_cast<std::size_t>(t.head - 1)];
    t.rule = governor.role ? classify_phrase_rule(*governor.role) : PhraseRule::OTHER;
  }
  DependencyTree tree;
  tree.tokens = std::move(tokens);
  result.tree = std::move(tree);
  return result;
}

int tree_depth(const DependencyTree& tree) {
  const auto kids = tree.children();
  int best = 0;
  std::vector<std::pair<int, int>> stack{{tree.root(), 0}};
  while (!stack.empty()) {
    auto [node, depth] = stack.back();
    stack.pop_back();
    best = std::max(best, depth);
    for (int c : kids[static_cast<std::size_t>(node)]) stack.emplace_back(c, depth + 1);
  }
  return best;
}

std::string_view to_string(MissingPolicy policy) {
  switch (policy) {
    case MissingPolicy::kDropAny: return "drop-any";
    case MissingPolicy::kDropAdjacentToTarget: return "drop-adjacent-to-target";
    case MissingPolicy::kKeepAll: return "keep-all";
  }
  return "?";
}

std::optional<MissingPolicy> parse_missing_policy(std::string_view text) {
  if (text == "drop-any") return MissingPolicy::kDropAny;
  if (text == "drop-adjacent-to-target") return MissingPolicy::kDropAdjacentToTarget;
  if (text == "keep-all") return MissingPolicy::kKeepAll;
  return std::nullopt;
}

FilterDecision filter_missing(const DependencyTree& tree, MissingPolicy policy) {
  switch (policy) {
    case MissingPolicy::kKeepAll:
      return {true, "keep-all"};
    case MissingPolicy::kDropAny:
      for (const Token& t : tree.tokens) {
        if (t.missing) return {false, "missing annotation at token " + std::to_string(t.index)};
      }
      return {true, "no missing annotations"};
    case MissingPolicy::kDropAdjacentToTarget:
      break;
  }

  if (!tree.target_lemma) {
    throw Error("sentence " + tree.sentence_id + ": policy " + std::string(to_string(policy)) +
                " needs a target lemma");
  }
  const auto kids = tree.children();
  bool found = false;
  for (const Token& t : tree.tokens) {
    if (t.missing || t.lemma != *tree.target_lemma) continue;
    found = true;
    if (t.head != 0 && tree.token(t.head).missing) {
      return {false, "missing neighbor of target (head " + std::to_string(t.head) + ")"};
    }
    for (int c : kids[static_cast<std::size_t>(t.index)]) {
      if (tree.token(c).missing) {
        return {false, "missing neighbor of target (dependent " + std::to_string(c) + ")"};
      }
    }
  }
  if (!found) {
    throw Error("sentence " + tree.sentence_id + ": target lemma '" + *tree.target_lemma +
                "' not present");
  }
  return {true, "missing annotations not adjacent to target"};
}

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find('\t', start);
    if (pos == std::string_view::npos) {
      cols.push_back(line.substr(start));
      return cols;
    }
    cols.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::optional<int> to_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) return std::nullopt;
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

struct HeaderState {
  std::optional<int> century;
  std::string doc_id;
  std::optional<std::string> dialect;
  std::optional<std::string> target;
  std::optional<std::string> sent_id;  // applies to the next sentence only
};

class TreebankReader {
 public:
  TreebankReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  TreebankReadResult run() {
    std::string raw;
    int lineno = 0;
    while (std::getline(in_, raw)) {
      ++lineno;
      std::string_view line(raw);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (line.empty() || trim(line).empty()) {
        flush();
        continue;
      }
      if (line == "##" || line.starts_with("## ")) continue;
      if (line.starts_with("#")) {
        header(line, lineno);
        continue;
      }
      token_line(line, lineno);
    }
    flush();
    return std::move(result_);
  }

 private:
  void diag(int line, std::string message) {
    result_.diagnostics.push_back({source_, line, std::move(message)});
  }

  void header(std::string_view line, int lineno) {
    if (!pending_.empty() || broken_) {
      diag(lineno, "header line inside a sentence block");
      broken_ = true;
      return;
    }
    if (!line.starts_with("# ")) {
      diag(lineno, "malformed header line");
      return;
    }
    std::string_view body = line.substr(2);
    const std::size_t eq = body.find('=');
    if (eq == std::string_view::npos) {
      diag(lineno, "header line without '='");
      return;
    }
    const std::string_view key = trim(body.substr(0, eq));
    const std::string value(trim(body.substr(eq + 1)));
    if (key == "century") {
      auto c = to_int(value);
      if (!c) {
        diag(lineno, "century is not an integer: '" + value + "'");
        return;
      }
      state_.century = *c;
    } else if (key == "doc_id") {
      state_.doc_id = value;
    } else if (key == "dialect") {
      state_.dialect = value == "_" ? std::nullopt : std::optional<std::string>(value);
    } else if (key == "target") {
      state_.target = value == "_" ? std::nullopt : std::optional<std::string>(value);
    } else if (key == "sent_id") {
      state_.sent_id = value;
    } else {
      diag(lineno, "unknown header key '" + std::string(key) + "'");
    }
  }

  void token_line(std::string_view line, int lineno) {
    if (pending_.empty() && !broken_) first_line_ = lineno;
    if (broken_) return;
    const auto cols = split_tabs(line);
    if (cols.size() != 6) {
      fail(lineno, "expected 6 tab-separated columns, found " + std::to_string(cols.size()));
      return;
    }
    Token t;
    t.line = lineno;
    auto index = to_int(cols[0]);
    if (!index) {
      fail(lineno, "index is not an integer: '" + std::string(cols[0]) + "'");
      return;
    }
    auto head = to_int(cols[4]);
    if (!head) {
      fail(lineno, "head is not an integer: '" + std::string(cols[4]) + "'");
      return;
    }
    t.index = *index;
    t.head = *head;
    t.surface = std::string(cols[1]);
    t.lemma = std::string(cols[2]);
    t.missing = is_missing_lemma(t.lemma);
    if (cols[3] == "_") {
      if (!t.missing) {
        fail(lineno, "role '_' is only allowed on missing annotations");
        return;
      }
    } else {
      t.role = parse_role(cols[3]);
      if (!t.role) {
        fail(lineno, "unknown grammatical role '" + std::string(cols[3]) + "'");
        return;
      }
    }
    if (cols[5] != "_") {
      auto rule = parse_phrase_rule(cols[5]);
      if (!rule) {
        fail(lineno, "unknown phrase rule '" + std::string(cols[5]) + "'");
        return;
      }
      t.rule = *rule;
      t.rule_declared = true;
    }
    pending_.push_back(std::move(t));
  }

  void fail(int lineno, std::string message) {
    diag(lineno, std::move(message));
    broken_ = true;
  }

  void flush() {
    if (pending_.empty() && !broken_) return;
    const bool broken = broken_;
    std::vector<Token> tokens = std::move(pending_);
    pending_.clear();
    broken_ = false;
    std::optional<std::string> sent_id = std::move(state_.sent_id);
    state_.sent_id.reset();
    if (broken) return;

    const std::string doc_key = state_.doc_id;
    const int ordinal = ++doc_ordinal_[doc_key];
    const std::string id = sent_id ? *sent_id : (doc_key.empty() ? "" : doc_key + ":") + "s" +
                                                    std::to_string(ordinal);
    if (!state_.century) {
      diag(first_line_, "sentence " + id + " has no century header");
      return;
    }
    if (!seen_ids_[doc_key].insert(id).second) {
      diag(first_line_, "duplicate sentence_id '" + id + "' in document '" + doc_key + "'");
      return;
    }

    auto checked = validate_tree(tokens);
    if (!checked.ok()) {
      for (const Violation& v : checked.violations) {
        int line = first_line_;
        if (v.token >= 1 && static_cast<std::size_t>(v.token) <= tokens.size()) {
          line = tokens[static_cast<std::size_t>(v.token - 1)].line;
        }
        diag(line, "sentence " + id + ": " + v.message);
      }
      return;
    }
    DependencyTree tree = std::move(*checked.tree);
    tree.sentence_id = id;
    tree.century = *state_.century;
    tree.doc_id = state_.doc_id;
    tree.dialect = state_.dialect;
    tree.target_lemma = state_.target;
    tree.source = source_;
    tree.line = first_line_;
    result_.trees.push_back(std::move(tree));
  }

  std::istream& in_;
  std::string source_;
  TreebankReadResult result_;
  HeaderState state_;
  std::vector<Token> pending_;
  bool broken_ = false;
  int first_line_ = 0;
  std::map<std::string, int> doc_ordinal_;
  std::map<std::string, std::set<std::string>> seen_ids_;
};

}  // namespace

TreebankReadResult read_treebank(std::istream& in, const std::string& source) {
  return TreebankReader(in, source).run();
}

std::vector<CorpusSlice> group_by_century(std::vector<DependencyTree> trees) {
  std::map<int, CorpusSlice> by_century;
  for (DependencyTree& t : trees) {
    CorpusSlice& slice = by_century[t.century];
    slice.century = t.century;
    if (!t.source.empty() &&
        std::find(slice.provenance.begin(), slice.provenance.end(), t.source) ==
            slice.provenance.end()) {
      slice.provenance.push_back(t.source);
    }
    slice.trees.push_back(std::move(t));
  }
  std::vector<CorpusSlice> out;
  out.reserve(by_century.size());
  for (auto& [century, slice] : by_century) out.push_back(std::move(slice));
  return out;
}

std::vector<CorpusSlice> parse_corpus(std::istream& in, const std::string& source) {
  TreebankReadResult read = read_treebank(in, source);
  if (!read.diagnostics.empty()) {
    const TreebankDiagnostic& d = read.diagnostics.front();
    throw ParseError(d.source, d.line, d.message);
  }
  return group_by_century(std::move(read.trees));
}

void render_treebank(std::ostream& out, const std::vector<DependencyTree>& trees) {
  std::optional<int> century;
  std::optional<std::string> doc_id;
  std::optional<std::string> dialect;
  std::optional<std::string> target;
  bool first = true;
  for (const DependencyTree& tree : trees) {
    if (first || century != tree.century) out << "# century = " << tree.century << '\n';
    if (first || doc_id != tree.doc_id) out << "# doc_id = " << tree.doc_id << '\n';
    if (dialect != tree.dialect) out << "# dialect = " << tree.dialect.value_or("_") << '\n';
    if (target != tree.target_lemma) out << "# target = " << tree.target_lemma.value_or("_") << '\n';
    out << "# sent_id = " << tree.sentence_id << '\n';
    century = tree.century;
    doc_id = tree.doc_id;
    dialect = tree.dialect;
    target = tree.target_lemma;
    first = false;
    for (const Token& t : tree.tokens) {
      out << t.index << '\t' << t.surface << '\t' << t.lemma << '\t'
          << (t.role ? to_string(*t.role) : std::string_view("_")) << '\t' << t.head << '\t'
          << (t.rule_declared ? to_string(t.rule) : std::string_view("_")) << '\n';
    }
    out << '\n';
  }
}

std::string render_treebank(const std::vector<DependencyTree>& trees) {
  std::ostringstream out;
  render_treebank(out, trees);
  return out.str();
}

}  // namespace asnkit
