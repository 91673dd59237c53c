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

#include <sstream>

#include "asnkit/corpus.hpp"
#include "asnkit/error.hpp"
#include "doctest.h"
#include "support/synthetic.hpp"

using namespace asnkit;
using asnkit::testing::make_tokens;
using asnkit::testing::make_tree;
using R = GrammaticalRole;

namespace {

std::vector<Token> with_heads(const std::vector<int>& heads) {
  std::vector<asnkit::testing::TokenSpec> specs;
  for (std::size_t i = 0; i < heads.size(); ++i) {
    specs.push_back({"w" + std::to_string(i + 1), R::N, heads[i]});
  }
  return make_tokens(specs);
}

bool has_kind(const ValidationResult& r, Violation::Kind kind, int token = -1) {
  for (const auto& v : r.violations) {
    if (v.kind == kind && (token < 0 || v.token == token)) return true;
  }
  return false;
}

// Reference check: one root, and a walk from it over child lists reaches every token.
bool oracle_is_tree(const std::vector<int>& heads) {
  const int n = static_cast<int>(heads.size());
  int root = 0;
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    if (heads[static_cast<std::size_t>(i)] == 0) {
      ++roots;
      root = i + 1;
    }
  }
  if (roots != 1) return false;
  std::vector<char> seen(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> stack{root};
  seen[static_cast<std::size_t>(root)] = 1;
  int reached = 0;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    ++reached;
    for (int v = 1; v <= n; ++v) {
      if (heads[static_cast<std::size_t>(v - 1)] == u && !seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

const char* kMinimal =
    "# century = 11\n"
    "# doc_id = d1\n"
    "1\twart\twerden\tAX\t0\t_\n"
    "2\ter\ter\tPP\t1\t_\n"
    "3\tgesehen\tsehen\tPCPS\t1\t_\n"
    "\n";

}  // namespace

TEST_CASE("roles parse and render all nineteen codes") {
  CHECK(kAllRoles.size() == 19);
  for (GrammaticalRole r : kAllRoles) CHECK(parse_role(to_string(r)) == r);
  CHECK_FALSE(parse_role("XX"));
  CHECK_FALSE(parse_role("n"));
  CHECK_FALSE(parse_role(""));
}

TEST_CASE("phrase rules follow the head role") {
  CHECK(classify_phrase_rule(R::N) == PhraseRule::NP);
  CHECK(classify_phrase_rule(R::PR) == PhraseRule::PP);
  CHECK(classify_phrase_rule(R::CJ) == PhraseRule::OTHER);
  for (R r : {R::PP, R::PS, R::DM, R::RX, R::RPO}) CHECK(classify_phrase_rule(r) == PhraseRule::NP);
  for (R r : {R::V, R::IV, R::MV, R::AX, R::PCPR, R::PCPS}) {
    CHECK(classify_phrase_rule(r) == PhraseRule::VP);
  }
  for (R r : {R::AD, R::AJ, R::AR, R::PK, R::SC}) CHECK(classify_phrase_rule(r) == PhraseRule::OTHER);
}

TEST_CASE("validate_tree accepts chains and rejects broken head graphs") {
  SUBCASE("chain") {
    auto r = validate_tree(with_heads({0, 1, 2}));
    REQUIRE(r.ok());
    CHECK(tree_depth(*r.tree) == 2);
  }
  SUBCASE("two roots") {
    auto r = validate_tree(with_heads({0, 0, 1}));
    CHECK_FALSE(r.ok());
    CHECK(has_kind(r, Violation::Kind::kMultipleRoots, 2));
  }
  SUBCASE("cycle without root reports both") {
    auto r = validate_tree(with_heads({2, 3, 2}));
    CHECK_FALSE(r.ok());
    CHECK(has_kind(r, Violation::Kind::kNoRoot));
    CHECK(has_kind(r, Violation::Kind::kCycle, 2));
    CHECK(r.violations.size() == 2);
  }
  SUBCASE("out of range and self loop") {
    auto r = validate_tree(with_heads({0, 7, 3}));
    CHECK(has_kind(r, Violation::Kind::kHeadOutOfRange, 2));
    CHECK(has_kind(r, Violation::Kind::kSelfLoop, 3));
  }
  SUBCASE("empty") { CHECK(has_kind(validate_tree({}), Violation::Kind::kEmpty)); }
  SUBCASE("non-contiguous") {
    auto tokens = with_heads({0, 1});
    tokens[1].index = 3;
    CHECK(has_kind(validate_tree(tokens), Violation::Kind::kNonContiguousIndex, 3));
  }
}

TEST_CASE("validate_tree matches the brute-force tree oracle for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> heads(static_cast<std::size_t>(n), 0);
    // enumerate every head function {1..n} -> {0..n} without fixed points
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    while (true) {
      bool valid_fn = true;
      for (int i = 0; i < n; ++i) {
        heads[static_cast<std::size_t>(i)] = digits[static_cast<std::size_t>(i)];
        if (heads[static_cast<std::size_t>(i)] == i + 1) valid_fn = false;
      }
      if (valid_fn) {
        auto r = validate_tree(with_heads(heads));
        CHECK(r.ok() == oracle_is_tree(heads));
        if (r.ok()) {
          int edges = 0;
          for (const Token& t : r.tree->tokens) edges += t.head != 0 ? 1 : 0;
          CHECK(edges == n - 1);
        }
      }
      int pos = 0;
      while (pos < n && ++digits[static_cast<std::size_t>(pos)] > n) digits[static_cast<std::size_t>(pos++)] = 0;
      if (pos == n) break;
    }
  }
}

TEST_CASE("tree_depth") {
  CHECK(tree_depth(make_tree("a", 1, testing::chain_specs({"a", "b", "c", "d"}, {R::V, R::N, R::N, R::N}))) == 3);
  CHECK(tree_depth(make_tree("b", 1, {{"v", R::V, 0}, {"a", R::N, 1}, {"b", R::N, 1}, {"c", R::N, 1}, {"d", R::N, 1}, {"e", R::N, 1}})) == 1);
  CHECK(tree_depth(make_tree("c", 1, {{"v", R::V, 0}})) == 0);
  // I prefer the morning flight to Denver: prefer -> flight -> Denver -> to
  auto s1 = make_tree("s1", 20, {{"I", R::PP, 2}, {"prefer", R::V, 0}, {"the", R::AR, 5}, {"morning", R::N, 5},
                                 {"flight", R::N, 2}, {"to", R::PR, 7}, {"Denver", R::N, 5}});
  CHECK(tree_depth(s1) == 3);
}

TEST_CASE("undeclared rules come from the head role") {
  auto t = make_tree("x", 1, {{"werden", R::AX, 0}, {"haus", R::N, 1}, {"alt", R::AJ, 2}, {"in", R::PR, 1}, {"stat", R::N, 4}});
  CHECK(t.token(2).rule == PhraseRule::VP);
  CHECK(t.token(3).rule == PhraseRule::NP);
  CHECK(t.token(5).rule == PhraseRule::PP);
}

TEST_CASE("filter_missing policies") {
  // target werden; token 3 missing and a direct dependent of the target
  auto adjacent = make_tree("a", 11, {{"werden", R::AX, 0}, {"er", R::PP, 1}, {"!", R::N, 1}}, "werden");
  // missing token hangs below a noun, two arcs away from the target
  auto far = make_tree("b", 11, {{"werden", R::AX, 0}, {"haus", R::N, 1}, {"unbekannt", R::AJ, 2}}, "werden");
  // target governed by a missing token
  auto governed = make_tree("c", 11, {{"unbekannt", R::V, 0}, {"werden", R::AX, 1}}, "werden");

  auto d = filter_missing(adjacent, MissingPolicy::kDropAdjacentToTarget);
  CHECK_FALSE(d.keep);
  CHECK(d.reason.find("missing neighbor of target") == 0);
  CHECK(filter_missing(far, MissingPolicy::kDropAdjacentToTarget).keep);
  CHECK_FALSE(filter_missing(governed, MissingPolicy::kDropAdjacentToTarget).keep);
  CHECK_FALSE(filter_missing(far, MissingPolicy::kDropAny).keep);
  for (const auto* t : {&adjacent, &far, &governed}) CHECK(filter_missing(*t, MissingPolicy::kKeepAll).keep);

  auto untargeted = far;
  untargeted.target_lemma.reset();
  CHECK_THROWS_AS(filter_missing(untargeted, MissingPolicy::kDropAdjacentToTarget), Error);
  auto wrong_target = far;
  wrong_target.target_lemma = "sein";
  CHECK_THROWS_AS(filter_missing(wrong_target, MissingPolicy::kDropAdjacentToTarget), Error);
  CHECK(filter_missing(untargeted, MissingPolicy::kDropAny).keep == false);
}

TEST_CASE("parse_corpus reads a minimal sentence") {
  std::istringstream in(kMinimal);
  auto slices = parse_corpus(in, "mini.tb");
  REQUIRE(slices.size() == 1);
  CHECK(slices[0].century == 11);
  REQUIRE(slices[0].trees.size() == 1);
  const auto& t = slices[0].trees[0];
  CHECK(t.root() == 1);
  CHECK(t.sentence_id == "d1:s1");
  CHECK(t.doc_id == "d1");
  CHECK(t.token(2).rule == PhraseRule::VP);
  CHECK_FALSE(t.token(2).rule_declared);
  CHECK(slices[0].provenance == std::vector<std::string>{"mini.tb"});
}

TEST_CASE("parse_corpus errors carry line numbers") {
  SUBCASE("unknown role") {
    std::string text = kMinimal;
    text.replace(text.find("PP"), 2, "XX");
    std::istringstream in(text);
    try {
      parse_corpus(in, "bad.tb");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
      CHECK(e.detail().find("'XX'") != std::string::npos);
    }
  }
  SUBCASE("column count") {
    std::istringstream in("# century = 11\n1\ta\ta\tN\t0\n\n");
    CHECK_THROWS_WITH_AS(parse_corpus(in, "f"), "f:2: expected 6 tab-separated columns, found 5", ParseError);
  }
  SUBCASE("non-integer head") {
    std::istringstream in("# century = 11\n1\ta\ta\tN\tzero\t_\n\n");
    CHECK_THROWS_AS(parse_corpus(in), ParseError);
  }
  SUBCASE("role placeholder on an annotated word") {
    std::istringstream in("# century = 11\n1\ta\ta\t_\t0\t_\n\n");
    CHECK_THROWS_AS(parse_corpus(in), ParseError);
  }
  SUBCASE("duplicate sentence id") {
    std::istringstream in(
        "# century = 11\n# doc_id = d\n# sent_id = x\n1\ta\ta\tN\t0\t_\n\n"
        "# sent_id = x\n1\tb\tb\tN\t0\t_\n\n");
    try {
      parse_corpus(in, "dup.tb");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 7);
      CHECK(e.detail().find("duplicate sentence_id") != std::string::npos);
    }
  }
  SUBCASE("invalid tree") {
    std::istringstream in("# century = 11\n1\ta\ta\tN\t0\t_\n2\tb\tb\tN\t0\t_\n\n");
    try {
      parse_corpus(in, "roots.tb");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.detail().find("multiple roots") != std::string::npos);
    }
  }
  SUBCASE("no century") {
    std::istringstream in("1\ta\ta\tN\t0\t_\n\n");
    CHECK_THROWS_AS(parse_corpus(in), ParseError);
  }
  SUBCASE("unknown header key") {
    std::istringstream in("# era = 11\n");
    CHECK_THROWS_AS(parse_corpus(in), ParseError);
  }
}

TEST_CASE("parse_corpus groups sentences by century header") {
  std::istringstream in(
      "## synthetic\n"
      "# century = 12\n1\ta\ta\tN\t0\t_\n\n"
      "# century = 11\n1\tb\tb\tN\t0\t_\n\n"
      "# century = 12\n1\tc\tc\tN\t0\t_\n");  // no trailing blank line
  auto slices = parse_corpus(in);
  REQUIRE(slices.size() == 2);
  CHECK(slices[0].century == 11);
  CHECK(slices[0].trees.size() == 1);
  CHECK(slices[1].century == 12);
  REQUIRE(slices[1].trees.size() == 2);
  CHECK(slices[1].trees[0].tokens[0].lemma == "a");
  CHECK(slices[1].trees[1].tokens[0].lemma == "c");
}

TEST_CASE("missing annotations may leave the role empty") {
  std::istringstream in("# century = 11\n# target = werden\n1\twart\twerden\tAX\t0\t_\n2\tx\t!\t_\t1\t_\n\n");
  auto slices = parse_corpus(in);
  const auto& t = slices.at(0).trees.at(0);
  CHECK(t.token(2).missing);
  CHECK_FALSE(t.token(2).role);
  CHECK(t.target_lemma == "werden");
}

TEST_CASE("lenient reader keeps good sentences and reports the rest") {
  std::istringstream in(
      "# century = 11\n1\ta\ta\tN\t0\t_\n\n"
      "1\tb\tb\tQQ\t0\t_\n\n"
      "1\tc\tc\tN\t2\t_\n2\td\td\tN\t1\t_\n\n"
      "1\te\te\tN\t0\t_\n\n");
  auto read = read_treebank(in, "f");
  CHECK(read.trees.size() == 2);
  REQUIRE(read.diagnostics.size() == 3);
  CHECK(read.diagnostics[0].line == 4);
  CHECK(read.diagnostics[1].message.find("no root") != std::string::npos);
  CHECK(read.diagnostics[2].message.find("cycle") != std::string::npos);
}

TEST_CASE("canonical files round-trip byte for byte") {
  const std::string canonical =
      "# century = 11\n# doc_id = d1\n# target = werden\n# sent_id = a\n"
      "1\twart\twerden\tAX\t0\t_\n2\ter\ter\tPP\t1\tVP\n3\tx\tunbekannt\t_\t1\t_\n\n"
      "# dialect = bav\n# sent_id = b\n1\tsach\tsehen\tV\t0\tOTHER\n\n"
      "# century = 12\n# doc_id = d2\n# dialect = _\n# target = _\n# sent_id = c\n"
      "1\tin\tin\tPR\t0\t_\n2\thus\thaus\tN\t1\t_\n\n";
  std::istringstream in(canonical);
  auto read = read_treebank(in, "rt");
  REQUIRE(read.diagnostics.empty());
  CHECK(render_treebank(read.trees) == canonical);

  // re-rendering a non-canonical file is a fixed point
  std::istringstream loose("# century = 11\n1\ta\ta\tN\t0\t_\n\n\n\n# century = 11\n1\tb\tb\tN\t0\tNP\n");
  auto first = render_treebank(read_treebank(loose, "l").trees);
  std::istringstream again(first);
  CHECK(render_treebank(read_treebank(again, "l").trees) == first);
}
