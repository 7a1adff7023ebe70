// Copyright 2026 The truthsem Authors.
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

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <utility>

#include "truthsem/dsl.h"

namespace truthsem::dsl {

namespace {

constexpr std::array<std::string_view, 22> kKeywords = {
    "system", "external", "sentence", "expect", "flag",    "true",   "false", "not",
    "and",    "or",       "implies",  "iff",    "forall",  "exists", "in",    "atmost",
    "atleast", "of",      "all",      "T",      "F",       "U"};

enum class TokenType { kWord, kNumber, kSymbol, kEnd };

struct Token {
  TokenType type;
  std::string text;
  SourcePos pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    for (;;) {
      skip_space();
      SourcePos start = here();
      if (at_end()) {
        tokens.push_back({TokenType::kEnd, "", start});
        return tokens;
      }
      const char c = text_[offset_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t b = offset_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[offset_])) ||
                             text_[offset_] == '_')) {
          advance();
        }
        tokens.push_back({TokenType::kWord, std::string(text_.substr(b, offset_ - b)), start});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t b = offset_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[offset_]))) advance();
        tokens.push_back({TokenType::kNumber, std::string(text_.substr(b, offset_ - b)), start});
      } else if (c == ':' && offset_ + 1 < text_.size() && text_[offset_ + 1] == '=') {
        advance();
        advance();
        tokens.push_back({TokenType::kSymbol, ":=", start});
      } else if (std::string_view("=()<>{},:").find(c) != std::string_view::npos) {
        advance();
        tokens.push_back({TokenType::kSymbol, std::string(1, c), start});
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", start, {});
      }
    }
  }

 private:
  bool at_end() const { return offset_ >= text_.size(); }
  SourcePos here() const { return {line_, column_, offset_}; }

  void advance() {
    if (text_[offset_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++offset_;
  }

  void skip_space() {
    while (!at_end()) {
      const char c = text_[offset_];
      if (c == '#') {
        while (!at_end() && text_[offset_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t offset_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

std::string quote(std::string_view s) { return "'" + std::string(s) + "'"; }

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool empty() const { return tokens_.size() == 1; }

  RawSystem system() {
    RawSystem raw;
    expect_word("system");
    raw.name = identifier("system name");
    while (peek().type != TokenType::kEnd) raw.declarations.push_back(declaration());
    return raw;
  }

  SurfacePtr standalone_formula() {
    SurfacePtr f = formula();
    if (peek().type != TokenType::kEnd) fail("unexpected " + describe(peek()), {"end of input"});
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.type != TokenType::kEnd) ++pos_;
    return t;
  }

  static bool is_word(const Token& t, std::string_view w) {
    return t.type == TokenType::kWord && t.text == w;
  }
  static bool is_symbol(const Token& t, std::string_view s) {
    return t.type == TokenType::kSymbol && t.text == s;
  }

  static std::string describe(const Token& t) {
    switch (t.type) {
      case TokenType::kEnd:
        return "end of input";
      case TokenType::kNumber:
        return "number " + t.text;
      case TokenType::kWord:
        return (is_keyword(t.text) ? "keyword " : "identifier ") + quote(t.text);
      case TokenType::kSymbol:
        break;
    }
    return quote(t.text);
  }

  [[noreturn]] void fail(std::string message, std::vector<std::string> expected) const {
    throw ParseError(std::move(message), peek().pos, std::move(expected));
  }

  [[noreturn]] void unexpected(std::vector<std::string> expected) const {
    fail("unexpected " + describe(peek()), std::move(expected));
  }

  void expect_word(std::string_view w) {
    if (!is_word(peek(), w)) unexpected({quote(w)});
    next();
  }
  void expect_symbol(std::string_view s) {
    if (!is_symbol(peek(), s)) unexpected({quote(s)});
    next();
  }

  std::string identifier(std::string_view what) {
    const Token& t = peek();
    if (t.type != TokenType::kWord || is_keyword(t.text)) unexpected({std::string(what)});
    return next().text;
  }

  Declaration declaration() {
    const SourcePos at = peek().pos;
    if (is_word(peek(), "external")) {
      next();
      std::string name = identifier("external atom name");
      expect_symbol("=");
      bool value;
      if (is_word(peek(), "true")) {
        value = true;
      } else if (is_word(peek(), "false")) {
        value = false;
      } else {
        unexpected({"'true'", "'false'"});
      }
      next();
      return {ExternalDecl{std::move(name), to_classical(value)}, at};
    }
    if (is_word(peek(), "sentence")) {
      next();
      std::string name = identifier("sentence name");
      expect_symbol(":=");
      return {SentenceDecl{std::move(name), formula()}, at};
    }
    if (is_word(peek(), "expect")) {
      next();
      return {expectation(), at};
    }
    if (is_word(peek(), "flag")) {
      next();
      FlagDecl flag{identifier("flag kind"), std::nullopt};
      if (peek().type == TokenType::kWord && !is_keyword(peek().text)) flag.target = next().text;
      return {std::move(flag), at};
    }
    unexpected({"'external'", "'sentence'", "'expect'", "'flag'", "end of input"});
  }

  ExpectDecl expectation() {
    ExpectDecl e{identifier("sentence name"), {}, {}, {}};
    bool any = false;
    for (;;) {
      const Token& key = peek();
      const bool is_field = key.type == TokenType::kWord &&
                            (key.text == "mfp" || key.text == "lifp" || key.text == "final") &&
                            is_symbol(peek(1), "=");
      if (!is_field) break;
      const std::string field = next().text;
      next();
      const Token& value = peek();
      if (value.type != TokenType::kWord) unexpected({"verdict code"});
      if (field == "final") {
        auto v = classical_from_code(value.text);
        if (!v) unexpected({"'t'", "'f'"});
        if (e.final_value) fail("duplicate 'final' expectation", {});
        e.final_value = v;
      } else {
        auto v = truth3_from_code(value.text);
        if (!v) unexpected({"'t'", "'f'", "'u'"});
        auto& slot = field == "mfp" ? e.mfp : e.lifp;
        if (slot) fail("duplicate '" + field + "' expectation", {});
        slot = v;
      }
      next();
      any = true;
    }
    if (!any) unexpected({"'mfp='", "'lifp='", "'final='"});
    return e;
  }

  static SurfacePtr make(SurfaceFormula f) { return std::make_shared<const SurfaceFormula>(std::move(f)); }

  static SurfacePtr binary(SurfaceFormula::Kind kind, SurfacePtr lhs, SurfacePtr rhs, SourcePos pos) {
    SurfaceFormula f;
    f.kind = kind;
    f.lhs = std::move(lhs);
    f.rhs = std::move(rhs);
    f.pos = pos;
    return make(std::move(f));
  }

  // iff < implies < or < and < not
  SurfacePtr formula() {
    SurfacePtr lhs = implication();
    while (is_word(peek(), "iff")) {
      const SourcePos at = next().pos;
      lhs = binary(SurfaceFormula::Kind::kIff, lhs, implication(), at);
    }
    return lhs;
  }

  SurfacePtr implication() {
    SurfacePtr lhs = disjunction();
    if (is_word(peek(), "implies")) {
      const SourcePos at = next().pos;
      return binary(SurfaceFormula::Kind::kImplies, lhs, implication(), at);
    }
    return lhs;
  }

  SurfacePtr disjunction() {
    SurfacePtr lhs = conjunction();
    while (is_word(peek(), "or")) {
      const SourcePos at = next().pos;
      lhs = binary(SurfaceFormula::Kind::kOr, lhs, conjunction(), at);
    }
    return lhs;
  }

  SurfacePtr conjunction() {
    SurfacePtr lhs = unary();
    while (is_word(peek(), "and")) {
      const SourcePos at = next().pos;
      lhs = binary(SurfaceFormula::Kind::kAnd, lhs, unary(), at);
    }
    return lhs;
  }

  SurfacePtr unary() {
    if (is_word(peek(), "not")) {
      SurfaceFormula f;
      f.kind = SurfaceFormula::Kind::kNot;
      f.pos = next().pos;
      f.lhs = unary();
      return make(std::move(f));
    }
    return primary();
  }

  SurfacePtr primary() {
    const Token& t = peek();
    SurfaceFormula f;
    f.pos = t.pos;
    if (is_symbol(t, "(")) {
      next();
      SurfacePtr inner = formula();
      expect_symbol(")");
      return inner;
    }
    if (t.type != TokenType::kWord) unexpected({"formula"});
    const std::string word = t.text;
    if (word == "true" || word == "false") {
      next();
      f.kind = word == "true" ? SurfaceFormula::Kind::kTrue : SurfaceFormula::Kind::kFalse;
      return make(std::move(f));
    }
    if (word == "T" || word == "F" || word == "U") {
      next();
      f.kind = word == "T"   ? SurfaceFormula::Kind::kTruth
               : word == "F" ? SurfaceFormula::Kind::kFalsity
                             : SurfaceFormula::Kind::kUndetermined;
      expect_symbol("(");
      if (is_symbol(peek(), "<")) {
        next();
        f.arg.quoted = formula();
        expect_symbol(">");
      } else if (peek().type == TokenType::kWord && !is_keyword(peek().text)) {
        f.arg.name = next().text;
      } else {
        unexpected({"sentence name", "'<'"});
      }
      expect_symbol(")");
      return make(std::move(f));
    }
    if (word == "forall" || word == "exists") {
      next();
      f.kind = word == "forall" ? SurfaceFormula::Kind::kForall : SurfaceFormula::Kind::kExists;
      f.name = identifier("bound variable");
      expect_word("in");
      f.set = name_set();
      expect_symbol(":");
      f.lhs = formula();
      return make(std::move(f));
    }
    if (word == "atmost" || word == "atleast") {
      next();
      f.kind = word == "atmost" ? SurfaceFormula::Kind::kAtMost : SurfaceFormula::Kind::kAtLeast;
      if (peek().type != TokenType::kNumber) unexpected({"count"});
      const std::string& digits = peek().text;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), f.count);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) fail("count out of range", {});
      next();
      expect_word("of");
      f.set = name_set();
      return make(std::move(f));
    }
    if (is_keyword(word)) unexpected({"formula"});
    next();
    f.kind = SurfaceFormula::Kind::kIdent;
    f.name = word;
    return make(std::move(f));
  }

  NameSet name_set() {
    NameSet set;
    if (is_word(peek(), "all")) {
      next();
      set.all = true;
      return set;
    }
    expect_symbol("{");
    if (is_symbol(peek(), "}")) {
      next();
      return set;
    }
    set.names.push_back(identifier("sentence name"));
    while (is_symbol(peek(), ",")) {
      next();
      set.names.push_back(identifier("sentence name"));
    }
    expect_symbol("}");
    return set;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

bool is_keyword(std::string_view word) {
  return std::ranges::find(kKeywords, word) != kKeywords.end();
}

RawSystem parse_system(std::string_view text) {
  Parser parser(Lexer(text).run());
  if (parser.empty()) throw Error(ErrorKind::kEmptySystem, "input contains no system");
  return parser.system();
}

SurfacePtr parse_formula(std::string_view text) {
  return Parser(Lexer(text).run()).standalone_formula();
}

bool operator==(const PredicateArg& a, const PredicateArg& b) {
  if (a.is_quote() != b.is_quote()) return false;
  return a.is_quote() ? *a.quoted == *b.quoted : a.name == b.name;
}

bool operator==(const SurfaceFormula& a, const SurfaceFormula& b) {
  if (a.kind != b.kind) return false;
  auto same_child = [](const SurfacePtr& x, const SurfacePtr& y) {
    if (!x || !y) return x == y;
    return *x == *y;
  };
  return a.name == b.name && a.arg == b.arg && a.set == b.set && a.count == b.count &&
         same_child(a.lhs, b.lhs) && same_child(a.rhs, b.rhs);
}

}  // namespace truthsem::dsl
