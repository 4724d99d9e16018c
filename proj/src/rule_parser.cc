#include "hanabi/rule_parser.h"

#include <cctype>
#include <charconv>
#include <string>

namespace hanabi {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Rule ParseRuleExpr() {
    SkipSpace();
    const std::string name = Identifier();
    if (name.empty()) Fail("expected a rule name");
    if (name == "If") {
      Expect('(');
      Condition cond = ParseOr();
      Expect(')');
      Expect('{');
      Rule then_rule = ParseRuleExpr();
      Expect('}');
      SkipSpace();
      if (text_.substr(pos_).starts_with("Else")) {
        pos_ += 4;
        Expect('{');
        Rule else_rule = ParseRuleExpr();
        Expect('}');
        return Rule::If(std::move(cond), std::move(then_rule),
                        std::move(else_rule));
      }
      return Rule::If(std::move(cond), std::move(then_rule));
    }
    for (int k = 0; k <= static_cast<int>(RuleKind::kTellAnyoneAboutUselessCard);
         ++k) {
      const auto kind = static_cast<RuleKind>(k);
      if (kind == RuleKind::kIf || RuleName(kind) != name) continue;
      switch (kind) {
        case RuleKind::kPlayProbablySafeCard:
        case RuleKind::kDiscardProbablyUselessCard: {
          Expect('(');
          const double t = Number();
          if (t < 0.0 || t > 1.0) Fail("threshold must be in [0, 1]");
          Expect(')');
          return kind == RuleKind::kPlayProbablySafeCard
                     ? Rule::PlayProbablySafeCard(t)
                     : Rule::DiscardProbablyUselessCard(t);
        }
        case RuleKind::kTellMostInformation: {
          if (!Peek('(')) return Rule::TellMostInformation(true);
          Expect('(');
          const std::string arg = Identifier();
          bool new_info = true;
          if (arg == "new" || arg == "true") {
            new_info = true;
          } else if (arg == "total" || arg == "false") {
            new_info = false;
          } else {
            Fail("TellMostInformation takes 'new' or 'total'");
          }
          Expect(')');
          return Rule::TellMostInformation(new_info);
        }
        default:
          return Rule::Simple(kind);
      }
    }
    Fail("unknown rule '" + name + "'");
  }

  Condition ParseOr() {
    Condition lhs = ParseAnd();
    while (Accept("||") || Accept("|")) {
      lhs = Condition::Or(std::move(lhs), ParseAnd());
    }
    return lhs;
  }

  void ExpectEnd() {
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected trailing input");
  }

 private:
  Condition ParseAnd() {
    Condition lhs = ParseUnary();
    while (Accept("&&") || Accept("&")) {
      lhs = Condition::And(std::move(lhs), ParseUnary());
    }
    return lhs;
  }

  Condition ParseUnary() {
    if (Accept("!=")) Fail("unexpected '!='");
    if (Accept("!")) return Condition::Not(ParseUnary());
    if (Accept("(")) {
      Condition inner = ParseOr();
      Expect(')');
      return inner;
    }
    const std::string word = Identifier();
    if (word == "true") return Condition::Const(true);
    if (word == "false") return Condition::Const(false);
    if (word == "deckHasCards" || word == "deckHasCardsLeft") {
      return Condition::DeckHasCards();
    }
    Condition::Var var;
    if (word == "lives") {
      var = Condition::Var::kLives;
    } else if (word == "info" || word == "information") {
      var = Condition::Var::kInfo;
    } else if (word == "deckSize") {
      var = Condition::Var::kDeckSize;
    } else {
      Fail("unknown condition term '" + word + "'");
    }
    Condition::Cmp cmp;
    if (Accept("<=")) {
      cmp = Condition::Cmp::kLe;
    } else if (Accept(">=")) {
      cmp = Condition::Cmp::kGe;
    } else if (Accept("==")) {
      cmp = Condition::Cmp::kEq;
    } else if (Accept("!=")) {
      cmp = Condition::Cmp::kNe;
    } else if (Accept("<")) {
      cmp = Condition::Cmp::kLt;
    } else if (Accept(">")) {
      cmp = Condition::Cmp::kGt;
    } else {
      Fail("expected a comparison operator");
    }
    const double value = Number();
    if (value != static_cast<int>(value)) Fail("expected an integer");
    return Condition::Compare(var, cmp, static_cast<int>(value));
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool Peek(char c) {
    SkipSpace();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool Accept(std::string_view token) {
    SkipSpace();
    if (text_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void Expect(char c) {
    if (!Accept(std::string_view(&c, 1))) {
      Fail(std::string("expected '") + c + "'");
    }
  }

  std::string Identifier() {
    SkipSpace();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  double Number() {
    SkipSpace();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '.' || text_[pos_] == '-')) {
      ++pos_;
    }
    const std::string token(text_.substr(start, pos_ - start));
    if (token.empty()) Fail("expected a number");
    try {
      std::size_t used = 0;
      const double value = std::stod(token, &used);
      if (used != token.size()) Fail("bad number '" + token + "'");
      return value;
    } catch (const std::logic_error&) {
      Fail("bad number '" + token + "'");
    }
  }

  [[noreturn]] void Fail(const std::string& message) {
    throw RuleSyntaxError(message + " at offset " + std::to_string(pos_) +
                          " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Rule ParseRule(std::string_view text) {
  Parser parser(text);
  Rule rule = parser.ParseRuleExpr();
  parser.ExpectEnd();
  return rule;
}

Condition ParseCondition(std::string_view text) {
  Parser parser(text);
  Condition cond = parser.ParseOr();
  parser.ExpectEnd();
  return cond;
}

std::vector<Rule> ParseRuleList(std::string_view text) {
  std::vector<Rule> rules;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const bool end = i == text.size();
    if (!end && (text[i] == '{' || text[i] == '(')) ++depth;
    if (!end && (text[i] == '}' || text[i] == ')')) --depth;
    if (end || (depth == 0 && (text[i] == ';' || text[i] == '\n'))) {
      const std::string_view piece = text.substr(start, i - start);
      if (piece.find_first_not_of(" \t\r\n") != std::string_view::npos) {
        rules.push_back(ParseRule(piece));
      }
      start = i + 1;
    }
  }
  if (rules.empty()) throw RuleSyntaxError("empty rule list");
  return rules;
}

}  // namespace hanabi
