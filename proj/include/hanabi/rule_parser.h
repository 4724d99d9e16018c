#ifndef HANABI_RULE_PARSER_H_
#define HANABI_RULE_PARSER_H_

#include <string_view>
#include <vector>

#include "hanabi/game_state.h"
#include "hanabi/rules.h"

namespace hanabi {

class RuleSyntaxError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// Rule expressions, whitespace-insensitive:
//
//   rule_list := rule { (';' | newline) rule }
//   rule      := 'If' '(' cond ')' '{' rule '}' [ 'Else' '{' rule '}' ]
//              | NAME [ '(' arg ')' ]
//   arg       := NUMBER                     thresholds, in [0, 1]
//              | 'new' | 'total'            TellMostInformation
//   cond      := conj { ('|' | '||') conj }
//   conj      := unary { ('&' | '&&') unary }
//   unary     := '!' unary | '(' cond ')' | atom
//   atom      := 'true' | 'false' | 'deckHasCards' | 'deckHasCardsLeft'
//              | VAR CMP INTEGER
//   VAR       := 'lives' | 'info' | 'deckSize'
//   CMP       := '<' | '<=' | '>' | '>=' | '==' | '!='
//
// NAME is one of the sixteen rule names, e.g. PlaySafeCard. Examples:
//   If(lives>1 & !deckHasCards){PlayProbablySafeCard(0.0)}
//   If(lives>1){PlayProbablySafeCard(0.6)}Else{PlaySafeCard}
//   TellMostInformation(new)
Rule ParseRule(std::string_view text);
Condition ParseCondition(std::string_view text);
std::vector<Rule> ParseRuleList(std::string_view text);

}  // namespace hanabi

#endif  // HANABI_RULE_PARSER_H_
