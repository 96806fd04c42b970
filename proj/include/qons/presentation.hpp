#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qons/rewrite.hpp"

namespace qons {

struct NamedRelation {
  std::string name;
  /// lhs - rhs; the relation asserts this is zero.
  AlgebraElement element;
};

/// An algebra given by generators, an oriented rule set, and its relations.
///
/// Text format, one directive per line (`#` starts a comment):
///   name: <id>
///   alphabet: <letter> <letter> ...
///   inverse: <letter> <letter>
///   precedence: <letters from smallest to largest>
///   rule <id>: <word> -> <expression>
///   relation <id>: <expression> = <expression>
/// Rules yield relations lhs - rhs; `relation` lines add further stated
/// relations, which must follow from the rules.
struct Presentation {
  std::string name;
  AlphabetPtr alphabet;
  RuleSet rules;
  std::vector<NamedRelation> relations;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

Presentation parse_presentation(std::string_view text);
/// Renders back into the text format (rules and stated relations).
std::string format_presentation(const Presentation& p);

/// Bundled presentations: "uq_sl2", "uq_sl2hat", "qoa", "augmented_qoa".
PresentationPtr bundled_presentation(std::string_view name);
std::vector<std::string> bundled_presentation_names();
/// Raw bundled file text.
std::string_view bundled_presentation_text(std::string_view name);

}  // namespace qons
