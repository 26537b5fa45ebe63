#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

#include "freechr/errors.hpp"
#include "freechr/program.hpp"

namespace freechr {
namespace detail {

inline std::string join(const std::vector<std::string>& items,
                        const std::string& separator) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += separator;
    out += items[i];
  }
  return out;
}

inline bool is_plain_identifier(const std::string& text) {
  if (text.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(text[0])) && text[0] != '_')
    return false;
  for (char c : text)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

/// Renders one named-function application over argument variables:
///   - names containing $1..$k placeholders are substituted positionally
///     ($i becomes the i-th argument variable);
///   - the constants "true" and "false" render as themselves;
///   - other plain identifiers render as applications name(v1, ..., vk);
///   - anything else is raw text, printed unchanged.
inline std::string render_application(const std::string& name,
                                      const std::vector<std::string>& args) {
  if (name.find('$') != std::string::npos) {
    std::string out;
    out.reserve(name.size());
    std::size_t i = 0;
    while (i < name.size()) {
      if (name[i] == '$' && i + 1 < name.size() &&
          std::isdigit(static_cast<unsigned char>(name[i + 1]))) {
        std::size_t j = i + 1;
        while (j < name.size() &&
               std::isdigit(static_cast<unsigned char>(name[j])))
          ++j;
        const std::size_t index = std::stoul(name.substr(i + 1, j - i - 1));
        if (index == 0 || index > args.size())
          throw EmbedError("placeholder $" + name.substr(i + 1, j - i - 1) +
                           " out of range in '" + name + "'");
        out += args[index - 1];
        i = j;
      } else {
        out += name[i++];
      }
    }
    return out;
  }
  if (name == "true" || name == "false") return name;
  if (is_plain_identifier(name)) return name + "(" + join(args, ", ") + ")";
  return name;
}

}  // namespace detail

/// One embedded rule, head-normalized: heads are fresh variables v1..v(n+m)
/// and every condition lives in the guard. Faithful only up to the display
/// names of the rule's functions; the functions themselves stay opaque.
struct ChrRuleText {
  std::string name;
  std::vector<std::string> kept_vars;
  std::vector<std::string> removed_vars;
  std::string guard_text;
  std::string body_text;

  std::string to_line() const {
    return name + " @ " + detail::join(kept_vars, ", ") + " \\ " +
           detail::join(removed_vars, ", ") + " <=> " + guard_text + " | " +
           body_text;
  }
};

/// Head-normalizes one rule: kept slots become v1..vn, removed slots
/// v(n+1)..v(n+m); the guard conjunction lists kept predicates, removed
/// predicates, then the rule guard over all variables, in that order.
template <typename C>
ChrRuleText embed_rule(const Rule<C>& rule) {
  const std::size_t kept_arity = rule.kept_arity();
  const std::size_t total = rule.head_arity();

  std::vector<std::string> vars(total);
  for (std::size_t i = 0; i < total; ++i)
    vars[i] = "v" + std::to_string(i + 1);

  ChrRuleText text;
  text.name = rule.name();
  text.kept_vars.assign(vars.begin(), vars.begin() + kept_arity);
  text.removed_vars.assign(vars.begin() + kept_arity, vars.end());

  std::vector<std::string> conjuncts;
  conjuncts.reserve(total + 1);
  for (std::size_t i = 0; i < kept_arity; ++i)
    conjuncts.push_back(
        detail::render_application(rule.kept()[i].name(), {vars[i]}));
  for (std::size_t j = kept_arity; j < total; ++j)
    conjuncts.push_back(
        detail::render_application(rule.removed()[j - kept_arity].name(),
                                   {vars[j]}));
  conjuncts.push_back(detail::render_application(rule.guard().name(), vars));
  text.guard_text = detail::join(conjuncts, " /\\ ");

  text.body_text = detail::render_application(rule.body().name(), vars);
  return text;
}

/// One text rule per leaf, in left-to-right leaf order; composition embeds
/// as concatenation (rule names are unique by construction).
template <typename C>
std::vector<ChrRuleText> embed(const Program<C>& program) {
  std::vector<ChrRuleText> out;
  for (const Rule<C>& rule : program.leaves()) out.push_back(embed_rule(rule));
  return out;
}

/// One rule per line, UTF-8, trailing newline.
inline std::string render(const std::vector<ChrRuleText>& rules) {
  std::string out;
  for (const ChrRuleText& rule : rules) {
    out += rule.to_line();
    out += '\n';
  }
  return out;
}

}  // namespace freechr
