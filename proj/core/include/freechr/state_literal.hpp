#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "freechr/errors.hpp"
#include "freechr/fixtures.hpp"
#include "freechr/multiset.hpp"

namespace freechr {
namespace detail {

// Whitespace-insensitive cursor over a state literal. Errors carry the byte
// offset of the offending character.
struct LiteralCursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool at(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected ") + what, pos);
    ++pos;
  }

  void expect_end() {
    skip_ws();
    if (pos != text.size()) throw ParseError("trailing input", pos);
  }

  int parse_int() {
    skip_ws();
    const std::size_t start = pos;
    long long value = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000'000) throw ParseError("integer too large", start);
      ++pos;
    }
    if (pos == start) throw ParseError("expected integer", pos);
    return static_cast<int>(value);
  }

  std::string parse_word() {
    skip_ws();
    std::string word;
    while (pos < text.size() &&
           std::isalpha(static_cast<unsigned char>(text[pos]))) {
      const char c = text[pos];
      if (c != 'a' && c != 'b')
        throw ParseError("word may contain only 'a' and 'b'", pos);
      word += c;
      ++pos;
    }
    return word;
  }

  DfaState parse_dfa_state() {
    skip_ws();
    const std::size_t start = pos;
    std::string name;
    while (pos < text.size() &&
           std::isalnum(static_cast<unsigned char>(text[pos]))) {
      name += text[pos];
      ++pos;
    }
    if (name == "S1") return DfaState::S1;
    if (name == "S2") return DfaState::S2;
    if (name == "Sfail") return DfaState::Sfail;
    throw ParseError("expected DFA state (S1, S2 or Sfail)", start);
  }
};

template <typename C, typename ParseElem>
Multiset<C> parse_state_literal(std::string_view literal, ParseElem&& elem) {
  LiteralCursor cursor{literal};
  cursor.expect('{', "'{'");
  std::vector<C> values;
  if (!cursor.at('}')) {
    values.push_back(elem(cursor));
    while (cursor.at(',')) {
      cursor.expect(',', "','");
      values.push_back(elem(cursor));
    }
  }
  cursor.expect('}', "'}'");
  cursor.expect_end();
  return Multiset<C>(std::move(values));
}

}  // namespace detail

/// Parses "{4, 6}" (whitespace-insensitive) into an integer multiset.
/// Values are non-negative integers.
inline Multiset<int> parse_int_state(std::string_view literal) {
  return detail::parse_state_literal<int>(
      literal, [](detail::LiteralCursor& cursor) { return cursor.parse_int(); });
}

/// Parses "{(aba, S1), (b, S2)}" into a DFA-constraint multiset. Words may
/// be empty: "{(, S1)}" holds the empty word.
inline Multiset<DfaConstraint> parse_dfa_state(std::string_view literal) {
  return detail::parse_state_literal<DfaConstraint>(
      literal, [](detail::LiteralCursor& cursor) {
        cursor.expect('(', "'('");
        DfaConstraint constraint;
        constraint.word = cursor.parse_word();
        cursor.expect(',', "','");
        constraint.state = cursor.parse_dfa_state();
        cursor.expect(')', "')'");
        return constraint;
      });
}

}  // namespace freechr
