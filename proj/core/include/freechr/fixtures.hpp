#pragma once

#include <compare>
#include <ostream>
#include <span>
#include <string>
#include <utility>

#include "freechr/multiset.hpp"
#include "freechr/program.hpp"

namespace freechr {

/// gcd: `zero` drops zeros, `subtract` replaces the larger of any positive
/// pair by the difference. Final singleton is the gcd of the input.
inline Program<int> gcd_program() {
  Program<int> zero = make_rule<int>(
      "zero", {},
      {HeadPredicate<int>("$1 = 0", [](const int& n) { return n == 0; })},
      Guard<int>("true", [](std::span<const int>) { return true; }),
      Body<int>("{}", [](std::span<const int>) { return Multiset<int>{}; }));
  Program<int> subtract = make_rule<int>(
      "subtract",
      {HeadPredicate<int>("0 < $1", [](const int& n) { return 0 < n; })},
      {HeadPredicate<int>("0 < $1", [](const int& m) { return 0 < m; })},
      Guard<int>("$1 <= $2",
                 [](std::span<const int> v) { return v[0] <= v[1]; }),
      Body<int>("{$2 - $1}", [](std::span<const int> v) {
        return Multiset<int>{v[1] - v[0]};
      }));
  return compose(std::move(zero), std::move(subtract));
}

/// min: of any two values the larger one is dropped; the final singleton is
/// the minimum of the input.
inline Program<int> min_program() {
  return make_rule<int>(
      "min", {HeadPredicate<int>("true", [](const int&) { return true; })},
      {HeadPredicate<int>("true", [](const int&) { return true; })},
      Guard<int>("$1 <= $2",
                 [](std::span<const int> v) { return v[0] <= v[1]; }),
      Body<int>("{}", [](std::span<const int>) { return Multiset<int>{}; }));
}

enum class DfaState { S1, S2, Sfail };

inline std::string to_string(DfaState state) {
  switch (state) {
    case DfaState::S1: return "S1";
    case DfaState::S2: return "S2";
    case DfaState::Sfail: return "Sfail";
  }
  return "Sfail";
}

inline std::ostream& operator<<(std::ostream& out, DfaState state) {
  return out << to_string(state);
}

/// One automaton constraint: the unread input suffix and the current state.
/// Words range over the alphabet {a, b}.
struct DfaConstraint {
  std::string word;
  DfaState state = DfaState::S1;

  friend auto operator<=>(const DfaConstraint&, const DfaConstraint&) = default;

  friend std::ostream& operator<<(std::ostream& out, const DfaConstraint& c) {
    return out << '(' << c.word << ", " << c.state << ')';
  }
};

/// The automaton for a(ba)*: one rule per transition, head-normalized (the
/// pattern condition lives in the removed-head predicate). The empty word is
/// final because every rule requires a first character.
inline Program<DfaConstraint> dfa_program() {
  using D = DfaConstraint;

  auto starts_in = [](char letter, DfaState state) {
    return [letter, state](const D& c) {
      return !c.word.empty() && c.word.front() == letter && c.state == state;
    };
  };
  auto consume_to = [](DfaState next) {
    return [next](std::span<const D> v) {
      return Multiset<D>{D{v[0].word.substr(1), next}};
    };
  };
  auto always = [] {
    return Guard<D>("true", [](std::span<const D>) { return true; });
  };

  Program<D> program = make_rule<D>(
      "a_s1", {},
      {HeadPredicate<D>("starts_a_in_S1", starts_in('a', DfaState::S1))},
      always(), Body<D>("{(rest($1), S2)}", consume_to(DfaState::S2)));
  program = compose(
      std::move(program),
      make_rule<D>("b_s1", {},
                   {HeadPredicate<D>("starts_b_in_S1",
                                     starts_in('b', DfaState::S1))},
                   always(),
                   Body<D>("{(rest($1), Sfail)}",
                           consume_to(DfaState::Sfail))));
  program = compose(
      std::move(program),
      make_rule<D>("a_s2", {},
                   {HeadPredicate<D>("starts_a_in_S2",
                                     starts_in('a', DfaState::S2))},
                   always(),
                   Body<D>("{(rest($1), Sfail)}",
                           consume_to(DfaState::Sfail))));
  program = compose(
      std::move(program),
      make_rule<D>("b_s2", {},
                   {HeadPredicate<D>("starts_b_in_S2",
                                     starts_in('b', DfaState::S2))},
                   always(),
                   Body<D>("{(rest($1), S1)}", consume_to(DfaState::S1))));
  program = compose(
      std::move(program),
      make_rule<D>("sink", {},
                   {HeadPredicate<D>("nonempty_in_Sfail",
                                     [](const D& c) {
                                       return !c.word.empty() &&
                                              c.state == DfaState::Sfail;
                                     })},
                   always(),
                   Body<D>("{(rest($1), Sfail)}",
                           consume_to(DfaState::Sfail))));
  return program;
}

}  // namespace freechr
