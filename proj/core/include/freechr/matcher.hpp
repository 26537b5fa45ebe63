#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "freechr/errors.hpp"
#include "freechr/multiset.hpp"
#include "freechr/rule.hpp"

namespace freechr {

/// An ordered, occurrence-distinct selection of state elements satisfying a
/// rule's heads and guard. Indices refer to occurrences of the state the
/// match was found in; values are in kept-then-removed head order.
template <typename C>
struct Match {
  std::vector<std::size_t> kept_indices;
  std::vector<std::size_t> removed_indices;
  std::vector<C> values;
};

namespace detail {

template <typename C>
bool check_head(const Rule<C>& rule, const HeadPredicate<C>& pred,
                const C& value) {
  try {
    return pred(value);
  } catch (const std::exception& e) {
    throw DomainFunctionError(rule.name(), pred.name(), e.what());
  }
}

template <typename C>
bool check_guard(const Rule<C>& rule, std::span<const C> values) {
  try {
    return rule.guard()(values);
  } catch (const std::exception& e) {
    throw DomainFunctionError(rule.name(), rule.guard().name(), e.what());
  }
}

template <typename C>
Multiset<C> eval_body(const Rule<C>& rule, std::span<const C> values) {
  try {
    return rule.body()(values);
  } catch (const std::exception& e) {
    throw DomainFunctionError(rule.name(), rule.body().name(), e.what());
  }
}

// Backtracking enumeration over head positions, kept slots first. Candidate
// indices are tried in ascending order per position, so matches come out in
// lexicographic occurrence-index order. Head predicates filter per position;
// the guard runs last on the full value sequence. The visitor returns true
// to stop early.
template <typename C, typename Visitor>
bool for_each_match(const Rule<C>& rule, const Multiset<C>& state,
                    Visitor&& visit) {
  const std::size_t kept_arity = rule.kept_arity();
  const std::size_t total = rule.head_arity();
  if (total > state.size()) return false;

  std::vector<std::size_t> chosen(total);
  std::vector<bool> used(state.size(), false);
  std::vector<C> values;
  values.reserve(total);

  auto descend = [&](auto&& self, std::size_t position) -> bool {
    if (position == total) {
      if (!check_guard(rule, std::span<const C>(values))) return false;
      Match<C> match;
      match.kept_indices.assign(chosen.begin(), chosen.begin() + kept_arity);
      match.removed_indices.assign(chosen.begin() + kept_arity, chosen.end());
      match.values = values;
      return visit(std::move(match));
    }
    const HeadPredicate<C>& pred = position < kept_arity
                                       ? rule.kept()[position]
                                       : rule.removed()[position - kept_arity];
    for (std::size_t index = 0; index < state.size(); ++index) {
      if (used[index]) continue;
      const C& value = state.occurrences()[index];
      if (!check_head(rule, pred, value)) continue;
      used[index] = true;
      chosen[position] = index;
      values.push_back(value);
      const bool stop = self(self, position + 1);
      values.pop_back();
      used[index] = false;
      if (stop) return true;
    }
    return false;
  };
  return descend(descend, 0);
}

template <typename C>
void validate_match(const Rule<C>& rule, const Multiset<C>& state,
                    const Match<C>& match) {
  if (match.kept_indices.size() != rule.kept_arity() ||
      match.removed_indices.size() != rule.removed_arity() ||
      match.values.size() != rule.head_arity())
    throw MatchError("match shape does not fit rule '" + rule.name() + "'");

  std::vector<bool> used(state.size(), false);
  std::size_t position = 0;
  auto check = [&](std::size_t index) {
    if (index >= state.size())
      throw MatchError("stale match for rule '" + rule.name() +
                       "': occurrence index " + std::to_string(index) +
                       " out of range");
    if (used[index])
      throw MatchError("match for rule '" + rule.name() +
                       "' uses occurrence index " + std::to_string(index) +
                       " twice");
    used[index] = true;
    if (!(state.occurrences()[index] == match.values[position]))
      throw MatchError("stale match for rule '" + rule.name() +
                       "': value at occurrence index " +
                       std::to_string(index) + " changed");
    ++position;
  };
  for (std::size_t index : match.kept_indices) check(index);
  for (std::size_t index : match.removed_indices) check(index);
}

}  // namespace detail

/// All matches of `rule` in `state`, in deterministic lexicographic order
/// over occurrence indices (kept positions first, state in canonical order).
template <typename C>
std::vector<Match<C>> find_matches(const Rule<C>& rule,
                                   const Multiset<C>& state) {
  std::vector<Match<C>> matches;
  detail::for_each_match(rule, state, [&](Match<C>&& match) {
    matches.push_back(std::move(match));
    return false;
  });
  return matches;
}

/// First match in enumeration order, if any. Agrees with the front of
/// find_matches but stops as soon as one match is found.
template <typename C>
std::optional<Match<C>> find_first_match(const Rule<C>& rule,
                                         const Multiset<C>& state) {
  std::optional<Match<C>> found;
  detail::for_each_match(rule, state, [&](Match<C>&& match) {
    found = std::move(match);
    return true;
  });
  return found;
}

/// Applies a match: removed occurrences are deleted, kept ones stay, and the
/// body's output is added. The match must have been produced for `state`;
/// a stale or malformed match raises MatchError.
template <typename C>
Multiset<C> apply_match(const Rule<C>& rule, const Multiset<C>& state,
                        const Match<C>& match) {
  detail::validate_match(rule, state, match);
  Multiset<C> remaining = state.remove_occurrences(match.removed_indices);
  Multiset<C> produced =
      detail::eval_body(rule, std::span<const C>(match.values));
  return remaining.union_with(produced);
}

}  // namespace freechr
